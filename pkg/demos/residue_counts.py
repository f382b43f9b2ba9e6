"""
Counting pairs of quadratic residues
====================================

For p = 1 (mod 4) the parity of s + t (pairs of residues a j^2 mod p that
appear out of order, split by their gap) is fixed by how many of the
numbers below p/4 are residues. This walks through one prime by hand and
then sweeps a range.
"""

# %%
# The residues for p = 29, in the order j = 1, 2, ..., 14
from quadres import counting, oracles
from quadres.modint import primes_in, residue_table

p = 29
seq = counting.square_residues(p, 1)
print(seq)

# %%
# s counts inversions with a gap below p/2, t those with a gap above it
s, t = counting.s_count(p), counting.t_count(p)
below = counting.count_below_quarter(p, 1, 1)
print(f"s = {s}, t = {t}, residues below p/4 = {below}")
assert (s + t - below) % 2 == 0

# %%
# The brute-force double loop gives the same counts
assert (s, t) == (oracles.s_count(p, 1), oracles.t_count(p, 1))

# %%
# Sweep every p = 1 (mod 4) below 500 and every multiplier a
bad = 0
for p in primes_in(5, 500, (1, 4)):
    for a in range(1, p):
        lhs = counting.s_count(p, a) + counting.t_count(p, a)
        bad += (lhs - counting.count_below_quarter(p, a, 1)) % 2
print("mismatches:", bad)

# %%
# The smallest non-residue tends to be tiny
print({p: residue_table(p).smallest_nonresidue() for p in primes_in(5, 80)})
