"""
Inversions among triangular residues
====================================

For p = 3 (mod 4) the sign of the permutation that sorts
delta * k(k+1)/2 mod p is governed by (p+1)/8 for delta = 2, and by the
class number h(-p) for delta = 1.
"""

# %%
from quadres import counting, quadfield, verify
from quadres.modint import primes_in

p = 23
print(counting.triangular_residues(p, 1))
print("inversions:", counting.tri_inversions(p, 1), "h(-23) =", quadfield.class_number_imag(p))

# %%
# Both identities over a range of primes
for p in primes_in(7, 300, (3, 4)):
    for delta in (1, 2):
        rep = verify.check_thm_1_3(p, delta)
        assert rep.passed, rep
print("ok")

# %%
# The same data through the command line, as CSV
from quadres import cli

cli.main(["verify", "--claims", "thm_1_3", "--pmin", "7", "--pmax", "31"])
