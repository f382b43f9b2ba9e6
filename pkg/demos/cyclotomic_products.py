"""
Products of roots of unity
==========================

The product of zeta^(j^2) + zeta^(k^2) over 1 <= j < k <= (p-1)/2 is
computed exactly in Z[zeta_p]. It is 1 for p = 3 (mod 4), plus or minus
one for p = 1 (mod 8), and a power of the fundamental unit of Q(sqrt p)
for p = 5 (mod 8).
"""

# %%
from quadres import cyclo, quadfield

for p in (7, 11, 19, 23):
    print(p, cyclo.plus_product(p, 1))

# %%
# p = 17 and 41 are 1 (mod 8): the product is an ordinary integer
for p in (17, 41):
    print(p, cyclo.plus_product(p, 1))

# %%
# For p = 5 (mod 8) we map the product back into Q(sqrt p) using the
# Gauss sum as sqrt(p), then compare it with the unit eps_p raised to h(p)
for p in (5, 13, 29, 37):
    prod = cyclo.to_quad_elem(cyclo.plus_product(p, 1))
    eps = quadfield.fundamental_unit(p)
    h = quadfield.class_number_real(p)
    print(f"p={p}: product {prod}, eps={eps}, h={h}")

# %%
# Changing the multiplier a is a Galois conjugation zeta -> zeta^a;
# non-residues send sqrt(p) to -sqrt(p)
p = 13
for a in (1, 2):
    print(a, cyclo.to_quad_elem(cyclo.plus_product(p, a)))

# %%
# The balanced tree and the one-factor-at-a-time fold agree
assert cyclo.plus_product(61, 3) == cyclo.plus_product_fold(61, 3)
