"""
Fundamental units and class numbers
===================================

The unit eps_p of Q(sqrt p) comes from the continued fraction of
(sqrt(p) - 1)/2; the class number h(p) from cycles of reduced forms.
For p = 3 (mod 4), h(-p) comes from Dirichlet's character sum and is
checked by counting reduced positive definite forms.
"""

# %%
from quadres import quadfield
from quadres.modint import primes_in

for p in primes_in(5, 120, (1, 4)):
    eps = quadfield.fundamental_unit(p)
    print(p, eps, "h =", quadfield.class_number_real(p))

# %%
# Units get large quickly; Python integers keep them exact
eps = quadfield.fundamental_unit(9817)
print(eps.a.bit_length(), "bits")

# %%
# The first real quadratic fields with class number above 1
print([p for p in primes_in(5, 1200, (1, 4)) if quadfield.class_number_real(p) > 1])

# %%
# Imaginary side: Dirichlet's formula against counting forms
for p in primes_in(7, 200, (3, 4)):
    assert quadfield.class_number_imag(p) == quadfield.class_number_imag_forms(p)
print(quadfield.reduced_forms_imag(-23))
