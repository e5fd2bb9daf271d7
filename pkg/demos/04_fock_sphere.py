# # Stereographic projection onto the Fock sphere
#
# p maps to (xi, zeta) = (2p, p^2 - 1) / (1 + p^2). The Runge-Lenz operator
# becomes an ordinary rotation mixing xi_i and zeta.

# %%
from fractions import Fraction

from coulomb_momentum import SpherePolynomial as SP, pullback, stereographic_forward, stereographic_inverse
from coulomb_momentum.fock import kernel_identity_residual, rotation_generator, sphere_monomials
from coulomb_momentum.operators import runge_lenz_b

s = stereographic_forward((0, 0, 3))
print(s, stereographic_inverse(s))
print(stereographic_forward((Fraction(1, 2), 0, 0)).constraint_defect())

# %% [markdown]
# The Coulomb kernel factorizes into a chord length on the sphere.

# %%
print(kernel_identity_residual((0.3, -1.2, 2.0), (1.5, 0.1, -0.4)))

# %% [markdown]
# Pulling back the rotation of any sphere polynomial equals applying the
# Runge-Lenz operator to the pulled-back polynomial.

# %%
print(pullback(SP.zeta()))
ok = all(
    pullback(rotation_generator(axis, f)) == runge_lenz_b(axis)(pullback(f))
    for f in sphere_monomials(3)
    for axis in (1, 2, 3)
)
print("rotation correspondence holds for all 35 monomials:", ok)
