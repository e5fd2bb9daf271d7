# # Floating-point cross-checks
#
# Some statements need numbers: the integral form of the Schrodinger
# equation, the Fourier transform of the coordinate-space states, the area of
# the 3-sphere and orthogonality under the sphere measure.

# %%
import math

from coulomb_momentum import QuadratureSpec, QuantumState
from coulomb_momentum.numerics import fourier_radial_check, integral_equation_residual, overlap_matrix, radial_density, sphere_area_check

spec = QuadratureSpec()
for n, l in [(1, 0), (2, 1), (3, 0)]:
    r = integral_equation_residual(n, l, spec)
    print(r.name, f"{r.residual:.1e}", "prefactor ratio", r.metadata["prefactor_ratio"])

# %%
for n in (1, 2, 3):
    print(fourier_radial_check(n, spec).residual)
area = sphere_area_check(spec)
print(area.metadata["value"], 2 * math.pi ** 2)

# %% [markdown]
# A quick look at the overlap matrix for n <= 2.

# %%
from coulomb_momentum import quantum_numbers

states = [QuantumState.build(*q) for q in quantum_numbers(2)]
print(abs(overlap_matrix(states, spec)).round(12))

# %% [markdown]
# Angle-averaged physical momentum density of the 2p state.

# %%
import numpy as np

dens = radial_density(QuantumState.build(2, 1, 0).physical("a"))
print(dens(np.linspace(0, 1.5, 7)))
