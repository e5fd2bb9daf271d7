# # Hydrogen states in momentum space
#
# The b-space state of level n is a solid harmonic times a terminating Gauss
# series in u = 1/(1+p^2). Dividing by (1+p^2)^2 gives the a-space
# wavefunction; the substitution p -> n p restores physical units.

# %%
from coulomb_momentum import QuantumState, hamiltonian_b, quantum_numbers
from coulomb_momentum.eigenbasis import hypergeom_poly

for n, l, m in [(1, 0, 0), (2, 0, 0), (2, 1, 1), (3, 1, 0)]:
    s = QuantumState.build(n, l, m)
    print(f"b[{n}{l}{m}] =", s.b)

# %% [markdown]
# Gauss-series coefficients for a few (k, l).

# %%
for k, l in [(1, 0), (2, 0), (2, 1)]:
    print(k, l, [str(c) for c in hypergeom_poly(k, l)])

# %% [markdown]
# The momentum-space Schrodinger operator returns (n^2 - 1) times each state,
# as an exact identity rather than to within a tolerance.

# %%
H = hamiltonian_b()
bad = [q for q in quantum_numbers(5) if H(QuantumState.build(*q).b) != QuantumState.build(*q).b * (q[0] ** 2 - 1)]
print("states failing the eigenvalue identity:", bad)

# %% [markdown]
# The 2s state in physical units.

# %%
print(QuantumState.build(2, 0, 0).physical("a"))
