# # The hidden SO(4) symmetry
#
# Angular momentum L and the momentum-space Runge-Lenz vector A close into
# the Lie algebra of SO(4), and L^2 + A^2 reproduces the Schrodinger operator.
# Operator identities are checked on a spanning set of the ring, where exact
# agreement is equivalent to equality of operators.

# %%
from coulomb_momentum import linop
from coulomb_momentum.operators import angular_momentum_triple, casimir_sum, hamiltonian_b, runge_lenz_a, runge_lenz_triple
from coulomb_momentum.poly import I
from coulomb_momentum.verify import spanning_set

L, A = angular_momentum_triple(), runge_lenz_triple("b")
gens = spanning_set(3, 2)
print(len(gens), "generators")

# %%
print("[L1, A2] = i A3:", all(linop.commutator(L[1], A[2])(f) == A[3](f) * I for f in gens))
print("[A1, A2] = i L3:", all(linop.commutator(A[1], A[2])(f) == L[3](f) * I for f in gens))
print("L^2 + A^2 = H:  ", all(casimir_sum()(f) == hamiltonian_b()(f) for f in gens))

# %% [markdown]
# The a-space operator is written i(l+1)p - (i/2)(p^2-1) grad, which leaves
# the ordering of l and p open. Conjugating by (1+p^2)^2 must give the
# b-space operator; only one ordering survives that test.

# %%
for ordering in ("multiply_first", "multiply_last"):
    op = linop.conjugate_by_weight(runge_lenz_a(1, ordering), 2)
    bad = sum(op(f) != A[1](f) for f in gens)
    print(f"{ordering:15s} mismatches: {bad}")
