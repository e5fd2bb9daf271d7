"""Angular momentum, Runge-Lenz and Schrodinger operators in momentum space.

All operators act on :class:`PolyField` elements.  Two function spaces appear:

* a-space: the momentum wavefunction ``a(p)``;
* b-space: the weighted function ``b(p) = (1 + p^2)^2 a(p)``.

The Runge-Lenz vector takes the form ``A_i = i p_i l - (i/2)(p^2 - 1) d_i`` on
b-space, where ``l = p . grad`` is the Euler degree operator, and the
b-space Schrodinger operator is ``-(1+p^2)^2/4 Lap + (1+p^2)/2 l`` with
eigenvalue ``n^2 - 1`` on the level-``n`` multiplet.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .linop import (
    LinearOperator,
    commutator,
    compose,
    conjugate_by_weight,
    coordinate_mul,
    euler_degree,
    identity,
    laplacian,
    partial,
    ring_mul,
)
from .poly import I, PolyField

__all__ = [
    "OperatorTriple",
    "angular_momentum",
    "angular_momentum_triple",
    "lowering",
    "raising",
    "runge_lenz_a",
    "runge_lenz_b",
    "runge_lenz_triple",
    "hamiltonian_b",
    "casimir_sum",
    "l_squared",
    "commutator",
    "conjugate_by_weight",
    "levi_civita",
    "ORDERINGS",
]

# (1+p^2)^2 A_a (1+p^2)^-2 equals the b-space operator only for this reading
# of i(l+1)p; see runge_lenz_a.
ORDERINGS = ("multiply_first", "multiply_last")
DEFAULT_ORDERING = "multiply_first"


def levi_civita(i: int, j: int, k: int) -> int:
    """Totally antisymmetric symbol on axes 1..3."""
    return (i - j) * (j - k) * (k - i) // 2


@dataclass(frozen=True)
class OperatorTriple:
    x: LinearOperator
    y: LinearOperator
    z: LinearOperator

    def __iter__(self) -> Iterator[LinearOperator]:
        return iter((self.x, self.y, self.z))

    def __getitem__(self, axis: int) -> LinearOperator:
        return (self.x, self.y, self.z)[axis - 1]

    def squared(self) -> LinearOperator:
        """Sum of the squared components, built by composition."""
        x, y, z = self
        return x @ x + y @ y + z @ z

    def apply(self, f: PolyField):
        from .poly import VectorField

        return VectorField(*(op(f) for op in self))


def angular_momentum(axis: int) -> LinearOperator:
    """``L_i = -i (p x grad)_i``."""
    j, k = _cyclic(axis)
    return -I * (coordinate_mul(j) @ partial(k) - coordinate_mul(k) @ partial(j))


def angular_momentum_triple() -> OperatorTriple:
    return OperatorTriple(*(angular_momentum(a) for a in (1, 2, 3)))


def lowering() -> LinearOperator:
    """``L_- = L_x - i L_y``."""
    return angular_momentum(1) - I * angular_momentum(2)


def raising() -> LinearOperator:
    return angular_momentum(1) + I * angular_momentum(2)


def l_squared() -> LinearOperator:
    return angular_momentum_triple().squared()


def _half_p2_minus_one() -> PolyField:
    return (PolyField.p_squared() - 1) / 2


def runge_lenz_b(axis: int) -> LinearOperator:
    """Runge-Lenz component on b-space: ``i p_i l - (i/2)(p^2 - 1) d_i``."""
    return I * (coordinate_mul(axis) @ euler_degree()) - I * (
        ring_mul(_half_p2_minus_one()) @ partial(axis)
    )


def runge_lenz_a(axis: int, ordering: str = DEFAULT_ORDERING) -> LinearOperator:
    """Runge-Lenz component on a-space: ``i (l + 1) p_i - (i/2)(p^2 - 1) d_i``.

    ``ordering`` fixes how ``(l + 1) p_i`` acts on the operand ``f``:

    ``"multiply_first"``
        ``(l + 1)(p_i f)``, i.e. the operator product as written.  This is
        the reading under which conjugation by ``(1+p^2)^2`` reproduces
        :func:`runge_lenz_b` exactly, and it annihilates the ground state.
    ``"multiply_last"``
        ``p_i (l + 1) f``; kept for comparison only.
    """
    if ordering == "multiply_first":
        first = (euler_degree() + identity()) @ coordinate_mul(axis)
    elif ordering == "multiply_last":
        first = coordinate_mul(axis) @ (euler_degree() + identity())
    else:
        raise ValueError(f"ordering must be one of {ORDERINGS}, got {ordering!r}")
    return I * first - I * (ring_mul(_half_p2_minus_one()) @ partial(axis))


def runge_lenz_triple(space: str = "b", ordering: str = DEFAULT_ORDERING) -> OperatorTriple:
    if space == "b":
        return OperatorTriple(*(runge_lenz_b(a) for a in (1, 2, 3)))
    if space == "a":
        return OperatorTriple(*(runge_lenz_a(a, ordering) for a in (1, 2, 3)))
    raise ValueError(f"space must be 'a' or 'b', got {space!r}")


def hamiltonian_b() -> LinearOperator:
    """``-(1+p^2)^2/4 Lap + (1+p^2)/2 l`` in closed form."""
    return compose(ring_mul(PolyField.q(2) * (-1) / 4), laplacian()) + compose(
        ring_mul(PolyField.q(1) / 2), euler_degree()
    )


def casimir_sum(space: str = "b") -> LinearOperator:
    """``L^2 + A^2`` assembled from the component operators, not the closed form."""
    return angular_momentum_triple().squared() + runge_lenz_triple(space).squared()


def _cyclic(axis: int) -> tuple[int, int]:
    if axis not in (1, 2, 3):
        raise ValueError(f"axis must be 1, 2 or 3, got {axis!r}")
    return axis % 3 + 1, (axis + 1) % 3 + 1
