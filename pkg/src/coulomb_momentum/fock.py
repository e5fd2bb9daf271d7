"""Stereographic projection of momentum space onto the Fock sphere.

A momentum ``p`` maps to the point ``(xi, zeta)`` of the unit 3-sphere in four
dimensions,

    xi = 2 p / (1 + p^2),    zeta = (p^2 - 1) / (p^2 + 1),

so the origin goes to the south pole ``zeta = -1`` and infinity to the north
pole.  ``zeta`` is the fourth coordinate written ``xi0`` elsewhere; its sign
follows this definition throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence

import numpy as np

from .poly import GaussianRational, I, PolyField, Polynomial3, SparsePolynomial

__all__ = [
    "SpherePoint",
    "SpherePolynomial",
    "NorthPoleError",
    "stereographic_forward",
    "stereographic_inverse",
    "kernel_identity_residual",
    "sphere_weight",
    "pullback",
    "rotation_generator",
    "gegenbauer",
    "sphere_monomials",
    "gauss_gegenbauer_spread",
]


class NorthPoleError(ValueError):
    """The north pole has no finite preimage in momentum space."""


class SpherePolynomial(SparsePolynomial):
    """Polynomial in ``xi1, xi2, xi3, zeta``."""

    __slots__ = ()
    nvars = 4
    var_names = ("xi1", "xi2", "xi3", "zeta")

    @classmethod
    def xi(cls, axis: int) -> "SpherePolynomial":
        return cls.variable(axis - 1)

    @classmethod
    def zeta(cls) -> "SpherePolynomial":
        return cls.variable(3)

    @classmethod
    def constraint(cls) -> "SpherePolynomial":
        """``xi^2 + zeta^2``, identically 1 on the sphere."""
        return cls({(2, 0, 0, 0): 1, (0, 2, 0, 0): 1, (0, 0, 2, 0): 1, (0, 0, 0, 2): 1})


@dataclass(frozen=True)
class SpherePoint:
    xi: tuple
    xi0: object

    def constraint_defect(self):
        return sum(x * x for x in self.xi) + self.xi0 * self.xi0 - 1

    def to_json(self) -> dict:
        conv = _json_number
        return {"xi": [conv(x) for x in self.xi], "xi0": conv(self.xi0)}

    @classmethod
    def from_json(cls, data) -> "SpherePoint":
        parse = _parse_number
        return cls(tuple(parse(x) for x in data["xi"]), parse(data["xi0"]))


def _json_number(x):
    if isinstance(x, Rational) and not isinstance(x, int):
        return str(x)
    return x if isinstance(x, int) else float(x)


def _parse_number(x):
    return Fraction(x) if isinstance(x, str) else x


def _exact(values) -> bool:
    return all(isinstance(v, Rational) for v in values)


def stereographic_forward(p: Sequence) -> SpherePoint:
    """Map a momentum to the sphere; exact for rational input."""
    if _exact(p):
        p = tuple(Fraction(x) for x in p)
        p2 = sum(x * x for x in p)
        q = 1 + p2
        return SpherePoint(tuple(2 * x / q for x in p), (p2 - 1) / q)
    v = np.asarray(p, dtype=float)
    p2 = float(v @ v)
    q = 1.0 + p2
    return SpherePoint(tuple(float(x) for x in 2.0 * v / q), (p2 - 1.0) / q)


def stereographic_inverse(s: SpherePoint) -> tuple:
    """``p = xi / (1 - zeta)``."""
    denom = 1 - s.xi0
    if denom == 0:
        raise NorthPoleError("north pole (xi0 = 1) maps to infinity")
    if _exact(s.xi) and isinstance(s.xi0, Rational):
        return tuple(Fraction(x) / Fraction(denom) for x in s.xi)
    return tuple(float(x) / float(denom) for x in s.xi)


def kernel_identity_residual(p: Sequence[float], p2: Sequence[float]) -> float:
    """Relative mismatch between ``1/|p-p'|^2`` and its sphere form.

    The sphere form is ``[2/(1+p^2)] [1/|s - s'|^2] [2/(1+p'^2)]`` with
    ``s, s'`` the images on the Fock sphere.
    """
    a, b = np.asarray(p, dtype=float), np.asarray(p2, dtype=float)
    d = a - b
    dist2 = float(d @ d)
    if dist2 == 0.0:
        raise ValueError("kernel is singular at coincident points")
    lhs = 1.0 / dist2
    sa, sb = stereographic_forward(a), stereographic_forward(b)
    chord2 = sum((x - y) ** 2 for x, y in zip(sa.xi, sb.xi)) + (sa.xi0 - sb.xi0) ** 2
    rhs = (2.0 / (1.0 + a @ a)) * (1.0 / chord2) * (2.0 / (1.0 + b @ b))
    return abs(lhs - rhs) / lhs


def sphere_weight(p) -> float | np.ndarray:
    """Surface element per momentum volume, ``8 / (1+p^2)^3``."""
    v = np.asarray(p, dtype=float)
    p2 = np.sum(v * v, axis=-1)
    return 8.0 / (1.0 + p2) ** 3


def pullback(f: SpherePolynomial) -> PolyField:
    """Substitute the projection into a sphere polynomial."""
    if f.is_zero():
        return PolyField()
    xi = [PolyField.coordinate(a) * 2 for a in (1, 2, 3)]
    zeta_num = PolyField.p_squared() - 1
    top = max(sum(e) for e, _ in f.items())
    total = Polynomial3()
    # every term is brought over the common denominator (1+p^2)^top
    q = Polynomial3({(0, 0, 0): 1, (2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1})
    for e, c in f.items():
        term = PolyField.constant(c)
        for axis in range(3):
            if e[axis]:
                term = term * xi[axis] ** e[axis]
        if e[3]:
            term = term * zeta_num ** e[3]
        total = total + term.numerator * q ** (top - sum(e))
    return PolyField(total, top)


def rotation_generator(axis: int, f: SpherePolynomial) -> SpherePolynomial:
    """``i (xi_axis d/dzeta - zeta d/dxi_axis) f``."""
    if axis not in (1, 2, 3):
        raise ValueError(f"axis must be 1, 2 or 3, got {axis!r}")
    xi = SpherePolynomial.xi(axis)
    zeta = SpherePolynomial.zeta()
    return (xi * f.partial(3) - zeta * f.partial(axis - 1)).scale(I)


def sphere_monomials(max_degree: int):
    """Every monomial ``xi^e zeta^f`` with total degree ``<= max_degree``."""
    for d in range(max_degree + 1):
        for a in range(d + 1):
            for b in range(d - a + 1):
                for c in range(d - a - b + 1):
                    yield SpherePolynomial.monomial((a, b, c, d - a - b - c))


def gegenbauer(alpha, k: int, x):
    """Gegenbauer polynomial ``C^alpha_k(x)`` by three-term recurrence.

    Works elementwise on arrays.
    """
    if k < 0:
        raise ValueError("degree must be non-negative")
    alpha = float(alpha)
    x = np.asarray(x, dtype=float)
    c_prev = np.ones_like(x)
    if k == 0:
        return c_prev if c_prev.ndim else float(c_prev)
    c = 2.0 * alpha * x
    for j in range(2, k + 1):
        c_prev, c = c, (2.0 * x * (j + alpha - 1.0) * c - (j + 2.0 * alpha - 2.0) * c_prev) / j
    return c if c.ndim else float(c)


def gauss_gegenbauer_spread(n: int, l: int, samples: np.ndarray) -> float:
    """Relative spread of ``F(-k, 2l+k+2; l+3/2; u) / C^(l+1)_k(xi0)`` with ``u = (1-xi0)/2``.

    The common factor ``(1 - xi0^2)^(l/2)`` multiplies numerator and
    denominator and is kept so that the check compares the full sphere
    functions.
    """
    from .eigenbasis import hypergeom_poly

    k = n - l - 1
    xi0 = np.asarray(samples, dtype=float)
    ang = (1.0 - xi0 ** 2) ** (l / 2)
    gauss = hypergeom_poly(k, l)((1.0 - xi0) / 2.0) * ang
    geg = gegenbauer(l + 1, k, xi0) * ang
    ratio = gauss / geg
    return float((ratio.max() - ratio.min()) / abs(ratio.mean()))


def _constraint_holds(s: SpherePoint, tol: float = 1e-12) -> bool:
    d = s.constraint_defect()
    return d == 0 if isinstance(d, Rational) else math.fabs(d) <= tol
