"""Momentum-space hydrogen eigenfunctions in the unit-radius convention.

The b-space state for quantum numbers ``(n, l, m)`` is

    b(p) = Y_lm(p) (1+p^2)^-l F(-k, 2l+k+2; l+3/2; u),   u = 1/(1+p^2),

with ``k = n - l - 1`` and ``Y_lm`` an unnormalized solid harmonic.  The
a-space state is ``b / (1+p^2)^2``.  No normalization constants are applied,
so every coefficient stays a Gaussian rational.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from gmpy2 import mpq

from .operators import lowering
from .poly import GaussianRational, PolyField, Polynomial3, poly_normalize

__all__ = [
    "QuantumState",
    "HypergeomCoeffs",
    "solid_harmonic",
    "hypergeom_poly",
    "state_b",
    "state_a",
    "rescale_physical",
    "quantum_numbers",
    "proportionality_constant",
    "validate_quantum_numbers",
]


def validate_quantum_numbers(n: int, l: int, m: int) -> None:
    for name, v in (("n", n), ("l", l), ("m", m)):
        if not isinstance(v, int):
            raise TypeError(f"{name} must be an integer, got {v!r}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got n={n}")
    if not 0 <= l < n:
        raise ValueError(f"l must satisfy 0 <= l < n, got n={n}, l={l}")
    if abs(m) > l:
        raise ValueError(f"m must satisfy |m| <= l, got l={l}, m={m}")


def quantum_numbers(max_n: int):
    """All ``(n, l, m)`` with ``n <= max_n`` in lexicographic order."""
    for n in range(1, max_n + 1):
        for l in range(n):
            for m in range(-l, l + 1):
                yield n, l, m


@lru_cache(maxsize=None)
def solid_harmonic(l: int, m: int) -> Polynomial3:
    """Unnormalized solid harmonic of degree ``l``.

    The top state is ``(p1 + i p2)^l``; lower ``m`` follow from repeated
    application of ``L_- = L_x - i L_y`` with no rescaling.
    """
    if l < 0 or abs(m) > l:
        raise ValueError(f"need 0 <= l and |m| <= l, got l={l}, m={m}")
    if m == l:
        top = Polynomial3({(1, 0, 0): 1, (0, 1, 0): GaussianRational(0, 1)}) ** l
        return top
    field = lowering()(PolyField(solid_harmonic(l, m + 1)))
    return field.numerator


@dataclass(frozen=True)
class HypergeomCoeffs:
    """Coefficients of ``P_k(u) = sum_j coeffs[j] u^j``."""

    coeffs: tuple

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, j):
        return self.coeffs[j]

    @property
    def k(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, u):
        out = 0
        for c in reversed(self.coeffs):
            out = out * u + (c.re if not c.im else complex(c))
        return out


def _pochhammer(a: mpq, j: int) -> mpq:
    out = mpq(1)
    for t in range(j):
        out *= a + t
    return out


def hypergeom_poly(k: int, l: int) -> HypergeomCoeffs:
    """Terminating Gauss series ``F(-k, 2l+k+2; l+3/2; u)`` as exact coefficients."""
    if k < 0 or l < 0:
        raise ValueError("k and l must be non-negative")
    alpha, beta, gamma = mpq(-k), mpq(2 * l + k + 2), mpq(2 * l + 3, 2)
    coeffs = []
    c = mpq(1)
    for j in range(k + 1):
        if j:
            # ratio of successive series terms
            c = c * (alpha + j - 1) * (beta + j - 1) / ((gamma + j - 1) * j)
        coeffs.append(GaussianRational(c))
    return HypergeomCoeffs(tuple(coeffs))


def state_b(n: int, l: int, m: int) -> PolyField:
    validate_quantum_numbers(n, l, m)
    k = n - l - 1
    coeffs = hypergeom_poly(k, l)
    q = Polynomial3({(0, 0, 0): 1, (2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1})
    # sum_j c_j u^j = sum_j c_j q^(k-j) / q^k
    radial = Polynomial3()
    for j, c in enumerate(coeffs.coeffs):
        radial = radial + (q ** (k - j)).scale(c)
    return poly_normalize(solid_harmonic(l, m) * radial, l + k)


def state_a(n: int, l: int, m: int) -> PolyField:
    return state_b(n, l, m).mul_q_power(-2)


def rescale_physical(f: PolyField, n: int) -> PolyField:
    """Substitute ``p -> n p``; the result lives over ``(1 + n^2 p^2)``."""
    if n < 1:
        raise ValueError("scale must be a positive integer")
    if n == 1:
        return f
    return poly_normalize(f.numerator.substitute_scale(n), f.denom_power, f.scale * n)


def proportionality_constant(f: PolyField, g: PolyField):
    """Return ``c`` with ``f == c * g`` exactly, or ``None`` if no such constant exists."""
    if g.is_zero():
        return GaussianRational(0) if f.is_zero() else None
    if f.scale != g.scale or f.denom_power != g.denom_power:
        return None
    e, cg = next(g.numerator.items())
    c = f.numerator.coefficient(e) / cg
    return c if f.numerator == g.numerator.scale(c) else None


@dataclass(frozen=True)
class QuantumState:
    """Quantum numbers with the unit-radius b- and a-space functions."""

    n: int
    l: int
    m: int
    b: PolyField
    a: PolyField

    @classmethod
    def build(cls, n: int, l: int, m: int) -> "QuantumState":
        b = state_b(n, l, m)
        return cls(n, l, m, b, b.mul_q_power(-2))

    @property
    def k(self) -> int:
        return self.n - self.l - 1

    def physical(self, space: str = "a") -> PolyField:
        return rescale_physical(self.a if space == "a" else self.b, self.n)

    def to_json(self, space: str = "b", physical: bool = False) -> dict:
        field = self.a if space == "a" else self.b
        if space not in ("a", "b"):
            raise ValueError("space must be 'a' or 'b'")
        scale = self.n if physical else 1
        return {
            "n": self.n,
            "l": self.l,
            "m": self.m,
            "k": self.k,
            "space": space,
            "scale": scale,
            "field": rescale_physical(field, scale).to_json(),
        }

    def dumps(self, space: str = "b", physical: bool = False) -> str:
        return json.dumps(self.to_json(space, physical), sort_keys=True)

    @classmethod
    def from_json(cls, data) -> "QuantumState":
        """Rebuild from an envelope; the unit-radius field must match the construction."""
        if isinstance(data, str):
            data = json.loads(data)
        state = cls.build(int(data["n"]), int(data["l"]), int(data["m"]))
        field = PolyField.from_json(data["field"])
        expected = state.a if data["space"] == "a" else state.b
        if field != rescale_physical(expected, int(data.get("scale", 1))):
            raise ValueError("envelope field does not match the state's construction")
        return state
