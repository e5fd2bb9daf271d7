"""Exact polynomial algebra over the Gaussian rationals.

The central object is :class:`PolyField`, an element ``P(p) / (1 + s^2 p^2)^N``
with ``P`` a polynomial in the three momentum components.  With ``s = 1`` this
ring is closed under differentiation, multiplication by momentum components
and the Euler degree operator, so every operator identity of the momentum-space
Coulomb problem reduces to an exact equality of canonical forms.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping

import numpy as np
from gmpy2 import mpq

__all__ = [
    "GaussianRational",
    "I",
    "Polynomial3",
    "PolyField",
    "VectorField",
    "poly_normalize",
    "evaluate",
]

_ZERO = mpq(0)
_ONE = mpq(1)


def _to_mpq(x) -> mpq:
    if isinstance(x, float):
        if not np.isfinite(x):
            raise ValueError(f"cannot convert {x!r} to an exact rational")
    return mpq(x)


class GaussianRational:
    """Exact complex number ``re + i*im`` with arbitrary-precision rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            re, im = re.re, re.im + _to_mpq(im)
        elif isinstance(re, complex):
            re, im = re.real, re.imag + im
        self.re = _to_mpq(re)
        self.im = _to_mpq(im)

    @staticmethod
    def _raw(re: mpq, im: mpq) -> "GaussianRational":
        g = object.__new__(GaussianRational)
        g.re = re
        g.im = im
        return g

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        return cls(x)

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Inverse of ``str``: accepts ``"3/2"``, ``"-1/3i"``, ``"3/2-1/3i"``."""
        body = text.replace(" ", "")
        try:
            if not body.endswith("i"):
                return cls(mpq(body), 0)
            body = body[:-1]
            cut = max(body.rfind("+"), body.rfind("-"))
            re_, im_ = (body[:cut], body[cut:]) if cut > 0 else ("0", body)
            if im_ in ("", "+", "-"):
                im_ += "1"
            return cls(mpq(re_), mpq(im_.lstrip("+")))
        except ValueError:
            raise ValueError(f"malformed Gaussian rational {text!r}") from None

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return not self.im and self.re == other
        if isinstance(other, complex):
            return self == GaussianRational(other)
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(Fraction(int(self.re.numerator), int(self.re.denominator)))
        return hash((self.re, self.im))

    def __neg__(self) -> "GaussianRational":
        return GaussianRational._raw(-self.re, -self.im)

    def __add__(self, other) -> "GaussianRational":
        o = other if isinstance(other, GaussianRational) else _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return GaussianRational._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other) -> "GaussianRational":
        o = other if isinstance(other, GaussianRational) else _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return GaussianRational._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other) -> "GaussianRational":
        return (-self) + other

    def __mul__(self, other) -> "GaussianRational":
        o = other if isinstance(other, GaussianRational) else _coerce_or_none(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, o.re, o.im
        if not b:
            return GaussianRational._raw(a * c, a * d)
        if not d:
            return GaussianRational._raw(a * c, b * c)
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GaussianRational":
        o = other if isinstance(other, GaussianRational) else _coerce_or_none(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero Gaussian rational")
        c, d = o.re, o.im
        if not d:
            return GaussianRational._raw(self.re / c, self.im / c)
        norm = c * c + d * d
        return self * GaussianRational._raw(c / norm, -d / norm)

    def __rtruediv__(self, other) -> "GaussianRational":
        return GaussianRational.coerce(other) / self

    def __pow__(self, k: int) -> "GaussianRational":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return GaussianRational(1) / self ** (-k)
        out = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        im = f"{self.im}i"
        if not self.re:
            return im
        sign = "" if self.im < 0 else "+"
        return f"{self.re}{sign}{im}"

    def __repr__(self) -> str:
        return f"GaussianRational({str(self)!r})"


def _coerce_or_none(x):
    if isinstance(x, (int, Rational, float, complex)) or type(x).__name__ == "mpq":
        return GaussianRational(x)
    return None


I = GaussianRational(0, 1)

Exponent = tuple


# ---------------------------------------------------------------------------
# sparse polynomials
# ---------------------------------------------------------------------------

def _grlex_key(e: tuple) -> tuple:
    return (sum(e), e)


class SparsePolynomial:
    """Sparse polynomial in ``nvars`` variables with Gaussian-rational coefficients.

    Instances are immutable; ``terms`` maps exponent tuples to nonzero
    coefficients.  Iteration is graded lexicographic, highest term first.
    """

    __slots__ = ("_terms",)
    nvars = 0
    var_names: tuple = ()

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(int(x) for x in e)
                if len(e) != self.nvars or any(x < 0 for x in e):
                    raise ValueError(f"bad exponent {e} for {self.nvars} variables")
                c = GaussianRational.coerce(c)
                if c:
                    clean[e] = clean[e] + c if e in clean else c
            clean = {e: c for e, c in clean.items() if c}
        self._terms = clean

    @classmethod
    def _from_clean(cls, terms: dict):
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def constant(cls, c) -> "SparsePolynomial":
        return cls({(0,) * cls.nvars: c})

    @classmethod
    def variable(cls, index: int) -> "SparsePolynomial":
        e = [0] * cls.nvars
        e[index] = 1
        return cls({tuple(e): 1})

    @classmethod
    def monomial(cls, exponents, coeff=1) -> "SparsePolynomial":
        return cls({tuple(exponents): coeff})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple, GaussianRational]]:
        for e in sorted(self._terms, key=_grlex_key, reverse=True):
            yield e, self._terms[e]

    def coefficient(self, exponents) -> GaussianRational:
        return self._terms.get(tuple(exponents), GaussianRational(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePolynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Rational, GaussianRational, complex)):
            return self == self.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, SparsePolynomial):
            return None
        if _coerce_or_none(other) is not None or isinstance(other, GaussianRational):
            return self.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in o._terms.items():
            if e in out:
                s = out[e] + c
                if s:
                    out[e] = s
                else:
                    del out[e]
            else:
                out[e] = c
        return self._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return self._from_clean({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "SparsePolynomial":
        c = GaussianRational.coerce(c)
        if not c:
            return self._from_clean({})
        return self._from_clean({e: v * c for e, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, GaussianRational) or _coerce_or_none(other) is not None:
            return self.scale(other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                if e in out:
                    out[e] = out[e] + v
                else:
                    out[e] = v
        return self._from_clean({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = self.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def mul_monomial(self, exponents, coeff=1):
        """Multiply by ``coeff * x^exponents`` (cheap shift of every term)."""
        coeff = GaussianRational.coerce(coeff)
        if not coeff:
            return self._from_clean({})
        return self._from_clean(
            {tuple(a + b for a, b in zip(e, exponents)): c * coeff for e, c in self._terms.items()}
        )

    def partial(self, index: int):
        out = {}
        for e, c in self._terms.items():
            k = e[index]
            if k:
                f = list(e)
                f[index] = k - 1
                out[tuple(f)] = c * k
        return self._from_clean(out)

    def conjugate(self):
        """Complex-conjugate the coefficients (the variables are taken real)."""
        return self._from_clean({e: c.conjugate() for e, c in self._terms.items()})

    def substitute_scale(self, s) -> "SparsePolynomial":
        """Return ``P(s*x)``."""
        s = mpq(s)
        return self._from_clean({e: c * GaussianRational._raw(s ** sum(e), _ZERO) for e, c in self._terms.items()})

    def __call__(self, *point):
        """Exact evaluation at Gaussian-rational (or exact real) coordinates."""
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} coordinates")
        xs = [GaussianRational.coerce(x) for x in point]
        powers: list[dict] = [dict() for _ in xs]
        total = GaussianRational(0)
        for e, c in self._terms.items():
            term = c
            for j, k in enumerate(e):
                if k:
                    pw = powers[j].get(k)
                    if pw is None:
                        pw = powers[j][k] = xs[j] ** k
                    term = term * pw
            total = total + term
        return total

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            mono = "*".join(
                name if k == 1 else f"{name}^{k}" for name, k in zip(self.var_names, e) if k
            )
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)

    @classmethod
    def from_text(cls, text: str):
        text = text.strip()
        if text == "0":
            return cls()
        terms: dict = {}
        for part in _split_terms(text):
            m = re.fullmatch(r"\(([^()]*)\)(?:\*(.*))?", part.strip())
            if m is None:
                raise ValueError(f"malformed term {part!r}")
            coeff = GaussianRational.parse(m.group(1))
            e = [0] * cls.nvars
            if m.group(2):
                for factor in m.group(2).split("*"):
                    name, _, k = factor.partition("^")
                    try:
                        idx = cls.var_names.index(name)
                    except ValueError:
                        raise ValueError(f"unknown variable {name!r}") from None
                    e[idx] += int(k) if k else 1
            e = tuple(e)
            terms[e] = terms[e] + coeff if e in terms else coeff
        return cls(terms)

    def to_json_terms(self) -> list:
        return [{"e": list(e), "re": str(c.re), "im": str(c.im)} for e, c in self.items()]

    @classmethod
    def from_json_terms(cls, terms: Iterable[Mapping]):
        out: dict = {}
        for t in terms:
            e = tuple(t["e"])
            c = GaussianRational(mpq(t["re"]), mpq(t.get("im", "0")))
            out[e] = out[e] + c if e in out else c
        return cls(out)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_text()!r})"


def _split_terms(text: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "+" and depth == 0 and text[i - 1] == " ":
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return parts


class Polynomial3(SparsePolynomial):
    """Polynomial in the momentum components ``p1, p2, p3``."""

    __slots__ = ()
    nvars = 3
    var_names = ("p1", "p2", "p3")

    def euler_degree(self) -> "Polynomial3":
        """``(p . grad) P``: each term scaled by its total degree."""
        return self._from_clean({e: c * sum(e) for e, c in self._terms.items() if sum(e)})

    def laplacian(self) -> "Polynomial3":
        out: dict = {}
        for e, c in self._terms.items():
            for i in range(3):
                k = e[i]
                if k >= 2:
                    f = list(e)
                    f[i] = k - 2
                    f = tuple(f)
                    v = c * (k * (k - 1))
                    out[f] = out[f] + v if f in out else v
        return self._from_clean({e: c for e, c in out.items() if c})

    def mul_coordinate(self, axis: int) -> "Polynomial3":
        shift = [0, 0, 0]
        shift[axis - 1] = 1
        return self.mul_monomial(shift)


def momentum_squared(scale=1) -> Polynomial3:
    s2 = mpq(scale) ** 2
    return Polynomial3({(2, 0, 0): s2, (0, 2, 0): s2, (0, 0, 2): s2})


def _q_poly(scale) -> Polynomial3:
    """The denominator base ``1 + s^2 p^2``."""
    return momentum_squared(scale) + 1


def _divmod_q(num: Polynomial3, scale) -> tuple[Polynomial3, Polynomial3]:
    """Divide by ``1 + s^2 p^2``, treating it as monic quadratic in ``p1``.

    The remainder has ``p1``-degree at most one and is the graded-lex normal
    form, so divisibility is decided by its vanishing.
    """
    s2 = mpq(scale) ** 2
    inv = GaussianRational._raw(1 / s2, _ZERO)
    s2g = GaussianRational._raw(s2, _ZERO)
    buckets: dict[int, dict] = {}
    for (a, b, c), v in num._terms.items():
        buckets.setdefault(a, {})[(b, c)] = v
    quotient: dict = {}
    for a in range(max(buckets, default=0), 1, -1):
        if a not in buckets:
            continue
        below = buckets.setdefault(a - 2, {})
        for (b, c), v in buckets[a].items():
            if not v:
                continue
            t = v * inv
            quotient[(a - 2, b, c)] = t
            # subtract t * p1^(a-2) p2^b p3^c * (1 + s^2 p2^2 + s^2 p3^2)
            u = t * s2g
            for key, w in (((b, c), t), ((b + 2, c), u), ((b, c + 2), u)):
                if key in below:
                    below[key] = below[key] - w
                else:
                    below[key] = -w
    rem = {}
    for a in (0, 1):
        for (b, c), v in buckets.get(a, {}).items():
            if v:
                rem[(a, b, c)] = v
    return Polynomial3._from_clean(quotient), Polynomial3._from_clean(rem)


def _maybe_divisible(num: Polynomial3, scale) -> bool:
    # q vanishes at p = (i/s, 0, 0) and permutations; a nonzero value there rules out divisibility
    z = GaussianRational(0, mpq(1) / mpq(scale))
    zero = GaussianRational(0)
    return (
        num(z, zero, zero).is_zero()
        and num(zero, z, zero).is_zero()
        and num(zero, zero, z).is_zero()
    )


def poly_normalize(numerator: Polynomial3, denom_power: int, scale=1) -> "PolyField":
    """Canonical ``PolyField`` equal to ``numerator / (1 + s^2 p^2)^denom_power``."""
    if denom_power < 0:
        raise ValueError("denom_power must be non-negative")
    if not isinstance(numerator, Polynomial3):
        numerator = Polynomial3.constant(numerator)
    if numerator.is_zero():
        return PolyField._raw(numerator, 0, mpq(scale))
    n = denom_power
    while n > 0 and _maybe_divisible(numerator, scale):
        quot, rem = _divmod_q(numerator, scale)
        if not rem.is_zero():
            break
        numerator = quot
        n -= 1
    return PolyField._raw(numerator, n, mpq(scale))


class PolyField:
    """Canonical element ``numerator / (1 + s^2 p^2)^denom_power``.

    ``scale`` is 1 for the unit-radius ring where all operators live.  Other
    scales arise only from the physical rescaling ``p -> n p``.
    """

    __slots__ = ("numerator", "denom_power", "scale")

    def __init__(self, numerator=0, denom_power: int = 0, scale=1):
        f = poly_normalize(
            numerator if isinstance(numerator, Polynomial3) else Polynomial3.constant(numerator),
            denom_power,
            scale,
        )
        self.numerator = f.numerator
        self.denom_power = f.denom_power
        self.scale = f.scale

    @staticmethod
    def _raw(numerator: Polynomial3, denom_power: int, scale) -> "PolyField":
        f = object.__new__(PolyField)
        f.numerator = numerator
        f.denom_power = denom_power
        f.scale = scale
        return f

    # constructors -----------------------------------------------------
    @classmethod
    def coordinate(cls, axis: int) -> "PolyField":
        return cls._raw(Polynomial3.variable(axis - 1), 0, _ONE)

    @classmethod
    def constant(cls, c, scale=1) -> "PolyField":
        return cls(Polynomial3.constant(c), 0, scale)

    @classmethod
    def q(cls, power: int = 1) -> "PolyField":
        """``(1 + p^2)^power`` for any integer power."""
        if power >= 0:
            return cls._raw(_q_poly(1) ** power, 0, _ONE)
        return cls._raw(Polynomial3.constant(1), -power, _ONE)

    @classmethod
    def p_squared(cls) -> "PolyField":
        return cls._raw(momentum_squared(1), 0, _ONE)

    # structure --------------------------------------------------------
    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def base(self) -> Polynomial3:
        return _q_poly(self.scale)

    def _check_scale(self, other: "PolyField"):
        if self.scale != other.scale:
            raise ValueError(
                f"cannot combine fields over (1+{self.scale ** 2}p^2) and (1+{other.scale ** 2}p^2)"
            )

    def _lift(self, power: int) -> Polynomial3:
        """Numerator over ``(1 + s^2 p^2)^power`` (``power >= denom_power``)."""
        extra = power - self.denom_power
        if extra == 0:
            return self.numerator
        return self.numerator * self.base() ** extra

    def __eq__(self, other) -> bool:
        if isinstance(other, PolyField):
            return (
                self.denom_power == other.denom_power
                and self.scale == other.scale
                and self.numerator == other.numerator
            )
        if isinstance(other, (int, Rational, GaussianRational, complex, Polynomial3)):
            return self == _as_field(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.numerator, self.denom_power, self.scale))

    # ring operations ----------------------------------------------------
    def __add__(self, other) -> "PolyField":
        o = _as_field(other, self.scale)
        if o is None:
            return NotImplemented
        self._check_scale(o)
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        n = max(self.denom_power, o.denom_power)
        return poly_normalize(self._lift(n) + o._lift(n), n, self.scale)

    __radd__ = __add__

    def __neg__(self) -> "PolyField":
        return PolyField._raw(-self.numerator, self.denom_power, self.scale)

    def __sub__(self, other) -> "PolyField":
        o = _as_field(other, self.scale)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "PolyField":
        return (-self) + other

    def __mul__(self, other) -> "PolyField":
        if isinstance(other, GaussianRational) or _coerce_or_none(other) is not None:
            c = GaussianRational.coerce(other)
            if not c:
                return PolyField._raw(Polynomial3(), 0, self.scale)
            return PolyField._raw(self.numerator.scale(c), self.denom_power, self.scale)
        o = _as_field(other, self.scale)
        if o is None:
            return NotImplemented
        self._check_scale(o)
        return poly_normalize(
            self.numerator * o.numerator, self.denom_power + o.denom_power, self.scale
        )

    __rmul__ = __mul__

    def __truediv__(self, c) -> "PolyField":
        c = GaussianRational.coerce(c)
        return self * (GaussianRational(1) / c)

    def __pow__(self, k: int) -> "PolyField":
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = PolyField.constant(1, self.scale)
        for _ in range(k):
            out = out * self
        return out

    def mul_q_power(self, k: int) -> "PolyField":
        """Multiply by ``(1 + s^2 p^2)^k``; ``k`` may be negative."""
        if k == 0 or self.is_zero():
            return self
        n = self.denom_power - k
        if n >= 0:
            if k > 0:
                return PolyField._raw(self.numerator, n, self.scale)
            return poly_normalize(self.numerator, n, self.scale)
        return PolyField._raw(self.numerator * self.base() ** (-n), 0, self.scale)

    def mul_coordinate(self, axis: int) -> "PolyField":
        return poly_normalize(self.numerator.mul_coordinate(axis), self.denom_power, self.scale)

    def conjugate(self) -> "PolyField":
        return PolyField._raw(self.numerator.conjugate(), self.denom_power, self.scale)

    # differential operators ---------------------------------------------
    def partial(self, axis: int) -> "PolyField":
        """Exact derivative along momentum axis 1, 2 or 3."""
        i = axis - 1
        num, n = self.numerator, self.denom_power
        dnum = num.partial(i)
        if n == 0:
            return PolyField._raw(dnum, 0, self.scale)
        # d[P q^-N] = [(dP) q - 2 N s^2 p_i P] q^-(N+1)
        s2 = self.scale ** 2
        shift = [0, 0, 0]
        shift[i] = 1
        out = dnum * self.base() + num.mul_monomial(shift, -2 * n * s2)
        return poly_normalize(out, n + 1, self.scale)

    def gradient(self) -> "VectorField":
        return VectorField(self.partial(1), self.partial(2), self.partial(3))

    def euler_degree(self) -> "PolyField":
        """``(p . grad) f``; on homogeneous polynomials this multiplies by the degree."""
        num, n = self.numerator, self.denom_power
        lp = num.euler_degree()
        if n == 0:
            return PolyField._raw(lp, 0, self.scale)
        # l[P q^-N] = [(lP - 2N P) q + 2N P] q^-(N+1), using s^2 p^2 = q - 1
        out = (lp - num.scale(2 * n)) * self.base() + num.scale(2 * n)
        return poly_normalize(out, n + 1, self.scale)

    def laplacian(self) -> "PolyField":
        num, n = self.numerator, self.denom_power
        lap = num.laplacian()
        if n == 0:
            return PolyField._raw(lap, 0, self.scale)
        q = self.base()
        s2 = self.scale ** 2
        # [dP q^2 - 4N s^2 (lP) q - 6N s^2 P q + 4N(N+1) s^2 (q-1) P] / q^(N+2)
        out = (
            lap * q * q
            - (num.euler_degree().scale(4 * n * s2) + num.scale(6 * n * s2)) * q
            + num.scale(4 * n * (n + 1) * s2) * (q - 1)
        )
        return poly_normalize(out, n + 2, self.scale)

    # numerics -----------------------------------------------------------
    def evaluate(self, point, precision: int = 53):
        return evaluate(self, point, precision)

    def evaluate_array(self, points) -> np.ndarray:
        """Vectorized float evaluation at an ``(..., 3)`` array of momenta.

        For ``|p| > 1`` numerator and denominator are both divided by
        ``|p|^degree`` before combining so that large momenta do not overflow.
        """
        pts = np.asarray(points, dtype=float)
        flat = pts.reshape(-1, 3)
        r = np.sqrt(np.einsum("ij,ij->i", flat, flat))
        big = r > 1.0
        rs = np.where(big, r, 1.0)
        unit = flat / rs[:, None]
        deg = max(self.numerator.degree(), 0)
        s2 = float(self.scale) ** 2
        num = np.zeros(len(flat), dtype=complex)
        for e, c in self.numerator._terms.items():
            d = sum(e)
            mono = unit[:, 0] ** e[0] * unit[:, 1] ** e[1] * unit[:, 2] ** e[2]
            num += complex(c) * mono * rs ** (d - deg)
        den_base = 1.0 / rs ** 2 + s2 * np.einsum("ij,ij->i", unit, unit)
        with np.errstate(over="ignore"):
            val = num / den_base ** self.denom_power * rs ** (deg - 2 * self.denom_power)
        return val.reshape(pts.shape[:-1])

    # serialization ------------------------------------------------------
    def _denominator_text(self) -> str:
        if self.scale == 1:
            return f"(1+p^2)^{self.denom_power}"
        return f"(1+{self.scale ** 2}*p^2)^{self.denom_power}"

    def to_text(self) -> str:
        return f"[{self.numerator.to_text()}] / {self._denominator_text()}"

    __str__ = to_text

    @classmethod
    def from_text(cls, text: str) -> "PolyField":
        m = re.fullmatch(r"\s*\[(.*)\]\s*/\s*\(1\+(?:(\d+(?:/\d+)?)\*)?p\^2\)\^(\d+)\s*", text)
        if m is None:
            raise ValueError(f"malformed PolyField text {text!r}")
        s2 = mpq(m.group(2)) if m.group(2) else _ONE
        scale = _exact_sqrt(s2)
        num = Polynomial3.from_text(m.group(1))
        field = cls._raw(num, int(m.group(3)), scale)
        if num.is_zero():
            field.denom_power = 0
        return field

    def to_json(self) -> dict:
        out = {"terms": self.numerator.to_json_terms(), "denomPower": self.denom_power}
        if self.scale != 1:
            out["scale"] = str(self.scale)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: Mapping | str) -> "PolyField":
        if isinstance(data, str):
            data = json.loads(data)
        num = Polynomial3.from_json_terms(data["terms"])
        return poly_normalize(num, int(data["denomPower"]), mpq(data.get("scale", "1")))

    def __repr__(self) -> str:
        return f"PolyField({self.to_text()!r})"


def _exact_sqrt(x: mpq) -> mpq:
    import gmpy2

    num, den = gmpy2.isqrt(x.numerator), gmpy2.isqrt(x.denominator)
    if num * num != x.numerator or den * den != x.denominator:
        raise ValueError(f"scale^2 = {x} is not a rational square")
    return mpq(num, den)


def _as_field(x, scale=1):
    if isinstance(x, PolyField):
        return x
    if isinstance(x, Polynomial3):
        return PolyField._raw(x, 0, mpq(scale))
    if isinstance(x, GaussianRational) or _coerce_or_none(x) is not None:
        return PolyField._raw(Polynomial3.constant(x), 0, mpq(scale))
    return None


def evaluate(f: PolyField, point, precision: int = 53):
    """Value of ``f`` at a real 3-vector, exact until a single final rounding.

    Returns a Python ``complex`` for ``precision == 53`` and an ``mpmath.mpc``
    carrying ``precision`` bits otherwise.
    """
    if precision < 53:
        raise ValueError("precision must be at least 53 bits")
    xs = [GaussianRational(_to_mpq(float(x) if not isinstance(x, (int, Rational)) else x)) for x in point]
    num = f.numerator(*xs)
    s2 = f.scale ** 2
    r2 = sum((x.re * x.re for x in xs), _ZERO)
    den = (1 + s2 * r2) ** f.denom_power
    re_, im_ = num.re / den, num.im / den
    if precision == 53:
        return complex(_round_float(re_), _round_float(im_))
    import mpmath

    with mpmath.workprec(precision):
        return mpmath.mpc(
            mpmath.mpf(int(re_.numerator)) / int(re_.denominator),
            mpmath.mpf(int(im_.numerator)) / int(im_.denominator),
        )


def _round_float(x: mpq) -> float:
    # int / int true division is correctly rounded
    return int(x.numerator) / int(x.denominator)


class VectorField:
    """Three ``PolyField`` components, one per momentum axis."""

    __slots__ = ("x", "y", "z")

    def __init__(self, x, y, z):
        self.x, self.y, self.z = (_as_field(c) if not isinstance(c, PolyField) else c for c in (x, y, z))

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def __getitem__(self, axis: int) -> PolyField:
        """Component along momentum axis 1, 2 or 3."""
        return (self.x, self.y, self.z)[axis - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, VectorField):
            return NotImplemented
        return tuple(self) == tuple(other)

    def __hash__(self) -> int:
        return hash(tuple(self))

    def __add__(self, other: "VectorField") -> "VectorField":
        return VectorField(*(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "VectorField") -> "VectorField":
        return VectorField(*(a - b for a, b in zip(self, other)))

    def __mul__(self, c) -> "VectorField":
        return VectorField(*(a * c for a in self))

    __rmul__ = __mul__

    def dot(self, other: "VectorField") -> PolyField:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self)

    def to_json(self) -> dict:
        return {"x": self.x.to_json(), "y": self.y.to_json(), "z": self.z.to_json()}

    def __repr__(self) -> str:
        return f"VectorField({self.x!r}, {self.y!r}, {self.z!r})"
