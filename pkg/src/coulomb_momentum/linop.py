"""Composable linear operators on :class:`~coulomb_momentum.poly.PolyField`.

An operator is an immutable expression tree.  Leaves are the primitive
derivations and multiplications; interior nodes are ``compose``, ``add``,
``scale`` and ``conjugate`` (weight conjugation by a power of ``1 + p^2``).

>>> from coulomb_momentum.poly import PolyField
>>> op = partial(1) @ coordinate_mul(1)
>>> op(PolyField.constant(1))
PolyField('[(1)] / (1+p^2)^0')
"""

from __future__ import annotations

import json
from typing import Mapping

from .poly import GaussianRational, PolyField, _coerce_or_none

__all__ = [
    "LinearOperator",
    "OperatorSpecError",
    "identity",
    "partial",
    "coordinate_mul",
    "ring_mul",
    "euler_degree",
    "laplacian",
    "compose",
    "add",
    "scale",
    "conjugate_by_weight",
    "commutator",
    "build_operator",
    "apply_operator",
]

PRIMITIVES = ("identity", "partial", "coordinateMul", "ringMul", "eulerDegree", "laplacian")
COMBINATORS = ("compose", "add", "scale", "conjugate")


class OperatorSpecError(ValueError):
    """Raised for malformed operator expression trees."""


class LinearOperator:
    __slots__ = ("kind", "children", "axis", "factor", "field", "power")

    def __init__(self, kind: str, children=(), *, axis=None, factor=None, field=None, power=None):
        self.kind = kind
        self.children = tuple(children)
        self.axis = axis
        self.factor = None if factor is None else GaussianRational.coerce(factor)
        self.field = field
        self.power = power
        self._validate()

    def _validate(self):
        k = self.kind
        if k not in PRIMITIVES + COMBINATORS:
            raise OperatorSpecError(f"unknown operator kind {k!r}")
        if not all(isinstance(c, LinearOperator) for c in self.children):
            raise OperatorSpecError(f"{k}: children must be LinearOperators")
        if k in PRIMITIVES and self.children:
            raise OperatorSpecError(f"{k} is a primitive and takes no children")
        if k in ("partial", "coordinateMul") and self.axis not in (1, 2, 3):
            raise OperatorSpecError(f"{k} needs axis 1, 2 or 3, got {self.axis!r}")
        if k == "ringMul" and not isinstance(self.field, PolyField):
            raise OperatorSpecError("ringMul needs a PolyField")
        if k in ("compose", "add") and len(self.children) < 1:
            raise OperatorSpecError(f"{k} needs at least one child")
        if k in ("scale", "conjugate") and len(self.children) != 1:
            raise OperatorSpecError(f"{k} takes exactly one child")
        if k == "scale" and self.factor is None:
            raise OperatorSpecError("scale needs a factor")
        if k == "conjugate" and not isinstance(self.power, int):
            raise OperatorSpecError("conjugate needs an integer power")

    # application --------------------------------------------------------
    def __call__(self, f: PolyField) -> PolyField:
        k = self.kind
        if k == "identity":
            return f
        if k == "partial":
            return f.partial(self.axis)
        if k == "coordinateMul":
            return f.mul_coordinate(self.axis)
        if k == "ringMul":
            return f * self.field
        if k == "eulerDegree":
            return f.euler_degree()
        if k == "laplacian":
            return f.laplacian()
        if k == "compose":
            for child in reversed(self.children):
                f = child(f)
            return f
        if k == "add":
            out = self.children[0](f)
            for child in self.children[1:]:
                out = out + child(f)
            return out
        if k == "scale":
            return self.children[0](f) * self.factor
        # conjugate: f -> q^power op(q^-power f)
        return self.children[0](f.mul_q_power(-self.power)).mul_q_power(self.power)

    # algebra --------------------------------------------------------------
    def __matmul__(self, other: "LinearOperator") -> "LinearOperator":
        if not isinstance(other, LinearOperator):
            return NotImplemented
        return compose(self, other)

    def __add__(self, other: "LinearOperator") -> "LinearOperator":
        if not isinstance(other, LinearOperator):
            return NotImplemented
        return add(self, other)

    def __neg__(self) -> "LinearOperator":
        return scale(-1, self)

    def __sub__(self, other: "LinearOperator") -> "LinearOperator":
        if not isinstance(other, LinearOperator):
            return NotImplemented
        return add(self, scale(-1, other))

    def __mul__(self, c) -> "LinearOperator":
        if not (isinstance(c, GaussianRational) or _coerce_or_none(c) is not None):
            return NotImplemented
        return scale(c, self)

    __rmul__ = __mul__

    # serialization --------------------------------------------------------
    def to_json(self) -> dict:
        out: dict = {"op": self.kind}
        if self.axis is not None:
            out["axis"] = self.axis
        if self.factor is not None:
            out["factor"] = {"re": str(self.factor.re), "im": str(self.factor.im)}
        if self.field is not None:
            out["field"] = self.field.to_json()
        if self.power is not None:
            out["power"] = self.power
        if self.children:
            out["children"] = [c.to_json() for c in self.children]
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: Mapping | str) -> "LinearOperator":
        return build_operator(json.loads(data) if isinstance(data, str) else data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearOperator):
            return NotImplemented
        return self.to_json() == other.to_json()

    def __hash__(self) -> int:
        return hash(self.dumps())

    def __repr__(self) -> str:
        if self.kind in PRIMITIVES:
            arg = self.axis if self.axis is not None else ""
            return f"{self.kind}({arg})"
        inner = ", ".join(repr(c) for c in self.children)
        if self.kind == "scale":
            return f"scale({self.factor}, {inner})"
        if self.kind == "conjugate":
            return f"conjugate({inner}, {self.power})"
        return f"{self.kind}({inner})"


def identity() -> LinearOperator:
    return LinearOperator("identity")


def partial(axis: int) -> LinearOperator:
    return LinearOperator("partial", axis=axis)


def coordinate_mul(axis: int) -> LinearOperator:
    return LinearOperator("coordinateMul", axis=axis)


def ring_mul(field) -> LinearOperator:
    if not isinstance(field, PolyField):
        field = PolyField.constant(field)
    return LinearOperator("ringMul", field=field)


def euler_degree() -> LinearOperator:
    return LinearOperator("eulerDegree")


def laplacian() -> LinearOperator:
    return LinearOperator("laplacian")


def compose(*ops: LinearOperator) -> LinearOperator:
    """``compose(A, B)(f) == A(B(f))``; nested compositions are flattened."""
    flat = []
    for op in ops:
        flat.extend(op.children if isinstance(op, LinearOperator) and op.kind == "compose" else [op])
    return LinearOperator("compose", flat)


def add(*ops: LinearOperator) -> LinearOperator:
    flat = []
    for op in ops:
        flat.extend(op.children if isinstance(op, LinearOperator) and op.kind == "add" else [op])
    return LinearOperator("add", flat)


def scale(factor, op: LinearOperator) -> LinearOperator:
    return LinearOperator("scale", [op], factor=factor)


def conjugate_by_weight(op: LinearOperator, power: int) -> LinearOperator:
    """``f -> (1+p^2)^power * op((1+p^2)^-power * f)``."""
    return LinearOperator("conjugate", [op], power=power)


def commutator(a: LinearOperator, b: LinearOperator) -> LinearOperator:
    return a @ b - b @ a


def build_operator(spec: Mapping) -> LinearOperator:
    """Build an operator from its JSON expression tree.

    Raises :class:`OperatorSpecError` for anything malformed.
    """
    if not isinstance(spec, Mapping) or "op" not in spec:
        raise OperatorSpecError(f"operator spec must be a mapping with an 'op' key, got {spec!r}")
    kind = spec["op"]
    children = spec.get("children", [])
    if not isinstance(children, list):
        raise OperatorSpecError("'children' must be a list")
    kids = [build_operator(c) for c in children]
    factor = None
    if "factor" in spec:
        fac = spec["factor"]
        try:
            factor = (
                GaussianRational(*(_parse_rational(fac[k]) for k in ("re", "im")))
                if isinstance(fac, Mapping)
                else GaussianRational.parse(str(fac))
            )
        except (KeyError, ValueError) as exc:
            raise OperatorSpecError(f"bad factor {fac!r}") from exc
    field = None
    if "field" in spec:
        try:
            field = PolyField.from_json(spec["field"])
        except (KeyError, ValueError, TypeError) as exc:
            raise OperatorSpecError(f"bad field {spec['field']!r}") from exc
    return LinearOperator(
        kind, kids, axis=spec.get("axis"), factor=factor, field=field, power=spec.get("power")
    )


def _parse_rational(text):
    from gmpy2 import mpq

    return mpq(str(text))


def apply_operator(op: LinearOperator, f: PolyField) -> PolyField:
    return op(f)
