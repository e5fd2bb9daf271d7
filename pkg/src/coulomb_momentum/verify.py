"""Verification suites.

Each suite returns a list of :class:`~coulomb_momentum.numerics.CheckReport`.
Exact suites compare canonical forms, so their residual is the number of
test elements on which an identity fails and their tolerance is zero.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from . import eigenbasis as eb
from .fock import (
    gauss_gegenbauer_spread,
    kernel_identity_residual,
    pullback,
    rotation_generator,
    sphere_monomials,
)
from .linop import LinearOperator, conjugate_by_weight
from .numerics import (
    CheckReport,
    fourier_radial_check,
    integral_equation_residual,
    negative_control,
    overlap_matrix,
    sphere_area_check,
)
from .operators import (
    ORDERINGS,
    angular_momentum_triple,
    casimir_sum,
    hamiltonian_b,
    l_squared,
    levi_civita,
    runge_lenz_a,
    runge_lenz_b,
    runge_lenz_triple,
)
from .poly import GaussianRational, I, PolyField, Polynomial3
from .quadrature import QuadratureSpec

__all__ = [
    "IdentityRecord",
    "spanning_set",
    "DEFAULT_TOLERANCES",
    "tolerance_profile",
    "SUITES",
    "run_suite",
    "solve_in_span",
]

DEFAULT_TOLERANCES = {
    "integral": 1e-6,
    "integral_control": 1e-2,
    "fourier": 1e-8,
    "fourier_control": 1e-1,
    "kernel": 1e-12,
    "area": 1e-8,
    "gegenbauer": 1e-10,
    "overlap": 1e-8,
}

# multipliers applied to every tolerance except negative-control thresholds
_PROFILES = {"default": 1.0, "strict": 1e-2, "loose": 1e2}
PROFILE_ENV = "COULOMB_MOMENTUM_TOL_PROFILE"


def tolerance_profile(name: str | None = None) -> dict[str, float]:
    name = name or os.environ.get(PROFILE_ENV, "default")
    if name not in _PROFILES:
        raise ValueError(f"unknown tolerance profile {name!r}; choose from {sorted(_PROFILES)}")
    factor = _PROFILES[name]
    return {k: v if k.endswith("_control") else v * factor for k, v in DEFAULT_TOLERANCES.items()}


@dataclass(frozen=True)
class IdentityRecord:
    identity: str
    test_element: str
    residual_is_zero: bool

    def to_json(self) -> dict:
        return {"identity": self.identity, "testElement": self.test_element, "residualIsZero": self.residual_is_zero}


def spanning_set(degree: int = 4, denom_power: int = 3) -> list[PolyField]:
    """Monomials ``p^e / (1+p^2)^N`` with ``|e| <= degree`` and ``N <= denom_power``."""
    out = []
    for big_n in range(denom_power + 1):
        for d in range(degree + 1):
            for a in range(d, -1, -1):
                for b in range(d - a, -1, -1):
                    out.append(PolyField(Polynomial3.monomial((a, b, d - a - b)), big_n))
    return out


def _exact_report(name: str, records: list[IdentityRecord], keep_records: bool, **metadata) -> CheckReport:
    failures = [r for r in records if not r.residual_is_zero]
    meta = {"elements": len(records), "failures": [r.to_json() for r in failures[:10]], **metadata}
    if keep_records:
        meta["records"] = [r.to_json() for r in records]
    return CheckReport(name, float(len(failures)), 0.0, meta)


# ---------------------------------------------------------------------------
# exact suites
# ---------------------------------------------------------------------------

def solve_in_span(f: PolyField, basis: list[PolyField]):
    """Exact coefficients ``c`` with ``f == sum c_j basis_j``, or ``None``."""
    fields = basis + [f]
    top = max(g.denom_power for g in fields)
    polys = [g._lift(top) for g in fields]
    monos = sorted({e for p in polys for e in p.terms})
    # rows: monomials; columns: basis functions | target
    rows = [[p.coefficient(e) for p in polys] for e in monos]
    ncols = len(basis)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = GaussianRational(1) / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    if any(row[-1] for row in rows[r:]):
        return None
    coeffs = [GaussianRational(0)] * ncols
    for i, c in enumerate(pivots):
        coeffs[c] = rows[i][-1]
    return coeffs


def eigen_suite(max_n: int = 6, keep_records: bool = False, **_) -> list[CheckReport]:
    """Schrodinger eigenvalues, angular quantum numbers and multiplet closure."""
    ham = hamiltonian_b()
    lz = angular_momentum_triple()[3]
    l2 = l_squared()
    reports = []
    for n, l, m in eb.quantum_numbers(max_n):
        b = eb.state_b(n, l, m)
        image = ham(b)
        measured = eb.proportionality_constant(image, b)
        ok = image == b * (n * n - 1)
        ang_ok = lz(b) == b * m and l2(b) == b * (l * (l + 1))
        records = [
            IdentityRecord("H b = (n^2-1) b", f"b[{n},{l},{m}]", ok),
            IdentityRecord("Lz b = m b, L^2 b = l(l+1) b", f"b[{n},{l},{m}]", ang_ok),
        ]
        reports.append(
            _exact_report(
                f"eigen n={n} l={l} m={m}", records, keep_records,
                expected_eigenvalue=n * n - 1,
                measured_eigenvalue=None if measured is None else str(measured),
            )
        )
    reports.extend(multiplet_closure(2, keep_records))
    return reports


def multiplet_closure(n: int, keep_records: bool = False) -> list[CheckReport]:
    """Each Runge-Lenz component maps the level-``n`` multiplet into itself."""
    labels = [(l, m) for l in range(n) for m in range(-l, l + 1)]
    basis = [eb.state_b(n, l, m) for l, m in labels]
    records = []
    coefficients = {}
    for axis, op in zip((1, 2, 3), runge_lenz_triple("b")):
        for (l, m), b in zip(labels, basis):
            coeffs = eb_solve = solve_in_span(op(b), basis)
            records.append(IdentityRecord(f"A_{axis} b in span(level {n})", f"b[{n},{l},{m}]", eb_solve is not None))
            if coeffs is not None:
                coefficients[f"A{axis} b[{n},{l},{m}]"] = {
                    f"b[{n},{ll},{mm}]": str(c) for (ll, mm), c in zip(labels, coeffs) if c
                }
    return [_exact_report(f"multiplet closure n={n}", records, keep_records, coefficients=coefficients)]


def _generator_label(f: PolyField) -> str:
    return f.to_text()


def commutator_suite(degree: int = 4, denom_power: int = 3, space: str = "b", keep_records: bool = False, **_):
    """``[L_i, A_k] = i eps A_l``, ``[A_i, A_k] = i eps L_l`` and ``A.L = L.A = 0``."""
    L = angular_momentum_triple()
    A = runge_lenz_triple(space)
    elements = spanning_set(degree, denom_power)
    names_la = {(i, k): f"[L{i},A{k}] = i eps A" for i in (1, 2, 3) for k in (1, 2, 3)}
    names_aa = {(i, k): f"[A{i},A{k}] = i eps L" for i in (1, 2, 3) for k in (1, 2, 3)}
    recs: dict[str, list[IdentityRecord]] = {
        **{v: [] for v in names_la.values()},
        **{v: [] for v in names_aa.values()},
        "A.L = 0": [],
        "L.A = 0": [],
    }
    for f in elements:
        label = _generator_label(f)
        lf = [L[i](f) for i in (1, 2, 3)]
        af = [A[i](f) for i in (1, 2, 3)]
        for i in (1, 2, 3):
            for k in (1, 2, 3):
                rhs_a = _eps_sum(i, k, af)
                rhs_l = _eps_sum(i, k, lf)
                la = L[i](af[k - 1]) - A[k](lf[i - 1])
                aa = A[i](af[k - 1]) - A[k](af[i - 1])
                recs[names_la[(i, k)]].append(IdentityRecord(names_la[(i, k)], label, la == rhs_a))
                recs[names_aa[(i, k)]].append(IdentityRecord(names_aa[(i, k)], label, aa == rhs_l))
        al = sum((A[i](lf[i - 1]) for i in (1, 2, 3)), PolyField())
        la_ = sum((L[i](af[i - 1]) for i in (1, 2, 3)), PolyField())
        recs["A.L = 0"].append(IdentityRecord("A.L = 0", label, al.is_zero()))
        recs["L.A = 0"].append(IdentityRecord("L.A = 0", label, la_.is_zero()))
    meta = {"space": space, "degree": degree, "denom_power": denom_power}
    return [_exact_report(f"{name} ({space}-space)", r, keep_records, **meta) for name, r in recs.items()]


def _eps_sum(i: int, k: int, images: list[PolyField]) -> PolyField:
    out = PolyField()
    for l in (1, 2, 3):
        e = levi_civita(i, k, l)
        if e:
            out = out + images[l - 1] * (I * e)
    return out


def casimir_suite(degree: int = 4, denom_power: int = 3, max_n: int = 4, keep_records: bool = False, **_):
    """Compositional ``L^2 + A^2`` against the closed form, plus measured eigenvalues."""
    cas = casimir_sum("b")
    ham = hamiltonian_b()
    records = [
        IdentityRecord("L^2 + A^2 = H", _generator_label(f), cas(f) == ham(f))
        for f in spanning_set(degree, denom_power)
    ]
    reports = [_exact_report("casimir L^2 + A^2 = H (b-space)", records, keep_records, degree=degree, denom_power=denom_power)]
    eig_records, measured = [], {}
    for n, l, m in eb.quantum_numbers(max_n):
        b = eb.state_b(n, l, m)
        c = eb.proportionality_constant(cas(b), b)
        measured[f"{n},{l},{m}"] = None if c is None else str(c)
        eig_records.append(IdentityRecord("(L^2 + A^2) b = (n^2-1) b", f"b[{n},{l},{m}]", c == n * n - 1))
    reports.append(
        _exact_report(
            "casimir eigenvalue", eig_records, keep_records,
            measured=measured,
            sign_note="measured eigenvalue is +(n^2-1); a statement of -(n^2-1) for the same operator has the opposite sign",
        )
    )
    return reports


def conjugation_suite(degree: int = 4, denom_power: int = 3, keep_records: bool = False, **_):
    """``(1+p^2)^2 A_a (1+p^2)^-2 = A_b``; both readings of the a-space ordering are tried."""
    elements = spanning_set(degree, denom_power)
    outcome = {}
    per_axis = {}
    for ordering in ORDERINGS:
        for axis in (1, 2, 3):
            lhs = conjugate_by_weight(runge_lenz_a(axis, ordering), 2)
            rhs = runge_lenz_b(axis)
            per_axis[(ordering, axis)] = [
                IdentityRecord(f"(1+p^2)^2 A{axis}[a,{ordering}] (1+p^2)^-2 = A{axis}[b]", _generator_label(f), lhs(f) == rhs(f))
                for f in elements
            ]
        outcome[ordering] = sum(not r.residual_is_zero for a in (1, 2, 3) for r in per_axis[(ordering, a)])
    pinned = [o for o in ORDERINGS if outcome[o] == 0]
    pinned_reading = pinned[0] if pinned else None
    reports = []
    for axis in (1, 2, 3):
        recs = per_axis[(pinned_reading or ORDERINGS[0], axis)]
        reports.append(
            _exact_report(
                f"conjugation axis {axis}", recs, keep_records,
                pinned_reading=pinned_reading,
                failures_by_reading=outcome,
            )
        )
    return reports


def rotation_suite(degree: int = 3, keep_records: bool = False, **_):
    """Pullback intertwines the sphere rotation generators with the b-space Runge-Lenz operator."""
    reports = []
    for axis in (1, 2, 3):
        op = runge_lenz_b(axis)
        recs = [
            IdentityRecord(
                f"pullback(R{axis} f) = A{axis} pullback(f)",
                f.to_text(),
                pullback(rotation_generator(axis, f)) == op(pullback(f)),
            )
            for f in sphere_monomials(degree)
        ]
        reports.append(_exact_report(f"rotation axis {axis}", recs, keep_records, degree=degree))
    return reports


def examples_suite(max_n: int = 5, keep_records: bool = False, **_):
    """Closed-form physical states: ``a_200`` and the circular states ``a_{n,n-1}``."""
    q2 = PolyField(Polynomial3({(0, 0, 0): 1, (2, 0, 0): 4, (0, 2, 0): 4, (0, 0, 2): 4}), 0, 2)
    inv_q2 = PolyField(Polynomial3.constant(1), 1, 2)
    expected_200 = inv_q2 * inv_q2 * (PolyField.constant(1, 2) - inv_q2 * 2)
    phys = eb.rescale_physical(eb.state_a(2, 0, 0), 2)
    c = eb.proportionality_constant(phys, expected_200)
    reports = [
        _exact_report(
            "physical a_200", [IdentityRecord("a_200(2p) = c (1+4p^2)^-2 (1 - 2/(1+4p^2))", phys.to_text(), c is not None)],
            keep_records, constant=None if c is None else str(c),
        )
    ]
    recs, consts = [], {}
    for n in range(1, max_n + 1):
        for m in range(-(n - 1), n):
            phys = eb.rescale_physical(eb.state_a(n, n - 1, m), n)
            expected = PolyField(eb.solid_harmonic(n - 1, m), n + 1, n)
            c = eb.proportionality_constant(phys, expected)
            consts[f"{n},{n - 1},{m}"] = None if c is None else str(c)
            recs.append(IdentityRecord("a_{n,n-1}(np) = c Y_{n-1}(p) / (1+n^2p^2)^(n+1)", f"n={n} m={m}", c is not None))
    reports.append(_exact_report("physical circular states", recs, keep_records, constants=consts))
    return reports


# ---------------------------------------------------------------------------
# numeric suites
# ---------------------------------------------------------------------------

def kernel_suite(pairs: int = 1000, seed: int = 20241120, tolerances=None, **_):
    tol = (tolerances or tolerance_profile())["kernel"]
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(pairs):
        p, p2 = _random_ball(rng, 5.0), _random_ball(rng, 5.0)
        worst = max(worst, kernel_identity_residual(p, p2))
    return [CheckReport("kernel identity", worst, tol, {"pairs": pairs, "seed": seed, "radius": 5.0})]


def _random_ball(rng, radius: float) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v) * radius * rng.uniform() ** (1 / 3)


def integral_suite(states=((1, 0), (2, 0), (2, 1), (3, 0)), spec=None, tolerances=None, **_):
    tol = tolerances or tolerance_profile()
    spec = spec or QuadratureSpec()
    reports = [integral_equation_residual(n, l, spec, tolerance=tol["integral"]) for n, l in states]
    wrong = PolyField.q(-2) * (PolyField.p_squared() / 10 + 1)
    control = integral_equation_residual(1, 0, spec, field=wrong, tolerance=tol["integral"])
    reports.append(
        negative_control("integral negative control n=1", control.residual, tol["integral_control"], perturbation="a(p)(1+0.1p^2)")
    )
    return reports


def fourier_suite(max_n: int = 3, spec=None, tolerances=None, **_):
    tol = tolerances or tolerance_profile()
    spec = spec or QuadratureSpec()
    reports = [fourier_radial_check(n, spec, tolerance=tol["fourier"]) for n in range(1, max_n + 1)]
    control = fourier_radial_check(1, spec, power=3, tolerance=tol["fourier"])
    reports.append(
        negative_control("fourier negative control n=1", control.residual, tol["fourier_control"], wrong_power=3)
    )
    return reports


def area_suite(spec=None, tolerances=None, **_):
    tol = tolerances or tolerance_profile()
    spec = spec or QuadratureSpec()
    full = sphere_area_check(spec, tolerance=tol["area"])
    half = sphere_area_check(spec.coarsened(), tolerance=max(tol["area"], 1e-6), name="sphere area (half nodes)")
    half.metadata["refinement_monotone"] = full.residual <= half.residual or full.residual <= 1e-15
    return [full, half]


def gegenbauer_suite(max_n: int = 5, samples: int = 20, tolerances=None, **_):
    tol = (tolerances or tolerance_profile())["gegenbauer"]
    xi0 = np.cos(np.linspace(0.05, math.pi - 0.05, samples) + 0.013)
    reports = []
    for n in range(1, max_n + 1):
        for l in range(n):
            spread = gauss_gegenbauer_spread(n, l, xi0)
            reports.append(CheckReport(f"gauss-gegenbauer n={n} l={l}", spread, tol, {"samples": samples}))
    return reports


def overlap_suite(max_n: int = 4, spec=None, tolerances=None, **_):
    tol = (tolerances or tolerance_profile())["overlap"]
    states = [eb.QuantumState.build(*q) for q in eb.quantum_numbers(max_n)]
    mat = overlap_matrix(states, spec)
    diag = np.sqrt(np.abs(np.diag(mat)))
    rel = np.abs(mat) / np.outer(diag, diag)
    np.fill_diagonal(rel, 0.0)
    positive = bool(np.all(np.diag(mat).real > 0))
    i, j = np.unravel_index(np.argmax(rel), rel.shape)
    worst = float(rel[i, j]) if positive else math.inf
    return [
        CheckReport(
            f"overlap matrix n<={max_n}", worst, tol,
            {"states": len(states), "worst_pair": [list(map(int, (states[i].n, states[i].l, states[i].m))),
                                                    list(map(int, (states[j].n, states[j].l, states[j].m)))],
             "diagonal_positive": positive},
        )
    ]


SUITES: dict[str, Callable[..., list[CheckReport]]] = {
    "eigen": eigen_suite,
    "commutators": commutator_suite,
    "casimir": casimir_suite,
    "conjugation": conjugation_suite,
    "rotation": rotation_suite,
    "examples": examples_suite,
    "kernel": kernel_suite,
    "integral": integral_suite,
    "fourier": fourier_suite,
    "area": area_suite,
    "gegenbauer": gegenbauer_suite,
    "overlap": overlap_suite,
}


def run_suite(name: str, **options) -> list[CheckReport]:
    """Run one suite (or ``"all"``) and return its reports in a fixed order."""
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(run_suite(key, **options))
        return out
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(list(SUITES) + ['all'])}") from None
    return suite(**options)
