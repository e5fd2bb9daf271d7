"""Exact momentum-space hydrogen eigenfunctions and their SO(4) symmetry.

Functions are elements of the ring ``P(p) / (1 + s^2 p^2)^N`` with Gaussian
rational coefficients, so operator identities are checked by exact
cancellation rather than sampling.
"""

from .eigenbasis import QuantumState, quantum_numbers, state_a, state_b
from .fock import SpherePoint, SpherePolynomial, pullback, stereographic_forward, stereographic_inverse
from .linop import LinearOperator, OperatorSpecError, build_operator
from .numerics import CheckReport
from .operators import angular_momentum, hamiltonian_b, runge_lenz_a, runge_lenz_b
from .poly import GaussianRational, PolyField, Polynomial3, evaluate
from .quadrature import QuadratureSpec
from .verify import run_suite

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "GaussianRational",
    "LinearOperator",
    "OperatorSpecError",
    "PolyField",
    "Polynomial3",
    "QuadratureSpec",
    "QuantumState",
    "SpherePoint",
    "SpherePolynomial",
    "angular_momentum",
    "build_operator",
    "evaluate",
    "hamiltonian_b",
    "pullback",
    "quantum_numbers",
    "run_suite",
    "runge_lenz_a",
    "runge_lenz_b",
    "state_a",
    "state_b",
    "stereographic_forward",
    "stereographic_inverse",
]
