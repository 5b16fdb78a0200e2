"""Multiplier ideals, log canonical thresholds and jumping numbers of
monomial ideals, computed exactly from Newton polyhedra."""

from .lp import LinearProgram, LPOutcome, Status, check_certificates, solve_max
from .monomial import (
    IdealInputError,
    MonomialIdeal,
    ZeroIdealError,
    algebra,
    contains,
    contains_monomial,
    embed_product,
    intersect,
    max_ideal_power,
    minimalize,
    power,
    product,
    restrict_to_subspace,
    ideal_sum,
)
from .newton import (
    INFINITY,
    DomainError,
    NewtonPolyhedron,
    ScaleValue,
    generator_box_bound,
    in_interior,
    jumping_numbers,
    lct,
    mu,
    multiplier_ideal,
    newton_polyhedron,
    stability_epsilon,
    unit_vector,
)
from .graded import (
    AsymptoticResult,
    GradedSystem,
    TruncationInconclusive,
    asymptotic_multiplier_ideal,
    powers_system,
    sum_systems,
)
from .harness import TheoremId, Verdict, VerificationReport, replay, run_campaign
from .syntax import ParseError, parse_ideal, render_ideal

__version__ = "0.1.0"
