"""Truncated graded systems of monomial ideals and their asymptotic
multiplier ideals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, NamedTuple

from .monomial import IdealInputError, MonomialIdeal, ZeroIdealError, contains, ideal_sum_all, power, product
from .newton import jumping_numbers, multiplier_ideal


class TruncationInconclusive(RuntimeError):
    """No computed member of the asymptotic family contains all the others."""


@dataclass(frozen=True)
class GradedSystem:
    """``a_1, ..., a_pmax`` with ``a_0`` implicitly the unit ideal."""

    arity: int
    p_max: int
    table: tuple[MonomialIdeal, ...]

    def __post_init__(self):
        if len(self.table) != self.p_max:
            raise IdealInputError(f"table has {len(self.table)} entries, expected {self.p_max}")
        for p, I in enumerate(self.table, start=1):
            if I.arity != self.arity:
                raise IdealInputError(f"a_{p} has arity {I.arity}, expected {self.arity}")
            if I.is_zero:
                raise ZeroIdealError(f"a_{p} is the zero ideal")

    @classmethod
    def from_mapping(cls, arity: int, table: Mapping[int, MonomialIdeal]) -> "GradedSystem":
        p_max = max(table) if table else 0
        missing = [p for p in range(1, p_max + 1) if p not in table]
        if missing:
            raise IdealInputError(f"missing entries for p = {missing}")
        return cls(arity, p_max, tuple(table[p] for p in range(1, p_max + 1)))

    def __getitem__(self, p: int) -> MonomialIdeal:
        if p == 0:
            return MonomialIdeal.unit(self.arity)
        if not 1 <= p <= self.p_max:
            raise IndexError(f"p = {p} outside 0..{self.p_max}")
        return self.table[p - 1]


def validate(system: GradedSystem) -> tuple[bool, tuple[int, int] | None]:
    """Check ``a_p * a_q`` inside ``a_(p+q)``; return the first failing ``(p, q)``."""
    for p in range(1, system.p_max + 1):
        for q in range(p, system.p_max + 1 - p):
            if not contains(system[p + q], product(system[p], system[q])):
                return False, (p, q)
    return True, None


def powers_system(a: MonomialIdeal, p_max: int) -> GradedSystem:
    if a.is_zero:
        raise ZeroIdealError("powers of the zero ideal do not form a graded system")
    return GradedSystem(a.arity, p_max, tuple(power(a, p) for p in range(1, p_max + 1)))


def sum_systems(A: GradedSystem, B: GradedSystem) -> GradedSystem:
    """``c_m = sum_{i+j=m} a_i b_j``, endpoint terms included."""
    if A.arity != B.arity or A.p_max != B.p_max:
        raise IdealInputError("graded systems must share arity and p_max")
    table = []
    for m in range(1, A.p_max + 1):
        table.append(ideal_sum_all([product(A[i], B[m - i]) for i in range(m + 1)], A.arity))
    return GradedSystem(A.arity, A.p_max, tuple(table))


class AsymptoticResult(NamedTuple):
    ideal: MonomialIdeal
    stabilized: bool


def asymptotic_members(A: GradedSystem, p: int, gamma, q_max: int) -> list[MonomialIdeal]:
    """``I(gamma/q * a_pq)`` for ``q = 1..q_max``."""
    gamma = Fraction(gamma)
    if p < 1 or q_max < 1:
        raise IdealInputError("p and q_max must be at least 1")
    if p * q_max > A.p_max:
        raise IdealInputError(f"p*q_max = {p * q_max} exceeds p_max = {A.p_max}")
    return [multiplier_ideal(A[p * q], gamma / q) for q in range(1, q_max + 1)]


def asymptotic_multiplier_ideal(A: GradedSystem, p: int, gamma, q_max: int) -> AsymptoticResult:
    """Largest of the first ``q_max`` members of the asymptotic family.

    ``stabilized`` means the maximum is reached at some ``q`` with ``2q <= q_max``
    and the member at ``2q`` is the same ideal; otherwise the result is only a
    lower bound for the true asymptotic multiplier ideal.
    """
    members = asymptotic_members(A, p, gamma, q_max)
    top = next((M for M in members if all(contains(M, N) for N in members)), None)
    if top is None:
        raise TruncationInconclusive(
            f"no containment-maximum among I(gamma/q * a_{p}q), q <= {q_max}")
    stabilized = any(
        members[q - 1] == top and members[2 * q - 1] == top
        for q in range(1, q_max // 2 + 1)
    )
    return AsymptoticResult(top, stabilized)


def asymptotic_breakpoints(A: GradedSystem, p: int, gamma, q_max: int) -> set[Fraction]:
    """Coefficients in ``(0, gamma]`` where some member ``I(t/q * a_pq)`` jumps as ``t`` grows."""
    gamma = Fraction(gamma)
    out: set[Fraction] = set()
    for q in range(1, q_max + 1):
        out.update(q * x for x in jumping_numbers(A[p * q], gamma / q))
    return out
