"""Checks of the inclusion and equality statements for multiplier ideals of
sums, run on concrete monomial instances.

Sums over ``alpha + beta = gamma`` are evaluated on a finite sample of
``alpha``.  ``alpha -> I(alpha*a)`` is constant on every interval
``[xi, xi')`` between consecutive jumping numbers, and
``alpha -> I((gamma - alpha)*b)`` is constant on every ``(gamma - eta', gamma - eta]``.
Both are therefore constant on each open interval between consecutive
critical points, so the critical points plus one midpoint per gap reach
every distinct summand.
"""

from __future__ import annotations

import enum
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Any, Callable, Mapping, Sequence

from .graded import (
    GradedSystem,
    TruncationInconclusive,
    asymptotic_breakpoints,
    asymptotic_multiplier_ideal,
    powers_system,
    sum_systems,
    validate,
)
from .monomial import (
    IdealInputError,
    MonomialIdeal,
    ZeroIdealError,
    contains,
    embed_product,
    ideal_sum,
    ideal_sum_all,
    intersect,
    max_ideal_power,
    minimalize,
    missing_generator,
    power,
    product,
    restrict_to_subspace,
    variables_ideal,
)
from .newton import jumping_numbers, multiplier_ideal, oracle_active
from .syntax import default_names, parse_ideal, parse_rational, render_ideal


class TheoremId(enum.Enum):
    THM1 = "Thm1"
    THM2 = "Thm2"
    THM_EQUALITY = "ThmEquality"
    THM_MAIN = "ThmMain"
    LEMMA_EQUIV = "LemmaEquiv"
    COR_SAME_VAR = "CorSameVar"
    PROP_APPROX = "PropApprox"
    PROP_SUBVARIETY = "PropSubvariety"
    PROP_JUMP_SHIFT = "PropJumpShift"


class Verdict(enum.Enum):
    HOLDS = "Holds"
    HOLDS_WITH_EQUALITY = "HoldsWithEquality"
    FAILS = "FAILS"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class VerificationReport:
    """Outcome of one check.

    ``params`` holds canonical strings (ideals in ``<...>`` syntax over
    ``params['vars']`` and friends), enough for :func:`replay` to rebuild the
    report.  On FAILS, ``witness`` lies in ``lhs`` and not in ``rhs``.
    """

    theorem_id: TheoremId
    params: dict[str, str]
    lhs: Any
    rhs: Any
    verdict: Verdict
    witness: Any = None
    names: tuple[str, ...] = ()
    note: str = ""

    @property
    def instance(self) -> str:
        return " ".join(f"{k}={v}" for k, v in self.params.items())

    def render_side(self, side: Any) -> str:
        if isinstance(side, MonomialIdeal):
            return render_ideal(side, self.names or None)
        return "{" + ", ".join(str(x) for x in side) + "}"

    def render_witness(self) -> str | None:
        if self.witness is None:
            return None
        if isinstance(self.witness, tuple):
            from .syntax import render_monomial

            return render_monomial(self.witness, self.names or default_names(len(self.witness)))
        return str(self.witness)

    def to_dict(self) -> dict:
        out = {
            "theorem": self.theorem_id.value,
            "instance": dict(self.params),
            "lhs": self.render_side(self.lhs),
            "rhs": self.render_side(self.rhs),
            "verdict": self.verdict.value,
        }
        if self.witness is not None:
            out["witness"] = self.render_witness()
        if self.note:
            out["note"] = self.note
        return out


# --------------------------------------------------------------------------
# alpha sampling


def _require_nonzero(*ideals: MonomialIdeal) -> None:
    for I in ideals:
        if I.is_zero:
            raise ZeroIdealError("verification needs nonzero ideals")


def _jumps(I: MonomialIdeal, T: Fraction) -> list[Fraction]:
    if I.is_zero or I.is_unit or T <= 0:
        return []
    return jumping_numbers(I, T)


def _with_midpoints(points: set[Fraction], gamma: Fraction) -> list[Fraction]:
    pts = sorted(x for x in points if 0 <= x <= gamma)
    out = set(pts)
    out.update((x + y) / 2 for x, y in zip(pts, pts[1:]))
    return sorted(out)


def critical_alphas(
    a: MonomialIdeal,
    b: MonomialIdeal,
    gamma,
    *,
    scale_a=1,
    scale_b=1,
    dense: bool = False,
    grid: bool = False,
) -> list[Fraction]:
    """Sample of ``[0, gamma]`` meeting every distinct summand of
    ``sum_alpha I(scale_a*alpha*a) * I(scale_b*(gamma-alpha)*b)``.

    ``dense`` adds quarter points; ``grid`` returns the uniform grid of step
    ``1/(2L)`` with ``L`` the lcm of all critical denominators (an oracle).
    """
    gamma = Fraction(gamma)
    scale_a, scale_b = Fraction(scale_a), Fraction(scale_b)
    if gamma < 0:
        raise ValueError("gamma must be nonnegative")
    if gamma == 0:
        return [Fraction(0)]
    crit = {Fraction(0), gamma}
    crit.update(x / scale_a for x in _jumps(a, scale_a * gamma))
    crit.update(gamma - x / scale_b for x in _jumps(b, scale_b * gamma))
    return _finish_samples(crit, gamma, dense, grid)


def _finish_samples(crit: set[Fraction], gamma: Fraction, dense: bool, grid: bool) -> list[Fraction]:
    if grid or oracle_active():
        L = reduce(math.lcm, (x.denominator for x in crit), 1) * 2
        return [Fraction(k, L) for k in range(int(gamma * L) + 1)]
    samples = _with_midpoints(crit, gamma)
    if dense:
        samples = _with_midpoints(set(samples), gamma)
    return samples


def _mi(I: MonomialIdeal, c: Fraction) -> MonomialIdeal:
    # Zero ideal convention: I(0 * (0)) is the unit ideal and (0) otherwise.
    if I.is_zero:
        return MonomialIdeal.unit(I.arity) if c == 0 else I
    return multiplier_ideal(I, c)


def _sum_over(alphas: Sequence[Fraction], term: Callable[[Fraction], MonomialIdeal], arity: int) -> MonomialIdeal:
    return ideal_sum_all([term(al) for al in alphas], arity)


def finite_sum(a: MonomialIdeal, b: MonomialIdeal, gamma, *, dense: bool = False, grid: bool = False) -> MonomialIdeal:
    """``sum_{alpha+beta=gamma} I(alpha*a) * I(beta*b)`` in the common ring of ``a`` and ``b``."""
    _require_nonzero(a, b)
    if a.arity != b.arity:
        raise IdealInputError("a and b must live in the same ring")
    gamma = Fraction(gamma)
    alphas = critical_alphas(a, b, gamma, dense=dense, grid=grid)
    return _sum_over(alphas, lambda al: product(_mi(a, al), _mi(b, gamma - al)), a.arity)


# --------------------------------------------------------------------------
# verdict helpers


def _inclusion(tid, params, lhs, rhs, names, note="") -> VerificationReport:
    witness = missing_generator(rhs, lhs)
    if witness is not None:
        verdict = Verdict.FAILS
    elif lhs == rhs:
        verdict = Verdict.HOLDS_WITH_EQUALITY
    else:
        verdict = Verdict.HOLDS
    return VerificationReport(tid, params, lhs, rhs, verdict, witness, tuple(names), note)


def _equality(tid, params, lhs, rhs, names, note="") -> VerificationReport:
    rep = _inclusion(tid, params, lhs, rhs, names, note)
    if rep.verdict is Verdict.HOLDS:
        # lhs is strictly smaller: report a monomial of rhs outside lhs
        rep.verdict = Verdict.FAILS
        rep.witness = missing_generator(lhs, rhs)
        rep.note = (note + "; " if note else "") + "witness lies in rhs, not lhs"
    return rep


def _names_or_default(names, arity, prefix=None):
    return tuple(names) if names else default_names(arity, prefix)


# --------------------------------------------------------------------------
# single-ring statements


def verify_sum_inclusion(a: MonomialIdeal, b: MonomialIdeal, gamma, *, names=None) -> VerificationReport:
    """``I(gamma*(a+b))`` inside ``sum_{alpha+beta=gamma} I(alpha*a) I(beta*b)``."""
    _require_nonzero(a, b)
    gamma = Fraction(gamma)
    names = _names_or_default(names, a.arity)
    lhs = multiplier_ideal(ideal_sum(a, b), gamma)
    rhs = finite_sum(a, b, gamma)
    params = {"vars": ",".join(names), "a": render_ideal(a, names), "b": render_ideal(b, names), "gamma": str(gamma)}
    return _inclusion(TheoremId.THM1, params, lhs, rhs, names)


def verify_approximation(a: MonomialIdeal, p: int, gamma, eps, *, names=None) -> VerificationReport:
    """``I((gamma+eps)(a + m^p))`` inside ``I(gamma*a) + m^(floor(p*eps) - n + 1)``."""
    _require_nonzero(a)
    gamma, eps = Fraction(gamma), Fraction(eps)
    if p < 1 or eps <= 0 or gamma < 0:
        raise IdealInputError("need p >= 1, eps > 0, gamma >= 0")
    n = a.arity
    names = _names_or_default(names, n)
    lhs = multiplier_ideal(ideal_sum(a, max_ideal_power(n, p)), gamma + eps)
    rhs = ideal_sum(multiplier_ideal(a, gamma), max_ideal_power(n, math.floor(p * eps) - n + 1))
    params = {"vars": ",".join(names), "a": render_ideal(a, names), "p": str(p), "gamma": str(gamma), "eps": str(eps)}
    return _inclusion(TheoremId.PROP_APPROX, params, lhs, rhs, names)


# --------------------------------------------------------------------------
# product-space statements


def _product_names(r: int, s: int, names_a=None, names_b=None):
    na = tuple(names_a) if names_a else default_names(r, "x")
    nb = tuple(names_b) if names_b else default_names(s, "y")
    if set(na) & set(nb):
        raise IdealInputError("variable names of the two factors must differ")
    return na, nb


def _product_params(a, b, gamma, na, nb) -> dict[str, str]:
    return {
        "vars_a": ",".join(na),
        "vars_b": ",".join(nb),
        "a": render_ideal(a, na) if not a.is_zero else "<0>",
        "b": render_ideal(b, nb) if not b.is_zero else "<0>",
        "gamma": str(Fraction(gamma)),
    }


def _product_terms(a, b, gamma, alphas):
    r, s = a.arity, b.arity
    N = r + s
    for al in alphas:
        yield (embed_product(_mi(a, al), 0, N), embed_product(_mi(b, gamma - al), r, N))


def verify_product_equality(a: MonomialIdeal, b: MonomialIdeal, gamma, *, names_a=None, names_b=None) -> VerificationReport:
    """``I(gamma*(p^-1 a + q^-1 b)) = sum p^-1 I(alpha*a) q^-1 I(beta*b)`` on ``A^r x A^s``.

    Either ideal may be zero, with ``I(c*(0))`` the unit ideal at ``c = 0`` and
    zero otherwise.
    """
    gamma = Fraction(gamma)
    if a.is_zero and b.is_zero:
        raise ZeroIdealError("at most one factor may be the zero ideal")
    r, s = a.arity, b.arity
    N = r + s
    na, nb = _product_names(r, s, names_a, names_b)
    lhs = multiplier_ideal(ideal_sum(embed_product(a, 0, N), embed_product(b, r, N)), gamma)
    alphas = critical_alphas(a, b, gamma)
    rhs = ideal_sum_all([product(x, y) for x, y in _product_terms(a, b, gamma, alphas)], N)
    return _equality(TheoremId.THM_EQUALITY, _product_params(a, b, gamma, na, nb), lhs, rhs, na + nb)


def verify_sum_equals_intersection(a: MonomialIdeal, b: MonomialIdeal, gamma, *, names_a=None, names_b=None) -> VerificationReport:
    """``sum p^-1 I(alpha*a) q^-1 I(beta*b) = cap (p^-1 I(alpha*a) + q^-1 I(beta*b))``."""
    _require_nonzero(a, b)
    gamma = Fraction(gamma)
    r, s = a.arity, b.arity
    N = r + s
    na, nb = _product_names(r, s, names_a, names_b)
    alphas = critical_alphas(a, b, gamma)
    terms = list(_product_terms(a, b, gamma, alphas))
    lhs = ideal_sum_all([product(x, y) for x, y in terms], N)
    rhs = reduce(intersect, [ideal_sum(x, y) for x, y in terms])
    return _equality(TheoremId.LEMMA_EQUIV, _product_params(a, b, gamma, na, nb), lhs, rhs, na + nb)


# --------------------------------------------------------------------------
# families


def powers_family(a: MonomialIdeal, m: int, n: int) -> dict[int, MonomialIdeal]:
    """``{i: a^i}`` for ``1 <= i <= m`` and ``i = n``."""
    return {i: power(a, i) for i in sorted(set(range(1, m + 1)) | {n})}


def check_family_hypothesis(family: Mapping[int, MonomialIdeal], m: int, n: int) -> None:
    """``i | n`` and ``a_i^(n/i)`` inside ``a_n`` for ``1 <= i <= m``; raises otherwise."""
    if m < 1 or n < 1:
        raise IdealInputError("m and n must be positive")
    for i in list(range(1, m + 1)) + [n]:
        if i not in family:
            raise IdealInputError(f"family is missing a_{i}")
        if family[i].is_zero:
            raise ZeroIdealError(f"a_{i} is the zero ideal")
    for i in range(1, m + 1):
        if n % i:
            raise IdealInputError(f"{i} does not divide n = {n}")
        if not contains(family[n], power(family[i], n // i)):
            raise IdealInputError(f"a_{i}^{n // i} is not contained in a_{n}")


def verify_main_inclusion(
    a_family: Mapping[int, MonomialIdeal],
    b_family: Mapping[int, MonomialIdeal],
    m: int,
    n: int,
    gamma,
    *,
    product_space: bool = False,
    names=None,
    names_b=None,
) -> VerificationReport:
    """``I(gamma/m * (a_m + sum a_i b_(m-i) + b_m))`` inside
    ``sum_{alpha+beta=gamma} I(alpha/n * a_n) I(beta/n * b_n)``.

    With ``product_space`` the ``a`` family lives on the first factor and the
    ``b`` family on the second (pulled back along the projections); otherwise
    both live in the same ring.
    """
    gamma = Fraction(gamma)
    check_family_hypothesis(a_family, m, n)
    check_family_hypothesis(b_family, m, n)
    r, s = a_family[1].arity, b_family[1].arity
    if product_space:
        N = r + s
        na, nb = _product_names(r, s, names, names_b)
        allnames = na + nb
        A = {i: embed_product(I, 0, N) for i, I in a_family.items()}
        B = {i: embed_product(I, r, N) for i, I in b_family.items()}
    else:
        if r != s:
            raise IdealInputError("families must share a ring")
        N = r
        allnames = _names_or_default(names, N)
        na = nb = allnames
        A, B = dict(a_family), dict(b_family)
    mixed = [A[m], B[m]] + [product(A[i], B[m - i]) for i in range(1, m)]
    lhs = multiplier_ideal(ideal_sum_all(mixed, N), gamma / m)
    an, bn = a_family[n], b_family[n]
    alphas = critical_alphas(an, bn, gamma, scale_a=Fraction(1, n), scale_b=Fraction(1, n))

    def term(al):
        x = multiplier_ideal(an, al / n)
        y = multiplier_ideal(bn, (gamma - al) / n)
        if product_space:
            return product(embed_product(x, 0, N), embed_product(y, r, N))
        return product(x, y)

    rhs = _sum_over(alphas, term, N)
    params = {"vars": ",".join(allnames)} if not product_space else {"vars_a": ",".join(na), "vars_b": ",".join(nb)}
    params.update({"m": str(m), "n": str(n), "gamma": str(gamma)})
    for i in sorted(a_family):
        params[f"a{i}"] = render_ideal(a_family[i], na)
    for i in sorted(b_family):
        params[f"b{i}"] = render_ideal(b_family[i], nb)
    tid = TheoremId.THM_MAIN if product_space else TheoremId.COR_SAME_VAR
    return _inclusion(tid, params, lhs, rhs, allnames)


# --------------------------------------------------------------------------
# embeddings


def verify_subvariety(b: MonomialIdeal, r: int, gamma, *, names=None) -> VerificationReport:
    """``A^n`` cut out by the last ``r`` variables of ``A^(n+r)``:
    ``I(gamma * b|_X) = I((gamma + r) * b) . O_X``."""
    gamma = Fraction(gamma)
    _require_nonzero(b)
    N = b.arity
    n = N - r
    if r < 1 or n < 1:
        raise IdealInputError("need 1 <= r < arity")
    ideal_X = variables_ideal(N, range(n, N))
    if not contains(b, ideal_X) or b == ideal_X:
        raise IdealInputError("b must strictly contain the ideal of the subspace")
    if gamma + r < 0:
        raise IdealInputError("need gamma + r >= 0")
    names = _names_or_default(names, N)
    keep = list(range(n))
    lhs = restrict_to_subspace(multiplier_ideal(b, gamma + r), keep)
    b_X = restrict_to_subspace(b, keep)
    rhs = MonomialIdeal.unit(n) if gamma < 0 else multiplier_ideal(b_X, gamma)
    params = {"vars": ",".join(names), "b": render_ideal(b, names), "r": str(r), "gamma": str(gamma)}
    return _equality(TheoremId.PROP_SUBVARIETY, params, lhs, rhs, names[:n])


def verify_jumping_shift(a: MonomialIdeal, r: int, T, *, names=None) -> VerificationReport:
    """Jumping numbers of ``a`` on ``A^n``, shifted by ``r``, against those of the
    same subscheme cut out in ``A^(n+r)`` by ``a + (y_1..y_r)``."""
    T = Fraction(T)
    _require_nonzero(a)
    if a.is_unit:
        raise IdealInputError("a must be proper")
    if r < 0 or T <= 0:
        raise IdealInputError("need r >= 0 and T > 0")
    n = a.arity
    N = n + r
    a2 = ideal_sum(embed_product(a, 0, N), variables_ideal(N, range(n, N)))
    lhs = tuple(x + r for x in jumping_numbers(a, T))
    rhs = tuple(x for x in jumping_numbers(a2, T + r) if x > r)
    names = _names_or_default(names, n)
    params = {"vars": ",".join(names), "a": render_ideal(a, names), "r": str(r), "T": str(T)}
    if lhs == rhs:
        return VerificationReport(TheoremId.PROP_JUMP_SHIFT, params, lhs, rhs, Verdict.HOLDS_WITH_EQUALITY, None, names)
    diff = sorted(set(lhs) ^ set(rhs))
    note = "witness in lhs only" if diff[0] in lhs else "witness in rhs only"
    return VerificationReport(TheoremId.PROP_JUMP_SHIFT, params, lhs, rhs, Verdict.FAILS, diff[0], names, note)


# --------------------------------------------------------------------------
# graded systems


def verify_asymptotic(
    A: GradedSystem,
    B: GradedSystem,
    p: int,
    m_max: int,
    q_max: int,
    gamma,
    *,
    names=None,
) -> VerificationReport:
    """Truncated form of the asymptotic statement.

    For ``m <= m_max`` checks ``I(gamma/m * c_pm)`` inside
    ``sum_alpha I(alpha*||a_p||) I(beta*||b_p||)``, each asymptotic ideal
    approximated over ``q <= q_max``.  The verdict is Inconclusive unless every
    asymptotic ideal used reports stabilization.
    """
    gamma = Fraction(gamma)
    if A.arity != B.arity or A.p_max != B.p_max:
        raise IdealInputError("systems must share arity and p_max")
    if p * max(m_max, q_max) > A.p_max:
        raise IdealInputError(f"p_max = {A.p_max} too small for p = {p}, m_max = {m_max}, q_max = {q_max}")
    for S in (A, B):
        ok, pair = validate(S)
        if not ok:
            raise IdealInputError(f"not a graded system: a_{pair[0]} a_{pair[1]} not in a_{sum(pair)}")
    N = A.arity
    names = _names_or_default(names, N)
    C = sum_systems(A, B)
    lhs = ideal_sum_all([multiplier_ideal(C[p * m], gamma / m) for m in range(1, m_max + 1)], N)

    crit = {Fraction(0), gamma}
    crit.update(asymptotic_breakpoints(A, p, gamma, q_max))
    crit.update(gamma - x for x in asymptotic_breakpoints(B, p, gamma, q_max))
    alphas = _finish_samples(crit, gamma, False, False)
    stable = True
    terms = []
    try:
        for al in alphas:
            xa = asymptotic_multiplier_ideal(A, p, al, q_max)
            xb = asymptotic_multiplier_ideal(B, p, gamma - al, q_max)
            stable &= xa.stabilized and xb.stabilized
            terms.append(product(xa.ideal, xb.ideal))
    except TruncationInconclusive as exc:
        params = {"vars": ",".join(names), "p": str(p), "m_max": str(m_max), "q_max": str(q_max), "gamma": str(gamma)}
        return VerificationReport(TheoremId.THM2, params, lhs, MonomialIdeal.zero(N), Verdict.INCONCLUSIVE, None, names, str(exc))
    rhs = ideal_sum_all(terms, N)
    params = {"vars": ",".join(names), "p": str(p), "m_max": str(m_max), "q_max": str(q_max), "gamma": str(gamma)}
    for i in range(1, A.p_max + 1):
        params[f"a{i}"] = render_ideal(A[i], names)
    for i in range(1, B.p_max + 1):
        params[f"b{i}"] = render_ideal(B[i], names)
    rep = _inclusion(TheoremId.THM2, params, lhs, rhs, names)
    if not stable and rep.verdict is not Verdict.FAILS:
        rep.verdict = Verdict.INCONCLUSIVE
        rep.note = "asymptotic ideals did not stabilize within q_max"
    return rep


# --------------------------------------------------------------------------
# random instances


def _random_ideal(rng: random.Random, arity: int, max_gens: int, max_deg: int) -> MonomialIdeal:
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        while True:
            g = tuple(rng.randint(0, max_deg) for _ in range(arity))
            if any(g):
                break
        gens.append(g)
    return minimalize(gens, arity)


def random_instance(
    seed: int,
    *,
    arity: int | None = None,
    max_arity: int = 3,
    max_gens: int = 4,
    max_deg: int = 6,
    gamma_den: int = 6,
    gamma_max: int = 3,
) -> tuple[MonomialIdeal, MonomialIdeal, Fraction]:
    """Deterministic ``(a, b, gamma)``: nonzero proper ideals, ``gamma = k/gamma_den <= gamma_max``."""
    rng = random.Random(f"instance:{seed}")
    n = arity if arity is not None else rng.randint(1, max_arity)
    a = _random_ideal(rng, n, max_gens, max_deg)
    b = _random_ideal(rng, n, max_gens, max_deg)
    gamma = Fraction(rng.randint(0, gamma_max * gamma_den), gamma_den)
    return a, b, gamma


def _rng(kind: str, seed: int, trial: int) -> random.Random:
    return random.Random(f"{kind}:{seed}:{trial}")


def campaign_instance(kind: str, seed: int, trial: int) -> VerificationReport:
    """Run trial number ``trial`` of the seeded campaign for statement ``kind``."""
    rng = _rng(kind, seed, trial)
    sub_seed = rng.getrandbits(63)
    if kind == "thm1":
        a, b, g = random_instance(sub_seed)
        return verify_sum_inclusion(a, b, g)
    if kind in ("equality", "lemma"):
        r, s = rng.randint(1, 2), rng.randint(1, 2)
        a, _, g = random_instance(sub_seed, arity=r)
        b, _, _ = random_instance(sub_seed + 1, arity=s)
        fn = verify_product_equality if kind == "equality" else verify_sum_equals_intersection
        return fn(a, b, g)
    if kind == "main":
        m = rng.randint(1, 3)
        n = math.lcm(*range(1, m + 1)) * (rng.randint(1, 2) if m < 3 else 1)
        product_space = rng.random() < 0.5
        if product_space:
            a, _, g = random_instance(sub_seed, arity=rng.randint(1, 2), max_gens=3, max_deg=4)
            b, _, _ = random_instance(sub_seed + 1, arity=rng.randint(1, 2), max_gens=3, max_deg=4)
        else:
            a, b, g = random_instance(sub_seed, max_arity=2, max_gens=3, max_deg=4)
        return verify_main_inclusion(powers_family(a, m, n), powers_family(b, m, n), m, n, g, product_space=product_space)
    if kind == "approx":
        a, _, g = random_instance(sub_seed)
        p = rng.randint(1, 4)
        eps = rng.choice([Fraction(1, 2), Fraction(1)])
        return verify_approximation(a, p, g, eps)
    if kind == "subvariety":
        r = rng.randint(1, 2)
        n = rng.randint(1, 2)
        base, _, _ = random_instance(sub_seed, arity=n)
        N = n + r
        b = ideal_sum(embed_product(base, 0, N), variables_ideal(N, range(n, N)))
        g = Fraction(rng.randint(-6 * r, 18), 6)
        return verify_subvariety(b, r, g)
    if kind == "jumpshift":
        r = rng.randint(1, 2)
        a, _, _ = random_instance(sub_seed)
        T = Fraction(rng.randint(1, 18), 6)
        return verify_jumping_shift(a, r, T)
    if kind == "thm2":
        a, b, g = random_instance(sub_seed, max_arity=2)
        m_max = rng.randint(1, 3)
        q_max = 2
        p_max = max(m_max, q_max)
        return verify_asymptotic(powers_system(a, p_max), powers_system(b, p_max), 1, m_max, q_max, g)
    raise ValueError(f"unknown statement {kind!r}")


CAMPAIGN_KINDS = ("thm1", "thm2", "equality", "lemma", "main", "approx", "subvariety", "jumpshift")


def _campaign_job(args):
    kind, seed, trial = args
    return campaign_instance(kind, seed, trial)


def run_campaign(kind: str, trials: int, seed: int, *, workers: int = 1) -> list[VerificationReport]:
    """Reports for trials ``0..trials-1``, in trial order whatever ``workers`` is."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    jobs = [(kind, seed, t) for t in range(trials)]
    if workers <= 1:
        return [_campaign_job(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_campaign_job, jobs))


# --------------------------------------------------------------------------
# replay


def _ideal_param(params, key, names):
    return parse_ideal(params[key], names)


def replay(theorem_id: TheoremId, params: Mapping[str, str]) -> VerificationReport:
    """Recompute a report from its ``params`` alone."""
    tid = TheoremId(theorem_id)
    if "vars" in params:
        names = tuple(v for v in params["vars"].split(",") if v)
    if tid is TheoremId.THM1:
        return verify_sum_inclusion(_ideal_param(params, "a", names), _ideal_param(params, "b", names),
                                    parse_rational(params["gamma"]), names=names)
    if tid in (TheoremId.THM_EQUALITY, TheoremId.LEMMA_EQUIV):
        na = tuple(params["vars_a"].split(","))
        nb = tuple(params["vars_b"].split(","))
        fn = verify_product_equality if tid is TheoremId.THM_EQUALITY else verify_sum_equals_intersection
        return fn(parse_ideal(params["a"], na), parse_ideal(params["b"], nb), parse_rational(params["gamma"]),
                  names_a=na, names_b=nb)
    if tid in (TheoremId.THM_MAIN, TheoremId.COR_SAME_VAR):
        m, n = int(params["m"]), int(params["n"])
        if tid is TheoremId.THM_MAIN:
            na = tuple(params["vars_a"].split(","))
            nb = tuple(params["vars_b"].split(","))
        else:
            na = nb = names
        fam_a = {int(k[1:]): parse_ideal(v, na) for k, v in params.items() if k[0] == "a" and k[1:].isdigit()}
        fam_b = {int(k[1:]): parse_ideal(v, nb) for k, v in params.items() if k[0] == "b" and k[1:].isdigit()}
        return verify_main_inclusion(fam_a, fam_b, m, n, parse_rational(params["gamma"]),
                                     product_space=tid is TheoremId.THM_MAIN,
                                     names=na, names_b=nb if tid is TheoremId.THM_MAIN else None)
    if tid is TheoremId.PROP_APPROX:
        return verify_approximation(_ideal_param(params, "a", names), int(params["p"]),
                                    parse_rational(params["gamma"]), parse_rational(params["eps"]), names=names)
    if tid is TheoremId.PROP_SUBVARIETY:
        return verify_subvariety(_ideal_param(params, "b", names), int(params["r"]),
                                 parse_rational(params["gamma"]), names=names)
    if tid is TheoremId.PROP_JUMP_SHIFT:
        return verify_jumping_shift(_ideal_param(params, "a", names), int(params["r"]),
                                    parse_rational(params["T"]), names=names)
    if tid is TheoremId.THM2:
        p_max = max(int(k[1:]) for k in params if k[0] == "a" and k[1:].isdigit())
        A = GradedSystem(len(names), p_max, tuple(parse_ideal(params[f"a{i}"], names) for i in range(1, p_max + 1)))
        B = GradedSystem(len(names), p_max, tuple(parse_ideal(params[f"b{i}"], names) for i in range(1, p_max + 1)))
        return verify_asymptotic(A, B, int(params["p"]), int(params["m_max"]), int(params["q_max"]),
                                 parse_rational(params["gamma"]), names=names)
    raise ValueError(f"cannot replay {tid}")
