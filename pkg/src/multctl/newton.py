"""Newton polyhedra of monomial ideals and Howald's description of their
multiplier ideals.

For a nonzero ideal ``a`` with Newton polyhedron ``P`` the scaling function
is ``mu(v) = max{t >= 0 : v in t*P}``.  Writing a point of ``t*P`` as
``t * sum(l_i g_i)`` over the generators, ``mu(v)`` is the optimum of

    maximize sum(y)   subject to   sum(y_i g_i) <= v,  y >= 0.

For ``v`` with every coordinate positive, ``v`` lies in the interior of
``c*P`` exactly when ``mu(v) > c``: the recession cone of ``P`` is the whole
orthant, so a strictly positive ``v`` in ``t*P`` with ``t > c`` has a small
ball around it inside ``c*P``, and conversely an interior point can be pushed
back toward the origin and stays in ``t*P`` for some ``t > c``.  With a zero
coordinate this fails (``v`` may sit on a coordinate hyperplane), which is
why :func:`in_interior` refuses such points.

The monomial ``x^w`` is in ``I(c*a)`` iff ``mu(w + e) > c`` with
``e = (1, ..., 1)``.

The dual of the LP above is ``min phi.v`` over ``{phi >= 0 : phi.g >= 1}``.
That region is pointed, so ``mu(v)`` is the minimum of ``phi.v`` over its
finitely many vertices, which are the inner facet normals of ``P``.  Lattice
sweeps use this table through :mod:`multctl.kernels`; single evaluations use
the LP, and the two are cross-checked in the tests.
"""

from __future__ import annotations

import contextlib
import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import kernels
from .lp import LinearProgram, Status, check_certificates, solve_max
from .monomial import MonomialIdeal, ZeroIdealError, minimalize


class DomainError(ValueError):
    pass


class ScaleValue:
    """A nonnegative rational, or +infinity when ``value is None``."""

    __slots__ = ("value",)

    def __init__(self, value: Fraction | None):
        self.value = None if value is None else Fraction(value)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def _cmp(self, other) -> int:
        if isinstance(other, ScaleValue):
            if self.value is None or other.value is None:
                return (self.value is None) - (other.value is None)
            other = other.value
        if self.value is None:
            return 1
        other = Fraction(other)
        return (self.value > other) - (self.value < other)

    def __eq__(self, other):
        if isinstance(other, (ScaleValue, int, Fraction)):
            return self._cmp(other) == 0
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __repr__(self):
        return f"ScaleValue({self})"

    def __str__(self):
        return "inf" if self.value is None else str(self.value)


INFINITY = ScaleValue(None)


def unit_vector(n: int) -> tuple[int, ...]:
    return (1,) * n


def _solve_exact(rows: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[Fraction] | None:
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def _lp_for(gens: Sequence[Sequence[int]], v: Sequence) -> LinearProgram:
    n = len(v)
    matrix = [[g[j] for g in gens] for j in range(n)]
    return LinearProgram(len(gens), matrix, list(v), [1] * len(gens))


class NewtonPolyhedron:
    """``conv(generators) + R^n_{>=0}`` for a nonzero monomial ideal.

    Get instances from :func:`newton_polyhedron`, which caches them per ideal.
    """

    def __init__(self, ideal: MonomialIdeal):
        if ideal.is_zero:
            raise ZeroIdealError("the zero ideal has no Newton polyhedron")
        self.ideal = ideal
        self.arity = ideal.arity
        self.generators = ideal.generators
        self._facets: list[tuple[Fraction, ...]] | None = None
        self._grid: tuple[np.ndarray, np.ndarray, np.ndarray] | None = None
        self._arrays: tuple[np.ndarray, np.ndarray] | None = None
        self.max_coords = tuple(max(g[j] for g in self.generators) for j in range(self.arity))

    @property
    def is_unit(self) -> bool:
        return self.ideal.is_unit

    # -- exact LP route -----------------------------------------------------

    def mu_lp(self, v: Sequence, *, check: bool = True) -> ScaleValue:
        v = [Fraction(x) for x in v]
        if len(v) != self.arity:
            raise DomainError(f"point of length {len(v)} in arity {self.arity}")
        if any(x < 0 for x in v):
            raise DomainError("mu is defined on the nonnegative orthant")
        if self.is_unit:
            return INFINITY
        lp = _lp_for(self.generators, v)
        out = solve_max(lp)
        if out.status is not Status.OPTIMAL:
            raise ArithmeticError(f"mu LP returned {out.status}")
        if check and not check_certificates(lp, out):
            raise ArithmeticError("mu LP certificate check failed")
        return ScaleValue(out.value)

    # -- facet table ----------------------------------------------------------

    def vertices(self) -> list[tuple[int, ...]]:
        """Generators that are vertices of the polyhedron."""
        if len(self.generators) == 1:
            return list(self.generators)
        out = []
        for i, g in enumerate(self.generators):
            others = self.generators[:i] + self.generators[i + 1:]
            res = solve_max(_lp_for(others, g))
            if res.value < 1:
                out.append(g)
        return out

    @property
    def facets(self) -> list[tuple[Fraction, ...]]:
        """Vertices of ``{phi >= 0 : phi.g >= 1 for every generator g}``."""
        if self._facets is None:
            self._facets = [] if self.is_unit else self._enumerate_facets()
        return self._facets

    def _enumerate_facets(self) -> list[tuple[Fraction, ...]]:
        n = self.arity
        verts = self.vertices()
        rows = [(g, 1) for g in verts] + [(tuple(int(i == j) for j in range(n)), 0) for i in range(n)]
        found = set()
        for combo in itertools.combinations(range(len(rows)), n):
            if combo[0] >= len(verts):
                continue  # all tight rows are phi_j = 0, giving phi = 0
            phi = _solve_exact([rows[k][0] for k in combo], [rows[k][1] for k in combo])
            if phi is None or any(x < 0 for x in phi):
                continue
            if all(sum(p * x for p, x in zip(phi, g)) >= 1 for g in verts):
                found.add(tuple(phi))
        return sorted(found)

    def mu_facets(self, v: Sequence) -> ScaleValue:
        if self.is_unit:
            return INFINITY
        v = [Fraction(x) for x in v]
        return ScaleValue(min(sum(p * x for p, x in zip(phi, v)) for phi in self.facets))

    def facet_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Facet normals as int64 numerators with per-row denominators."""
        if self._arrays is not None:
            return self._arrays
        nums, dens = [], []
        for phi in self.facets:
            den = math.lcm(*(x.denominator for x in phi))
            nums.append([int(x * den) for x in phi])
            dens.append(den)
        self._arrays = (np.array(nums, dtype=np.int64).reshape(len(nums), self.arity),
                        np.array(dens, dtype=np.int64))
        return self._arrays

    # -- lattice sweeps -------------------------------------------------------

    def box_bounds(self, c: Fraction) -> np.ndarray:
        """Per-coordinate box ``ceil(c * max_j)`` holding all minimal generators of I(c*a)."""
        c = Fraction(c)
        return np.array([math.ceil(c * d) for d in self.max_coords], dtype=np.int64)

    def _int_safe(self, bounds: np.ndarray, extra: int = 1) -> bool:
        fnum, fden = self.facet_arrays()
        if not len(fden):
            return True
        top = int((fnum.sum(axis=1) * (int(bounds.max()) + 1)).max()) if fnum.size else 0
        lcm = math.lcm(*(int(d) for d in fden))
        return kernels.fits_int64(top, lcm, extra)

    def mu_grid(self, bounds: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """``mu(w+e)`` as (numerator, denominator) arrays over ``prod [0, bounds_j]``."""
        bounds = np.asarray(bounds, dtype=np.int64)
        if self._grid is not None and np.all(self._grid[0] >= bounds):
            held, num, den = self._grid
        else:
            if self._grid is not None:
                bounds_all = np.maximum(self._grid[0], bounds)
            else:
                bounds_all = bounds
            num, den = self._compute_grid(bounds_all)
            self._grid = (bounds_all, num, den)
        sl = tuple(slice(0, int(b) + 1) for b in bounds)
        return num[sl], den[sl]

    def _compute_grid(self, bounds: np.ndarray):
        shape = tuple(int(b) + 1 for b in bounds)
        fnum, fden = self.facet_arrays()
        if self._int_safe(bounds):
            num, den = kernels.mu_grid(bounds, fnum, fden)
            num = np.asarray(num).reshape(shape)
            den = np.asarray(den).reshape(shape)
        else:  # pragma: no cover - only for huge coefficients
            num = np.empty(shape, dtype=object)
            den = np.empty(shape, dtype=object)
            for w in np.ndindex(*shape):
                val = self.mu_facets([x + 1 for x in w]).value
                num[w], den[w] = val.numerator, val.denominator
        return num, den


@lru_cache(maxsize=2048)
def newton_polyhedron(ideal: MonomialIdeal) -> NewtonPolyhedron:
    return NewtonPolyhedron(ideal)


def _as_polyhedron(P) -> NewtonPolyhedron:
    if isinstance(P, NewtonPolyhedron):
        return P
    if isinstance(P, MonomialIdeal):
        if P.is_zero:
            raise ZeroIdealError("operation requires a nonzero ideal")
        return newton_polyhedron(P)
    raise TypeError(f"expected MonomialIdeal or NewtonPolyhedron, got {type(P).__name__}")


def mu(P, v: Sequence) -> ScaleValue:
    """Largest ``t`` with ``v`` in ``t*P``, solved exactly by LP."""
    return _as_polyhedron(P).mu_lp(v)


def in_interior(P, v: Sequence, c) -> bool:
    """Whether the strictly positive point ``v`` lies in the interior of ``c*P``."""
    if any(Fraction(x) <= 0 for x in v):
        raise DomainError("in_interior needs every coordinate of v strictly positive")
    return mu(P, v) > Fraction(c)


def generator_box_bound(a: MonomialIdeal, c) -> int:
    """``ceil(c*d)`` with ``d`` the largest exponent among the generators of ``a``."""
    d = max(max(g) for g in a.generators)
    return math.ceil(Fraction(c) * d)


@lru_cache(maxsize=65536)
def _multiplier_ideal(a: MonomialIdeal, c: Fraction, full_scan: bool) -> MonomialIdeal:
    if a.is_zero:
        raise ZeroIdealError("multiplier ideals need a nonzero ideal")
    if c <= 0 or a.is_unit:
        return MonomialIdeal.unit(a.arity)
    P = newton_polyhedron(a)
    bounds = P.box_bounds(c)
    if full_scan or not P._int_safe(bounds, c.numerator * c.denominator):
        num, den = P.mu_grid(bounds)
        inside = num * c.denominator > den * c.numerator
        gens = kernels.grid_minimal(np.asarray(inside, dtype=bool))
    else:
        fnum, fden = P.facet_arrays()
        gens = kernels.frontier(bounds, fnum, fden, c.numerator, c.denominator)
    return MonomialIdeal(a.arity, tuple(tuple(int(x) for x in g) for g in gens))


_ORACLE = False


@contextlib.contextmanager
def oracle_mode():
    """Within the block every :func:`multiplier_ideal` call scans the full box."""
    global _ORACLE
    saved, _ORACLE = _ORACLE, True
    try:
        yield
    finally:
        _ORACLE = saved


def oracle_active() -> bool:
    return _ORACLE


def multiplier_ideal(a: MonomialIdeal, c, *, full_scan: bool = False) -> MonomialIdeal:
    """``I(c*a)`` for a monomial ideal ``a``.

    Nonpositive ``c`` gives the unit ideal.  ``full_scan`` replaces the
    ascending frontier search by a scan of the whole box (used as an oracle).
    """
    return _multiplier_ideal(a, Fraction(c), bool(full_scan or _ORACLE))


def lct(a: MonomialIdeal) -> ScaleValue:
    """Log canonical threshold: ``mu(e)``."""
    if a.is_zero:
        raise ZeroIdealError("lct of the zero ideal")
    return mu(a, unit_vector(a.arity))


def _reduced_values(num: np.ndarray, den: np.ndarray, T: Fraction) -> list[Fraction]:
    num, den = num.ravel(), den.ravel()
    if num.dtype == object:  # pragma: no cover
        vals = {Fraction(int(p), int(q)) for p, q in zip(num, den)}
        return sorted(v for v in vals if v <= T)
    keep = num * T.denominator <= den * T.numerator
    num, den = num[keep], den[keep]
    g = np.gcd(num, den)
    pairs = np.unique(np.stack([num // g, den // g], axis=1), axis=0)
    return sorted(Fraction(int(p), int(q)) for p, q in pairs)


@lru_cache(maxsize=8192)
def _jumping_numbers(a: MonomialIdeal, T: Fraction) -> tuple[Fraction, ...]:
    if a.is_zero:
        raise ZeroIdealError("jumping numbers of the zero ideal")
    if a.is_unit or T <= 0:
        return ()
    P = newton_polyhedron(a)
    num, den = P.mu_grid(P.box_bounds(T))
    return tuple(_reduced_values(num, den, T))


def jumping_numbers(a: MonomialIdeal, T) -> list[Fraction]:
    """Sorted jumping numbers of ``a`` in ``(0, T]``.

    Every value ``mu(w+e)`` is one (``x^w`` leaves the multiplier ideal
    there), and each jump up to ``T`` is realised by a minimal generator of an
    earlier multiplier ideal, all of which lie in the box of ``T``.
    """
    return list(_jumping_numbers(a, Fraction(T)))


def jumping_numbers_bruteforce(a: MonomialIdeal, T) -> list[Fraction]:
    """Oracle: LP value of ``mu(w+e)`` at every point of the cube ``[0, generator_box_bound]^n``."""
    T = Fraction(T)
    if a.is_unit:
        return []
    B = generator_box_bound(a, T)
    vals = set()
    for w in itertools.product(range(B + 1), repeat=a.arity):
        m = mu(a, [x + 1 for x in w]).value
        if m <= T:
            vals.add(m)
    return sorted(vals)


def multiplier_ideal_bruteforce(a: MonomialIdeal, c) -> MonomialIdeal:
    """Oracle: LP membership test on every point of the cube ``[0, generator_box_bound]^n``."""
    c = Fraction(c)
    if c <= 0 or a.is_unit:
        return MonomialIdeal.unit(a.arity)
    B = generator_box_bound(a, c)
    members = [w for w in itertools.product(range(B + 1), repeat=a.arity)
               if in_interior(a, [x + 1 for x in w], c)]
    return minimalize(members, a.arity)


def stability_epsilon(a: MonomialIdeal, gamma) -> Fraction:
    """Half the distance from ``gamma`` to the next jumping number above it."""
    gamma = Fraction(gamma)
    if a.is_zero or a.is_unit:
        raise DomainError("stability_epsilon needs a nonzero proper ideal")
    if gamma < 0:
        raise DomainError("gamma must be nonnegative")
    step = Fraction(1)
    while True:
        above = [x for x in jumping_numbers(a, gamma + step) if x > gamma]
        if above:
            return (above[0] - gamma) / 2
        step *= 2
