"""Monomial ideals as antichains of exponent vectors."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import kernels

Exponent = tuple[int, ...]


class IdealInputError(ValueError):
    """Malformed arguments: arity mismatch, negative exponents, bad indices."""


class ZeroIdealError(ValueError):
    """A multiplier-ideal style operation received the zero ideal."""


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal of ``k[x_1..x_arity]`` given by its minimal generator exponents.

    ``generators`` is a lexicographically sorted antichain; ``()`` is the zero
    ideal and ``((0,)*arity,)`` the unit ideal.  Build instances through
    :func:`minimalize` (or :meth:`of`) unless the generators are already
    canonical.
    """

    arity: int
    generators: tuple[Exponent, ...]

    @classmethod
    def of(cls, arity: int, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return minimalize(gens, arity)

    @classmethod
    def unit(cls, arity: int) -> "MonomialIdeal":
        return cls(arity, ((0,) * arity,))

    @classmethod
    def zero(cls, arity: int) -> "MonomialIdeal":
        return cls(arity, ())

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.arity,)

    def array(self) -> np.ndarray:
        return np.array(self.generators, dtype=np.int64).reshape(len(self.generators), self.arity)

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        return f"MonomialIdeal({self.arity}, {list(self.generators)})"


def _check_arity(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.arity != b.arity:
        raise IdealInputError(f"arity mismatch: {a.arity} vs {b.arity}")


def _from_array(arr: np.ndarray, arity: int) -> MonomialIdeal:
    if arr.shape[0] == 0:
        return MonomialIdeal.zero(arity)
    arr = np.unique(arr, axis=0)  # lexicographic sort + dedupe
    arr = arr[kernels.antichain_mask(arr)]
    return MonomialIdeal(arity, tuple(tuple(int(x) for x in row) for row in arr))


def minimalize(gens: Iterable[Sequence[int]], arity: int) -> MonomialIdeal:
    """Canonical ideal generated by ``gens``: the componentwise-minimal elements."""
    rows = [tuple(int(x) for x in g) for g in gens]
    for g in rows:
        if len(g) != arity:
            raise IdealInputError(f"exponent {g} does not have arity {arity}")
        if any(x < 0 for x in g):
            raise IdealInputError(f"negative exponent in {g}")
    arr = np.array(rows, dtype=np.int64).reshape(len(rows), arity)
    return _from_array(arr, arity)


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_arity(a, b)
    return _from_array(np.vstack([a.array(), b.array()]), a.arity)


def ideal_sum_all(ideals: Sequence[MonomialIdeal], arity: int) -> MonomialIdeal:
    arrays = [I.array() for I in ideals if I.arity == arity]
    if len(arrays) != len(ideals):
        raise IdealInputError("arity mismatch in sum")
    if not arrays:
        return MonomialIdeal.zero(arity)
    return _from_array(np.vstack(arrays), arity)


def _pairwise(a: MonomialIdeal, b: MonomialIdeal, op) -> MonomialIdeal:
    _check_arity(a, b)
    if a.is_zero or b.is_zero:
        return MonomialIdeal.zero(a.arity)
    A, B = a.array(), b.array()
    combined = op(A[:, None, :], B[None, :, :]).reshape(-1, a.arity)
    return _from_array(combined, a.arity)


def product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    return _pairwise(a, b, np.add)


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Intersection via pairwise lcm of generators."""
    return _pairwise(a, b, np.maximum)


@lru_cache(maxsize=4096)
def power(a: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise IdealInputError("power exponent must be >= 0")
    if k == 0:
        return MonomialIdeal.unit(a.arity)
    if k == 1:
        return a
    half = power(a, k // 2)
    out = product(half, half)
    return product(out, a) if k % 2 else out


def algebra(kind: str, a: MonomialIdeal, b) -> MonomialIdeal:
    """Dispatch ``sum``/``product``/``intersect`` on two ideals, ``power`` on an int."""
    if kind == "sum":
        return ideal_sum(a, b)
    if kind == "product":
        return product(a, b)
    if kind == "intersect":
        return intersect(a, b)
    if kind == "power":
        return power(a, int(b))
    raise IdealInputError(f"unknown operation {kind!r}")


def contains_monomial(a: MonomialIdeal, w: Sequence[int]) -> bool:
    if len(w) != a.arity:
        raise IdealInputError(f"exponent {tuple(w)} does not have arity {a.arity}")
    return any(all(x >= g for x, g in zip(w, gen)) for gen in a.generators)


def contains(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """True iff ``b`` is a subset of ``a``."""
    _check_arity(a, b)
    if b.is_zero:
        return True
    if a.is_zero:
        return False
    A, B = a.array(), b.array()
    ge = np.all(B[:, None, :] >= A[None, :, :], axis=2)
    return bool(ge.any(axis=1).all())


def missing_generator(a: MonomialIdeal, b: MonomialIdeal) -> Exponent | None:
    """A generator of ``b`` outside ``a``, or None when ``b`` is inside ``a``."""
    _check_arity(a, b)
    for g in b.generators:
        if not contains_monomial(a, g):
            return g
    return None


def embed_product(a: MonomialIdeal, offset: int, total_arity: int) -> MonomialIdeal:
    """Pull ``a`` back along the projection onto variables ``offset..offset+arity``."""
    if offset < 0 or offset + a.arity > total_arity:
        raise IdealInputError(f"cannot place {a.arity} variables at offset {offset} in {total_arity}")
    pad_left = (0,) * offset
    pad_right = (0,) * (total_arity - offset - a.arity)
    return MonomialIdeal(total_arity, tuple(pad_left + g + pad_right for g in a.generators))


def restrict_to_subspace(b: MonomialIdeal, keep: Sequence[int]) -> MonomialIdeal:
    """Image of ``b`` under the map sending every variable outside ``keep`` to 0."""
    keep = list(keep)
    if not keep:
        raise IdealInputError("keep must be nonempty")
    if any(not 0 <= i < b.arity for i in keep) or len(set(keep)) != len(keep):
        raise IdealInputError(f"bad variable indices {keep} for arity {b.arity}")
    dropped = [i for i in range(b.arity) if i not in set(keep)]
    survivors = [tuple(g[i] for i in keep) for g in b.generators if all(g[i] == 0 for i in dropped)]
    return minimalize(survivors, len(keep))


def max_ideal_power(arity: int, p: int) -> MonomialIdeal:
    """``m^p`` for the maximal ideal at the origin; the unit ideal when p <= 0."""
    if p <= 0:
        return MonomialIdeal.unit(arity)
    return power(MonomialIdeal(arity, tuple(tuple(int(i == j) for j in range(arity)) for i in reversed(range(arity)))), p)


def variables_ideal(arity: int, indices: Iterable[int]) -> MonomialIdeal:
    """Ideal generated by the listed coordinate variables."""
    return minimalize([tuple(int(i == j) for j in range(arity)) for i in indices], arity)
