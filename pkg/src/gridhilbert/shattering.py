"""Order shattering over grid multisets and standard monomials.

A grid point b is read as a multiset over the coordinate positions:
position i occurs b(i) times, and tau(b) is the largest position that
occurs at all.  Order shattering is defined recursively: every nonempty
set shatters the empty multiset, and A shatters b when, among the
members of A sharing one fixed tail beyond tau(b), a cut at coordinate
tau(b) produces an upper part and a lower part whose sizes sum to at
least the number of sub-multisets of b, with the upper part shattering
b with position tau(b) deleted and the lower part shattering b with one
copy of tau(b) removed.  On binary coordinates both recursion targets
coincide and the cut forces the upper part to contain tau(b) and the
lower part to avoid it, which is the classical set-family notion.

Standard monomials are computed by a separate route with no shattering
in it: scan the monomials X^alpha for alpha in the grid in ascending
lex order and keep those whose evaluation column over A is independent
of the columns already kept.  The two routes coincide on every set of
grid points, and that equality is part of the verification surface of
this package rather than an assumption of the code.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import EmptyMultiset
from .grid import Point, UniformGrid
from .linalg import _eliminate


def tau(b: Iterable[int]) -> int:
    """Largest position (1-based) with a nonzero entry."""
    b = tuple(b)
    for i in range(len(b) - 1, -1, -1):
        if b[i] >= 1:
            return i + 1
    raise EmptyMultiset("the all-zero multiset has no largest element")


def b_star(grid: UniformGrid, b: Iterable[int]) -> Point:
    """Mask for the tail beyond tau(b): zero through tau(b), full afterwards."""
    b = grid.check_point(b)
    t = tau(b)
    return tuple(
        0 if i < t else grid.arities[i] - 1 for i in range(grid.dimension)
    )


def downset_size(b: Iterable[int]) -> int:
    """Number of componentwise-smaller-or-equal exponents: prod (b_i + 1)."""
    out = 1
    for v in b:
        out *= v + 1
    return out


@dataclass(frozen=True)
class MonomialDownset:
    """A set of exponent vectors closed downward under componentwise order."""

    members: frozenset[Point]

    def __contains__(self, point: object) -> bool:
        return point in self.members

    def __iter__(self) -> Iterator[Point]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def is_downward_closed(points: Iterable[Point]) -> bool:
    members = set(points)
    for p in members:
        for i, v in enumerate(p):
            if v and p[:i] + (v - 1,) + p[i + 1 :] not in members:
                return False
    return True


def _shatters(
    S: frozenset[Point],
    b: Point,
    memo: dict[tuple[frozenset[Point], Point], bool],
) -> bool:
    if not any(b):
        return bool(S)
    need = downset_size(b)
    if len(S) < need:
        return False
    key = (S, b)
    cached = memo.get(key)
    if cached is not None:
        return cached
    t = tau(b) - 1
    b_deleted = b[:t] + (0,) + b[t + 1 :]
    b_removed = b[:t] + (b[t] - 1,) + b[t + 1 :]
    by_tail: dict[tuple[int, ...], list[Point]] = {}
    for a in S:
        by_tail.setdefault(a[t + 1 :], []).append(a)
    result = False
    for group in by_tail.values():
        if len(group) < need:
            continue
        group.sort(key=lambda a: a[t])
        cuts = sorted({a[t] for a in group})
        for v in cuts[1:]:
            lower = frozenset(a for a in group if a[t] < v)
            upper = frozenset(a for a in group if a[t] >= v)
            if _shatters(upper, b_deleted, memo) and _shatters(
                lower, b_removed, memo
            ):
                result = True
                break
        if result:
            break
    memo[key] = result
    return result


def order_shatters(grid: UniformGrid, A: Iterable[Point], b: Iterable[int]) -> bool:
    """Whether the point set A order-shatters the multiset b."""
    pts = frozenset(grid.check_point(p) for p in A)
    b = grid.check_point(b)
    return _shatters(pts, b, {})


def ord_str(grid: UniformGrid, A: Iterable[Point]) -> MonomialDownset:
    """All multisets the point set order-shatters."""
    pts = frozenset(grid.check_point(p) for p in A)
    memo: dict[tuple[frozenset[Point], Point], bool] = {}
    return MonomialDownset(
        frozenset(b for b in grid.points() if _shatters(pts, b, memo))
    )


@lru_cache(maxsize=None)
def _monomial_rows(grid: UniformGrid) -> dict[Point, tuple[int, ...]]:
    """Per point, the values of every grid monomial at it, in lex order."""
    exponents = tuple(grid.points())
    table = {}
    for x in grid.points():
        row = []
        for alpha in exponents:
            v = 1
            for xi, ai in zip(x, alpha):
                v *= xi**ai
            row.append(v)
        table[x] = tuple(row)
    return table


def _sm_exponents(grid: UniformGrid, pts: tuple[Point, ...]) -> frozenset[Point]:
    if not pts:
        return frozenset()
    table = _monomial_rows(grid)
    rows = [list(table[x]) for x in pts]
    _, pivots = _eliminate(rows, range(grid.size))
    exponents = tuple(grid.points())
    return frozenset(exponents[c] for c in pivots)


def standard_monomials(grid: UniformGrid, A: Iterable[Point]) -> MonomialDownset:
    """Exponents of the monomials surviving the greedy lex footprint scan over A.

    One column per grid exponent, scanned in ascending lex order; a
    monomial is kept when its evaluation vector over A is independent of
    the vectors of the monomials kept before it.  The result has exactly
    |A| members and is downward closed.
    """
    pts = tuple(sorted({grid.check_point(p) for p in A}))
    return MonomialDownset(_sm_exponents(grid, pts))
