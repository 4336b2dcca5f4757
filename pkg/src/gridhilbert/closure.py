"""Finite-degree closures of weight-determined sets.

Two routes to the same object.  The brute-force route declares a point
x closed into A when no polynomial of degree at most d vanishing on A
separates x, i.e. when appending the evaluation column of x does not
increase the rank of the degree-<=d evaluation matrix of A; applied
layerwise this gives the weight-set closure.  The combinatorial route
iterates an interval-filling step operator on the weight set until it
stabilizes.  On grids whose layer-size table is strictly unimodal with
a flat middle pair the two routes agree, and the package keeps both so
the agreement is observable rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import DegreeOutOfRange, WeightOutOfRange
from .grid import Point, UniformGrid
from .linalg import _eliminate, falling_factorial_value


def _check_degree(d: int, top: int) -> int:
    if not isinstance(d, int) or not 0 <= d <= top:
        raise DegreeOutOfRange(f"degree {d!r} outside [0, {top}]")
    return d


def _check_weight_set(members: Iterable[int], top: int) -> tuple[int, ...]:
    out = set()
    for w in members:
        if not isinstance(w, int) or not 0 <= w <= top:
            raise WeightOutOfRange(f"weight {w!r} outside [0, {top}]")
        out.add(w)
    return tuple(sorted(out))


def l_step(N: int, d: int, E: Iterable[int]) -> frozenset[int]:
    """One interval-filling step on a weight set inside [0, N].

    With E = {t_1 < ... < t_s}: sets of at most d weights are fixed;
    otherwise the result is [0, t_{s-d}] together with E together with
    [t_{d+1}, N].
    """
    _check_degree(d, N)
    t = _check_weight_set(E, N)
    s = len(t)
    if s <= d:
        return frozenset(t)
    out = set(t)
    out.update(range(t[s - d - 1] + 1))
    out.update(range(t[d], N + 1))
    return frozenset(out)


def _l_fixpoint(N: int, d: int, E: Iterable[int]) -> tuple[frozenset[int], int]:
    cur = frozenset(_check_weight_set(E, N))
    steps = 0
    while True:
        nxt = l_step(N, d, cur)
        if nxt == cur:
            return cur, steps
        cur = nxt
        steps += 1


def l_bar(N: int, d: int, E: Iterable[int]) -> frozenset[int]:
    """Fixpoint of the step operator, reached in at most N + 1 steps."""
    return _l_fixpoint(N, d, E)[0]


def t_set(N: int, i: int) -> frozenset[int]:
    """The two end blocks [0, i-1] and [N-i+1, N] as one weight set."""
    if not isinstance(i, int) or not 0 <= i <= N:
        raise WeightOutOfRange(f"block size {i!r} outside [0, {N}]")
    return frozenset(range(i)) | frozenset(range(N - i + 1, N + 1))


@lru_cache(maxsize=None)
def _low_degree_exponents(grid: UniformGrid, d: int) -> tuple[Point, ...]:
    return grid.unfold(range(d + 1))


@lru_cache(maxsize=None)
def _eval_columns(grid: UniformGrid, d: int) -> dict[Point, tuple[int, ...]]:
    """Per point, its evaluations under every falling-factorial of weight <= d."""
    rows = _low_degree_exponents(grid, d)
    return {
        x: tuple(falling_factorial_value(alpha, x) for alpha in rows)
        for x in grid.points()
    }


class _MembershipTester:
    """Rank-increase test against a fixed point set, factored for reuse.

    A basis of the coefficient vectors of all degree-<=d relations
    vanishing on the set is extracted once by fraction-free elimination
    of the evaluation matrix augmented with an identity block; a point
    then fails to enlarge the rank exactly when its evaluation column is
    orthogonal to every basis vector.
    """

    def __init__(self, grid: UniformGrid, d: int, points: tuple[Point, ...]):
        columns = _eval_columns(grid, d)
        n_funcs = len(_low_degree_exponents(grid, d))
        n_pts = len(points)
        aug = []
        for i in range(n_funcs):
            row = [columns[p][i] for p in points] + [0] * n_funcs
            row[n_pts + i] = 1
            aug.append(row)
        r, _ = _eliminate(aug, range(n_pts), range(n_pts, n_pts + n_funcs))
        self._null = [row[n_pts:] for row in aug[r:]]
        self._columns = columns
        self._members = set(points)

    def contains(self, x: Point) -> bool:
        if x in self._members:
            return True
        v = self._columns[x]
        for y in self._null:
            s = 0
            for yi, vi in zip(y, v):
                if yi and vi:
                    s += yi * vi
            if s:
                return False
        return True


def z_closure_points(
    grid: UniformGrid, d: int, points: Iterable[Point]
) -> frozenset[Point]:
    """All grid points every degree-<=d polynomial vanishing on the set kills."""
    _check_degree(d, grid.max_weight)
    pts = tuple(sorted({grid.check_point(p) for p in points}))
    tester = _MembershipTester(grid, d, pts)
    return frozenset(x for x in grid.points() if tester.contains(x))


def zstar_closure(grid: UniformGrid, d: int, E: Iterable[int]) -> frozenset[int]:
    """Weights whose whole layer lies in the point closure of the unfolded set."""
    _check_degree(d, grid.max_weight)
    members = _check_weight_set(E, grid.max_weight)
    tester = _MembershipTester(grid, d, grid.unfold(members))
    out = set(members)
    for j in range(grid.max_weight + 1):
        if j in out:
            continue
        if all(tester.contains(x) for x in grid.layer(j)):
            out.add(j)
    return frozenset(out)


@dataclass(frozen=True)
class ClosureReport:
    """Both closure routes for one input, plus the step count to the fixpoint."""

    input: tuple[int, ...]
    lbar: tuple[int, ...]
    zstar: tuple[int, ...]
    iterations: int


def closure_report(grid: UniformGrid, d: int, E: Iterable[int]) -> ClosureReport:
    N = grid.max_weight
    members = _check_weight_set(E, N)
    fix, steps = _l_fixpoint(N, d, members)
    zs = zstar_closure(grid, d, members)
    return ClosureReport(
        input=members,
        lbar=tuple(sorted(fix)),
        zstar=tuple(sorted(zs)),
        iterations=steps,
    )
