"""Uniform grids: weights, layers, the lex order, and weight-set parsing.

A uniform grid is a product of integer ranges [0, k_1 - 1] x ... x
[0, k_n - 1] with every arity k_i >= 2.  Points are plain tuples of
ints and double as monomial exponent vectors.  The weight of a point is
the sum of its coordinates; N denotes the largest weight.  A
weight-determined subset of the grid is a union of full layers (all
points of one weight) and is identified with its set of weights, a
subset of [0, N].
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import (
    AritySmallerThanTwo,
    EmptyArities,
    ParseError,
    PointNotInGrid,
    WeightOutOfRange,
)

Point = tuple[int, ...]
LayerSizes = tuple[int, ...]


def weight(point: Iterable[int]) -> int:
    """Sum of coordinates."""
    return sum(point)


@dataclass(frozen=True)
class UniformGrid:
    """Product of the ranges [0, k_i - 1] for a tuple of arities k_i >= 2."""

    arities: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.arities, tuple):
            object.__setattr__(self, "arities", tuple(self.arities))
        if not self.arities:
            raise EmptyArities("a grid needs at least one coordinate")
        for k in self.arities:
            if not isinstance(k, int) or k < 2:
                raise AritySmallerThanTwo(f"arity {k!r} is smaller than two")

    @property
    def dimension(self) -> int:
        return len(self.arities)

    @property
    def max_weight(self) -> int:
        """Largest point weight N = sum of (k_i - 1)."""
        return sum(k - 1 for k in self.arities)

    @cached_property
    def size(self) -> int:
        n = 1
        for k in self.arities:
            n *= k
        return n

    def points(self) -> Iterator[Point]:
        """All grid points in ascending lex order, coordinate 1 most significant."""
        return itertools.product(*(range(k) for k in self.arities))

    def __contains__(self, point: object) -> bool:
        if not isinstance(point, tuple) or len(point) != self.dimension:
            return False
        return all(
            isinstance(a, int) and 0 <= a < k for a, k in zip(point, self.arities)
        )

    def check_point(self, point: Iterable[int]) -> Point:
        p = tuple(point)
        if p not in self:
            raise PointNotInGrid(f"{p} is not a point of the grid {self.spec()}")
        return p

    def check_weight(self, j: int) -> int:
        if not isinstance(j, int) or not 0 <= j <= self.max_weight:
            raise WeightOutOfRange(
                f"weight {j!r} outside [0, {self.max_weight}]"
            )
        return j

    def check_weights(self, weights: Iterable[int]) -> tuple[int, ...]:
        """Normalize an iterable of weights to a sorted duplicate-free tuple."""
        return tuple(sorted({self.check_weight(j) for j in weights}))

    @cached_property
    def layer_sizes(self) -> LayerSizes:
        """Points per weight: coefficients of prod_i (1 + x + ... + x^(k_i-1)).

        The table is symmetric (sizes[j] == sizes[N-j]) and unimodal, and
        sums to the number of grid points.
        """
        sizes = [1]
        for k in self.arities:
            out = [0] * (len(sizes) + k - 1)
            for i, v in enumerate(sizes):
                for j in range(k):
                    out[i + j] += v
            sizes = out
        return tuple(sizes)

    @cached_property
    def _layers(self) -> tuple[tuple[Point, ...], ...]:
        buckets: list[list[Point]] = [[] for _ in range(self.max_weight + 1)]
        for p in self.points():
            buckets[sum(p)].append(p)
        return tuple(tuple(b) for b in buckets)

    def layer(self, j: int) -> tuple[Point, ...]:
        """Points of weight j, ascending by lex_weight."""
        return self._layers[self.check_weight(j)]

    def unfold(self, weights: Iterable[int]) -> tuple[Point, ...]:
        """Points of a weight-determined set: ascending weight, lex within a layer."""
        js = self.check_weights(weights)
        return tuple(p for j in js for p in self._layers[j])

    def lex_weight(self, point: Iterable[int]) -> int:
        """Rank of a point in the lex order, base max(arities)."""
        p = self.check_point(point)
        base = max(self.arities)
        value = 0
        for a in p:
            value = value * base + a
        return value

    def lex_predecessor(self, point: Iterable[int]) -> Point | None:
        """Mixed-radix decrement; None for the all-zeros point."""
        p = list(self.check_point(point))
        i = len(p) - 1
        while i >= 0 and p[i] == 0:
            i -= 1
        if i < 0:
            return None
        p[i] -= 1
        for j in range(i + 1, len(p)):
            p[j] = self.arities[j] - 1
        return tuple(p)

    def is_su2(self) -> bool:
        """Strictly unimodal with a flat middle pair: sizes strictly increase
        up to floor(N/2), sizes[floor(N/2)] == sizes[ceil(N/2)], and strictly
        decrease afterwards."""
        sizes = self.layer_sizes
        n = self.max_weight
        mid = n // 2
        hi = n - mid
        if any(sizes[j] >= sizes[j + 1] for j in range(mid)):
            return False
        if sizes[mid] != sizes[hi]:
            return False
        return all(sizes[j] > sizes[j + 1] for j in range(hi, n))

    def spec(self) -> str:
        """Canonical text form, e.g. '3,3'."""
        return ",".join(str(k) for k in self.arities)


def make_grid(arities: Iterable[int]) -> UniformGrid:
    """Build a grid from an iterable of arities, validating them."""
    return UniformGrid(tuple(arities))


def parse_grid(text: str) -> UniformGrid:
    """Parse a comma-separated arity list such as '3,3'."""
    parts = [t.strip() for t in text.split(",")]
    if not all(part.isdigit() for part in parts):
        raise ParseError(f"bad grid spec {text!r}: expected comma-separated integers")
    return make_grid(int(part) for part in parts)


def parse_weight_set(text: str) -> tuple[int, ...]:
    """Parse a weight set such as '0,2-4,7' into a sorted tuple.

    Tokens are nonnegative integers or inclusive dash ranges; the empty
    string denotes the empty set.
    """
    text = text.strip()
    if not text:
        return ()
    out: set[int] = set()
    for token in text.split(","):
        token = token.strip()
        lo, dash, hi = token.partition("-")
        if not lo.isdigit() or (dash and not hi.isdigit()):
            raise ParseError(f"bad weight-set token {token!r}")
        if dash:
            a, b = int(lo), int(hi)
            if a > b:
                raise ParseError(f"bad weight-set token {token!r}: empty range")
            out.update(range(a, b + 1))
        else:
            out.add(int(lo))
    return tuple(sorted(out))
