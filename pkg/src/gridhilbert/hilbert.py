"""Affine Hilbert functions of weight-determined sets.

The dimension of the space of functions cut out on a union of layers by
polynomials of degree at most d has a closed form: layers of weight at
most d contribute their full size, and the remaining layers are matched
against the unused weights of [0, d], largest against smallest, each
pair contributing the smaller layer size.  The rank oracle computes the
same dimension directly as a matrix rank and exists so the closed form
is checkable instance by instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from . import linalg
from .errors import (
    DegreeOutOfRange,
    DuplicateEntries,
    LengthMismatch,
    SetTooSmall,
    WeightOutOfRange,
)
from .grid import UniformGrid, make_grid


def _check_degree(d: int, top: int) -> int:
    if not isinstance(d, int) or not 0 <= d <= top:
        raise DegreeOutOfRange(f"degree {d!r} outside [0, {top}]")
    return d


def _check_weight_set(members: Iterable[int], top: int) -> tuple[int, ...]:
    out = []
    for w in members:
        if not isinstance(w, int) or not 0 <= w <= top:
            raise WeightOutOfRange(f"weight {w!r} outside [0, {top}]")
        out.append(w)
    return tuple(sorted(set(out)))


@dataclass(frozen=True)
class BEEnumeration:
    """Pairing data for a degree d and weight set E inside [0, N].

    t_desc lists [0, d] minus E in decreasing order, w_asc lists E minus
    [0, d] in increasing order, and kept is the intersection of E with
    [0, d].
    """

    t_desc: tuple[int, ...]
    w_asc: tuple[int, ...]
    kept: tuple[int, ...]


def be_enumeration(N: int, d: int, E: Iterable[int]) -> BEEnumeration:
    _check_degree(d, N)
    members = set(_check_weight_set(E, N))
    low = set(range(d + 1))
    return BEEnumeration(
        t_desc=tuple(sorted(low - members, reverse=True)),
        w_asc=tuple(sorted(members - low)),
        kept=tuple(sorted(members & low)),
    )


def hilbert_layer(grid: UniformGrid, d: int, w: int) -> int:
    """min(sizes[d], sizes[w]) for two weights of the grid."""
    sizes = grid.layer_sizes
    return min(sizes[grid.check_weight(d)], sizes[grid.check_weight(w)])


def hilbert_closed(grid: UniformGrid, d: int, E: Iterable[int]) -> int:
    """Closed-form Hilbert function of the weight-determined set E at degree d."""
    N = grid.max_weight
    sizes = grid.layer_sizes
    be = be_enumeration(N, d, E)
    total = sum(sizes[w] for w in be.kept)
    total += sum(min(sizes[t], sizes[w]) for t, w in zip(be.t_desc, be.w_asc))
    return total


def hilbert_rank_oracle(grid: UniformGrid, d: int, E: Iterable[int]) -> int:
    """The same dimension as an exact matrix rank, computed independently."""
    _check_degree(d, grid.max_weight)
    E = _check_weight_set(E, grid.max_weight)
    return linalg.rank(linalg.eval_matrix(grid, range(d + 1), E)).rank


def hilbert_cube_closed(n: int, d: int, E: Iterable[int]) -> int:
    """Closed form specialized to the Boolean cube: layer sizes are binomials."""
    if not isinstance(n, int) or n < 1:
        raise DegreeOutOfRange(f"cube dimension {n!r} must be a positive integer")
    _check_degree(d, n)
    be = be_enumeration(n, d, E)
    total = sum(comb(n, w) for w in be.kept)
    total += sum(min(comb(n, t), comb(n, w)) for t, w in zip(be.t_desc, be.w_asc))
    return total


def hilbert_profile(d: int, E: Iterable[int]) -> tuple[tuple[int, int], ...]:
    """Profile of E at degree d: pairs (u_j, v_j) for the d+1 smallest members.

    The u's are the d+1 smallest members of E in increasing order.  The
    v's are a rearrangement of [0, d]: v_j = u_j wherever u_j <= d, and
    the remaining values of [0, d] are assigned to the positions with
    u_j > d in decreasing order.  Requires |E| >= d + 1.
    """
    if not isinstance(d, int) or d < 0:
        raise DegreeOutOfRange(f"degree {d!r} must be nonnegative")
    members = sorted(set(E))
    if any(not isinstance(w, int) or w < 0 for w in members):
        raise WeightOutOfRange("weights must be nonnegative integers")
    if len(members) < d + 1:
        raise SetTooSmall(
            f"need at least {d + 1} weights, got {len(members)}"
        )
    u = members[: d + 1]
    low_used = {w for w in u if w <= d}
    spare = sorted(set(range(d + 1)) - low_used, reverse=True)
    pairs = []
    pos = 0
    for uj in u:
        if uj <= d:
            pairs.append((uj, uj))
        else:
            pairs.append((uj, spare[pos]))
            pos += 1
    return tuple(pairs)


def is_interval_compatible(c: int, d: int, values: Sequence[int]) -> bool:
    """Whether (w_t) for t in [c, d] is a compatible assignment of weights.

    The conditions: w_t >= t for every t; any w_t different from t lies
    beyond d; and the off-interval values strictly decrease as t grows.
    The interval may be empty (c == d + 1).
    """
    if c > d + 1:
        raise LengthMismatch(f"invalid interval [{c}, {d}]")
    values = tuple(values)
    if len(values) != d - c + 1:
        raise LengthMismatch(
            f"expected {d - c + 1} values for [{c}, {d}], got {len(values)}"
        )
    if len(set(values)) != len(values):
        raise DuplicateEntries("interval assignment repeats a value")
    ts = range(c, d + 1)
    for t, w in zip(ts, values):
        if w < t:
            return False
        if w != t and w <= d:
            return False
    off = [w for w in values if not c <= w <= d]
    return all(a > b for a, b in zip(off, off[1:]))


def rank_block(
    grid: UniformGrid, row_weights: Iterable[int], col_weights: Iterable[int]
) -> int:
    """Exact rank of the evaluation matrix between two weight-determined sets."""
    return linalg.rank(linalg.eval_matrix(grid, row_weights, col_weights)).rank


def profile_value(grid: UniformGrid, d: int, E: Iterable[int]) -> int:
    """Sum of min(sizes[u], sizes[v]) over the profile pairs."""
    sizes = grid.layer_sizes
    E = _check_weight_set(E, grid.max_weight)
    return sum(min(sizes[u], sizes[v]) for u, v in hilbert_profile(d, E))


def cube(n: int) -> UniformGrid:
    """The Boolean cube as a grid: n binary coordinates."""
    if not isinstance(n, int) or n < 1:
        raise DegreeOutOfRange(f"cube dimension {n!r} must be a positive integer")
    return make_grid((2,) * n)
