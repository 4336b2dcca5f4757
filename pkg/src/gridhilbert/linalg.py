"""Exact dense matrices over the rationals and fraction-free rank.

Matrices carry grid points as row and column labels.  Entries are ints
or fractions.Fraction; nothing here ever rounds.  Rank is computed by
integer-preserving (Bareiss) elimination after clearing denominators
row by row, with pivot columns chosen greedily left to right so the
pivot set is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, lcm
from typing import Iterable, Sequence

from .errors import BadPermutation, DuplicateEntries, LengthMismatch
from .grid import Point, UniformGrid

Entry = int | Fraction


def falling_factorial_value(alpha: Sequence[int], beta: Sequence[int]) -> int:
    """Product over coordinates of beta_i (beta_i - 1) ... (beta_i - alpha_i + 1).

    This is the evaluation of the falling-factorial monomial with exponent
    alpha at the point beta; it vanishes whenever some alpha_i > beta_i.
    """
    if len(alpha) != len(beta):
        raise LengthMismatch(
            f"exponent length {len(alpha)} != point length {len(beta)}"
        )
    out = 1
    for a, b in zip(alpha, beta):
        for t in range(a):
            out *= b - t
        if out == 0:
            return 0
    return out


@dataclass(frozen=True)
class ExactMatrix:
    """Dense exact matrix with duplicate-free grid-point labels."""

    row_labels: tuple[Point, ...]
    col_labels: tuple[Point, ...]
    entries: tuple[tuple[Entry, ...], ...]

    def __post_init__(self) -> None:
        if len(set(self.row_labels)) != len(self.row_labels):
            raise DuplicateEntries("duplicate row labels")
        if len(set(self.col_labels)) != len(self.col_labels):
            raise DuplicateEntries("duplicate column labels")
        if len(self.entries) != len(self.row_labels):
            raise LengthMismatch("entry rows do not match row labels")
        for row in self.entries:
            if len(row) != len(self.col_labels):
                raise LengthMismatch("entry row does not match column labels")

    @property
    def n_rows(self) -> int:
        return len(self.row_labels)

    @property
    def n_cols(self) -> int:
        return len(self.col_labels)

    def entry(self, i: int, j: int) -> Entry:
        return self.entries[i][j]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.col_labels,
            self.row_labels,
            tuple(zip(*self.entries)) if self.entries else (),
        )

    def scale(self, c: Entry) -> "ExactMatrix":
        return ExactMatrix(
            self.row_labels,
            self.col_labels,
            tuple(tuple(c * e for e in row) for row in self.entries),
        )

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.col_labels != other.row_labels:
            raise LengthMismatch("inner labels do not match")
        rows = []
        for row in self.entries:
            out = []
            for j in range(other.n_cols):
                out.append(sum(row[k] * other.entries[k][j] for k in range(self.n_cols)))
            rows.append(tuple(out))
        return ExactMatrix(self.row_labels, other.col_labels, tuple(rows))

    def to_lines(self) -> list[str]:
        """One line per row, entries as exact p/q strings."""
        return [" ".join(str(Fraction(e)) for e in row) for row in self.entries]


@dataclass(frozen=True)
class RankResult:
    rank: int
    pivot_cols: tuple[int, ...]


def _eliminate(
    rows: list[list[int]],
    scan_cols: Sequence[int],
    passive_cols: Sequence[int] = (),
) -> tuple[int, list[int]]:
    """Fraction-free elimination in place; returns (rank, pivot columns).

    Pivots are chosen greedily over scan_cols in order.  The Bareiss
    two-term update with exact division by the previous pivot is applied
    uniformly to every remaining row, including rows whose leading entry
    is already zero, which is what keeps later divisions exact.  Entries
    in passive_cols are carried through the same updates but never used
    as pivots (used for augmented null-space columns).
    """
    m = len(rows)
    pivots: list[int] = []
    prev = 1
    r = 0
    for idx, c in enumerate(scan_cols):
        if r == m:
            break
        pivot_row = None
        for i in range(r, m):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        prow = rows[r]
        piv = prow[c]
        update = list(scan_cols[idx + 1 :]) + list(passive_cols)
        for i in range(r + 1, m):
            row = rows[i]
            f = row[c]
            for k in update:
                row[k] = (piv * row[k] - f * prow[k]) // prev
            row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return r, pivots


def _integer_rows(entries: Iterable[Iterable[Entry]]) -> list[list[int]]:
    """Clear denominators row by row; row scaling does not change rank."""
    out = []
    for row in entries:
        row = list(row)
        den = 1
        for e in row:
            if isinstance(e, Fraction):
                den = lcm(den, e.denominator)
        if den == 1:
            out.append([int(e) for e in row])
        else:
            out.append([int(e * den) for e in row])
    return out


def rank(matrix: ExactMatrix) -> RankResult:
    """Exact rank with the leftmost greedy independent column set."""
    if matrix.n_rows == 0 or matrix.n_cols == 0:
        return RankResult(0, ())
    rows = _integer_rows(matrix.entries)
    r, pivots = _eliminate(rows, range(matrix.n_cols))
    return RankResult(r, tuple(pivots))


def pivot_columns_in_order(
    matrix: ExactMatrix, order: Sequence[int]
) -> tuple[Point, ...]:
    """Greedy maximal independent column set scanning columns in the given order.

    Returns the labels of the pivot columns, listed by original column
    position.  The order must be a permutation of range(n_cols).
    """
    if sorted(order) != list(range(matrix.n_cols)):
        raise BadPermutation("scan order is not a permutation of the columns")
    if matrix.n_rows == 0 or matrix.n_cols == 0:
        return ()
    rows = _integer_rows(matrix.entries)
    _, pivots = _eliminate(rows, list(order))
    return tuple(matrix.col_labels[c] for c in sorted(pivots))


def eval_matrix_points(
    row_points: Sequence[Point], col_points: Sequence[Point]
) -> ExactMatrix:
    """Falling-factorial evaluation matrix for explicit exponent and point lists."""
    rows = tuple(
        tuple(falling_factorial_value(alpha, x) for x in col_points)
        for alpha in row_points
    )
    return ExactMatrix(tuple(row_points), tuple(col_points), rows)


def eval_matrix(
    grid: UniformGrid, row_weights: Iterable[int], col_weights: Iterable[int]
) -> ExactMatrix:
    """Evaluation matrix between two weight-determined sets.

    Rows are the exponents of the unfolded row weight set, columns the
    points of the unfolded column weight set, both in canonical order
    (ascending weight, lex within a layer).
    """
    return eval_matrix_points(grid.unfold(row_weights), grid.unfold(col_weights))


def up_matrix(grid: UniformGrid, d: int) -> ExactMatrix:
    """0/1 matrix from layer d to layer d+1: entry 1 iff row <= col componentwise."""
    grid.check_weight(d)
    grid.check_weight(d + 1)
    rows = grid.layer(d)
    cols = grid.layer(d + 1)
    entries = tuple(
        tuple(int(all(a <= b for a, b in zip(alpha, beta))) for beta in cols)
        for alpha in rows
    )
    return ExactMatrix(rows, cols, entries)


def factorial_diag(grid: UniformGrid, weights: Iterable[int]) -> ExactMatrix:
    """Diagonal matrix of coordinatewise factorials alpha! over a weight set."""
    points = grid.unfold(weights)
    n = len(points)
    entries = tuple(
        tuple(
            _point_factorial(points[i]) if i == j else 0 for j in range(n)
        )
        for i in range(n)
    )
    return ExactMatrix(points, points, entries)


def _point_factorial(alpha: Point) -> int:
    out = 1
    for a in alpha:
        out *= factorial(a)
    return out
