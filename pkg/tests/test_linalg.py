import itertools
import random
from fractions import Fraction
from math import factorial

import pytest

from gridhilbert import (
    BadPermutation,
    DuplicateEntries,
    ExactMatrix,
    LengthMismatch,
    eval_matrix,
    eval_matrix_points,
    factorial_diag,
    falling_factorial_value,
    make_grid,
    pivot_columns_in_order,
    rank,
    up_matrix,
)


def _reference_rank(entries):
    """Textbook Gaussian elimination over Fraction, used as an oracle."""
    rows = [[Fraction(e) for e in row] for row in entries]
    if not rows or not rows[0]:
        return 0
    r = 0
    for col in range(len(rows[0])):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col] / rows[r][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def _labels(n):
    return tuple((i,) for i in range(n))


def _matrix(entries):
    rows = tuple(tuple(row) for row in entries)
    return ExactMatrix(_labels(len(rows)), _labels(len(rows[0])), rows)


def test_falling_factorial_values():
    assert falling_factorial_value((0,), (5,)) == 1
    assert falling_factorial_value((2,), (4,)) == 12
    assert falling_factorial_value((3,), (2,)) == 0
    assert falling_factorial_value((1, 2), (3, 3)) == 18
    assert falling_factorial_value((2, 1), (2, 0)) == 0
    assert falling_factorial_value((), ()) == 1
    with pytest.raises(LengthMismatch):
        falling_factorial_value((1,), (1, 2))


def test_falling_factorial_vanishing_characterization():
    grid = make_grid((4, 3))
    for alpha in grid.points():
        for x in grid.points():
            value = falling_factorial_value(alpha, x)
            dominates = all(a <= b for a, b in zip(alpha, x))
            assert (value != 0) == dominates
            if alpha == x:
                assert value == _point_factorial(alpha)


def _point_factorial(alpha):
    out = 1
    for a in alpha:
        out *= factorial(a)
    return out


def test_matrix_validation():
    with pytest.raises(DuplicateEntries):
        ExactMatrix(((0,), (0,)), ((1,),), ((1,), (2,)))
    with pytest.raises(LengthMismatch):
        ExactMatrix(((0,),), ((1,), (2,)), ((1,),))
    with pytest.raises(LengthMismatch):
        ExactMatrix(((0,),), ((1,),), ())


def test_transpose_scale_matmul():
    m = _matrix([[1, 2, 3], [4, 5, 6]])
    assert m.transpose().entries == ((1, 4), (2, 5), (3, 6))
    assert m.scale(3).entries == ((3, 6, 9), (12, 15, 18))
    prod = m @ _matrix([[1, 0], [0, 1], [1, 1]])
    assert prod.entries == ((4, 5), (10, 11))
    with pytest.raises(LengthMismatch):
        m @ m


def test_to_lines_uses_exact_fractions():
    m = ExactMatrix(
        ((0,),),
        ((0,), (1,)),
        ((Fraction(1, 3), 2),),
    )
    assert m.to_lines() == ["1/3 2"]


def test_rank_hand_examples():
    assert rank(_matrix([[1, 2], [2, 4]])).rank == 1
    assert rank(_matrix([[1, 2], [3, 4]])).rank == 2
    assert rank(_matrix([[0, 0], [0, 0]])).rank == 0
    assert rank(_matrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])).rank == 2
    result = rank(_matrix([[0, 1, 1], [0, 2, 2]]))
    assert result.rank == 1
    assert result.pivot_cols == (1,)


def test_rank_matches_reference_on_random_matrices():
    rng = random.Random(20260822)
    for trial in range(200):
        n = rng.randint(1, 6)
        m = rng.randint(1, 6)
        entries = [[rng.randint(-9, 9) for _ in range(m)] for _ in range(n)]
        if trial % 3 == 0 and n >= 2:
            # Force some rank deficiency with a dependent row.
            c1, c2 = rng.randint(-3, 3), rng.randint(-3, 3)
            entries[-1] = [c1 * a + c2 * b for a, b in zip(entries[0], entries[n // 2])]
        assert rank(_matrix(entries)).rank == _reference_rank(entries)


def test_rank_accepts_fraction_entries():
    entries = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(1, 1)]]
    assert rank(_matrix(entries)).rank == _reference_rank(entries)
    entries = [[Fraction(1, 2), 1], [Fraction(1, 4), Fraction(1, 2)]]
    assert rank(_matrix(entries)).rank == 1


def test_rank_on_all_small_eval_matrices():
    for arities in [(3, 3), (2, 4), (2, 2, 2)]:
        grid = make_grid(arities)
        n = grid.max_weight
        for d in range(n + 1):
            for w in range(n + 1):
                m = eval_matrix(grid, (d,), (w,))
                assert rank(m).rank == _reference_rank(m.entries)


def test_pivot_columns_greedy_against_reference():
    """The pivot set must match a column-by-column greedy scan over Fraction."""
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(1, 5)
        m = rng.randint(1, 5)
        entries = [[rng.randint(-4, 4) for _ in range(m)] for _ in range(n)]
        order = list(range(m))
        rng.shuffle(order)
        mat = _matrix(entries)
        got = pivot_columns_in_order(mat, order)
        chosen = []
        for col in order:
            trial = chosen + [col]
            sub = [[entries[i][c] for c in trial] for i in range(n)]
            if _reference_rank(sub) == len(trial):
                chosen.append(col)
        assert got == tuple(mat.col_labels[c] for c in sorted(chosen))


def test_pivot_columns_rejects_non_permutation():
    m = _matrix([[1, 0], [0, 1]])
    with pytest.raises(BadPermutation):
        pivot_columns_in_order(m, (0, 0))
    with pytest.raises(BadPermutation):
        pivot_columns_in_order(m, (0,))


def test_eval_matrix_frozen_example():
    grid = make_grid((3, 3))
    m = eval_matrix(grid, (1,), (2,))
    assert m.row_labels == ((0, 1), (1, 0))
    assert m.col_labels == ((0, 2), (1, 1), (2, 0))
    assert m.entries == ((2, 1, 0), (0, 1, 2))


def test_eval_matrix_points_labels_are_arguments():
    m = eval_matrix_points(((0, 0), (1, 1)), ((1, 1),))
    assert m.entries == ((1,), (1,))
    assert m.row_labels == ((0, 0), (1, 1))


def test_up_matrix_frozen_example():
    grid = make_grid((3, 3))
    m = up_matrix(grid, 1)
    assert m.row_labels == ((0, 1), (1, 0))
    assert m.col_labels == ((0, 2), (1, 1), (2, 0))
    assert m.entries == ((1, 1, 0), (0, 1, 1))


def test_up_matrix_entries_are_cover_indicators():
    grid = make_grid((2, 3, 2))
    for d in range(grid.max_weight):
        m = up_matrix(grid, d)
        for i, alpha in enumerate(m.row_labels):
            for j, beta in enumerate(m.col_labels):
                covers = all(a <= b for a, b in zip(alpha, beta))
                assert m.entry(i, j) == int(covers)


def test_factorial_diag():
    grid = make_grid((3, 3))
    m = factorial_diag(grid, (2,))
    assert m.row_labels == ((0, 2), (1, 1), (2, 0))
    for i in range(3):
        for j in range(3):
            expected = _point_factorial(m.row_labels[i]) if i == j else 0
            assert m.entry(i, j) == expected


def test_rank_of_wide_product_chain():
    """Multiplying the two layer maps of the Boolean cube drops rank as expected."""
    grid = make_grid((2, 2, 2))
    chain = up_matrix(grid, 0) @ up_matrix(grid, 1)
    assert chain.n_rows == 1 and chain.n_cols == 3
    assert rank(chain).rank == 1
    assert list(itertools.chain.from_iterable(chain.entries)) == [2, 2, 2]
