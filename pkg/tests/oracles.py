"""Independent oracles for the test suite.

The elimination oracle here deliberately shares no code with
bihomtrias.matrices: plain forward elimination on lists, no pivot
normalization, no back substitution.  It only reports a rank, which is
what the dual-route checks compare.
"""

import random
from fractions import Fraction

from bihomtrias.scalars import Scalar


def naive_rank(rows):
    """Rank by forward Gaussian elimination with exact division."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(n_cols):
        pivot = None
        for r in range(row, n_rows):
            if not m[r][col].is_zero:
                pivot = r
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        pv = m[row][col]
        for r in range(row + 1, n_rows):
            f = m[r][col]
            if f.is_zero:
                continue
            ratio = f / pv
            m[r] = [a - ratio * b for a, b in zip(m[r], m[row])]
        rank += 1
        row += 1
        if row == n_rows:
            break
    return rank


def random_scalar(rng, max_den=4, span=6, complex_part=True):
    re = Fraction(rng.randint(-span, span), rng.randint(1, max_den))
    im = Fraction(rng.randint(-span, span), rng.randint(1, max_den)) if complex_part else 0
    return Scalar(re, im)


def random_rows(rng, rows, cols, **kw):
    return [[random_scalar(rng, **kw) for _ in range(cols)] for _ in range(rows)]


def random_sparse_scalar(rng):
    return Scalar(rng.choice([0, 0, 0, 1, -1, 2]), rng.choice([0, 0, 0, 0, 1, -1]))


def seeded(name: str) -> random.Random:
    return random.Random(f"bihomtrias:{name}")
