"""Bi-adjacency matrices and exact integer linear algebra.

Everything is computed over the integers with Python's arbitrary-precision
arithmetic; there is no floating point anywhere.  Determinant and rank use
fraction-free elimination, the permanent uses inclusion-exclusion with
Gray-code subset updates, falling back to matching enumeration for large
0/1 matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .monomials import Monomial, VARIABLE_MONOMIALS
from .regions import TriangularRegion

#: Default column bound for the inclusion-exclusion permanent.
PERMANENT_COLUMN_LIMIT = 24


@dataclass(frozen=True)
class IntegerMatrix:
    """A dense integer matrix with optional monomial row/column labels."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]
    row_labels: tuple[Monomial, ...] | None = None
    col_labels: tuple[Monomial, ...] | None = None

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry grid does not match the declared shape")
        if self.row_labels is not None and len(self.row_labels) != self.rows:
            raise ValueError("row label count mismatch")
        if self.col_labels is not None and len(self.col_labels) != self.cols:
            raise ValueError("column label count mismatch")

    @staticmethod
    def from_rows(rows: list[list[int]]) -> IntegerMatrix:
        n = len(rows)
        m = len(rows[0]) if rows else 0
        return IntegerMatrix(n, m, tuple(tuple(r) for r in rows))

    def transpose(self) -> IntegerMatrix:
        flipped = tuple(
            tuple(self.entries[i][j] for i in range(self.rows))
            for j in range(self.cols)
        )
        return IntegerMatrix(self.cols, self.rows, flipped, self.col_labels, self.row_labels)

    def is_square(self) -> bool:
        return self.rows == self.cols


def identity_matrix(n: int) -> IntegerMatrix:
    return IntegerMatrix(
        n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    )


def biadjacency(region: TriangularRegion) -> IntegerMatrix:
    """0/1 matrix of down-label/up-label adjacency, both sides in descending revlex.

    Entry (mu, nu) is 1 exactly when nu is x*mu, y*mu or z*mu; transposing
    gives the multiplication-by-(x+y+z) matrix between the two monomial
    bases.
    """
    downs = region.down_sorted()
    ups = region.up_sorted()
    up_index = {u: k for k, u in enumerate(ups)}
    grid = []
    for mu in downs:
        row = [0] * len(ups)
        for v in VARIABLE_MONOMIALS:
            k = up_index.get(mu * v)
            if k is not None:
                row[k] = 1
        grid.append(tuple(row))
    return IntegerMatrix(len(downs), len(ups), tuple(grid), tuple(downs), tuple(ups))


def determinant(matrix: IntegerMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination; 0x0 gives 1.

    Pivots are chosen as the first nonzero entry in row order, so the result
    is bit-reproducible.
    """
    if not matrix.is_square():
        raise ValueError("determinant requires a square matrix")
    n = matrix.rows
    if n == 0:
        return 1
    a = [list(r) for r in matrix.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        pivot_row = next((i for i in range(k, n) if a[i][k]), None)
        if pivot_row is None:
            return 0
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i, row_k = a[i], a[k]
            head = row_i[k]
            for j in range(k + 1, n):
                q, r = divmod(row_i[j] * pivot - head * row_k[j], prev)
                if r:
                    raise ArithmeticError("fraction-free elimination lost exactness")
                row_i[j] = q
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def rank(matrix: IntegerMatrix) -> int:
    """Exact rank over the rationals via integer-preserving elimination."""
    a = [list(r) for r in matrix.entries]
    nrows, ncols = matrix.rows, matrix.cols
    r = 0
    prev = 1
    for col in range(ncols):
        if r >= nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if a[i][col]), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            a[r], a[pivot_row] = a[pivot_row], a[r]
        pivot = a[r][col]
        for i in range(r + 1, nrows):
            row_i, row_r = a[i], a[r]
            head = row_i[col]
            for j in range(col + 1, ncols):
                q, rem = divmod(row_i[j] * pivot - head * row_r[j], prev)
                if rem:
                    raise ArithmeticError("fraction-free elimination lost exactness")
                row_i[j] = q
            row_i[col] = 0
        prev = pivot
        r += 1
    return r


def _ryser_permanent(rows: list[tuple[int, ...]]) -> int:
    """Ryser's inclusion-exclusion permanent with Gray-code column updates."""
    n = len(rows)
    if n == 0:
        return 1
    col_entries = [
        [(i, rows[i][j]) for i in range(n) if rows[i][j]] for j in range(n)
    ]
    row_sum = [0] * n
    zero_rows = n
    total = 0
    size = 0
    gray = 0
    for s in range(1, 1 << n):
        bit = (s & -s).bit_length() - 1
        mask = 1 << bit
        gray ^= mask
        if gray & mask:
            size += 1
            for i, v in col_entries[bit]:
                old = row_sum[i]
                new = old + v
                row_sum[i] = new
                if old == 0:
                    zero_rows -= 1
                if new == 0:
                    zero_rows += 1
        else:
            size -= 1
            for i, v in col_entries[bit]:
                old = row_sum[i]
                new = old - v
                row_sum[i] = new
                if old == 0:
                    zero_rows -= 1
                if new == 0:
                    zero_rows += 1
        if zero_rows == 0:
            prod = 1
            for v in row_sum:
                prod *= v
            total += prod if (n - size) % 2 == 0 else -prod
    return total


def _count_matchings(rows: list[tuple[int, ...]]) -> int:
    """Perfect matchings of a 0/1 square matrix by fewest-candidates backtracking."""
    n = len(rows)
    candidates = [frozenset(j for j in range(n) if rows[i][j]) for i in range(n)]
    used: set[int] = set()
    remaining = set(range(n))

    def rec() -> int:
        if not remaining:
            return 1
        best_i, best = None, None
        for i in remaining:
            live = candidates[i] - used
            if best is None or len(live) < len(best):
                best_i, best = i, live
                if len(live) <= 1:
                    break
        if not best:
            return 0
        remaining.discard(best_i)
        total = 0
        for j in sorted(best):
            used.add(j)
            total += rec()
            used.discard(j)
        remaining.add(best_i)
        return total

    return rec()


def permanent(matrix: IntegerMatrix, max_cols: int = PERMANENT_COLUMN_LIMIT) -> int:
    """Exact permanent; 0x0 gives 1.

    Rows and columns holding a single nonzero entry are peeled off first
    (Laplace expansion along such a line has one term).  The remaining core
    is evaluated by Ryser's formula when it has at most ``max_cols``
    columns; a larger 0/1 core falls back to counting perfect matchings,
    and a larger general core is rejected.
    """
    if not matrix.is_square():
        raise ValueError("permanent requires a square matrix")
    entries = matrix.entries
    live_rows = set(range(matrix.rows))
    live_cols = set(range(matrix.cols))
    factor = 1
    changed = True
    while changed and live_rows:
        changed = False
        for i in list(live_rows):
            nz = [(j, entries[i][j]) for j in live_cols if entries[i][j]]
            if not nz:
                return 0
            if len(nz) == 1:
                j, v = nz[0]
                factor *= v
                live_rows.discard(i)
                live_cols.discard(j)
                changed = True
        for j in list(live_cols):
            nz = [(i, entries[i][j]) for i in live_rows if entries[i][j]]
            if not nz:
                return 0
            if len(nz) == 1:
                i, v = nz[0]
                factor *= v
                live_rows.discard(i)
                live_cols.discard(j)
                changed = True
    if not live_rows:
        return factor
    core = [
        tuple(entries[i][j] for j in sorted(live_cols)) for i in sorted(live_rows)
    ]
    if len(core) <= max_cols:
        return factor * _ryser_permanent(core)
    if all(v in (0, 1) for row in core for v in row):
        return factor * _count_matchings(core)
    raise ValueError(
        f"matrix core has {len(core)} columns, above the exact evaluation limit {max_cols}"
    )


def matrix_json(matrix: IntegerMatrix) -> dict:
    """JSON-ready dump with labels; entries stay plain integers."""
    return {
        "rows": matrix.rows,
        "cols": matrix.cols,
        "entries": [list(r) for r in matrix.entries],
        "row_labels": [str(m) for m in matrix.row_labels] if matrix.row_labels else None,
        "col_labels": [str(m) for m in matrix.col_labels] if matrix.col_labels else None,
    }


def matrix_grid(matrix: IntegerMatrix) -> str:
    """Plain-text grid of the entries, for debugging."""
    return "\n".join(" ".join(str(v) for v in row) for row in matrix.entries)
