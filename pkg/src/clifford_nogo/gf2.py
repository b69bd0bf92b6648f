"""Linear algebra over F_2 on bit-packed rows.

A row is a Python int; bit ``j`` holds column ``j``. Matrices are sequences
of rows plus an explicit column count where it matters.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def parity(x: int) -> int:
    return x.bit_count() & 1


def dot(u: int, v: int) -> int:
    return (u & v).bit_count() & 1


def matmul(A: Sequence[int], B: Sequence[int]) -> tuple[int, ...]:
    """Product A @ B; row i of the result is the XOR of the rows of B selected by A[i]."""
    out = []
    for a in A:
        acc = 0
        j = 0
        while a:
            if a & 1:
                acc ^= B[j]
            a >>= 1
            j += 1
        out.append(acc)
    return tuple(out)


def matvec(A: Sequence[int], v: int) -> int:
    out = 0
    for i, a in enumerate(A):
        if (a & v).bit_count() & 1:
            out |= 1 << i
    return out


def transpose(A: Sequence[int], ncols: int) -> tuple[int, ...]:
    out = [0] * ncols
    for i, a in enumerate(A):
        j = 0
        while a:
            if a & 1:
                out[j] |= 1 << i
            a >>= 1
            j += 1
    return tuple(out)


def identity(n: int) -> tuple[int, ...]:
    return tuple(1 << i for i in range(n))


class RowSpace:
    """Incremental echelon basis; each stored row is keyed by its lowest set bit."""

    def __init__(self, rows: Iterable[int] = ()):
        self.pivots: dict[int, int] = {}
        for r in rows:
            self.add(r)

    def reduce(self, v: int) -> int:
        while v:
            low = v & -v
            row = self.pivots.get(low)
            if row is None:
                return v
            v ^= row
        return 0

    def add(self, v: int) -> bool:
        """Insert ``v``; return False if it was already in the span."""
        v = self.reduce(v)
        if not v:
            return False
        self.pivots[v & -v] = v
        return True

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    def __len__(self) -> int:
        return len(self.pivots)


def rank(rows: Iterable[int]) -> int:
    return len(RowSpace(rows))


def first_dependent(rows: Sequence[int]) -> int | None:
    """Index of the first row lying in the span of the rows before it."""
    space = RowSpace()
    for i, r in enumerate(rows):
        if not space.add(r):
            return i
    return None


def solve(constraints: Sequence[int], rhs: Sequence[int], ncols: int) -> int | None:
    """Some x with ``dot(constraints[i], x) == rhs[i]`` for all i, or None."""
    aug = [c | (b << ncols) for c, b in zip(constraints, rhs)]
    pivot_cols = []
    row = 0
    for col in range(ncols):
        bit = 1 << col
        sel = next((i for i in range(row, len(aug)) if aug[i] & bit), None)
        if sel is None:
            continue
        aug[row], aug[sel] = aug[sel], aug[row]
        for i in range(len(aug)):
            if i != row and aug[i] & bit:
                aug[i] ^= aug[row]
        pivot_cols.append(col)
        row += 1
    for r in aug[row:]:
        if r >> ncols:
            return None
    x = 0
    for i, col in enumerate(pivot_cols):
        if aug[i] >> ncols & 1:
            x |= 1 << col
    return x


def nullspace(constraints: Sequence[int], ncols: int) -> list[int]:
    """Basis of {x : dot(c, x) = 0 for every c}."""
    rows = list(constraints)
    pivot_cols = []
    r = 0
    for col in range(ncols):
        bit = 1 << col
        sel = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        pivot_cols.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in set(pivot_cols)]
    basis = []
    for f in free:
        x = 1 << f
        for i, col in enumerate(pivot_cols):
            if rows[i] >> f & 1:
                x |= 1 << col
        basis.append(x)
    return basis


def inverse(A: Sequence[int], n: int) -> tuple[int, ...]:
    """Gauss-Jordan inverse of an n x n matrix; raises on singular input."""
    rows = [a | (1 << (n + i)) for i, a in enumerate(A)]
    for col in range(n):
        bit = 1 << col
        sel = next((i for i in range(col, n) if rows[i] & bit), None)
        if sel is None:
            raise ArithmeticError("matrix is singular over F_2")
        rows[col], rows[sel] = rows[sel], rows[col]
        for i in range(n):
            if i != col and rows[i] & bit:
                rows[i] ^= rows[col]
    return tuple(r >> n for r in rows)
