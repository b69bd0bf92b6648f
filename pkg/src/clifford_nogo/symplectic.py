"""Projective Paulis as F_2 vectors and projective Cliffords as Sp(2n, 2).

Layout is ``(a | b)``: bit ``j`` is the X exponent on qubit ``j`` and bit
``n + j`` the Z exponent. Matrices act on column vectors, so the image of a
Pauli ``v`` under ``M`` is ``M @ v`` and column ``j`` of ``M`` is the image of
the j-th basis Pauli.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import ceil, log2
from typing import Sequence

from clifford_nogo import gf2
from clifford_nogo.numtheory import factorize, merge_factorizations, multiplicative_order

_PAULI_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}


@dataclass(frozen=True)
class PauliVec:
    """Projective n-qubit Pauli; phases and signs are not tracked."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n < 0 or self.bits >> (2 * self.n):
            raise ValueError(f"bits do not fit a {self.n}-qubit Pauli")

    @property
    def x(self) -> int:
        return self.bits & ((1 << self.n) - 1)

    @property
    def z(self) -> int:
        return self.bits >> self.n

    @classmethod
    def from_xz(cls, x: int, z: int, n: int) -> "PauliVec":
        return cls(n, x | (z << n))

    @classmethod
    def from_string(cls, s: str) -> "PauliVec":
        return pauli_parse(s)

    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    def __mul__(self, other: "PauliVec") -> "PauliVec":
        if other.n != self.n:
            raise ValueError(f"qubit count mismatch: {self.n} vs {other.n}")
        return PauliVec(self.n, self.bits ^ other.bits)

    def to_bitstring(self) -> str:
        return "".join(str(self.bits >> j & 1) for j in range(2 * self.n))

    def __str__(self) -> str:
        return pauli_print(self)


def pauli_parse(s: str) -> PauliVec:
    n = len(s)
    x = z = 0
    for j, ch in enumerate(s):
        try:
            a, b = _PAULI_BITS[ch.upper()]
        except KeyError:
            raise ValueError(f"invalid Pauli character {ch!r} at position {j + 1} in {s!r}") from None
        x |= a << j
        z |= b << j
    return PauliVec.from_xz(x, z, n)


def pauli_print(v: PauliVec) -> str:
    out = []
    for j in range(v.n):
        out.append("IXZY"[(v.x >> j & 1) | (v.z >> j & 1) << 1])
    return "".join(out)


def _sp(u: int, v: int, n: int) -> int:
    mask = (1 << n) - 1
    return ((u & mask) & (v >> n) ^ (u >> n) & (v & mask)).bit_count() & 1


def symplectic_product(u: PauliVec, v: PauliVec) -> int:
    """``a.b' + b.a' mod 2``; zero exactly when the Paulis commute."""
    if u.n != v.n:
        raise ValueError(f"qubit count mismatch: {u.n} vs {v.n}")
    return _sp(u.bits, v.bits, u.n)


def J_rows(n: int) -> tuple[int, ...]:
    return tuple(1 << (n + i) for i in range(n)) + tuple(1 << i for i in range(n))


def _swap_halves(v: int, n: int) -> int:
    mask = (1 << n) - 1
    return (v >> n) | ((v & mask) << n)


def _rows_from_nested(M) -> tuple[int, ...]:
    rows = []
    for r in M:
        if isinstance(r, str):
            r = [int(c) for c in r]
        v = 0
        for j, bit in enumerate(r):
            if int(bit) & 1:
                v |= 1 << j
        rows.append(v)
    return tuple(rows)


def _rows_symplectic(rows: Sequence[int], n: int) -> bool:
    # M^T J M = J  <=>  columns c_i, c_j satisfy <c_i, c_j> = J[i][j]
    cols = gf2.transpose(rows, 2 * n)
    for i in range(2 * n):
        for j in range(i + 1, 2 * n):
            want = 1 if j == i + n else 0
            if _sp(cols[i], cols[j], n) != want:
                return False
    return True


@dataclass(frozen=True, eq=True)
class SymplecticMatrix:
    """A 2n x 2n binary matrix with ``M^T J M = J``, checked on construction."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        if len(self.rows) != 2 * self.n or any(r >> (2 * self.n) for r in self.rows):
            raise ValueError(f"expected {2 * self.n} rows of {2 * self.n} bits")
        if not _rows_symplectic(self.rows, self.n):
            raise ValueError("matrix does not satisfy M^T J M = J")

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> "SymplecticMatrix":
        # products/inverses of symplectic matrices need no re-check
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "rows", rows)
        return obj

    @classmethod
    def identity(cls, n: int) -> "SymplecticMatrix":
        return cls._trusted(n, gf2.identity(2 * n))

    @classmethod
    def J(cls, n: int) -> "SymplecticMatrix":
        return cls._trusted(n, J_rows(n))

    @classmethod
    def from_rows(cls, M) -> "SymplecticMatrix":
        """From nested 0/1 lists or '0'/'1' strings, row-major."""
        rows = _rows_from_nested(M)
        dim = len(rows)
        if dim % 2:
            raise ValueError(f"odd dimension {dim}")
        return cls(dim // 2, rows)

    @classmethod
    def from_columns(cls, n: int, cols: Sequence[int]) -> "SymplecticMatrix":
        return cls(n, gf2.transpose(cols, 2 * n))

    @classmethod
    def from_text(cls, text: str) -> "SymplecticMatrix":
        return parse_matrix_text(text)

    @property
    def dim(self) -> int:
        return 2 * self.n

    def tolist(self) -> list[list[int]]:
        return [[r >> j & 1 for j in range(self.dim)] for r in self.rows]

    def row_strings(self) -> list[str]:
        return ["".join(str(r >> j & 1) for j in range(self.dim)) for r in self.rows]

    def to_text(self) -> str:
        return "\n".join(self.row_strings())

    def columns(self) -> tuple[int, ...]:
        return gf2.transpose(self.rows, self.dim)

    def transpose_rows(self) -> tuple[int, ...]:
        return gf2.transpose(self.rows, self.dim)

    def key(self) -> int:
        """Row-major bit packing; equal keys iff equal matrices of the same size."""
        k = 0
        w = self.dim
        for i, r in enumerate(self.rows):
            k |= r << (i * w)
        return k

    def apply(self, v: int) -> int:
        return gf2.matvec(self.rows, v)

    def __matmul__(self, other):
        if isinstance(other, PauliVec):
            if other.n != self.n:
                raise ValueError(f"qubit count mismatch: {self.n} vs {other.n}")
            return PauliVec(self.n, self.apply(other.bits))
        if isinstance(other, SymplecticMatrix):
            if other.n != self.n:
                raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
            return SymplecticMatrix._trusted(self.n, gf2.matmul(self.rows, other.rows))
        return NotImplemented

    def inverse(self) -> "SymplecticMatrix":
        # M^-1 = J M^T J; J on either side just swaps the X and Z halves
        n = self.n
        t = gf2.transpose(self.rows, self.dim)
        rows = t[n:] + t[:n]
        rows = tuple(_swap_halves(r, n) for r in rows)
        return SymplecticMatrix._trusted(n, rows)

    def __pow__(self, e: int) -> "SymplecticMatrix":
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = SymplecticMatrix.identity(self.n)
        while e:
            if e & 1:
                result = result @ base
            e >>= 1
            if e:
                base = base @ base
        return result

    def is_identity(self) -> bool:
        return self.rows == gf2.identity(self.dim)

    def order(self) -> int:
        return element_order(self)

    def __str__(self) -> str:
        return self.to_text()


def parse_matrix_text(text: str) -> SymplecticMatrix:
    """Parse 2n lines of 2n '0'/'1' characters; blank and '#' lines are skipped."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        for col, ch in enumerate(line, start=1):
            if ch not in "01":
                raise ValueError(f"line {lineno}, column {col}: expected '0' or '1', got {ch!r}")
        rows.append((lineno, line))
    if not rows:
        raise ValueError("empty matrix")
    dim = len(rows)
    for lineno, line in rows:
        if len(line) != dim:
            raise ValueError(f"line {lineno}: expected {dim} characters, got {len(line)}")
    if dim % 2:
        raise ValueError(f"odd dimension {dim}")
    return SymplecticMatrix.from_rows([line for _, line in rows])


def is_symplectic(M) -> bool:
    """True iff the square binary matrix ``M`` satisfies ``M^T J M = J``."""
    if isinstance(M, SymplecticMatrix):
        return _rows_symplectic(M.rows, M.n)
    rows = _rows_from_nested(M)
    dim = len(rows)
    widths = {len(r) for r in M}
    if widths and widths != {dim}:
        raise ValueError("matrix is not square")
    if dim % 2:
        raise ValueError(f"odd dimension {dim}")
    return _rows_symplectic(rows, dim // 2)


def mat_mul(A: SymplecticMatrix, B: SymplecticMatrix) -> SymplecticMatrix:
    return A @ B


def mat_pow(A: SymplecticMatrix, e: int) -> SymplecticMatrix:
    return A**e


def mat_inv(A):
    """Inverse over F_2.

    Symplectic input uses ``J M^T J`` (verified); any other square matrix
    falls back to Gauss-Jordan and is returned as nested lists.
    """
    if isinstance(A, SymplecticMatrix):
        inv = A.inverse()
        if not (inv @ A).is_identity():
            raise ArithmeticError("symplectic inverse identity failed")
        return inv
    rows = _rows_from_nested(A)
    n = len(rows)
    inv = gf2.inverse(rows, n)
    return [[r >> j & 1 for j in range(n)] for r in inv]


@lru_cache(maxsize=None)
def group_order(k: int) -> int:
    """|Sp(2k, 2)| = 2^(k^2) * prod_{i=1..k} (4^i - 1)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    out = 2 ** (k * k)
    for i in range(1, k + 1):
        out *= 4**i - 1
    return out


@lru_cache(maxsize=None)
def group_order_factors(k: int) -> dict[int, int]:
    parts = [((2, k * k),)]
    for i in range(1, k + 1):
        # 4^i - 1 = (2^i - 1)(2^i + 1), both small enough for trial division
        if i > 1:
            parts.append(factorize(2**i - 1))
        parts.append(factorize(2**i + 1))
    return merge_factorizations(*parts)


def element_order(M: SymplecticMatrix) -> int:
    """Smallest r >= 1 with M^r = I.

    The candidate exponent is |Sp(2n, 2)| (Lagrange), with the power of two
    capped at the first 2^a >= 2n: the unipotent part I + N of M satisfies
    (I + N)^(2^a) = I + N^(2^a) = I.
    """
    if M.n == 0:
        return 1
    exponent = dict(group_order_factors(M.n))
    exponent[2] = min(exponent[2], ceil(log2(2 * M.n)))
    return multiplicative_order(M, pow, SymplecticMatrix.is_identity, exponent)


M_H = SymplecticMatrix(1, (0b10, 0b01))
M_S = SymplecticMatrix(1, (0b01, 0b11))
