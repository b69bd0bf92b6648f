"""Stabilizer codes in binary symplectic form.

Generators are projective: signs are dropped and a code is identified with
the row space of its generator matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from clifford_nogo import gf2
from clifford_nogo.symplectic import PauliVec, SymplecticMatrix, _sp, pauli_parse, pauli_print


class CodeError(ValueError):
    """Invalid generator set (anticommuting pair, dependent row, bad shape)."""


@dataclass(frozen=True)
class StabilizerCode:
    n: int
    generators: tuple[int, ...]
    name: str = ""
    distance: int | None = field(default=None, compare=False)

    @property
    def k(self) -> int:
        return self.n - len(self.generators)

    @property
    def r(self) -> int:
        return len(self.generators)

    def paulis(self) -> list[PauliVec]:
        return [PauliVec(self.n, g) for g in self.generators]

    def pauli_strings(self) -> list[str]:
        return [pauli_print(p) for p in self.paulis()]

    def row_space(self) -> gf2.RowSpace:
        return gf2.RowSpace(self.generators)

    @classmethod
    def from_paulis(cls, paulis: Sequence[str], name: str = "", distance: int | None = None, n: int | None = None):
        return validate_code([pauli_parse(s) for s in paulis], name=name, distance=distance, n=n)

    def __str__(self) -> str:
        label = self.name or "code"
        d = f",{self.distance}" if self.distance is not None else ""
        return f"{label} [[{self.n},{self.k}{d}]]"


def validate_code(
    S: Iterable[PauliVec | int | str] | np.ndarray,
    n: int | None = None,
    name: str = "",
    distance: int | None = None,
) -> StabilizerCode:
    """Check commutation and independence of the generators.

    ``S`` may be PauliVecs, Pauli strings, bit-packed ints (then ``n`` is
    required), or a binary array with 2n columns.
    """
    rows: list[int] = []
    if isinstance(S, np.ndarray):
        if S.ndim != 2:
            raise CodeError("generator matrix must be 2-dimensional")
        if S.shape[1] % 2:
            raise CodeError(f"generator matrix has an odd number of columns ({S.shape[1]})")
        n = S.shape[1] // 2 if n is None else n
        for row in S:
            rows.append(sum(int(b) % 2 << j for j, b in enumerate(row)))
    else:
        for item in S:
            if isinstance(item, str):
                item = pauli_parse(item)
            if isinstance(item, PauliVec):
                if n is None:
                    n = item.n
                elif item.n != n:
                    raise CodeError(f"generator {pauli_print(item)} has {item.n} qubits, expected {n}")
                rows.append(item.bits)
            else:
                if n is None:
                    raise CodeError("n is required for bit-packed generators")
                rows.append(int(item))
    if n is None:
        raise CodeError("cannot infer n from an empty generator list")
    for i, r in enumerate(rows):
        if r >> (2 * n):
            raise CodeError(f"generator {i + 1} does not fit {n} qubits")
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            if _sp(rows[i], rows[j], n):
                a, b = pauli_print(PauliVec(n, rows[i])), pauli_print(PauliVec(n, rows[j]))
                raise CodeError(f"generators {i + 1} ({a}) and {j + 1} ({b}) anticommute")
    dep = gf2.first_dependent(rows)
    if dep is not None:
        raise CodeError(
            f"generator {dep + 1} ({pauli_print(PauliVec(n, rows[dep]))}) depends on earlier generators"
        )
    if len(rows) > n:
        raise CodeError(f"{len(rows)} independent commuting generators cannot fit {n} qubits")
    return StabilizerCode(n, tuple(rows), name, distance)


# --- code files ----------------------------------------------------------------


def parse_code_text(text: str, source: str = "<code>") -> StabilizerCode:
    """One Pauli string per line; '#' comments; headers ``name=``, ``d=``, ``n=``."""
    name, distance, n = "", None, None
    paulis: list[PauliVec] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" in line:
            key, _, value = (s.strip() for s in line.partition("="))
            try:
                if key == "name":
                    name = value
                elif key == "d":
                    distance = int(value)
                elif key == "n":
                    n = int(value)
                else:
                    raise ValueError(f"unknown header {key!r}")
            except ValueError as exc:
                raise CodeError(f"{source}:{lineno}: {exc}") from None
            continue
        try:
            paulis.append(pauli_parse(line))
        except ValueError as exc:
            raise CodeError(f"{source}:{lineno}: {exc}") from None
    if n is not None and any(p.n != n for p in paulis):
        raise CodeError(f"{source}: generators do not match header n={n}")
    try:
        return validate_code(paulis, n=n, name=name, distance=distance)
    except CodeError as exc:
        raise CodeError(f"{source}: {exc}") from None


def load_code(path: str | Path) -> StabilizerCode:
    path = Path(path)
    return parse_code_text(path.read_text(), source=str(path))


def format_code(code: StabilizerCode) -> str:
    lines = []
    if code.name:
        lines.append(f"name={code.name}")
    if code.distance is not None:
        lines.append(f"d={code.distance}")
    if not code.generators:
        lines.append(f"n={code.n}")
    lines.extend(code.pauli_strings())
    return "\n".join(lines) + "\n"


# --- standard form -----------------------------------------------------------------


@dataclass(frozen=True)
class StandardFormCode:
    """Standard form of a code plus a symplectic completion of its generators.

    ``generators`` are the reduced rows on permuted qubits: position ``i``
    holds original qubit ``permutation[i]``. ``logical_x``, ``logical_z`` and
    ``destabilizers`` are expressed on the original qubits.
    """

    code: StabilizerCode
    permutation: tuple[int, ...]
    generators: tuple[int, ...]
    x_rank: int
    logical_x: tuple[int, ...]
    logical_z: tuple[int, ...]
    destabilizers: tuple[int, ...]

    def to_standard_frame(self, v: int) -> int:
        return permute_qubits(v, self.permutation, self.code.n, inverse=True)

    def standard_code(self) -> StabilizerCode:
        return StabilizerCode(self.code.n, self.generators, self.code.name)


def permute_qubits(v: int, order: Sequence[int], n: int, inverse: bool = False) -> int:
    """Move the content of position ``i`` onto qubit ``order[i]``; ``inverse`` undoes it."""
    out = 0
    for i, q in enumerate(order):
        src, dst = (q, i) if inverse else (i, q)
        out |= (v >> src & 1) << dst
        out |= (v >> (n + src) & 1) << (n + dst)
    return out


def _bits_to_array(rows: Sequence[int], ncols: int) -> np.ndarray:
    return np.array([[r >> j & 1 for j in range(ncols)] for r in rows], dtype=np.uint8).reshape(
        len(rows), ncols
    )


def _array_to_bits(A: np.ndarray) -> tuple[int, ...]:
    return tuple(sum(int(b) << j for j, b in enumerate(row)) for row in A)


def _eliminate(X: np.ndarray, Z: np.ndarray, perm: list[int], rows: range, start: int, block: np.ndarray) -> int:
    """Gauss-Jordan on ``block`` (X or Z) over ``rows`` with qubit swaps at columns >= start.

    Returns the number of pivots; pivot t lands at (rows[t], start + t).
    """
    piv = 0
    for t in rows:
        col = start + piv
        found = None
        for i in range(t, rows.stop):
            nz = np.nonzero(block[i, col:])[0]
            if nz.size:
                found = (i, col + int(nz[0]))
                break
        if found is None:
            break
        i, c = found
        X[[t, i]] = X[[i, t]]
        Z[[t, i]] = Z[[i, t]]
        if c != col:
            X[:, [col, c]] = X[:, [c, col]]
            Z[:, [col, c]] = Z[:, [c, col]]
            perm[col], perm[c] = perm[c], perm[col]
        for i2 in rows:
            if i2 != t and block[i2, col]:
                X[i2] ^= X[t]
                Z[i2] ^= Z[t]
        piv += 1
    return piv


def _standard_form(code: StabilizerCode) -> StandardFormCode:
    n, r, k = code.n, code.r, code.k
    S = _bits_to_array(code.generators, 2 * n)
    X, Z = S[:, :n].copy(), S[:, n:].copy()
    perm = list(range(n))

    r1 = _eliminate(X, Z, perm, range(0, r), 0, X)
    r2 = _eliminate(X, Z, perm, range(r1, r), r1, Z)
    if r1 + r2 != r:
        raise AssertionError("standard form elimination lost rank")

    # X = [I A1 A2 ; 0 0 0],  Z = [B C1 C2 ; D I E], column blocks r1 | r2 | k
    A2 = X[:r1, r:]
    C1 = Z[:r1, r1:r]
    C2 = Z[:r1, r:]
    E = Z[r1:, r:]
    Lx = np.zeros((k, 2 * n), dtype=np.uint8)
    Lz = np.zeros((k, 2 * n), dtype=np.uint8)
    Lx[:, r1:r] = E.T
    Lx[:, r:n] = np.eye(k, dtype=np.uint8)
    Lx[:, n : n + r1] = (E.T.astype(int) @ C1.T.astype(int) + C2.T) % 2
    Lz[:, n : n + r1] = A2.T
    Lz[:, n + r :] = np.eye(k, dtype=np.uint8)

    std_rows = _array_to_bits(np.hstack([X, Z]))
    lx = tuple(permute_qubits(v, perm, n) for v in _array_to_bits(Lx))
    lz = tuple(permute_qubits(v, perm, n) for v in _array_to_bits(Lz))
    destab = _destabilizers(code, lx, lz)
    return StandardFormCode(code, tuple(perm), std_rows, r1, lx, lz, destab)


def _destabilizers(code: StabilizerCode, lx: Sequence[int], lz: Sequence[int]) -> tuple[int, ...]:
    n = code.n
    J = lambda v: (v >> n) | ((v & ((1 << n) - 1)) << n)  # noqa: E731
    # <d, w> = dot(d, J w), so each constraint row is J w
    constraints = [J(s) for s in code.generators] + [J(v) for v in lx] + [J(v) for v in lz]
    out: list[int] = []
    for i in range(code.r):
        rhs = [int(j == i) for j in range(code.r)] + [0] * (2 * code.k)
        d = gf2.solve(constraints, rhs, 2 * n)
        if d is None:
            raise AssertionError("no destabilizer solves the dual conditions")
        out.append(d)
    # make destabilizers mutually commuting; adding S_j only flips <d_i, d_j>
    for i in range(len(out)):
        for j in range(i):
            if _sp(out[i], out[j], n):
                out[i] ^= code.generators[j]
    return tuple(out)


@lru_cache(maxsize=256)
def standard_form(code: StabilizerCode) -> StandardFormCode:
    """Gaussian elimination to standard form, with logical operators and destabilizers."""
    return _standard_form(code)


def encoding_matrix(code: StabilizerCode) -> SymplecticMatrix:
    """Symplectic E sending X_j, Z_j (j < r) to destabilizer j, generator j and
    X_(r+i), Z_(r+i) to logical X_i, Z_i."""
    sf = standard_form(code)
    n, r = code.n, code.r
    cols = [0] * (2 * n)
    for j in range(r):
        cols[j] = sf.destabilizers[j]
        cols[n + j] = code.generators[j]
    for i in range(code.k):
        cols[r + i] = sf.logical_x[i]
        cols[n + r + i] = sf.logical_z[i]
    return SymplecticMatrix.from_columns(n, cols)


# --- gadgets acting on codes -------------------------------------------------------


def _check_dims(M: SymplecticMatrix, code: StabilizerCode) -> None:
    if M.n != code.n:
        raise ValueError(f"gadget acts on {M.n} qubits but the code has {code.n}")


def preserves_code(M: SymplecticMatrix, code: StabilizerCode) -> bool:
    """True iff M maps every generator into the stabilizer row space."""
    _check_dims(M, code)
    space = code.row_space()
    return all(M.apply(s) in space for s in code.generators)


class NotPreservingError(ValueError):
    pass


def logical_action(M: SymplecticMatrix, code: StabilizerCode) -> SymplecticMatrix:
    """The 2k x 2k matrix induced on (logical_x | logical_z) coordinates."""
    _check_dims(M, code)
    if not preserves_code(M, code):
        raise NotPreservingError("gadget does not preserve the code")
    sf = standard_form(code)
    return _logical_action(M, sf)


def _logical_action(M: SymplecticMatrix, sf: StandardFormCode) -> SymplecticMatrix:
    n, k = sf.code.n, sf.code.k
    cols = []
    for rep in sf.logical_x + sf.logical_z:
        image = M.apply(rep)
        c = 0
        for i in range(k):
            c |= _sp(image, sf.logical_z[i], n) << i
            c |= _sp(image, sf.logical_x[i], n) << (k + i)
        cols.append(c)
    try:
        return SymplecticMatrix.from_columns(k, cols)
    except ValueError as exc:
        raise AssertionError(f"logical action is not symplectic: {exc}") from None
