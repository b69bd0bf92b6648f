"""Classification of physical gadgets: folds, ZX-duality folds, automorphisms.

Qubits are 0-based internally; the string parsers (partitions, tau pairs,
cycle notation) take 1-based labels as written by hand.

An automorphism applies its single-qubit Cliffords first and then moves the
content of qubit ``i`` to qubit ``perm[i]``, so its matrix is ``P @ L``.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from clifford_nogo import gf2
from clifford_nogo.numtheory import is_prime
from clifford_nogo.symplectic import M_H, M_S, PauliVec, SymplecticMatrix, _sp, element_order, pauli_print

# the six elements of Sp(2, 2), i.e. single-qubit Cliffords mod Paulis and phases
LOCAL_NAMES = ("I", "H", "S", "HS", "SH", "HSH")
LOCALS: dict[str, SymplecticMatrix] = {
    "I": SymplecticMatrix.identity(1),
    "H": M_H,
    "S": M_S,
    "HS": M_H @ M_S,
    "SH": M_S @ M_H,
    "HSH": M_H @ M_S @ M_H,
}
_LOCAL_BY_ROWS = {m.rows: name for name, m in LOCALS.items()}
LOCAL_ORDERS = {name: element_order(m) for name, m in LOCALS.items()}


def local_name(m: SymplecticMatrix) -> str:
    return _LOCAL_BY_ROWS[m.rows]


def local_mul(a: str, b: str) -> str:
    """Name of the product ``a @ b`` (``b`` acts first)."""
    return local_name(LOCALS[a] @ LOCALS[b])


def local_inv(a: str) -> str:
    return local_name(LOCALS[a].inverse())


# --- building gadgets ------------------------------------------------------------


def embed(M: SymplecticMatrix, qubits: Sequence[int], n: int) -> SymplecticMatrix:
    """Act with ``M`` on ``qubits`` (its qubit a -> qubits[a]) and trivially elsewhere."""
    m = M.n
    if len(qubits) != m or len(set(qubits)) != m or any(not 0 <= q < n for q in qubits):
        raise ValueError(f"need {m} distinct qubits in range({n}), got {list(qubits)}")
    index = [q for q in qubits] + [n + q for q in qubits]
    rows = list(gf2.identity(2 * n))
    for q in qubits:
        rows[q] = 0
        rows[n + q] = 0
    for i, r in enumerate(M.rows):
        v = 0
        for j in range(2 * m):
            if r >> j & 1:
                v |= 1 << index[j]
        rows[index[i]] = v
    return SymplecticMatrix._trusted(n, tuple(rows))


def transversal(locals_: Sequence[str | SymplecticMatrix]) -> SymplecticMatrix:
    n = len(locals_)
    rows = [0] * (2 * n)
    for j, g in enumerate(locals_):
        g = LOCALS[g] if isinstance(g, str) else g
        (a, b), (c, d) = ((g.rows[0] & 1, g.rows[0] >> 1), (g.rows[1] & 1, g.rows[1] >> 1))
        rows[j] = a << j | b << (n + j)
        rows[n + j] = c << j | d << (n + j)
    return SymplecticMatrix._trusted(n, tuple(rows))


def cnot(control: int, target: int, n: int) -> SymplecticMatrix:
    """X_c -> X_c X_t and Z_t -> Z_c Z_t."""
    cols = list(gf2.identity(2 * n))
    cols[control] |= 1 << target
    cols[n + target] |= 1 << (n + control)
    return SymplecticMatrix.from_columns(n, cols)


def permutation_matrix(perm: Sequence[int], n: int | None = None) -> SymplecticMatrix:
    n = len(perm) if n is None else n
    cols = [1 << perm[i] for i in range(n)] + [1 << (n + perm[i]) for i in range(n)]
    return SymplecticMatrix._trusted(n, gf2.transpose(cols, 2 * n))


# --- partitions and folds --------------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        object.__setattr__(self, "blocks", blocks)
        seen: list[int] = [q for b in blocks for q in b]
        if any(not b for b in blocks):
            raise ValueError("empty block in partition")
        if len(seen) != len(set(seen)):
            raise ValueError("partition blocks overlap")
        if set(seen) != set(range(self.n)):
            missing = sorted(set(range(self.n)) - set(seen))
            raise ValueError(f"partition does not cover qubits {[q + 1 for q in missing]}")

    @property
    def fold(self) -> int:
        return max((len(b) for b in self.blocks), default=0)

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(n, tuple((q,) for q in range(n)))

    @classmethod
    def parse(cls, text: str, n: int) -> "Partition":
        """``"1,2/3,4"``: blocks separated by '/', 1-based qubit labels."""
        blocks = []
        for chunk in text.split("/"):
            chunk = chunk.strip()
            if chunk:
                blocks.append(tuple(int(x) - 1 for x in chunk.split(",")))
        return cls(n, tuple(blocks))

    def block_of(self) -> dict[int, int]:
        return {q: i for i, b in enumerate(self.blocks) for q in b}

    def __str__(self) -> str:
        return "/".join(",".join(str(q + 1) for q in b) for b in self.blocks)


def coupled_pairs(M: SymplecticMatrix) -> set[tuple[int, int]]:
    """Pairs i < j whose X/Z rows and columns meet in a nonzero entry."""
    n = M.n
    pairs = set()
    for r, row in enumerate(M.rows):
        qi = r % n
        c = 0
        while row:
            if row & 1:
                qj = c % n
                if qi != qj:
                    pairs.add((min(qi, qj), max(qi, qj)))
            row >>= 1
            c += 1
    return pairs


def is_kfold(M: SymplecticMatrix, part: Partition) -> bool:
    if part.n != M.n:
        raise ValueError(f"partition has {part.n} qubits, gadget has {M.n}")
    where = part.block_of()
    return all(where[i] == where[j] for i, j in coupled_pairs(M))


def min_fold(M: SymplecticMatrix) -> tuple[int, Partition]:
    """Finest partition compatible with M (components of the coupling graph)."""
    n = M.n
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in coupled_pairs(M):
        parent[find(i)] = find(j)
    comps: dict[int, list[int]] = {}
    for q in range(n):
        comps.setdefault(find(q), []).append(q)
    part = Partition(n, tuple(tuple(c) for c in comps.values()))
    return part.fold, part


@dataclass(frozen=True)
class ZXDuality:
    n: int
    tau: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.tau) != list(range(self.n)):
            raise ValueError("tau is not a permutation")
        if any(self.tau[self.tau[i]] != i for i in range(self.n)):
            raise ValueError("tau is not an involution")

    @classmethod
    def parse(cls, text: str, n: int) -> "ZXDuality":
        """``"1-2,3-4"``: swapped pairs, 1-based; unlisted qubits are fixed."""
        tau = list(range(n))
        for chunk in filter(None, (c.strip() for c in text.split(","))):
            a, b = (int(x) - 1 for x in chunk.split("-"))
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"pair {chunk!r} out of range for {n} qubits")
            tau[a], tau[b] = b, a
        return cls(n, tuple(tau))

    def partition(self) -> Partition:
        blocks = {tuple(sorted({i, self.tau[i]})) for i in range(self.n)}
        return Partition(self.n, tuple(blocks))


def is_fold_transversal(M: SymplecticMatrix, tau: ZXDuality) -> bool:
    return is_kfold(M, tau.partition())


# --- automorphisms -----------------------------------------------------------------


def cycles(perm: Sequence[int]) -> list[list[int]]:
    seen = set()
    out = []
    for start in range(len(perm)):
        if start in seen:
            continue
        cyc = []
        x = start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = perm[x]
        out.append(cyc)
    return out


def parse_cycles(text: str, n: int) -> tuple[int, ...]:
    """Cycle notation with 1-based labels, e.g. ``"(1 2 3)(4 5)"``; ``"()"`` is the identity."""
    perm = list(range(n))
    body = text.strip()
    if not re.fullmatch(r"(\(\s*[\d\s,]*\))*", body):
        raise ValueError(f"malformed cycle notation: {text!r}")
    used: set[int] = set()
    for group in re.findall(r"\(([^)]*)\)", body):
        labels = [int(x) - 1 for x in re.split(r"[\s,]+", group.strip()) if x]
        for q in labels:
            if not 0 <= q < n:
                raise ValueError(f"qubit {q + 1} out of range for {n} qubits")
            if q in used:
                raise ValueError(f"qubit {q + 1} appears in two cycles")
            used.add(q)
        for a, b in zip(labels, labels[1:] + labels[:1]):
            perm[a] = b
    return tuple(perm)


def format_cycles(perm: Sequence[int]) -> str:
    parts = [c for c in cycles(perm) if len(c) > 1]
    if not parts:
        return "()"
    return "".join("(" + " ".join(str(q + 1) for q in c) + ")" for c in parts)


@dataclass(frozen=True)
class Automorphism:
    """Single-qubit Cliffords ``locals`` followed by the qubit permutation ``perm``."""

    n: int
    perm: tuple[int, ...]
    locals: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "perm", tuple(self.perm))
        object.__setattr__(self, "locals", tuple(self.locals))
        if sorted(self.perm) != list(range(self.n)):
            raise ValueError("perm is not a bijection of the qubits")
        if len(self.locals) != self.n:
            raise ValueError(f"expected {self.n} local gates, got {len(self.locals)}")
        bad = [g for g in self.locals if g not in LOCALS]
        if bad:
            raise ValueError(f"unknown local gates {bad}; choose from {LOCAL_NAMES}")

    @classmethod
    def parse(cls, cycle_text: str, locals_: Sequence[str]) -> "Automorphism":
        n = len(locals_)
        return cls(n, parse_cycles(cycle_text, n), tuple(locals_))

    @classmethod
    def transversal(cls, locals_: Sequence[str]) -> "Automorphism":
        return cls(len(locals_), tuple(range(len(locals_))), tuple(locals_))

    def matrix(self) -> SymplecticMatrix:
        return aut_to_symplectic(self)

    def __matmul__(self, other: "Automorphism") -> "Automorphism":
        """Composite whose matrix is ``self.matrix() @ other.matrix()``."""
        if other.n != self.n:
            raise ValueError("qubit count mismatch")
        # P_a L_a P_b L_b = P_a P_b (P_b^-1 L_a P_b) L_b
        locs = tuple(local_mul(self.locals[other.perm[i]], other.locals[i]) for i in range(self.n))
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
        return Automorphism(self.n, perm, locs)

    def inverse(self) -> "Automorphism":
        inv = [0] * self.n
        for i, j in enumerate(self.perm):
            inv[j] = i
        # (P L)^-1 = L^-1 P^-1 = P^-1 (P L^-1 P^-1)
        locs = tuple(local_inv(self.locals[inv[j]]) for j in range(self.n))
        return Automorphism(self.n, tuple(inv), locs)

    def cycles(self) -> list[list[int]]:
        return cycles(self.perm)

    def cycle_product(self, cyc: Sequence[int]) -> SymplecticMatrix:
        """Local gate accumulated by a qubit travelling once around ``cyc``."""
        acc = SymplecticMatrix.identity(1)
        for q in cyc:
            acc = LOCALS[self.locals[q]] @ acc
        return acc

    def __str__(self) -> str:
        return f"{format_cycles(self.perm)} locals=[{' '.join(self.locals)}]"


def aut_to_symplectic(a: Automorphism) -> SymplecticMatrix:
    return permutation_matrix(a.perm) @ transversal(a.locals)


def combinatorial_order(a: Automorphism) -> int:
    """lcm over cycles of (cycle length) * (order of the accumulated local gate)."""
    out = 1
    for cyc in a.cycles():
        out = math.lcm(out, len(cyc) * element_order(a.cycle_product(cyc)))
    return out


def aut_order(a: Automorphism) -> int:
    order = element_order(aut_to_symplectic(a))
    combinatorial = combinatorial_order(a)
    assert order == combinatorial, f"order mismatch: matrix {order}, cycles {combinatorial}"
    return order


def _check_large_prime(p: int) -> None:
    if not is_prime(p) or p <= 3:
        raise ValueError(f"p must be a prime > 3, got {p}")


def is_p_local(a: Automorphism, p: int) -> bool:
    """Every nontrivial cycle has length p and fixed qubits carry the identity."""
    _check_large_prime(p)
    for cyc in a.cycles():
        if len(cyc) == 1:
            if a.locals[cyc[0]] != "I":
                return False
        elif len(cyc) != p:
            return False
    return True


def conjugate_to_permutation(a: Automorphism) -> tuple[Automorphism, tuple[int, ...]]:
    """Transversal V with V^-1 A V equal to the bare permutation of A.

    Along each cycle c -> perm[c] -> ..., V is fixed by v_c = I and
    v_perm[x] = l_x v_x; this closes up exactly when the local gates
    multiply to the identity around the cycle.
    """
    lengths = {len(c) for c in a.cycles() if len(c) > 1}
    if len(lengths) > 1:
        raise ValueError(f"cycles of different lengths {sorted(lengths)}; not p-local")
    if lengths:
        (p,) = lengths
        if not is_prime(p) or p <= 3 or not is_p_local(a, p):
            raise ValueError(f"automorphism {a} is not p-local for a prime p > 3")
    elif any(g != "I" for g in a.locals):
        raise ValueError(f"automorphism {a} acts on fixed qubits; not p-local")

    v = ["I"] * a.n
    for cyc in a.cycles():
        for x in cyc[:-1]:
            v[a.perm[x]] = local_mul(a.locals[x], v[x])
        if local_mul(a.locals[cyc[-1]], v[cyc[-1]]) != "I":
            raise ValueError(
                f"local gates around cycle {[q + 1 for q in cyc]} do not multiply to the identity; "
                "the order is not p"
            )
    V = Automorphism.transversal(v)
    Vm = V.matrix()
    conj = Vm.inverse() @ aut_to_symplectic(a) @ Vm
    assert conj == permutation_matrix(a.perm), "conjugation did not produce a bare permutation"
    return V, a.perm


# --- the Bell gate ---------------------------------------------------------------


def bell_matrix() -> SymplecticMatrix:
    return SymplecticMatrix.from_rows(["1101", "0101", "1010", "1110"])


IZ = 1 << 3  # I (x) Z in the (a | b) layout on two qubits


def bell_anticommutation_check() -> bool:
    """Each power B^m, m = 1..4, sends I (x) Z to a Pauli anticommuting with it."""
    B = bell_matrix()
    img = IZ
    ok = True
    for _ in range(4):
        img = B.apply(img)
        ok &= _sp(img, IZ, 2) == 1
    return bool(ok)


def conjugation_table(M: SymplecticMatrix) -> dict[str, str]:
    """Image of each single-qubit X and Z basis Pauli, as Pauli strings."""
    n = M.n
    out = {}
    for q in range(n):
        for label, bit in (("X", q), ("Z", n + q)):
            src = PauliVec(n, 1 << bit)
            out[pauli_print(src)] = pauli_print(M @ src)
    return out


def all_automorphisms(n: int, perms: Iterable[Sequence[int]] | None = None) -> Iterable[Automorphism]:
    perms = itertools.permutations(range(n)) if perms is None else perms
    for perm in perms:
        for locs in itertools.product(LOCAL_NAMES, repeat=n):
            yield Automorphism(n, tuple(perm), locs)
