"""Exhaustive searches over transversal gadgets and code automorphisms.

A Pauli ``v`` lies in the stabilizer row space iff it commutes with every
vector of the symplectic complement ``S^perp`` (the normalizer). For a
transversal gadget that condition splits qubit by qubit: each choice of
local gate on qubit ``j`` contributes a fixed bit mask over all
(generator, normalizer vector) pairs, and the gadget preserves the code iff
the masks XOR to zero. The 6^n candidates are then enumerated by matching
the two halves of the qubits (meet in the middle).
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from clifford_nogo import gf2
from clifford_nogo.codes import StabilizerCode, _logical_action, standard_form
from clifford_nogo.constructions import construct_prime_order, primitive_prime_divisor
from clifford_nogo.gadgets import LOCAL_NAMES, LOCALS, Automorphism, aut_to_symplectic, transversal
from clifford_nogo.symplectic import SymplecticMatrix, _sp, element_order, group_order

MAX_TRANSVERSAL_N = 8
MAX_PERMUTATION_N = 6
MAX_FULL_AUTOMORPHISM_N = 5
DEFAULT_CAP = 2_000_000


class FeasibilityError(ValueError):
    pass


@dataclass
class GroupClosure:
    k: int
    elements: dict[int, SymplecticMatrix]
    generators: tuple[SymplecticMatrix, ...]
    complete: bool
    _orders: dict[int, int] | None = field(default=None, repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, M: SymplecticMatrix) -> bool:
        return M.n == self.k and M.key() in self.elements

    def __iter__(self):
        return iter(self.elements.values())

    def orders(self) -> dict[int, int]:
        if self._orders is None:
            self._orders = {key: element_order(M) for key, M in self.elements.items()}
        return self._orders

    def order_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.orders().values()).items()))

    def key_set(self) -> frozenset[int]:
        return frozenset(self.elements)


def generate_group(
    gens: Sequence[SymplecticMatrix], cap: int = DEFAULT_CAP, k: int | None = None
) -> GroupClosure:
    """Breadth-first closure of ``gens`` under right multiplication.

    In a finite group the generated monoid is already the generated group.
    Stops with ``complete=False`` once ``cap`` elements are found.
    """
    gens = tuple(gens)
    dims = {g.n for g in gens}
    if len(dims) > 1:
        raise ValueError(f"generators of mixed dimensions {sorted(2 * d for d in dims)}")
    if k is None:
        if not gens:
            raise ValueError("k is required when there are no generators")
        k = gens[0].n
    elif dims and dims != {k}:
        raise ValueError(f"generators act on {dims.pop()} qubits, expected {k}")
    identity = SymplecticMatrix.identity(k)
    elements = {identity.key(): identity}
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for h in gens:
            x = g @ h
            key = x.key()
            if key not in elements:
                if len(elements) >= cap:
                    return GroupClosure(k, elements, gens, complete=False)
                elements[key] = x
                queue.append(x)
    return GroupClosure(k, elements, gens, complete=True)


def is_full_clifford(gc: GroupClosure, k: int) -> bool:
    if not gc.complete:
        raise ValueError("closure is incomplete (cap reached); cannot compare group orders")
    return gc.k == k and len(gc) == group_order(k)


# --- enumeration engine --------------------------------------------------------------


def normalizer_basis(code: StabilizerCode) -> list[int]:
    """Basis of the symplectic complement of the stabilizer row space."""
    n = code.n
    swap = lambda v: (v >> n) | ((v & ((1 << n) - 1)) << n)  # noqa: E731
    return gf2.nullspace([swap(s) for s in code.generators], 2 * n)


def _qubit_masks(code: StabilizerCode, checks: Sequence[int], allowed: Sequence[str]) -> list[list[int]]:
    n = code.n
    nc = len(checks)
    masks = []
    for j in range(n):
        per_gate = []
        for name in allowed:
            g = LOCALS[name]
            m = 0
            for si, s in enumerate(code.generators):
                img = g.apply((s >> j & 1) | (s >> (n + j) & 1) << 1)
                for ci, c in enumerate(checks):
                    cx, cz = c >> j & 1, c >> (n + j) & 1
                    if ((img & 1) & cz) ^ ((img >> 1) & cx):
                        m |= 1 << (si * nc + ci)
            per_gate.append(m)
        masks.append(per_gate)
    return masks


def _half_table(masks: Sequence[list[int]], qubits: Sequence[int]) -> dict[int, list[tuple[int, ...]]]:
    table: dict[int, list[tuple[int, ...]]] = {}
    for choice in itertools.product(*(range(len(masks[q])) for q in qubits)):
        acc = 0
        for q, gi in zip(qubits, choice):
            acc ^= masks[q][gi]
        table.setdefault(acc, []).append(choice)
    return table


def _solve_masks(masks: Sequence[list[int]]) -> list[tuple[int, ...]]:
    n = len(masks)
    left, right = list(range(n // 2)), list(range(n // 2, n))
    lt = _half_table(masks, left)
    rt = _half_table(masks, right)
    out = []
    for value, lchoices in lt.items():
        for rc in rt.get(value, ()):
            for lc in lchoices:
                out.append(lc + rc)
    out.sort()
    return out


def preserving_transversals(code: StabilizerCode, allowed: Sequence[str] = LOCAL_NAMES) -> list[tuple[str, ...]]:
    """All local-gate tuples whose transversal gadget preserves the code."""
    checks = normalizer_basis(code)
    masks = _qubit_masks(code, checks, allowed)
    return [tuple(allowed[g] for g in sol) for sol in _solve_masks(masks)]


def preserving_automorphisms(
    code: StabilizerCode,
    perms: Iterable[Sequence[int]] | None = None,
    allowed: Sequence[str] | None = None,
) -> list[Automorphism]:
    """All automorphisms ``P @ L`` (locals drawn from ``allowed``) that preserve the code.

    Uses <P L s, c> = <L s, P^-1 c>: for each permutation the normalizer
    vectors are pulled back and the transversal search is rerun.
    """
    n = code.n
    if perms is None:
        if n > MAX_PERMUTATION_N:
            raise FeasibilityError(
                f"all {n}! permutations is too many (n <= {MAX_PERMUTATION_N}); pass an explicit permutation list"
            )
        perms = itertools.permutations(range(n))
    if allowed is None:
        if n > MAX_FULL_AUTOMORPHISM_N:
            raise FeasibilityError(
                f"6^{n} local gates per permutation is too many (n <= {MAX_FULL_AUTOMORPHISM_N}); "
                "restrict the local gates, e.g. allowed=['I']"
            )
        allowed = LOCAL_NAMES
    checks = normalizer_basis(code)
    out = []
    for perm in perms:
        perm = tuple(perm)
        if sorted(perm) != list(range(n)):
            raise ValueError(f"{perm} is not a permutation of {n} qubits")
        pulled = [_pull_back(c, perm, n) for c in checks]
        masks = _qubit_masks(code, pulled, allowed)
        for sol in _solve_masks(masks):
            out.append(Automorphism(n, perm, tuple(allowed[g] for g in sol)))
    return out


def _pull_back(c: int, perm: Sequence[int], n: int) -> int:
    # (P^-1 c)_i = c_perm[i]
    out = 0
    for i, q in enumerate(perm):
        out |= (c >> q & 1) << i
        out |= (c >> (n + q) & 1) << (n + i)
    return out


def _logical_closure(code: StabilizerCode, gadgets: Iterable[SymplecticMatrix]) -> GroupClosure:
    sf = standard_form(code)
    images: dict[int, SymplecticMatrix] = {}
    for M in gadgets:
        L = _logical_action(M, sf)
        images.setdefault(L.key(), L)
    gens = tuple(images.values())
    gc = generate_group(gens, k=code.k)
    if not gc.complete or len(gc) != len(images):
        raise AssertionError(
            f"logical images of preserving gadgets are not closed ({len(images)} images, closure {len(gc)})"
        )
    return gc


def transversal_logical_group(code: StabilizerCode) -> GroupClosure:
    if code.n > MAX_TRANSVERSAL_N:
        raise FeasibilityError(
            f"6^{code.n} transversal gadgets is too many (n <= {MAX_TRANSVERSAL_N}); "
            "use generate_group on chosen gadgets instead"
        )
    return _logical_closure(code, (transversal(t) for t in preserving_transversals(code)))


def automorphism_logical_group(
    code: StabilizerCode,
    perms: Iterable[Sequence[int]] | None = None,
    allowed: Sequence[str] | None = None,
) -> GroupClosure:
    auts = preserving_automorphisms(code, perms, allowed)
    return _logical_closure(code, (aut_to_symplectic(a) for a in auts))


# --- no-go checks --------------------------------------------------------------------


def logical_z_basis(k: int) -> list[int]:
    return [1 << (k + i) for i in range(k)]


def flips_some_logical_z(g: SymplecticMatrix) -> bool:
    """True if g sends some logical-Z basis vector to a Pauli anticommuting with it."""
    return any(_sp(g.apply(z), z, g.n) for z in logical_z_basis(g.n))


@dataclass
class NoGoReport:
    code: str
    n: int
    k: int
    mode: str
    group_size: int
    clifford_order: int
    prime: int
    order_histogram: dict[int, int]
    target: SymplecticMatrix
    checks: dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "n": self.n,
            "k": self.k,
            "mode": self.mode,
            "group_size": self.group_size,
            "clifford_order": self.clifford_order,
            "primitive_prime_divisor": self.prime,
            "order_histogram": {str(o): c for o, c in self.order_histogram.items()},
            "unrealizable_target": self.target.row_strings(),
            "checks": dict(self.checks),
            "passed": self.passed,
        }


def no_go_witness(code: StabilizerCode, mode: str = "transversal") -> NoGoReport:
    """Enumerate the logical group and compare it with the no-go predictions."""
    k = code.k
    if k < 2:
        raise ValueError(f"the no-go statements need k >= 2 logical qubits, this code has k={k}")
    if mode == "transversal":
        gc = transversal_logical_group(code)
    elif mode == "automorphism":
        gc = automorphism_logical_group(code)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    p = primitive_prime_divisor(k)
    hist = gc.order_histogram()
    full = group_order(k)
    checks = {
        "proper_subgroup": len(gc) < full,
        "lagrange_divides": full % len(gc) == 0,
    }
    if mode == "transversal":
        checks["no_element_of_order_p"] = p not in hist
    else:
        if k == 2:
            checks["no_element_of_order_5"] = 5 not in hist
        orders = gc.orders()
        checks["no_bell_like_order_5"] = not any(
            orders[key] == 5 and flips_some_logical_z(M) for key, M in gc.elements.items()
        )
        perms_only = automorphism_logical_group(code, allowed=["I"])
        checks["permutations_keep_logical_z_commuting"] = not any(
            flips_some_logical_z(g) for g in perms_only
        )
    return NoGoReport(
        code=code.name or "code",
        n=code.n,
        k=k,
        mode=mode,
        group_size=len(gc),
        clifford_order=full,
        prime=p,
        order_histogram=hist,
        target=construct_prime_order(k).matrix,
        checks=checks,
    )
