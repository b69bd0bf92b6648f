"""Shared strategies and brute-force oracles for the test suite."""

from __future__ import annotations

import itertools
from pathlib import Path

import numpy as np
from hypothesis import strategies as st

import clifford_nogo
from clifford_nogo.codes import load_code
from clifford_nogo.gadgets import LOCAL_NAMES, cnot, embed, transversal
from clifford_nogo.symplectic import M_H, M_S, SymplecticMatrix

DATA = Path(clifford_nogo.__file__).parent / "data"
CORPUS = {p.stem: p for p in sorted(DATA.glob("*.txt"))}


def corpus_code(name: str):
    return load_code(CORPUS[name])


def random_clifford(n: int, ops) -> SymplecticMatrix:
    M = SymplecticMatrix.identity(n)
    for kind, a, b in ops:
        if kind == 0:
            g = embed(M_H, [a % n], n)
        elif kind == 1:
            g = embed(M_S, [a % n], n)
        elif n > 1 and a % n != b % n:
            g = cnot(a % n, b % n, n)
        else:
            continue
        M = g @ M
    return M


_op = st.tuples(st.integers(0, 2), st.integers(0, 63), st.integers(0, 63))


@st.composite
def cliffords(draw, n=None, max_n=4, max_len=40):
    if n is None:
        n = draw(st.integers(1, max_n))
    ops = draw(st.lists(_op, max_size=max_len))
    return random_clifford(n, ops)


@st.composite
def transversals(draw, n):
    return transversal(draw(st.lists(st.sampled_from(LOCAL_NAMES), min_size=n, max_size=n)))


# --- brute-force oracles ----------------------------------------------------------


def J_np(n: int) -> np.ndarray:
    J = np.zeros((2 * n, 2 * n), dtype=np.int64)
    J[:n, n:] = np.eye(n, dtype=np.int64)
    J[n:, :n] = np.eye(n, dtype=np.int64)
    return J


def brute_force_symplectic(n: int) -> list[np.ndarray]:
    """Every 2n x 2n binary matrix with M^T J M = J, by exhaustive scan."""
    d = 2 * n
    J = J_np(n)
    bits = np.array(list(itertools.product((0, 1), repeat=d * d)), dtype=np.int64)
    mats = bits.reshape(-1, d, d)
    prod = np.einsum("kji,jl,klm->kim", mats, J, mats) % 2
    ok = np.all(prod == J, axis=(1, 2))
    return list(mats[ok])


def np_order(M: np.ndarray, limit: int = 1000) -> int:
    I = np.eye(M.shape[0], dtype=np.int64)
    P = M.copy()
    for e in range(1, limit + 1):
        if np.array_equal(P, I):
            return e
        P = (P @ M) % 2
    raise AssertionError("order exceeds limit")


def trial_irreducible(f, p: int) -> bool:
    """Irreducibility by checking every monic divisor of degree 1..deg/2."""
    f = list(f)
    m = len(f) - 1
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            g = list(low) + [1]
            if _remainder(f, g, p) == [0] * d:
                return False
    return True


def _remainder(f, g, p):
    r = list(f)
    dg = len(g) - 1
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i] % p
        if c:
            for j in range(dg + 1):
                r[i - dg + j] = (r[i - dg + j] - c * g[j]) % p
    return [x % p for x in r[:dg]]


def naive_factors(n: int) -> list[int]:
    out, d = [], 2
    while n > 1:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    return out


# --- codes and code-preserving gadgets -------------------------------------------------


def cz(a: int, b: int, n: int) -> SymplecticMatrix:
    h = embed(M_H, [b], n)
    return h @ cnot(a, b, n) @ h


@st.composite
def random_codes(draw, max_n=6):
    """Image of Z_1..Z_r under a random Clifford."""
    from clifford_nogo.codes import validate_code

    n = draw(st.integers(1, max_n))
    r = draw(st.integers(0, n))
    U = draw(cliffords(n=n, max_len=60))
    cols = U.columns()
    return validate_code([cols[n + j] for j in range(r)], n=n)


def preserving_from_ops(code, logical_ops, stab_ops):
    """(M, L): M preserves ``code`` and acts as L on the logical basis.

    Built as E G E^-1 where E is the encoding matrix, G acts as L on the
    logical qubits r..n-1 and only mixes stabilizer Z's among themselves.
    """
    from clifford_nogo.codes import encoding_matrix

    n, r, k = code.n, code.r, code.k
    L = random_clifford(k, logical_ops) if k else None
    G = embed(L, list(range(r, n)), n) if k else SymplecticMatrix.identity(n)
    if r:
        for kind, a, b in stab_ops:
            s, t = a % r, b % n
            if kind == 0:
                g = embed(M_S, [s], n)
            elif t == s:
                continue
            elif kind == 1:
                g = cz(s, t, n)
            else:
                g = cnot(s, t, n)  # control on a stabilizer qubit keeps Z_s fixed
            G = g @ G
    E = encoding_matrix(code)
    return E @ G @ E.inverse(), L


@st.composite
def preserving_gadgets(draw, code):
    return preserving_from_ops(code, draw(st.lists(_op, max_size=30)), draw(st.lists(_op, max_size=25)))


def random_ops(rng, length: int):
    return [(rng.randrange(3), rng.randrange(64), rng.randrange(64)) for _ in range(length)]


# --- automorphisms ---------------------------------------------------------------------


def random_p_local(rng, n: int, p: int):
    """p-local automorphism on n qubits whose local gates multiply to I around every cycle."""
    from clifford_nogo.gadgets import Automorphism, LOCAL_NAMES, local_inv, local_mul

    qubits = list(range(n))
    rng.shuffle(qubits)
    ncycles = rng.randint(1, n // p)
    perm = list(range(n))
    for c in range(ncycles):
        cyc = qubits[c * p : (c + 1) * p]
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            perm[a] = b
    locs = ["I"] * n
    moved = [q for q in range(n) if perm[q] != q]
    for q in moved:
        locs[q] = rng.choice(LOCAL_NAMES)
    a = Automorphism(n, tuple(perm), tuple(locs))
    for cyc in a.cycles():
        if len(cyc) == 1:
            continue
        acc = "I"
        for q in cyc[:-1]:
            acc = local_mul(locs[q], acc)
        locs[cyc[-1]] = local_inv(acc)
    return Automorphism(n, tuple(perm), tuple(locs))


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


# --- acceptance bookkeeping -------------------------------------------------------------

ACCEPTANCE: list[str] = []


class criterion:
    """Time the body, record one PASS/FAIL line, and enforce the runtime limit."""

    def __init__(self, number: int, title: str, limit_s: float):
        self.number, self.title, self.limit = number, title, limit_s

    def __enter__(self):
        import time

        from clifford_nogo.codes import standard_form

        standard_form.cache_clear()  # time from cold caches
        self._t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        import time

        elapsed = time.perf_counter() - self._t0
        ok = exc_type is None and elapsed < self.limit
        line = (
            f"{'PASS' if ok else 'FAIL'}  criterion {self.number:2d}: {self.title} "
            f"({elapsed:.2f} s, limit {self.limit:g} s)"
        )
        if exc_type is not None:
            line += f" [{exc_type.__name__}: {exc}]"
        ACCEPTANCE.append(line)
        print(line)
        if exc_type is None:
            assert elapsed < self.limit, line
        return False
