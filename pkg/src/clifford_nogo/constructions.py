"""Symplectic matrices of order 2^k - 1, 2^k + 1 and of primitive-prime order.

``construct_V`` embeds the companion matrix of a primitive degree-k
polynomial as ``diag(C, (C^-1)^T)``. ``construct_W`` realises multiplication
by ``t = alpha^(2^k - 1)`` on GF(2^(2k)), written in a basis that is
symplectic for the alternating form

    B(a, b) = Tr(theta * (a * b^(2^k) + a^(2^k) * b)).

``construct_prime_order`` powers one of them down to order p, where p is the
smallest primitive prime divisor of 4^k - 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from clifford_nogo import gf2
from clifford_nogo.field import FieldElement, FieldSpec, find_primitive, poly_str
from clifford_nogo.numtheory import prime_factors
from clifford_nogo.symplectic import SymplecticMatrix, element_order

MAX_K = 12


class Kind(str, enum.Enum):
    MINUS_ONE = "MinusOne"
    PLUS_ONE = "PlusOne"
    PRIME_ORDER = "PrimeOrder"


@dataclass(frozen=True)
class OrderConstruction:
    k: int
    kind: Kind
    matrix: SymplecticMatrix
    order: int
    polynomial: tuple[int, ...]
    theta_exponent: int | None = None
    basis: tuple[FieldElement, ...] | None = field(default=None, repr=False)
    prime: int | None = None
    power: int = 1

    def provenance(self) -> dict:
        out: dict = {
            "kind": self.kind.value,
            "k": self.k,
            "polynomial": poly_str(self.polynomial),
            "order": self.order,
        }
        if self.theta_exponent is not None:
            out["theta"] = f"alpha^{self.theta_exponent}"
        if self.basis is not None:
            out["basis"] = [str(b) for b in self.basis]
            logs = _discrete_logs(self.basis)
            if logs is not None:
                out["basis_powers"] = logs
        if self.prime is not None:
            out["prime"] = self.prime
            out["power"] = self.power
        return out


def _discrete_logs(elements: Sequence[FieldElement], limit: int = 4096) -> list[int] | None:
    if not elements or elements[0].spec.size > limit:
        return None
    spec = elements[0].spec
    table = {}
    x = spec.one()
    for j in range(spec.size - 1):
        table.setdefault(x, j)
        x = x * spec.alpha()
    return [table[e] for e in elements]


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")


def primitive_prime_divisor(k: int) -> int:
    """Smallest prime dividing 4^k - 1 but no 4^i - 1 with i < k."""
    _check_k(k)
    for p in prime_factors(4**k - 1):
        if all((4**i - 1) % p for i in range(1, k)):
            return p
    raise AssertionError(f"no primitive prime divisor for k={k}")


def companion_matrix(poly: Sequence[int]) -> tuple[int, ...]:
    """Companion matrix of a monic polynomial over F_2, as bit-packed rows.

    Ones on the subdiagonal and ``a_0..a_{k-1}`` down the last column, i.e.
    multiplication by x in the basis 1, x, ..., x^(k-1).
    """
    poly = [int(c) & 1 for c in poly]
    k = len(poly) - 1
    if k < 1 or poly[-1] != 1:
        raise ValueError(f"expected a monic polynomial of degree >= 1, got {poly}")
    rows = []
    for i in range(k):
        r = poly[i] << (k - 1)
        if i >= 1:
            r |= 1 << (i - 1)
        rows.append(r)
    return tuple(rows)


def construct_V(k: int) -> OrderConstruction:
    _check_k(k)
    f = find_primitive(2, k)
    C = companion_matrix(f)
    Cinv_T = gf2.transpose(gf2.inverse(C, k), k)
    rows = C + tuple(r << k for r in Cinv_T)
    V = SymplecticMatrix(k, rows)
    order = element_order(V)
    assert order == 2**k - 1, f"construct_V({k}) has order {order}"
    return OrderConstruction(k, Kind.MINUS_ONE, V, order, f)


class AlternatingForm:
    """The form B on GF(2^(2k)), evaluated on coefficient bit vectors."""

    def __init__(self, spec: FieldSpec, k: int, theta: FieldElement):
        self.spec = spec
        self.k = k
        self.theta = theta
        self.q = 2**k
        basis = [spec.monomial(i) for i in range(spec.m)]
        frob = [e**self.q for e in basis]
        self.gram = tuple(
            sum(
                self._raw(basis[i], basis[j], frob[i], frob[j]) << j
                for j in range(spec.m)
            )
            for i in range(spec.m)
        )

    def _raw(self, a, b, aq, bq) -> int:
        return self.spec.fast_trace(self.theta * (a * bq + aq * b))

    def __call__(self, a: FieldElement, b: FieldElement) -> int:
        """B(a, b) evaluated directly in the field."""
        return self._raw(a, b, a**self.q, b**self.q)

    def on_bits(self, x: int, y: int) -> int:
        return gf2.dot(x, gf2.matvec(self.gram, y))

    def is_nondegenerate(self) -> bool:
        return gf2.rank(self.gram) == self.spec.m


def to_bits(a: FieldElement) -> int:
    return sum(c << i for i, c in enumerate(a.coeffs))


def from_bits(spec: FieldSpec, x: int) -> FieldElement:
    return spec.element([x >> i & 1 for i in range(spec.m)])


def select_theta(spec: FieldSpec, k: int) -> tuple[int, AlternatingForm]:
    """First j >= 1 such that theta = alpha^j makes B non-degenerate."""
    alpha = spec.alpha()
    theta = alpha
    for j in range(1, spec.size - 1):
        form = AlternatingForm(spec, k, theta)
        if form.is_nondegenerate():
            return j, form
        theta = theta * alpha
    raise AssertionError("no theta gives a non-degenerate form")


def symplectic_basis(form: AlternatingForm) -> tuple[list[int], list[int]]:
    """Hyperbolic pairs (u_i, v_i) with B(u_i, v_j) = delta_ij, all others 0.

    Takes the first working vector that has a partner, pairs it with its
    first partner, and projects both out of every remaining vector.
    """
    work = [1 << i for i in range(form.spec.m)]
    us: list[int] = []
    vs: list[int] = []
    B = form.on_bits
    while work:
        pair = None
        for a, u in enumerate(work):
            for b, v in enumerate(work):
                if b != a and B(u, v):
                    pair = (a, b)
                    break
            if pair:
                break
        if pair is None:
            raise AssertionError("form is degenerate on the remaining subspace")
        u, v = work[pair[0]], work[pair[1]]
        us.append(u)
        vs.append(v)
        rest = [w for i, w in enumerate(work) if i not in pair]
        work = [w ^ (u if B(w, v) else 0) ^ (v if B(w, u) else 0) for w in rest]
    return us, vs


def check_symplectic_basis(form: AlternatingForm, us: Sequence[int], vs: Sequence[int]) -> bool:
    B = form.on_bits
    k = len(us)
    if len(vs) != k:
        return False
    for i in range(k):
        for j in range(k):
            if B(us[i], us[j]) or B(vs[i], vs[j]):
                return False
            if B(us[i], vs[j]) != (i == j):
                return False
    return True


def construct_W(
    k: int,
    theta_exponent: int | None = None,
    basis: Sequence[FieldElement] | None = None,
) -> OrderConstruction:
    """Order 2^k + 1 element of Sp(2k, 2) from multiplication by alpha^(2^k - 1).

    ``theta_exponent`` and ``basis`` override the canonical choices; a
    supplied basis is ordered ``(u_1..u_k, v_1..v_k)`` and must be symplectic.
    """
    _check_k(k)
    f = find_primitive(2, 2 * k)
    spec = FieldSpec(2, 2 * k, f)
    if theta_exponent is None:
        theta_exponent, form = select_theta(spec, k)
    else:
        form = AlternatingForm(spec, k, spec.alpha() ** theta_exponent)
        if not form.is_nondegenerate():
            raise ValueError(f"theta = alpha^{theta_exponent} gives a degenerate form")
    if basis is None:
        us, vs = symplectic_basis(form)
    else:
        bits = [to_bits(b) for b in basis]
        if len(bits) != 2 * k:
            raise ValueError(f"basis must have {2 * k} elements")
        us, vs = bits[:k], bits[k:]
    if not check_symplectic_basis(form, us, vs):
        raise ValueError("basis is not symplectic for the chosen form")

    t = spec.alpha() ** (2**k - 1)
    B = form.on_bits

    def coords(x: int) -> int:
        c = 0
        for i in range(k):
            c |= B(x, vs[i]) << i
            c |= B(x, us[i]) << (k + i)
        return c

    cols = [coords(to_bits(t * from_bits(spec, b))) for b in us + vs]
    W = SymplecticMatrix.from_columns(k, cols)

    # B(ta, tb) = B(a, b), checked in the field itself
    poly_basis = [spec.monomial(i) for i in range(2 * k)]
    for a in poly_basis:
        for b in poly_basis:
            assert form(t * a, t * b) == form(a, b), "multiplication by t does not preserve B"

    order = element_order(W)
    assert order == 2**k + 1, f"construct_W({k}) has order {order}"
    field_basis = tuple(from_bits(spec, b) for b in us + vs)
    return OrderConstruction(k, Kind.PLUS_ONE, W, order, f, theta_exponent, field_basis)


def construct_prime_order(k: int) -> OrderConstruction:
    p = primitive_prime_divisor(k)
    if (2**k - 1) % p == 0:
        base = construct_V(k)
        e = (2**k - 1) // p
    else:
        base = construct_W(k)
        e = (2**k + 1) // p
    U = base.matrix**e
    order = element_order(U)
    assert order == p, f"prime-order element for k={k} has order {order}"
    return OrderConstruction(
        k,
        Kind.PRIME_ORDER,
        U,
        order,
        base.polynomial,
        base.theta_exponent,
        base.basis,
        prime=p,
        power=e,
    )
