"""Exact arithmetic in GF(p^m) = F_p[x] / (f(x)).

Elements are dense coefficient tuples over F_p, constant term first, so the
same code serves p = 2 (all the symplectic constructions) and p = 3.
Polynomials are handled the same way: ``(a0, a1, ..., am)`` means
``a0 + a1 x + ... + am x^m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

from clifford_nogo.numtheory import factorize, is_prime, multiplicative_order

Poly = tuple[int, ...]

MAX_FIELD_SIZE = 2**64


# --- polynomials over F_p ----------------------------------------------------


def _trim(a: Sequence[int]) -> list[int]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``f``."""
    a = _trim(a)
    df = len(f) - 1
    while len(a) - 1 >= df and a:
        c = a[-1]
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        a = _trim(a)
    return a


def poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def poly_powmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = poly_mod(a, f, p)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base, p), f, p)
        base = poly_mod(poly_mul(base, base, p), f, p)
        e >>= 1
    return result


def poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim(a), _trim(b)
    while b:
        inv = pow(b[-1], -1, p)
        monic_b = [(c * inv) % p for c in b]
        a, b = b, poly_mod(a, monic_b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [(c * inv) % p for c in a]
    return a


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Ben-Or test: a monic f of degree m is irreducible iff
    gcd(x^(p^i) - x, f) = 1 for every 1 <= i <= m/2."""
    f = _trim(f)
    m = len(f) - 1
    if m < 1 or f[-1] != 1:
        return False
    if m == 1:
        return True
    h = [0, 1]
    for _ in range(m // 2):
        h = poly_powmod(h, p, f, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        if len(poly_gcd(f, diff, p)) > 1:
            return False
    return True


def _monic_candidates(p: int, m: int) -> Iterator[Poly]:
    # base-p counting with the constant term least significant
    for v in range(p**m):
        coeffs = []
        for _ in range(m):
            v, r = divmod(v, p)
            coeffs.append(r)
        yield tuple(coeffs) + (1,)


def _check_pm(p: int, m: int) -> None:
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    if p**m > MAX_FIELD_SIZE:
        raise ValueError(f"field size {p}^{m} exceeds 2^64")


def find_irreducible(p: int, m: int) -> Poly:
    """Smallest monic irreducible polynomial of degree ``m`` over F_p."""
    _check_pm(p, m)
    for f in _monic_candidates(p, m):
        if is_irreducible(f, p):
            return f
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


def find_primitive(p: int, m: int) -> Poly:
    """Smallest monic irreducible polynomial whose root generates GF(p^m)^x.

    For GF(2) this is ``x + 1``: the root 1 generates the trivial group.
    """
    _check_pm(p, m)
    for f in _monic_candidates(p, m):
        if is_irreducible(f, p) and FieldSpec(p, m, f).alpha().is_generator():
            return f
    raise AssertionError("unreachable: primitive polynomials exist in every degree")


def poly_str(coeffs: Sequence[int], var: str = "x") -> str:
    terms = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if c == 0:
            continue
        if d == 0:
            terms.append(str(c))
            continue
        mono = var if d == 1 else f"{var}^{d}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) if terms else "0"


# --- fields ----------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^m) presented as F_p[x] modulo a monic irreducible ``modulus``."""

    p: int
    m: int
    modulus: Poly

    def __post_init__(self) -> None:
        _check_pm(self.p, self.m)
        modulus = tuple(int(c) for c in self.modulus)
        object.__setattr__(self, "modulus", modulus)
        if len(modulus) != self.m + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {self.m}: {modulus}")
        if any(not 0 <= c < self.p for c in modulus):
            raise ValueError(f"modulus coefficients must lie in [0, {self.p})")
        if not is_irreducible(modulus, self.p):
            raise ValueError(f"{poly_str(modulus)} is reducible over F_{self.p}")

    @classmethod
    def primitive(cls, p: int, m: int) -> "FieldSpec":
        return cls(p, m, find_primitive(p, m))

    @property
    def size(self) -> int:
        return self.p**self.m

    @cached_property
    def unit_group_factors(self) -> dict[int, int]:
        return dict(factorize(self.size - 1))

    @cached_property
    def _trace_of_basis(self) -> tuple[int, ...]:
        # trace is F_p-linear, so its values on 1, alpha, ... determine it
        return tuple(fe_trace(self.monomial(i)).coeffs[0] for i in range(self.m))

    def element(self, coeffs: Sequence[int]) -> "FieldElement":
        coeffs = [int(c) % self.p for c in coeffs]
        if len(coeffs) > self.m:
            coeffs = poly_mod(coeffs, self.modulus, self.p)
        return FieldElement(self, tuple(coeffs) + (0,) * (self.m - len(coeffs)))

    def from_int(self, v: int) -> "FieldElement":
        coeffs = []
        for _ in range(self.m):
            v, r = divmod(v, self.p)
            coeffs.append(r)
        return FieldElement(self, tuple(coeffs))

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.m)

    def one(self) -> "FieldElement":
        return self.element([1])

    def monomial(self, i: int) -> "FieldElement":
        return self.element([0] * i + [1])

    def alpha(self) -> "FieldElement":
        """Residue class of x."""
        return self.element([0, 1])

    def elements(self) -> Iterator["FieldElement"]:
        for v in range(self.size):
            yield self.from_int(v)

    def fast_trace(self, a: "FieldElement") -> int:
        """Absolute trace as a linear functional on coefficient vectors."""
        return sum(c * t for c, t in zip(a.coeffs, self._trace_of_basis)) % self.p

    def __str__(self) -> str:
        return f"GF({self.p}^{self.m}) mod {poly_str(self.modulus)}"


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec = field(repr=False)
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.spec.m:
            raise ValueError(f"expected {self.spec.m} coefficients, got {len(self.coeffs)}")
        if any(not 0 <= c < self.spec.p for c in self.coeffs):
            raise ValueError(f"coefficients must lie in [0, {self.spec.p})")

    def _same(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.spec != self.spec:
            raise ValueError(f"field mismatch: {self.spec} vs {other.spec}")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        p = self.spec.p
        return FieldElement(self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FieldElement":
        p = self.spec.p
        return FieldElement(self.spec, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return self + (-other)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        s = self.spec
        prod = poly_mod(poly_mul(self.coeffs, other.coeffs, s.p), s.modulus, s.p)
        return FieldElement(s, tuple(prod) + (0,) * (s.m - len(prod)))

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inverse() ** (-e)
        result = self.spec.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def inverse(self) -> "FieldElement":
        if not self:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self ** (self.spec.size - 2)

    def order(self) -> int:
        return fe_order(self)

    def is_generator(self) -> bool:
        if not self:
            return False
        n = self.spec.size - 1
        one = self.spec.one()
        if self**n != one:
            return False
        return all(self ** (n // q) != one for q in self.spec.unit_group_factors)

    def __str__(self) -> str:
        return poly_str(self.coeffs, "alpha")


def fe_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def fe_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def fe_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def fe_pow(a: FieldElement, e: int) -> FieldElement:
    return a**e


def fe_order(a: FieldElement) -> int:
    """Multiplicative order, found by stripping prime factors of p^m - 1."""
    if not a:
        raise ZeroDivisionError("zero has no multiplicative order")
    one = a.spec.one()
    return multiplicative_order(a, pow, lambda x: x == one, a.spec.unit_group_factors)


def fe_trace(a: FieldElement, subfield_degree: int = 1) -> FieldElement:
    """Trace down to GF(p^d): sum of a^(p^(d*i)) for i < m/d."""
    m = a.spec.m
    if subfield_degree < 1 or m % subfield_degree:
        raise ValueError(f"subfield degree {subfield_degree} does not divide {m}")
    q = a.spec.p**subfield_degree
    total = a.spec.zero()
    term = a
    for _ in range(m // subfield_degree):
        total = total + term
        term = term**q
    return total


def power_table(spec: FieldSpec) -> list[tuple[int, FieldElement]]:
    """Successive powers alpha^1, alpha^2, ... up to the first power equal to 1."""
    alpha = spec.alpha()
    if not alpha:
        raise ValueError("alpha is zero for this modulus; choose a modulus other than x")
    rows = []
    x = alpha
    one = spec.one()
    for k in range(1, spec.size):
        rows.append((k, x))
        if x == one:
            break
        x = x * alpha
    return rows
