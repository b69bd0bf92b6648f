"""Small-integer number theory: trial-division factoring and orders."""

from __future__ import annotations

from functools import lru_cache


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n >= 1`` as sorted ``(prime, exponent)`` pairs."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_factors(n: int) -> list[int]:
    return [q for q, _ in factorize(n)]


def merge_factorizations(*parts: tuple[tuple[int, int], ...]) -> dict[int, int]:
    acc: dict[int, int] = {}
    for part in parts:
        for q, e in part:
            acc[q] = acc.get(q, 0) + e
    return dict(sorted(acc.items()))


def multiplicative_order(x, pow_fn, is_one, exponent: dict[int, int]) -> int:
    """Order of ``x`` in a finite group whose exponent divides ``prod(q**e)``.

    ``pow_fn(x, e)`` raises ``x`` to ``e``; ``is_one`` tests for the identity.
    The prime list is split in halves recursively, so only
    O(log #primes) full-size exponentiations are needed.
    """
    items = sorted(exponent.items())
    if not items:
        if not is_one(x):
            raise ArithmeticError("element order does not divide the supplied exponent")
        return 1
    return _order(x, items, pow_fn, is_one)


def _order(x, items, pow_fn, is_one) -> int:
    if len(items) == 1:
        (q, e), = items
        f = 0
        while not is_one(x):
            if f == e:
                raise ArithmeticError("element order does not divide the supplied exponent")
            x = pow_fn(x, q)
            f += 1
        return q**f
    mid = len(items) // 2
    left, right = items[:mid], items[mid:]
    left_part = 1
    for q, e in left:
        left_part *= q**e
    right_part = 1
    for q, e in right:
        right_part *= q**e
    return _order(pow_fn(x, right_part), left, pow_fn, is_one) * _order(
        pow_fn(x, left_part), right, pow_fn, is_one
    )
