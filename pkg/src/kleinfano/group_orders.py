"""Order bounds from faithful actions on torsion points: orders of
GL_d over prime fields and their gcd across small primes."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class GroupOrder:
    modulus: int
    dimension: int
    value: int


def gl_order(p: int, d: int) -> int:
    """#GL_d(F_p) = prod_{k=0}^{d-1} (p^d - p^k), exactly."""
    if not _is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    if d < 1:
        raise ValueError("dimension must be positive")
    value = 1
    pd = p ** d
    for k in range(d):
        value *= pd - p ** k
    return value


def gl_order_factored_form(p: int, d: int) -> int:
    """Same count via p^{d(d-1)/2} * prod_{k=1}^{d} (p^k - 1); used as an
    independent route in the verification suite."""
    if not _is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    value = p ** (d * (d - 1) // 2)
    for k in range(1, d + 1):
        value *= p ** k - 1
    return value


BOUND_PRIMES = (3, 5, 7, 11)


def automorphism_order_bound(dimension: int = 10) -> int:
    """gcd of #GL_10 over the prime fields F_3, F_5, F_7, F_11.

    The automorphism group of a 5-dimensional principally polarized
    abelian variety acts faithfully on n-torsion for n >= 3, so its order
    divides each of these counts, hence their gcd.
    """
    result = 0
    for p in BOUND_PRIMES:
        result = gcd(result, gl_order(p, dimension))
    return result


def factorize(n: int):
    """Prime factorization by trial division, as (prime, exponent) pairs."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def format_factorization(n: int) -> str:
    return " * ".join(
        f"{p}^{e}" if e > 1 else str(p) for p, e in factorize(n)
    )
