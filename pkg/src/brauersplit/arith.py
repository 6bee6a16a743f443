"""Exact integer and modular arithmetic primitives.

Everything here is deterministic for inputs below 2**64 (primality uses the
fixed Miller-Rabin witness set known to be exact in that range; factoring
uses trial division up to 10**6 followed by Pollard rho).  All functions are
pure and safe to call from concurrent workers.
"""

from __future__ import annotations

from math import gcd, isqrt

# Witnesses making Miller-Rabin deterministic for all n < 3.3 * 10**24,
# comfortably covering the supported 64-bit range.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_LIMIT = 10**6


def is_prime(n: int) -> bool:
    """True iff |n| is prime."""
    n = abs(n)
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def require_prime(p: int, *, odd: bool = False) -> int:
    """Validate that p is a (positive) certified prime; return it."""
    if p < 2 or not is_prime(p):
        raise ValueError(f"{p} is not a prime")
    if odd and p == 2:
        raise ValueError("prime must be odd")
    return p


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, by Euler's criterion.

    Returns 0 iff p | a, +1 for nonzero quadratic residues, -1 otherwise.
    """
    require_prime(p, odd=True)
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def multiplicative_order(p: int, l: int) -> int:
    """Smallest f >= 1 with p**f == 1 (mod l).  Requires gcd(p, l) == 1."""
    if gcd(p, l) != 1:
        raise ValueError(f"gcd({p}, {l}) != 1; order undefined")
    f = 1
    x = p % l
    while x != 1:
        x = x * p % l
        f += 1
    return f


def padic_valuation(n: int, p: int) -> int:
    """Largest m with p**m | n.  n must be nonzero."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    require_prime(p)
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _pollard_rho(n: int) -> int:
    # n odd composite, no factor below _TRIAL_LIMIT; Brent's cycle variant
    # with deterministic parameter sweep.
    if is_prime(n):
        return n
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed to factor {n}")  # pragma: no cover


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}.  n must be nonzero."""
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 7
    while d * d <= n and d < _TRIAL_LIMIT:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        f = _pollard_rho(m)
        stack.append(f)
        stack.append(m // f)
    return out


def odd_prime_divisors(n: int) -> list[int]:
    """Sorted distinct odd primes dividing n.  n must be nonzero."""
    if n == 0:
        raise ValueError("0 has every prime divisor")
    return sorted(p for p in factorize(n) if p != 2)


def squarefree_kernel(n: int) -> int:
    """n with all square prime factors removed (sign preserved)."""
    if n == 0:
        raise ValueError("kernel of 0 undefined")
    k = 1
    for p, e in factorize(n).items():
        if e % 2:
            k *= p
    return -k if n < 0 else k


def primes_up_to(bound: int) -> list[int]:
    """Primes <= bound by sieve of Eratosthenes."""
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, b in enumerate(sieve) if b]
