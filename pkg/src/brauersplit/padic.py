"""Hilbert symbols at every place of Q, plus two independent solvability oracles.

The symbol (a, b / v) is +1 iff a*x^2 + b*y^2 = z^2 has a nontrivial solution
over the completion of Q at the place v, and -1 otherwise.  Values at the
finite places come from the classical closed formulas for the local symbol;
`qp_solvable_oracle` decides the same question by searching residues mod p^k
directly and is kept free of those formulas so the two can check each other.
`rational_point_search` looks for an actual integer point on the conic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

import numpy as np

from .arith import padic_valuation, require_prime, squarefree_kernel, odd_prime_divisors

# Above this modulus the plain residue sweep is replaced by the digit search.
_SWEEP_LIMIT = 2048


@dataclass(frozen=True, order=True)
class Place:
    """A place of Q: a finite prime p, or the infinite (real) place.

    The infinite place is modeled as p=0 so places sort as inf < 2 < 3 < ...
    """

    p: int

    def __post_init__(self):
        if self.p != 0:
            require_prime(self.p)

    @classmethod
    def finite(cls, p: int) -> "Place":
        return cls(p)

    @classmethod
    def infinite(cls) -> "Place":
        return cls(0)

    @property
    def is_infinite(self) -> bool:
        return self.p == 0

    def __str__(self) -> str:
        return "inf" if self.p == 0 else str(self.p)


@dataclass(frozen=True)
class ConicPoint:
    """Primitive integer solution of a*x^2 + b*y^2 = z^2."""

    x: int
    y: int
    z: int

    def on_conic(self, a: int, b: int) -> bool:
        return a * self.x**2 + b * self.y**2 == self.z**2

    def is_primitive(self) -> bool:
        return gcd(gcd(self.x, self.y), self.z) == 1


def _eps(u: int) -> int:
    # (u-1)/2 mod 2 for odd u
    return (u - 1) // 2 % 2


def _omega(u: int) -> int:
    # (u^2-1)/8 mod 2 for odd u
    return (u * u - 1) // 8 % 2


def hilbert_symbol(a: int, b: int, place: Place) -> int:
    """Hilbert symbol (a, b / place) in {-1, +1} for nonzero integers a, b."""
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    if place.is_infinite:
        return -1 if (a < 0 and b < 0) else 1
    p = place.p
    # Strip square parts so both exponents below land in {0, 1}.
    a = squarefree_kernel(a)
    b = squarefree_kernel(b)
    va, vb = 0, 0
    if a % p == 0:
        va, a = 1, a // p
    if b % p == 0:
        vb, b = 1, b // p
    if p == 2:
        exponent = _eps(a) * _eps(b) + va * _omega(b) + vb * _omega(a)
        return -1 if exponent % 2 else 1
    sign = 1
    if va and vb and (p - 1) // 2 % 2:
        sign = -sign
    if vb and pow(a % p, (p - 1) // 2, p) == p - 1:
        sign = -sign
    if va and pow(b % p, (p - 1) // 2, p) == p - 1:
        sign = -sign
    return sign


def hilbert_product(a: int, b: int) -> dict[Place, int]:
    """Symbols at inf, 2 and every odd prime dividing a*b.

    At all other places the symbol is +1 (both arguments are units there), so
    the values returned multiply to +1 by the product formula.
    """
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    places = [Place.infinite(), Place.finite(2)]
    places += [Place.finite(p) for p in odd_prime_divisors(a * b)]
    return {v: hilbert_symbol(a, b, v) for v in places}


def lifting_threshold(a: int, b: int, p: int) -> int:
    """Smallest exponent k* such that a primitive solution mod p^k* certifies
    solvability over the p-adics (generous uniform Hensel bound)."""
    return 2 * padic_valuation(4 * a * b, p) + 1


def qp_solvable_oracle(a: int, b: int, p: int, k: int) -> bool:
    """True iff a*x^2 + b*y^2 == z^2 (mod p^k) has a solution with
    gcd(x, y, z, p) = 1.

    Requires k >= lifting_threshold(a, b, p), which makes the answer equal to
    solvability over Q_p.  Small moduli are swept outright; for larger p^k the
    same tree of residues is searched digit by digit, discarding branches that
    already fail the congruence and closing branches that Newton's lemma
    guarantees lift to exact p-adic solutions.  No Hilbert symbol formula is
    consulted anywhere on this path.
    """
    if a == 0 or b == 0:
        raise ValueError("oracle needs nonzero coefficients")
    require_prime(p)
    if k < 1:
        raise ValueError("k must be positive")
    threshold = lifting_threshold(a, b, p)
    if k < threshold:
        raise ValueError(
            f"k={k} below lifting threshold {threshold}; result would not "
            f"certify the p-adic answer"
        )
    if p**k <= _SWEEP_LIMIT:
        return _solvable_sweep(a, b, p, k)
    return _solvable_digits(a, b, p, k)


def _solvable_sweep(a: int, b: int, p: int, k: int) -> bool:
    # Literal enumeration of (x, y) in (Z/p^k)^2 with a square table for z.
    pk = p**k
    r = np.arange(pk, dtype=np.int64)
    sq = (r * r) % pk
    is_sq = np.zeros(pk, dtype=bool)
    is_sq[sq] = True
    unit = (r % p) != 0
    unit_sq = np.zeros(pk, dtype=bool)
    unit_sq[sq[unit]] = True
    by2 = (b % pk) * sq % pk
    for x in range(pk):
        w = ((a * x * x) % pk + by2) % pk
        if x % p:
            # x is a unit: any z completing the congruence gives a
            # primitive triple.
            if is_sq[w].any():
                return True
        else:
            if is_sq[w[unit]].any():
                return True
            # x and y both divisible by p: z must be a unit.
            if unit_sq[w[~unit]].any():
                return True
    return False


def _solvable_digits(a: int, b: int, p: int, k: int) -> bool:
    # Depth-first search over partial solutions (x, y, z) mod p^j, j <= k.
    # A branch survives to depth j only if F = a*x^2 + b*y^2 - z^2 is 0 mod
    # p^j and not every coordinate is divisible by p (level-1 cut), i.e. the
    # branch still contains candidates for a primitive solution mod p^k.
    #
    # Newton exit: if the minimum valuation e of the gradient
    # (2ax, 2by, -2z) satisfies 2e+1 <= j, the one-variable Newton iteration
    # lifts the node to an exact Z_p solution congruent to it mod p (hence
    # primitive), so the answer is True.  Conversely any primitive solution
    # mod p^k keeps its full ancestor chain alive and triggers the exit by
    # depth k, because k >= 2*v_p(4ab)+1 bounds 2e+1 for its unit coordinate.
    va = padic_valuation(2 * a, p)
    vb = padic_valuation(2 * b, p)
    vz = 1 if p == 2 else 0

    def exits(x: int, y: int, z: int, j: int) -> bool:
        e = min(
            va + (padic_valuation(x, p) if x else j),
            vb + (padic_valuation(y, p) if y else j),
            vz + (padic_valuation(z, p) if z else j),
        )
        return 2 * e + 1 <= j

    stack: list[tuple[int, int, int, int]] = []
    for x in range(p):
        for y in range(p):
            w = a * x * x + b * y * y
            for z in range(p):
                if (w - z * z) % p:
                    continue
                if x == 0 and y == 0 and z == 0:
                    continue
                if exits(x, y, z, 1):
                    return True
                stack.append((x, y, z, 1))
    while stack:
        x, y, z, j = stack.pop()
        # depth-k nodes always take the Newton exit when k is at or above
        # the lifting threshold, so surviving nodes sit strictly below k
        assert j < k
        pj = p**j
        # Survivors have every gradient coordinate divisible by p, so all
        # p^3 digit extensions share the value of F mod p^(j+1): the branch
        # either dies here or branches fully.
        if (a * x * x + b * y * y - z * z) // pj % p:
            continue
        for dx in range(p):
            xx = x + dx * pj
            for dy in range(p):
                yy = y + dy * pj
                for dz in range(p):
                    zz = z + dz * pj
                    if exits(xx, yy, zz, j + 1):
                        return True
                    stack.append((xx, yy, zz, j + 1))
    return False


def rational_point_search(a: int, b: int, height: int) -> ConicPoint | None:
    """First primitive point on a*x^2 + b*y^2 = z^2 with coordinates in
    [0, height], ordered by increasing max-norm then lexicographically.

    Signs never matter (all coordinates appear squared), so the search runs
    over nonnegative triples.  Returning None within the bound proves nothing
    about solvability; it only means no point of height <= `height` exists.
    """
    if a == 0 or b == 0:
        raise ValueError("conic needs nonzero coefficients")
    if height < 1:
        raise ValueError("height bound must be positive")
    for m in range(1, height + 1):
        for x in range(m + 1):
            for y in range(m + 1):
                if max(x, y) < m:
                    # z = m is forced, otherwise the triple was seen earlier
                    t = a * x * x + b * y * y
                    if t == m * m and gcd(gcd(x, y), m) == 1:
                        return ConicPoint(x, y, m)
                    continue
                t = a * x * x + b * y * y
                if t < 0:
                    continue
                z = isqrt(t)
                if z * z == t and z <= m and gcd(gcd(x, y), z) == 1:
                    return ConicPoint(x, y, z)
    return None
