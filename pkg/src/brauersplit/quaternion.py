"""Splitting of rational quaternion algebras and the x^2 + n*y^2 criteria.

A quaternion algebra over Q determined by nonzero integers (a, b) is split
exactly when the conic a*x^2 + b*y^2 = z^2 has points everywhere locally,
which the Hilbert symbol product detects; otherwise it is a division algebra.
For n in the eleven-entry table below, an odd prime q is a sum x^2 + n*y^2
iff it falls in the listed residue classes (or is the listed special prime),
and in that case the algebra (-n, q) splits.  `verify_equivalence` sweeps a
prime range and checks all three predicates against each other.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import isqrt

from .arith import primes_up_to, require_prime
from .padic import hilbert_product

log = logging.getLogger(__name__)

# n values whose converse (split implies congruence) is established; for the
# remaining n the sweep reports converse failures informationally.
CONVERSE_PROVEN = frozenset({3, 5, 7, 13})


@dataclass(frozen=True)
class QuaternionAlgebra:
    """The algebra with generators squaring to a and b and anticommuting."""

    a: int
    b: int

    def __post_init__(self):
        if self.a == 0 or self.b == 0:
            raise ValueError("quaternion algebra needs nonzero parameters")


@dataclass(frozen=True)
class RepresentationCriterion:
    """Residue classes (and special prime, if any) characterizing
    q = x^2 + n*y^2 for odd primes q."""

    n: int
    modulus: int
    classes: frozenset[int]
    special_primes: frozenset[int]

    def admits(self, q: int) -> bool:
        return q in self.special_primes or q % self.modulus in self.classes


def _criterion(n, modulus, classes, special=()):
    return RepresentationCriterion(n, modulus, frozenset(classes), frozenset(special))


CRITERIA: dict[int, RepresentationCriterion] = {
    c.n: c
    for c in (
        _criterion(3, 3, {1}, {3}),
        _criterion(5, 20, {1, 9}, {5}),
        _criterion(6, 24, {1, 7}),
        _criterion(7, 7, {1, 2, 4}, {7}),
        _criterion(10, 40, {1, 9, 11, 19}),
        _criterion(13, 52, {1, 9, 17, 25, 29, 49}, {13}),
        _criterion(14, 56, {1, 9, 15, 23, 25, 39}),
        _criterion(15, 60, {1, 19, 31, 49}),
        _criterion(21, 84, {1, 25, 37}),
        _criterion(22, 88, {1, 9, 15, 23, 25, 31, 47, 49, 71, 81}),
        _criterion(30, 120, {1, 31, 49, 79}),
    )
}

SUPPORTED_N = tuple(sorted(CRITERIA))


@dataclass(frozen=True)
class Representation:
    """Nonnegative solution of x^2 + n*y^2 = q."""

    x: int
    y: int


def is_split_quaternion_Q(algebra: QuaternionAlgebra) -> bool:
    """True iff the algebra is split over Q (else it is a division algebra).

    Decided purely from the local symbols: split iff every Hilbert symbol of
    (a, b) equals +1.
    """
    return all(v == 1 for v in hilbert_product(algebra.a, algebra.b).values())


def congruence_criterion(n: int, q: int) -> bool:
    """True iff the odd prime q sits in the residue classes (or special
    primes) attached to n."""
    crit = CRITERIA.get(n)
    if crit is None:
        raise ValueError(f"n={n} unsupported; expected one of {SUPPORTED_N}")
    require_prime(q, odd=True)
    return crit.admits(q)


def represent(n: int, q: int) -> Representation | None:
    """Representation q = x^2 + n*y^2 with smallest y >= 0, or None.

    Exhaustive over 0 <= y <= sqrt(q/n); x is forced by y.
    """
    if n < 1:
        raise ValueError("n must be positive")
    require_prime(q)
    for y in range(isqrt(q // n) + 1):
        t = q - n * y * y
        if t < 0:
            break
        x = isqrt(t)
        if x * x == t:
            return Representation(x, y)
    return None


def split_over_odd_degree_field(degree: int, algebra: QuaternionAlgebra) -> bool:
    """Splitting over any number field of odd degree reduces to splitting
    over Q itself."""
    if degree < 1 or degree % 2 == 0:
        raise ValueError("only odd extension degrees are supported")
    return is_split_quaternion_Q(algebra)


@dataclass(frozen=True)
class EquivalenceReport:
    """Sweep outcome for one n: counts, disagreement primes, verdicts."""

    n: int
    bound: int
    primes_checked: int
    split_count: int
    congruence_count: int
    representation_count: int
    disagreements: tuple[int, ...]
    representation_iff_congruence: bool
    congruence_implies_split: bool
    split_implies_congruence: bool
    converse_required: bool
    converse_failures: tuple[int, ...] = field(default=())

    @property
    def mandated_ok(self) -> bool:
        """All implications the sweep is required to validate hold."""
        ok = self.representation_iff_congruence and self.congruence_implies_split
        if self.converse_required:
            ok = ok and self.split_implies_congruence
        return ok

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "bound": self.bound,
            "primes_checked": self.primes_checked,
            "split_count": self.split_count,
            "congruence_count": self.congruence_count,
            "representation_count": self.representation_count,
            "disagreements": list(self.disagreements),
            "representation_iff_congruence": self.representation_iff_congruence,
            "congruence_implies_split": self.congruence_implies_split,
            "split_implies_congruence": self.split_implies_congruence,
            "converse_required": self.converse_required,
            "converse_failures": list(self.converse_failures),
            "mandated_ok": self.mandated_ok,
        }


def _equivalence_rows(n: int, qs: list[int]) -> list[tuple[int, bool, bool, bool]]:
    return [
        (
            q,
            is_split_quaternion_Q(QuaternionAlgebra(-n, q)),
            congruence_criterion(n, q),
            represent(n, q) is not None,
        )
        for q in qs
    ]


def verify_equivalence(n: int, bound: int, jobs: int = 1) -> EquivalenceReport:
    """Check split / congruence / representation against each other for every
    odd prime q <= bound.

    The merged report does not depend on how the prime range is partitioned
    across workers.
    """
    if n not in CRITERIA:
        raise ValueError(f"n={n} unsupported; expected one of {SUPPORTED_N}")
    if bound < 3:
        raise ValueError("bound must be at least 3")
    qs = [q for q in primes_up_to(bound) if q != 2]
    if jobs > 1 and len(qs) > 1:
        chunks = [qs[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_equivalence_rows, [n] * len(chunks), chunks)
        rows = sorted(row for part in parts for row in part)
    else:
        rows = _equivalence_rows(n, qs)

    disagreements = tuple(q for q, s, c, r in rows if not (s == c == r))
    repr_iff_cong = all(r == c for _, _, c, r in rows)
    cong_implies_split = all(s for _, s, c, _ in rows if c)
    split_implies_cong = all(c for _, s, c, _ in rows if s)
    converse_failures = tuple(q for q, s, c, _ in rows if s and not c)
    log.debug("n=%d bound=%d: %d primes, %d disagreements", n, bound, len(rows), len(disagreements))
    return EquivalenceReport(
        n=n,
        bound=bound,
        primes_checked=len(rows),
        split_count=sum(1 for _, s, _, _ in rows if s),
        congruence_count=sum(1 for _, _, c, _ in rows if c),
        representation_count=sum(1 for _, _, _, r in rows if r),
        disagreements=disagreements,
        representation_iff_congruence=repr_iff_cong,
        congruence_implies_split=cong_implies_split,
        split_implies_congruence=split_implies_cong,
        converse_required=n in CONVERSE_PROVEN,
        converse_failures=converse_failures,
    )
