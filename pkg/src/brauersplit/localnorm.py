"""Norm membership in unramified local extensions and the symbol-algebra trace.

In an unramified local extension of residual degree f, an element of the base
field with valuation m is a norm iff f divides m; units are always norms.
`symbol_algebra_norm_trace` applies this to the degree-q symbol algebra whose
second parameter is the ql-th power of a prime element above p: the relative
residual degree is read off the q-power residue character of the first
parameter, and divisibility then settles norm membership.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .arith import multiplicative_order, require_prime
from .cyclotomic import (
    SUPPORTED_Q,
    CyclotomicInt,
    RamifiedPrimeError,
    find_prime_ideal,
    power_residue_character,
)


@dataclass(frozen=True)
class NormQuestion:
    """Is pi^m * u a norm from the unramified extension of residual degree f?"""

    m: int
    f: int


def is_norm_unramified(question: NormQuestion) -> bool:
    """True iff f divides m."""
    if question.f < 1:
        raise ValueError("residual degree must be positive")
    return question.m % question.f == 0


class NormTraceCase(Enum):
    INERT_BASE = "inert_base"
    SPLIT_BASE_CHAR_ONE = "split_base_char_one"
    SPLIT_BASE_CHAR_NONTRIVIAL = "split_base_char_nontrivial"
    RAMIFIED = "ramified"


@dataclass(frozen=True)
class SymbolAlgebraQuery:
    """Symbol algebra of degree q over the completion at a prime above p,
    with parameters (alpha, p1^(q*l))."""

    alpha: int | CyclotomicInt
    p: int
    q: int
    l: int

    def __post_init__(self):
        if self.q not in SUPPORTED_Q:
            raise ValueError(f"q={self.q} unsupported; expected one of {SUPPORTED_Q}")
        require_prime(self.p)
        if self.p == self.q:
            raise RamifiedPrimeError(f"p = q = {self.p} is outside the unramified analysis")
        if self.l < 1:
            raise ValueError("l must be a positive integer")


@dataclass(frozen=True)
class SplitTrace:
    """Decision trail: base-field decomposition case, residual degrees, and
    the norm verdict.  Ramified inputs (character zero) leave f_rel and
    is_norm undecided rather than guessing."""

    case: NormTraceCase
    f_prime: int
    f_rel: int | None
    m: int
    is_norm: bool | None


def symbol_algebra_norm_trace(query: SymbolAlgebraQuery) -> SplitTrace:
    """Classify the extension above p and decide whether p1^(q*l) is a norm.

    The character of alpha at the chosen prime ideal picks the relative
    residual degree: trivial character means totally split (f_rel = 1),
    a nontrivial root of unity means inert (f_rel = q); either way f_rel
    divides q*l, reproducing the expected norm conclusion.  Character zero
    means the Kummer extension ramifies at the prime, which the unramified
    norm criterion does not cover.
    """
    p, q = query.p, query.q
    f_prime = multiplicative_order(p, q)
    ideal = find_prime_ideal(p, q)
    chi = power_residue_character(query.alpha, ideal)
    m = q * query.l
    if chi.is_zero:
        return SplitTrace(
            case=NormTraceCase.RAMIFIED, f_prime=f_prime, f_rel=None, m=m, is_norm=None
        )
    f_rel = 1 if chi.is_trivial else q
    if f_prime == q - 1:
        case = NormTraceCase.INERT_BASE
    elif chi.is_trivial:
        case = NormTraceCase.SPLIT_BASE_CHAR_ONE
    else:
        case = NormTraceCase.SPLIT_BASE_CHAR_NONTRIVIAL
    return SplitTrace(
        case=case,
        f_prime=f_prime,
        f_rel=f_rel,
        m=m,
        is_norm=is_norm_unramified(NormQuestion(m=m, f=f_rel)),
    )
