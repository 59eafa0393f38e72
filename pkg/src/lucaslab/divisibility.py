"""p-adic valuations, the law of repetition, divisibility laws, trailing zeros.

The law of repetition: if p^k exactly divides e(n) at the rank n = alpha(p),
then p^(k+1) first divides the sequence at index p*n, with valuation exactly
k+1. It holds for odd primes (p not dividing B, gcd(A, B) = 1); p = 2 can
overshoot the valuation and is reported as a finding, never silently skipped.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from sympy import factorint, isprime

from .core import (
    DEFAULT_DIGIT_BUDGET,
    RecurrenceParams,
    check_term_budget,
    term,
    term_pair,
)
from .errors import BudgetExceededError, DegenerateSequenceError, RankNotFoundError


def _nu(x: int, p: int) -> int | float:
    if x == 0:
        return math.inf
    x = abs(x)
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def valuation(x: int, p: int) -> int | float:
    """Largest k with p^k | x; math.inf for x = 0. Rejects composite p."""
    if not isprime(p):
        raise ValueError(f"p must be prime, got {p}")
    return _nu(x, p)


def _require_coprime(params: RecurrenceParams) -> None:
    if not params.coprime_AB:
        raise ValueError(f"gcd(A, B) != 1 for {params}; this law assumes coprime coefficients")


@dataclass(frozen=True)
class RepetitionLawReport:
    p: int
    base_rank: int
    base_valuation: int
    predicted_next_rank: int
    observed_next_rank: int | None
    observed_valuation_at_pn: int | float
    holds: bool


def repetition_law_check(params: RecurrenceParams, p: int,
                         scan_bound: int = 0) -> RepetitionLawReport:
    """Locate the rank of p, then find where the valuation first increases.

    scan_bound caps the index scan; 0 means "2*p*rank", comfortably past the
    predicted next rank. Raises RankNotFoundError if p never divides e(n) in
    range, and DegenerateSequenceError if e(rank) is exactly zero (infinite
    valuation; the law is vacuous there).
    """
    if not isprime(p):
        raise ValueError(f"p must be prime, got {p}")
    _require_coprime(params)
    if params.B % p == 0:
        raise ValueError(f"p = {p} divides B = {params.B}; the law assumes p does not divide B")

    # Rank of apparition mod p by direct pair iteration.
    A, B = params.A % p, params.B % p
    x, y = 0, 1 % p
    alpha = None
    rank_cap = scan_bound if scan_bound else p * p + 1
    for n in range(1, rank_cap + 1):
        x, y = y, (A * y + B * x) % p
        if x == 0:
            alpha = n
            break
    if alpha is None:
        raise RankNotFoundError(f"no zero of e(n) mod {p} for n <= {rank_cap}")

    base_val = valuation(term(params, alpha), p)
    if base_val == math.inf:
        raise DegenerateSequenceError(
            f"e({alpha}) = 0 exactly for {params}; prime-power repetition is vacuous"
        )
    assert isinstance(base_val, int)

    bound = scan_bound if scan_bound else 2 * p * alpha
    # Zeros mod p sit exactly at multiples of alpha, so step the exact pair
    # (e(s), e(s+1)) forward by alpha using the addition rule.
    e_am1, e_a = term_pair(params, alpha - 1)
    e_a1 = params.A * e_a + params.B * e_am1
    ex, ey = e_a, e_a1  # (e(alpha), e(alpha+1))
    observed = None
    j = 1
    while (j + 1) * alpha <= bound:
        ex, ey = (ey * e_a + params.B * ex * e_am1,
                  ey * e_a1 + params.B * ex * e_a)
        j += 1
        if _nu(ex, p) >= base_val + 1:
            observed = j * alpha
            break
    val_at_pn = _nu(term(params, p * alpha), p)
    holds = observed == p * alpha and val_at_pn == base_val + 1
    return RepetitionLawReport(
        p=p,
        base_rank=alpha,
        base_valuation=base_val,
        predicted_next_rank=p * alpha,
        observed_next_rank=observed,
        observed_valuation_at_pn=val_at_pn,
        holds=holds,
    )


@dataclass(frozen=True)
class DivisibilityCheck:
    """Verdict plus counterexamples for one of the divisibility biconditionals.

    degenerate lists indices exempted as trivial (|e(index)| <= 1);
    skipped lists work refused by the exact-term budget.
    """

    holds: bool
    counterexamples: tuple = ()
    degenerate: tuple = ()
    skipped: tuple = ()


def square_divisibility_check(params: RecurrenceParams, n: int, m_max: int,
                              digit_budget: int = DEFAULT_DIGIT_BUDGET) -> DivisibilityCheck:
    """Check e(n)^2 | e(n*m) <=> e(n) | m for every m in [1, m_max]."""
    _require_coprime(params)
    if n < 1 or m_max < 1:
        raise ValueError("n and m_max must be positive")
    e_n = term(params, n)
    if e_n == 0:
        raise DegenerateSequenceError(f"e({n}) = 0 for {params}; the biconditional is vacuous")
    check_term_budget(params, n * m_max, digit_budget)
    square = e_n * e_n
    counterexamples = []
    # One incremental pass; all needed indices are below n*m_max.
    prev, cur = 0, 1
    values = [0]
    for _ in range(n * m_max):
        values.append(cur)
        prev, cur = cur, params.A * cur + params.B * prev
    for m in range(1, m_max + 1):
        lhs = values[n * m] % square == 0
        rhs = m % abs(e_n) == 0
        if lhs != rhs:
            counterexamples.append((m, values[n * m]))
    return DivisibilityCheck(holds=not counterexamples,
                             counterexamples=tuple(counterexamples))


def power_divisibility_check(params: RecurrenceParams, n: int, k_max: int,
                             digit_budget: int = DEFAULT_DIGIT_BUDGET) -> DivisibilityCheck:
    """Check e(n)^(k+1) | e(n * e(n)^k) for k = 1..k_max.

    Indices grow like |e(n)|^k, so each k is budget-checked first and skipped
    (reported, not failed) when e(n * e(n)^k) would be astronomically large.
    """
    _require_coprime(params)
    if n < 1 or k_max < 1:
        raise ValueError("n and k_max must be positive")
    e_n = term(params, n)
    if abs(e_n) <= 1:
        return DivisibilityCheck(holds=True, degenerate=(n,))
    counterexamples = []
    skipped = []
    for k in range(1, k_max + 1):
        index = n * abs(e_n) ** k
        try:
            check_term_budget(params, index, digit_budget)
        except BudgetExceededError:
            skipped.append((k, index))
            continue
        if term(params, index) % abs(e_n) ** (k + 1) != 0:
            counterexamples.append((k, index))
    return DivisibilityCheck(holds=not counterexamples,
                             counterexamples=tuple(counterexamples),
                             skipped=tuple(skipped))


@dataclass(frozen=True)
class SequenceDivisibilityCheck:
    """Verdict on 'e(a) | e(b) iff a | b' over a rectangle of index pairs.

    Indices a with |e(a)| <= 1 are degenerate (a unit or zero divides
    everything) and are reported, not counted. Each counterexample carries
    the witness d = gcd(a, b): by the gcd law gcd(e(a), e(b)) = |e(gcd(a,b))|,
    a violation means |e(a)| divides |e(d)| for the proper divisor d < a, a
    magnitude collision that only index-mixing families (complex roots) hit.
    """

    holds: bool
    counterexamples: tuple = ()       # (a, b, gcd(a, b), e(a), e(gcd))
    degenerate: tuple = ()            # indices a with |e(a)| <= 1
    collision_indices: tuple = ()     # distinct a values among counterexamples


def divisibility_sequence_check(params: RecurrenceParams, a_max: int,
                                b_max: int) -> SequenceDivisibilityCheck:
    """Exhaustively test the divisibility biconditional for 1 <= a <= a_max, 1 <= b <= b_max."""
    _require_coprime(params)
    if a_max < 1 or b_max < 1:
        raise ValueError("a_max and b_max must be positive")
    values = [0, 1]
    while len(values) <= max(a_max, b_max):
        values.append(params.A * values[-1] + params.B * values[-2])
    degenerate = tuple(a for a in range(1, a_max + 1) if abs(values[a]) <= 1)
    counterexamples = []
    for a in range(1, a_max + 1):
        e_a = values[a]
        if abs(e_a) <= 1:
            continue
        for b in range(1, b_max + 1):
            if (values[b] % e_a == 0) != (b % a == 0):
                d = math.gcd(a, b)
                counterexamples.append((a, b, d, e_a, values[d]))
    collisions = tuple(sorted({a for a, *_ in counterexamples}))
    return SequenceDivisibilityCheck(holds=not counterexamples,
                                     counterexamples=tuple(counterexamples),
                                     degenerate=degenerate,
                                     collision_indices=collisions)


def trailing_zeros(params: RecurrenceParams, n: int, base: int) -> int:
    """Trailing zero digits of e(n) written in the given base, n >= 1.

    Computed by digit stripping and cross-checked against the valuation
    formula min over prime powers q^c || base of floor(nu_q(e(n)) / c).
    """
    if n < 1:
        raise ValueError(f"index must be positive, got {n}")
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    value = term(params, n)
    if value == 0:
        raise DegenerateSequenceError(
            f"e({n}) = 0 for {params}; the trailing-zero count is unbounded"
        )
    return _trailing_zeros_of(value, base, factorint(base))


def _trailing_zeros_of(value: int, base: int, base_factors: dict[int, int]) -> int:
    x = abs(value)
    stripped = 0
    while x % base == 0:
        x //= base
        stripped += 1
    by_valuation = min(_nu(value, q) // c for q, c in base_factors.items())
    if stripped != by_valuation:
        raise RuntimeError(
            f"digit stripping ({stripped}) disagrees with the valuation formula "
            f"({by_valuation}) for value with {len(str(abs(value)))} digits in base {base}"
        )
    return stripped


@dataclass(frozen=True)
class TrailingZerosReport:
    """Trailing-zero counts z(n) for 2 <= n <= n_max, and max z(n)/log2(n).

    zero_terms lists indices whose term is exactly zero (degenerate families
    only); they carry no finite count and are excluded from the ratio.
    """

    base: int
    samples: tuple[tuple[int, int], ...]
    max_ratio: float
    zero_terms: tuple[int, ...] = field(default=())

    def sample(self, n: int) -> int | None:
        for idx, z in self.samples:
            if idx == n:
                return z
        return None


def trailing_zeros_report(params: RecurrenceParams, base: int, n_max: int,
                          digit_budget: int = DEFAULT_DIGIT_BUDGET) -> TrailingZerosReport:
    """Sweep z(n) for 2 <= n <= n_max and record the largest ratio z(n)/log2(n)."""
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    check_term_budget(params, n_max, digit_budget)
    base_factors = factorint(base)
    samples = []
    zero_terms = []
    max_ratio = 0.0
    prev, cur = term_pair(params, 2)  # (e(2), e(3))
    value = prev
    for n in range(2, n_max + 1):
        if value == 0:
            zero_terms.append(n)
        else:
            z = _trailing_zeros_of(value, base, base_factors)
            samples.append((n, z))
            max_ratio = max(max_ratio, z / math.log2(n))
        prev, cur = cur, params.A * cur + params.B * prev
        value = prev
    return TrailingZerosReport(base=base, samples=tuple(samples),
                               max_ratio=max_ratio, zero_terms=tuple(zero_terms))
