"""Modular sequence machinery: 2x2 matrix powers, cycles, periods, ranks.

The pair state (e(n) mod m, e(n+1) mod m) advances by (x, y) -> (y, Ay + Bx).
When gcd(B, m) = 1 the state map is invertible (the companion matrix has
determinant -B), so the orbit of (0, 1) is purely periodic; otherwise it has
a tail before entering its cycle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from sympy import factorint, isprime

from .core import RecurrenceParams, term
from .divisibility import valuation
from .errors import BudgetExceededError, NoPurePeriodError

DEFAULT_STATE_BUDGET = 10**8

Mat2Tuple = tuple[int, int, int, int]


@dataclass(frozen=True)
class Mat2:
    """A 2x2 matrix over Z/m, row-major entries (a, b, c, d), m >= 2."""

    a: int
    b: int
    c: int
    d: int
    m: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError(f"modulus must be >= 2, got {self.m}")
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, getattr(self, name) % self.m)

    @classmethod
    def identity(cls, m: int) -> Mat2:
        return cls(1, 0, 0, 1, m)

    @classmethod
    def companion(cls, params: RecurrenceParams, m: int) -> Mat2:
        """The matrix [[A, B], [1, 0]] mod m; its n-th power carries e(n)."""
        return cls(params.A, params.B, 1, 0, m)

    def __matmul__(self, other: Mat2) -> Mat2:
        if self.m != other.m:
            raise ValueError(f"modulus mismatch: {self.m} != {other.m}")
        prod = _mat_mul(self.entries, other.entries, self.m)
        return Mat2(*prod, self.m)

    @property
    def entries(self) -> Mat2Tuple:
        return (self.a, self.b, self.c, self.d)


def _mat_mul(x: Mat2Tuple, y: Mat2Tuple, m: int) -> Mat2Tuple:
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % m, (a * f + b * h) % m,
            (c * e + d * g) % m, (c * f + d * h) % m)


def _mat_pow(base: Mat2Tuple, exponent: int, m: int) -> Mat2Tuple:
    result = (1 % m, 0, 0, 1 % m)
    while exponent:
        if exponent & 1:
            result = _mat_mul(result, base, m)
        base = _mat_mul(base, base, m)
        exponent >>= 1
    return result


def mat_pow(matrix: Mat2, exponent: int) -> Mat2:
    """Return matrix**exponent by binary exponentiation; exponent 0 gives I."""
    if exponent < 0:
        raise ValueError(f"exponent must be nonnegative, got {exponent}")
    return Mat2(*_mat_pow(matrix.entries, exponent, matrix.m), matrix.m)


def term_mod(params: RecurrenceParams, n: int, m: int) -> int:
    """Return e(n) mod m in O(log n) 2x2 modular multiplications.

    M^n = [[e(n+1), B*e(n)], [e(n), B*e(n-1)]] for the companion matrix M,
    so the lower-left entry is the answer without any division by B.
    """
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    base = (params.A % m, params.B % m, 1 % m, 0)
    return _mat_pow(base, n, m)[2]


@dataclass(frozen=True)
class CycleStructure:
    """Tail and cycle of the pair sequence (e(n), e(n+1)) mod m.

    pure is True exactly when tail_len = 0, equivalently gcd(B, m) = 1.
    """

    modulus: int
    tail_len: int
    cycle_len: int

    @property
    def pure(self) -> bool:
        return self.tail_len == 0


def _check_state_budget(m: int, state_budget: int) -> None:
    if m * m > state_budget:
        raise BudgetExceededError(
            f"modulus {m} needs up to {m * m} pair states, over the budget of {state_budget}"
        )


def _pair_orbit(params: RecurrenceParams, m: int,
                state_budget: int) -> tuple[int, int, list[tuple[int, int]]]:
    """First-repeat scan of the pair orbit from (0, 1).

    Returns (tail_len, cycle_len, states), where states lists the orbit up to
    but not including the first repeated state. Stored-state lookup gives the
    minimal tail and cycle in one pass; Floyd/Brent would need a second pass
    to recover minimality.
    """
    _check_state_budget(m, state_budget)
    A, B = params.A % m, params.B % m
    seen: dict[tuple[int, int], int] = {}
    states: list[tuple[int, int]] = []
    x, y = 0, 1 % m
    i = 0
    while (x, y) not in seen:
        seen[(x, y)] = i
        states.append((x, y))
        x, y = y, (A * y + B * x) % m
        i += 1
    first = seen[(x, y)]
    return first, i - first, states


def cycle_structure(params: RecurrenceParams, m: int,
                    state_budget: int = DEFAULT_STATE_BUDGET) -> CycleStructure:
    """Minimal (tail_len, cycle_len) of the pair sequence mod m.

    Scans at most m^2 + 1 states; refuses moduli whose worst case exceeds
    state_budget.
    """
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    tail, cyc, _ = _pair_orbit(params, m, state_budget)
    if (tail == 0) != (math.gcd(params.B, m) == 1):
        raise RuntimeError(
            f"internal invariant broken: tail={tail} but gcd(B, m)={math.gcd(params.B, m)}"
        )
    return CycleStructure(modulus=m, tail_len=tail, cycle_len=cyc)


def period(params: RecurrenceParams, m: int,
           state_budget: int = DEFAULT_STATE_BUDGET) -> int:
    """The period k(m): least k >= 1 with (e(k), e(k+1)) = (0, 1) mod m.

    Exists iff gcd(B, m) = 1; the degenerate regime raises NoPurePeriodError.
    """
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if math.gcd(params.B, m) != 1:
        raise NoPurePeriodError(
            f"gcd(B, m) = {math.gcd(params.B, m)} != 1 for {params}, m={m}; "
            "no pure period exists, use cycle_structure"
        )
    _check_state_budget(m, state_budget)
    # Pure orbit: loop straight back to (0, 1), no bookkeeping needed.
    A, B = params.A % m, params.B % m
    x, y = 1 % m, A
    k = 1
    limit = m * m + 1
    while (x, y) != (0, 1 % m):
        x, y = y, (A * y + B * x) % m
        k += 1
        if k > limit:
            raise RuntimeError(f"no return to (0, 1) within {limit} steps; impossible")
    return k


@dataclass(frozen=True)
class RankReport:
    """Rank of apparition alpha(m) plus, for prime-power moduli, the exact valuation there.

    alpha is None when no index n >= 1 in the orbit has e(n) = 0 (mod m);
    valuation_at_alpha is None unless m is a prime power and alpha exists.
    It is math.inf when the rank term is exactly zero.
    """

    modulus: int
    alpha: int | None
    valuation_at_alpha: int | float | None


def rank(params: RecurrenceParams, m: int,
         state_budget: int = DEFAULT_STATE_BUDGET) -> RankReport:
    """Least n >= 1 with e(n) = 0 (mod m), scanning one tail plus one cycle."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    tail, cyc, states = _pair_orbit(params, m, state_budget)
    alpha = None
    for n in range(1, tail + cyc + 1):
        x = states[n][0] if n < len(states) else states[tail + (n - tail) % cyc][0]
        if x == 0:
            alpha = n
            break
    val: int | float | None = None
    if alpha is not None:
        fac = factorint(m)
        if len(fac) == 1:
            (p, _), = fac.items()
            val = valuation(term(params, alpha), p)
    return RankReport(modulus=m, alpha=alpha, valuation_at_alpha=val)


@dataclass(frozen=True)
class ZeroProgressionCheck:
    """Verdict on 'the zero indices mod m up to limit are exactly alpha, 2*alpha, ...'."""

    modulus: int
    limit: int
    alpha: int
    holds: bool
    first_violation: int | None


def zero_indices_check(params: RecurrenceParams, m: int, limit: int,
                       state_budget: int = DEFAULT_STATE_BUDGET) -> ZeroProgressionCheck:
    """Check that zeros of e mod m form the arithmetic progression of multiples of alpha(m).

    Requires gcd(B, m) = 1 (a zero and a pure period always exist there).
    """
    if limit < 1:
        raise ValueError(f"limit must be positive, got {limit}")
    if math.gcd(params.B, m) != 1:
        raise NoPurePeriodError(
            f"gcd(B, m) != 1 for {params}, m={m}; zero indices need the pure regime"
        )
    report = rank(params, m, state_budget=state_budget)
    assert report.alpha is not None  # guaranteed in the pure regime
    alpha = report.alpha
    expected = set(range(alpha, limit + 1, alpha))
    zeros = set()
    A, B = params.A % m, params.B % m
    x, y = 0, 1 % m
    for n in range(1, limit + 1):
        x, y = y, (A * y + B * x) % m
        if x == 0:
            zeros.add(n)
    holds = zeros == expected
    first_violation = min(zeros ^ expected) if not holds else None
    return ZeroProgressionCheck(modulus=m, limit=limit, alpha=alpha,
                                holds=holds, first_violation=first_violation)


@dataclass(frozen=True)
class PeriodLawReport:
    """The ladder k(p), k(p^2), ..., its stabilization height t, and the scaling-law verdict.

    law_holds means: for every e > t in the ladder, k(p^e) = p^(e-t) * k(p),
    where t is the largest exponent with k(p^t) = k(p). Violations list the
    offending (e, k(p^e)) rungs; a false verdict is a finding, not an error.
    """

    p: int
    ladder: tuple[tuple[int, int], ...]
    t: int
    law_holds: bool
    violations: tuple[tuple[int, int], ...]


def _law_verdict(p: int, ladder: list[tuple[int, int]]) -> PeriodLawReport:
    k1 = ladder[0][1]
    t = max(e for e, k in ladder if k == k1)
    violations = tuple((e, k) for e, k in ladder if e > t and k != p ** (e - t) * k1)
    return PeriodLawReport(p=p, ladder=tuple(ladder), t=t,
                           law_holds=not violations, violations=violations)


def period_law_report(params: RecurrenceParams, p: int, e_max: int,
                      state_budget: int = DEFAULT_STATE_BUDGET) -> PeriodLawReport:
    """Compute k(p^e) for e = 1..e_max directly and test the prime-power scaling law."""
    if not isprime(p):
        raise ValueError(f"p must be prime, got {p}")
    if params.B % p == 0:
        raise ValueError(f"p = {p} divides B = {params.B}; no pure periods mod p^e")
    if e_max < 1:
        raise ValueError(f"e_max must be positive, got {e_max}")
    ladder = [(e, period(params, p ** e, state_budget=state_budget))
              for e in range(1, e_max + 1)]
    return _law_verdict(p, ladder)


def _squares_period(params: RecurrenceParams, m: int, state_budget: int) -> int:
    """Minimal period of n -> e(n)^2 mod m (pure regime only).

    The squares sequence inherits the pair period K, so its minimal period is
    the smallest divisor d of K that shifts the squared orbit onto itself.
    """
    k = period(params, m, state_budget=state_budget)
    sq = []
    A, B = params.A % m, params.B % m
    x, y = 0, 1 % m
    for _ in range(k):
        sq.append(x * x % m)
        x, y = y, (A * y + B * x) % m
    for d in sorted(d for d in range(1, k + 1) if k % d == 0):
        if all(sq[n] == sq[(n + d) % k] for n in range(k)):
            return d
    return k


def squares_period_law_report(params: RecurrenceParams, p: int, e_max: int,
                              state_budget: int = DEFAULT_STATE_BUDGET) -> PeriodLawReport:
    """Same ladder computation and scaling law, for the squared sequence e(n)^2 mod p^e."""
    if not isprime(p):
        raise ValueError(f"p must be prime, got {p}")
    if params.B % p == 0:
        raise ValueError(f"p = {p} divides B = {params.B}; no pure periods mod p^e")
    if e_max < 1:
        raise ValueError(f"e_max must be positive, got {e_max}")
    ladder = [(e, _squares_period(params, p ** e, state_budget))
              for e in range(1, e_max + 1)]
    return _law_verdict(p, ladder)


def cycle_entry_prediction(params: RecurrenceParams, m: int) -> int | None:
    """Predict the residue that precedes the pair (1, A) on the cycle when gcd(B, m) != 1.

    With g = gcd(B, m) and q = m/g, a predecessor (x, 1) of (1, A) forces
    B*x = 0 (mod m), so x = t*q; for (x, 1) to sit on the cycle it needs a
    predecessor of its own, which requires A*t*q = 1 (mod g). Hence
    t = (A*q)^(-1) mod g when that inverse exists, and the prediction is
    x = t*q mod m. Returns None when the inverse does not exist, in which
    case (1, A) does not lie on the cycle at all.
    """
    g = math.gcd(params.B, m)
    if g == 1:
        raise ValueError(
            f"gcd(B, m) = 1 for {params}, m={m}: the cycle starts at (0, 1), use period"
        )
    q = m // g
    try:
        t = pow(params.A * q, -1, g)
    except ValueError:
        return None
    return (t * q) % m


@dataclass(frozen=True)
class CycleEntryCheck:
    """Brute-force verdict on a cycle-entry prediction.

    predicted is None when the formula is inapplicable; in every consistent
    case that coincides with the pair (1, A) being absent from the cycle.
    """

    modulus: int
    predicted: int | None
    pair_on_cycle: bool
    observed: int | None
    consistent: bool


def cycle_entry_check(params: RecurrenceParams, m: int,
                      state_budget: int = DEFAULT_STATE_BUDGET) -> CycleEntryCheck:
    """Compare cycle_entry_prediction against the actual cycle content mod m."""
    predicted = cycle_entry_prediction(params, m)  # also validates gcd(B, m) != 1
    tail, cyc, states = _pair_orbit(params, m, state_budget)
    cycle_states = states[tail:]
    target = (1 % m, params.A % m)
    observed = None
    if target in cycle_states:
        i = cycle_states.index(target)
        observed = cycle_states[(i - 1) % cyc][0]
    consistent = (observed is None and predicted is None) or (observed == predicted)
    return CycleEntryCheck(modulus=m, predicted=predicted,
                           pair_on_cycle=observed is not None,
                           observed=observed, consistent=consistent)
