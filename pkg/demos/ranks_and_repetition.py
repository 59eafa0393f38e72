"""Rank of apparition, zero progressions, and the law of repetition.

alpha(m) is the first positive index with e(n) = 0 (mod m). In the pure
regime the zero indices are exactly alpha, 2*alpha, 3*alpha, ... and prime
powers enter the sequence in a rigid pattern: if p^k exactly divides
e(alpha(p)), then p^(k+1) first divides at index p*alpha, with valuation
exactly k+1 -- for odd primes. p = 2 overshoots for some families.
"""
from lucaslab import (
    DegenerateSequenceError,
    RecurrenceParams,
    rank,
    repetition_law_check,
    term,
    valuation,
    zero_indices_check,
)

fib = RecurrenceParams(1, 1)
pell = RecurrenceParams(2, 1)

print("=== rank of apparition ===")
for m in (2, 5, 7, 10, 25):
    rep = rank(fib, m)
    extra = ""
    if rep.valuation_at_alpha is not None:
        extra = f"  (valuation at the rank: {rep.valuation_at_alpha})"
    print(f"  Fibonacci alpha({m}) = {rep.alpha}{extra}")
print(f"  Pell alpha(3) = {rank(pell, 3).alpha}   (e(4) = 12)")
print(f"  (A=1, B=2) mod 4 has no zeros at all: alpha = {rank(RecurrenceParams(1, 2), 4).alpha}")

print()
print("=== zeros form an arithmetic progression ===")
chk = zero_indices_check(fib, 5, 40)
print(f"  Fibonacci mod 5, n <= 40: alpha = {chk.alpha}, progression holds: {chk.holds}")
print("  zeros:", [n for n in range(1, 41) if term(fib, n) % 5 == 0])

print()
print("=== law of repetition at odd primes ===")
for params, label, p in ((fib, "Fibonacci", 5), (fib, "Fibonacci", 7), (pell, "Pell", 3)):
    rep = repetition_law_check(params, p)
    print(f"  {label} p={p}: rank {rep.base_rank} carries p^{rep.base_valuation}; "
          f"p^{rep.base_valuation + 1} first divides at index {rep.observed_next_rank} "
          f"= p * rank -> holds: {rep.holds}")

print()
print("=== the p = 2 exception ===")
rep = repetition_law_check(fib, 2)
print(f"  Fibonacci p=2: rank 3 (e(3) = 2), predicted next rank {rep.predicted_next_rank}.")
print(f"  The next even-deeper term IS e(6) = {term(fib, 6)}, but its 2-adic valuation")
print(f"  is {rep.observed_valuation_at_pn}, not {rep.base_valuation + 1}: "
      f"the valuation overshoots. holds = {rep.holds}")
print("  (The overshoot comes from the companion term being even as well;")
print("   the library reports it as a finding rather than hiding it.)")

print()
print("=== degenerate families ===")
print("(1, -1) repeats 0, 1, 1, 0, -1, -1 forever, so e(3) = 0 exactly and")
print("valuations at the rank are infinite:")
print("  nu_5(e(3)) =", valuation(term(RecurrenceParams(1, -1), 3), 5))
try:
    repetition_law_check(RecurrenceParams(1, -1), 5)
except DegenerateSequenceError as exc:
    print("  repetition_law_check says:", exc)
