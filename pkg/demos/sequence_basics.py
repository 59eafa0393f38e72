"""Tour of the exact-arithmetic layer.

The family is e(n) = A*e(n-1) + B*e(n-2) with seeds 0, 1. Fibonacci is
(A, B) = (1, 1); Pell is (2, 1). Everything below is exact integer
arithmetic, computed in O(log n) multiplications per term.
"""
from lucaslab import (
    RecurrenceParams,
    cassini_value,
    companion,
    seeded_term,
    term,
    term_pair,
)

fib = RecurrenceParams(1, 1)
pell = RecurrenceParams(2, 1)

print("=== terms ===")
print("Fibonacci e(0..10): ", [term(fib, n) for n in range(11)])
print("Pell      e(0..10): ", [term(pell, n) for n in range(11)])
print(f"Fibonacci e(500) has {len(str(term(fib, 500)))} digits:")
print(" ", term(fib, 500))

print()
print("=== pairs and companions ===")
print("term_pair(fib, 5) =", term_pair(fib, 5), " (consecutive terms in one shot)")
print("companion v(n) = 2*e(n+1) - A*e(n) gives the Lucas-type sequence:")
print("Fibonacci companions v(0..8):", [companion(fib, n) for n in range(9)])
print("Pell companions      v(0..6):", [companion(pell, n) for n in range(7)])

print()
print("=== arbitrary seeds live in the same recurrence space ===")
print("Any seeds (w0, w1) reduce to w1*e(n) + B*w0*e(n-1).")
print("Lucas numbers = seeds (2, 1):", [seeded_term(fib, 2, 1, n) for n in range(9)])
print("Pell-Lucas    = seeds (2, 2):", [seeded_term(pell, 2, 2, n) for n in range(7)])

print()
print("=== the Cassini determinant ===")
print("e(n+1)e(n-1) - e(n)^2 always equals (-1)^n * B^(n-1):")
for params, label in ((fib, "Fibonacci"), (pell, "Pell"), (RecurrenceParams(3, -2), "(3, -2)")):
    values = [cassini_value(params, n) for n in range(1, 8)]
    law = [(-1) ** n * params.B ** (n - 1) for n in range(1, 8)]
    print(f"  {label:10s} values {values}")
    assert values == law
print("  (the sign alternates; the magnitude is |B|^(n-1))")
