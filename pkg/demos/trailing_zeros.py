"""Trailing zeros of sequence terms, written in any base.

The count z(n) of trailing zeros of e(n) in base m is controlled by the
repetition law: deeper prime-power divisibility only appears at indices that
are p-fold multiples of earlier ranks, so z(n) grows at most logarithmically
in n. The report below makes that bound empirical.
"""
import math

from lucaslab import RecurrenceParams, term, trailing_zeros, trailing_zeros_report

fib = RecurrenceParams(1, 1)

print("=== spot counts ===")
print(f"  e(15)  = {term(fib, 15)}  -> {trailing_zeros(fib, 15, 10)} trailing zero(s) in base 10")
print(f"  e(150) ends ...{str(term(fib, 150))[-8:]}  -> {trailing_zeros(fib, 150, 10)} in base 10")
print(f"  e(6)   = {term(fib, 6)} = 1000 in base 2 -> {trailing_zeros(fib, 6, 2)} in base 2")

print()
print("=== the logarithmic bound, empirically ===")
rep = trailing_zeros_report(fib, 10, 2000)
print(f"  base 10, n <= 2000: max z(n)/log2(n) = {rep.max_ratio:.6f}")
deep = sorted(rep.samples, key=lambda s: -s[1])[:5]
for n, z in deep:
    print(f"    z({n}) = {z}   ratio {z / math.log2(n):.4f}")
print("  The ratio stays bounded: each extra zero needs the index to pick up")
print("  another factor of 2 AND 5 through the repetition ladder, which")
print("  multiplies the index rather than adding to it.")

print()
print("=== base 2 for a few families ===")
for a, b in ((1, 1), (2, 1), (3, 2)):
    params = RecurrenceParams(a, b)
    rep = trailing_zeros_report(params, 2, 300)
    best = max(rep.samples, key=lambda s: s[1])
    print(f"  (A={a}, B={b}): deepest base-2 count to n=300 is z({best[0]}) = {best[1]}, "
          f"max ratio {rep.max_ratio:.4f}")

print()
print("Every count is computed twice: by stripping digits and by the")
print("valuation formula min over q^c || base of floor(nu_q(e(n))/c);")
print("the two are cross-checked on every sample above.")
