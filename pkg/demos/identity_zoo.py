"""The identity zoo: exact expansions and prime-power congruences.

Everything here is checked with both sides fully materialized, so each
result object can be inspected rather than trusted.
"""
from lucaslab import (
    RecurrenceParams,
    det_power_identity_check,
    determinant_congruence_check,
    divisibility_sequence_check,
    gcd_companion_check,
    multiplication_formula_check,
    period_step_congruence,
    power_divisibility_check,
    square_divisibility_check,
    term,
)

fib = RecurrenceParams(1, 1)
pell = RecurrenceParams(2, 1)

print("=== index multiplication ===")
print("2^(a-1) e(an) expands into the odd binomial terms C(a,j) D^((j-1)/2) e^j v^(a-j):")
for params, a, n in ((fib, 2, 3), (pell, 3, 2), (fib, 8, 12)):
    res = multiplication_formula_check(params, a, n)
    print(f"  {params} a={a} n={n}: lhs = rhs = {res.lhs}  holds={res.holds}")

print()
print("=== determinant congruences mod p^(e+1) ===")
res = determinant_congruence_check(fib, 5, 1, 5)
print(f"  Fibonacci, p=5, n=5 (5 | e(5)): e(26)e(24) = {res.lhs} (mod 25), "
      f"(e(6)e(4))^5 = {res.rhs} (mod 25)  holds={res.holds}")
res = determinant_congruence_check(pell, 3, 1, 4)
print(f"  Pell, p=3, n=4 (3 | e(4)):     e(13)e(11) = {res.lhs} (mod 9),  "
      f"(e(5)e(3))^3 *(-B)^2 = {res.rhs} (mod 9)  holds={res.holds}")

print()
print("=== the shifted determinant is a perfect p-th power ===")
for params, p, n in ((fib, 3, 2), (pell, 3, 1), (fib, 9, 4)):
    res = det_power_identity_check(params, p, n)
    print(f"  {params} p={p} n={n}: e(pn+2)e(pn) - e(pn+1)^2 = {res.lhs} "
          f"= (window at n)^{p}  holds={res.holds}")
print("  (odd p only; even p flips the sign of one side)")

print()
print("=== successor congruence mod e(n) ===")
for params, a, n in ((fib, 3, 5), (pell, 2, 4)):
    res = period_step_congruence(params, a, n)
    print(f"  {params}: 2^{a} e({a}*{n}+1) = v({n})^{a} = {res.lhs} (mod {res.modulus})"
          f"  holds={res.holds}")
print("  (this is what forces k(p^(e+1)) = p * k(p^e) once the ladder starts moving)")

print()
print("=== gcd of a term with its companion ===")
holds, _ = gcd_companion_check(fib, 30)
print(f"  gcd(v(n), e(n)) stays in {{1, 2}} for Fibonacci, n <= 30: {holds}")

print()
print("=== divisibility laws ===")
print("  e(n)^2 | e(nm)  <=>  e(n) | m:",
      square_divisibility_check(fib, 5, 10).holds, "(Fibonacci, n=5)")
print("  e(n)^(k+1) | e(n e(n)^k):     ",
      power_divisibility_check(fib, 4, 2).holds, "(Fibonacci, n=4: 27 | e(36))")
chk = divisibility_sequence_check(fib, 12, 36)
print(f"  e(a) | e(b) <=> a | b:         {chk.holds} "
      f"(Fibonacci; unit indices {list(chk.degenerate)} exempt)")

print()
print("=== when the pairwise biconditional cracks ===")
params = RecurrenceParams(-3, -5)
chk = divisibility_sequence_check(params, 15, 60)
a, b, d, e_a, e_d = chk.counterexamples[0]
print(f"  (A=-3, B=-5) has |e(2)| = |e(4)| = 3, a magnitude collision:")
print(f"  e({a}) = {e_a} divides e({b}) = {term(params, b)} although {a} does not divide {b}.")
print(f"  All {len(chk.counterexamples)} counterexamples collapse onto index a=4,")
print("  each witnessed through gcd(e(a), e(b)) = |e(gcd(a, b))|. Complex-root")
print("  families are the only place this happens; growing families are immune.")
