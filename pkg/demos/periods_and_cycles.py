"""Periodicity mod m: pure periods, eventually-periodic tails, and cycle entry.

The pair (e(n), e(n+1)) mod m walks a finite state space, so it is
eventually periodic. When gcd(B, m) = 1 the walk is a pure cycle through
(0, 1) whose length is the period k(m) (the Pisano period for Fibonacci).
When gcd(B, m) > 1 there is a tail, zeros disappear from the cycle, and the
residue preceding the pair (1, A) on the cycle is predictable in closed form.
"""
import math

from lucaslab import (
    RecurrenceParams,
    cycle_entry_check,
    cycle_entry_prediction,
    cycle_structure,
    period,
    period_law_report,
    squares_period_law_report,
)

fib = RecurrenceParams(1, 1)

print("=== Pisano periods ===")
for m in (2, 5, 10, 100, 1000):
    print(f"  k({m}) = {period(fib, m)}")

print()
print("=== prime-power ladders and the scaling law ===")
print("Once the period first grows (at height t), it should multiply by p per rung:")
for p in (2, 3, 5, 7):
    rep = period_law_report(fib, p, 4)
    print(f"  p={p}: ladder {list(rep.ladder)}  t={rep.t}  law_holds={rep.law_holds}")

print()
print("The squared sequence e(n)^2 mod p^e obeys the same scaling law,")
print("usually with a shorter base period:")
for p in (3, 5, 7):
    rep = squares_period_law_report(fib, p, 2)
    print(f"  p={p}: squares ladder {list(rep.ladder)}  law_holds={rep.law_holds}")

print()
print("=== the 2-adic anomaly ===")
print("At p = 2 the scaling law can genuinely fail. (A, B) = (-4, -1):")
rep = period_law_report(RecurrenceParams(-4, -1), 2, 4)
print(f"  ladder {list(rep.ladder)}  -> law predicts k(8) = 8, but k(8) = 4.")
print(f"  law_holds = {rep.law_holds}, violations = {list(rep.violations)}")
print("  The ladder is still monotone (each rung is x1 or x2); only the")
print("  'stabilize once, then always multiply' shape breaks, because the")
print("  unit group mod 8 is not cyclic. Odd primes never do this.")

print()
print("=== degenerate moduli: tails and cycle entry ===")
print("With gcd(B, m) > 1 the orbit has a tail and (0, 1) never returns:")
for a, b, m in ((1, 2, 4), (1, 2, 6), (1, 3, 9), (2, 3, 15)):
    params = RecurrenceParams(a, b)
    cs = cycle_structure(params, m)
    pred = cycle_entry_prediction(params, m)
    chk = cycle_entry_check(params, m)
    shown = "absent" if pred is None else pred
    print(f"  (A={a}, B={b}) mod {m}: tail {cs.tail_len}, cycle {cs.cycle_len}, "
          f"predicted pre-(1, A) residue: {shown}; "
          f"brute force agrees: {chk.consistent}")
print()
print("The prediction is t*(m/g) mod m with t = (A*m/g)^(-1) mod g, g = gcd(B, m);")
print("when the inverse does not exist, the pair (1, A) is not on the cycle at all.")

print()
print("=== a tiny atlas ===")
print("A,B,m,pure,tail,cycle")
for a in (1, 2):
    for b in (1, 2):
        for m in (4, 6, 9):
            cs = cycle_structure(RecurrenceParams(a, b), m)
            pure = "pure" if cs.pure else "tail"
            print(f"  {a},{b},{m}: {pure:4s} tail={cs.tail_len} cycle={cs.cycle_len}"
                  f"  (gcd(B, m) = {math.gcd(b, m)})")
