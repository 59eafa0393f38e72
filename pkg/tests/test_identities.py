"""Congruence and exact-identity checks."""
from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lucaslab import (
    HypothesisNotMetError,
    RecurrenceParams,
    cassini_value,
    det_power_identity_check,
    determinant_congruence_check,
    gcd_companion_check,
    multiplication_formula_check,
    period_step_congruence,
    term,
)

from .conftest import grid_params, naive_terms


# --- index-multiplication expansion -------------------------------------------

def test_multiplication_formula_worked_values(fib, pell):
    res = multiplication_formula_check(fib, 2, 3)
    assert res.holds and res.lhs == 16          # 2 * e(6) = C(2,1) * e(3) * v(3)
    res = multiplication_formula_check(pell, 3, 2)
    assert res.holds and res.lhs == 280         # 4 * e(6) = 3*2*36 + 8*8


def test_multiplication_formula_single_term(fib):
    res = multiplication_formula_check(fib, 1, 1)
    assert res.holds and res.lhs == res.rhs == 1


def test_multiplication_formula_over_grid():
    for params in grid_params(3):
        for a in range(1, 9):
            for n in range(1, 13):
                assert multiplication_formula_check(params, a, n).holds


@given(a_coef=st.integers(-7, 7), b_coef=st.integers(-7, 7).filter(lambda x: x != 0),
       a=st.integers(1, 10), n=st.integers(1, 20))
@settings(max_examples=150)
def test_multiplication_formula_random(a_coef, b_coef, a, n):
    assert multiplication_formula_check(RecurrenceParams(a_coef, b_coef), a, n).holds


# --- gcd of companion and term -------------------------------------------------

def test_gcd_companion_spots(fib, pell):
    assert gcd_companion_check(fib, 30) == (True, None)
    assert gcd_companion_check(pell, 30) == (True, None)


def test_gcd_companion_requires_coprime():
    with pytest.raises(ValueError):
        gcd_companion_check(RecurrenceParams(2, 4), 10)


def test_gcd_companion_over_grid():
    for params in grid_params(5):
        if not params.coprime_AB:
            continue
        assert gcd_companion_check(params, 30)[0]


# --- determinant congruence mod p^(e+1) ----------------------------------------

def test_determinant_congruence_fibonacci_worked(fib):
    # e(26)*e(24) = 24 = (e(6)*e(4))^5 (mod 25), conditional on 5 | e(5).
    res = determinant_congruence_check(fib, 5, 1, 5)
    assert res.holds and res.lhs == 24 and res.rhs == 24 and res.modulus == 25


def test_determinant_congruence_pell_worked(pell):
    res = determinant_congruence_check(pell, 3, 1, 4)
    assert res.holds and res.lhs == 1 and res.modulus == 9


def test_determinant_congruence_hypothesis_gate(fib):
    with pytest.raises(HypothesisNotMetError):
        determinant_congruence_check(fib, 5, 1, 3)      # 5 does not divide e(3) = 2


def test_determinant_congruence_rejects_two(fib):
    with pytest.raises(ValueError):
        determinant_congruence_check(fib, 2, 1, 3)


def test_determinant_congruence_unit_factor_for_fibonacci(fib):
    # With B = 1 the (-B)^(p-1) factor is 1, so both sides match the plain form.
    n, p, e = 5, 5, 1
    mod = p ** (e + 1)
    ee = naive_terms(1, 1, n * p + 2)
    plain = pow(ee[n + 1] * ee[n - 1], p, mod)
    res = determinant_congruence_check(fib, p, e, n)
    assert res.rhs == plain


def test_determinant_congruence_scan_small_grid():
    for params in grid_params(2):
        for p in (3, 5):
            if params.B % p == 0:
                continue
            e = naive_terms(params.A, params.B, 200)
            alpha = next(n for n in range(1, 200) if e[n] % p == 0)
            assert determinant_congruence_check(params, p, 1, alpha).holds
            assert determinant_congruence_check(params, p, 1, 2 * alpha).holds


# --- exact determinant power identity -------------------------------------------

def test_det_power_identity_worked(fib, pell):
    res = det_power_identity_check(fib, 3, 2)
    assert res.holds and res.lhs == res.rhs == -1
    res = det_power_identity_check(pell, 3, 1)
    assert res.holds and res.lhs == res.rhs == 1


def test_det_power_identity_rejects_even(fib):
    with pytest.raises(ValueError):
        det_power_identity_check(fib, 4, 2)
    with pytest.raises(ValueError):
        det_power_identity_check(fib, 2, 2)


def test_det_power_identity_composite_odd_ok(fib):
    assert det_power_identity_check(fib, 9, 4).holds


def test_det_power_identity_matches_cassini(fib):
    # Both sides are shifted Cassini values, so the closed form pins them.
    for p in (3, 5, 7, 9):
        for n in range(1, 10):
            res = det_power_identity_check(fib, p, n)
            assert res.lhs == cassini_value(fib, p * n + 1)
            assert res.rhs == cassini_value(fib, n + 1) ** p


def test_det_power_identity_over_grid():
    for params in grid_params(3):
        for p in (3, 5, 7, 9):
            for n in range(1, 16):
                assert det_power_identity_check(params, p, n).holds


# --- successor congruence mod e(n) ----------------------------------------------

def test_period_step_congruence_fibonacci(fib):
    # 8 * e(16) = v(5)^3 (mod 5): both reduce to 1.
    res = period_step_congruence(fib, 3, 5)
    assert res.holds and res.modulus == 5 and res.lhs == 1 and res.rhs == 1


def test_period_step_congruence_pell(pell):
    # 4 * e(9) = v(4)^2 (mod 12): both reduce to 4.
    res = period_step_congruence(pell, 2, 4)
    assert res.holds and res.modulus == 12 and res.lhs == 4 and res.rhs == 4


def test_period_step_congruence_vacuous(fib):
    res = period_step_congruence(fib, 4, 1)     # |e(1)| = 1
    assert res.holds and "vacuous" in res.context


def test_period_step_congruence_over_grid():
    for params in grid_params(3):
        for a in range(1, 7):
            for n in range(1, 13):
                assert period_step_congruence(params, a, n).holds


def test_period_step_exact_form(fib):
    # Same congruence checked from raw exact terms.
    for a in range(1, 6):
        for n in range(2, 10):
            e_n = term(fib, n)
            if abs(e_n) <= 1:
                continue
            v_n = 2 * term(fib, n + 1) - term(fib, n)
            assert (2 ** a * term(fib, a * n + 1) - v_n ** a) % abs(e_n) == 0
