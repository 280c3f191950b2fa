from fractions import Fraction as F
from math import comb, factorial

import pytest

from hilbwall.exact import ExactError, LaurentPoly
from hilbwall.fmcalc import (TILDE, TRIVIAL, ChernSymbol, FMExpr, Insertion,
                             TnTerm, dilaton_step, reduce_pure_tilde,
                             string_step, tn_eval, tn_integral)


def c_(dim, coeffs):
    return ChernSymbol(dim, coeffs)


# --- tree-locus integrals -------------------------------------------------------

def test_tn_integral_base_values():
    assert tn_integral(2, 1, 0) == -1
    assert tn_integral(2, 0, 1) == 1


def test_tn_integral_examples():
    assert tn_integral(3, 3, 0) == 1
    assert tn_integral(4, 2, 3) == -2
    assert tn_integral(3, 1, 1) == 0


def test_tn_integral_degree_selection():
    for n in range(2, 11):
        for a in range(0, 26):
            for b in range(0, 26 - a):
                if tn_integral(n, a, b) != 0:
                    assert a + b == 2 * n - 3


def test_tn_integral_square_removal_recursion():
    # removing psi1^2 flips the sign, removing psi_inf^2 does not
    for n in range(3, 11):
        for a in range(0, 2 * n - 2):
            b = 2 * n - 3 - a
            expected = F(0)
            if a >= 2:
                expected -= tn_integral(n - 1, a - 2, b)
            if b >= 2:
                expected += tn_integral(n - 1, a, b - 2)
            assert tn_integral(n, a, b) == expected


def test_tn_integral_validation():
    with pytest.raises(ValueError):
        tn_integral(1, 0, 0)
    with pytest.raises(ValueError):
        tn_integral(3, -1, 4)


def test_tn_eval_examples():
    one = LaurentPoly.constant(1)
    assert tn_eval(2, [TnTerm(one, 1, 0)]) == LaurentPoly.constant(-1)
    terms = [TnTerm(LaurentPoly.monomial("t", -1), 0, 3),
             TnTerm(LaurentPoly.constant(2), 3, 0)]
    assert tn_eval(3, terms) == LaurentPoly("t", {-1: 1, 0: 2})
    assert tn_eval(5, [TnTerm(one, 0, 0)]).is_zero()


# --- dilaton and string rewrites -------------------------------------------------

def test_dilaton_step_examples():
    factor, reduced = dilaton_step(FMExpr(2, (TILDE,)))
    assert factor == c_(2, {1: 1})
    assert reduced == FMExpr(2, ())

    factor, reduced = dilaton_step(FMExpr(1, (TILDE, TILDE)))
    assert factor == c_(1, {1: -1, 0: 1})  # -(c1 - 1)
    assert reduced == FMExpr(1, (TILDE,))

    psi2 = Insertion(False, 2)
    factor, reduced = dilaton_step(FMExpr(3, (psi2, TILDE)))
    assert factor == c_(3, {1: -1, 0: 1})  # -(c3 - 1)
    assert reduced == FMExpr(3, (psi2,))


def test_dilaton_not_applicable():
    with pytest.raises(ExactError):
        dilaton_step(FMExpr(2, (TRIVIAL,)))
    with pytest.raises(ExactError):
        dilaton_step(FMExpr(2, (Insertion(True, 1),)))
    with pytest.raises(ExactError):
        dilaton_step(FMExpr(2, ()))


def test_string_step_examples():
    out = string_step(FMExpr(2, (TILDE, TRIVIAL)))
    assert out == [(F(-1), FMExpr(2, (TRIVIAL,)))]

    expr = FMExpr(1, (Insertion(True, 2), TILDE, TRIVIAL))
    out = string_step(expr)
    assert len(out) == 2
    assert all(sign == 1 for sign, _ in out)
    assert out[0][1] == FMExpr(1, (Insertion(False, 2), TILDE))
    assert out[1][1] == FMExpr(1, (Insertion(True, 2), TRIVIAL))

    out = string_step(FMExpr(3, (TILDE, TILDE, TRIVIAL)))
    assert len(out) == 2
    assert all(sign == 1 for sign, _ in out)


def test_string_not_applicable():
    with pytest.raises(ExactError):
        string_step(FMExpr(2, (TILDE,)))  # last insertion is a tilde
    with pytest.raises(ExactError):
        string_step(FMExpr(2, (TRIVIAL, TRIVIAL)))  # missing tilde


def test_class_tags_pass_through():
    tagged = Insertion(True, 0, "gamma")
    factor, reduced = dilaton_step(FMExpr(2, (tagged, TILDE)))
    assert reduced == FMExpr(2, (tagged,))
    out = string_step(FMExpr(2, (tagged, TRIVIAL)))
    assert out == [(F(-1), FMExpr(2, (Insertion(False, 0, "gamma"),)))]


# --- pure tilde closure ----------------------------------------------------------

def test_reduce_pure_tilde_small():
    assert reduce_pure_tilde(0, 2) == c_(2, {0: 1})
    assert reduce_pure_tilde(2, 2) == c_(2, {2: 1, 1: -1})        # c2*(c2 - 1)
    assert reduce_pure_tilde(3, 1) == c_(1, {3: -1, 2: 3, 1: -2})  # -c(c-1)(c-2)


def test_reduce_pure_tilde_matches_integer_binomials():
    # evaluate at integer points: the falling factorial is k! * C(x, k)
    for d in (1, 2, 3):
        for k in range(9):
            value = reduce_pure_tilde(k, d)
            for x in range(0, 15):
                assert value.evaluate(x) == (-1) ** (d * k) * factorial(k) * comb(x, k)


def test_chern_symbol_arithmetic():
    a = c_(2, {1: 1})
    assert (a - 1) * (a - 2) == c_(2, {2: 1, 1: -3, 0: 2})
    assert a.evaluate(F(1, 2)) == F(1, 2)
    with pytest.raises(ExactError):
        a * c_(3, {1: 1})
    assert str(c_(2, {2: 1, 0: -2})) == "-2 + 1*c2^2"
