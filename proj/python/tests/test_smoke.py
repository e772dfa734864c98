import json
from fractions import Fraction

import pytest

import phik


def test_phi_k_small_values():
    assert phik.phi_k(2, 15) == 24
    assert phik.phi_k(2, 12) == 0
    assert phik.phi_k(1, 97) == 96
    assert all(phik.phi_k(k, n) == phik.phi_k_oracle(k, n) for k in (1, 2, 3) for n in range(1, 25))


def test_big_values_are_exact_ints():
    v = phik.phi_k(6, 10**9 + 7)
    assert isinstance(v, int)
    assert v > 2**63


def test_two_parameter_forms_agree():
    assert phik.phi_k_nm(2, 15, 3) == 32
    assert phik.phi_k_nm_recursion(2, 15, 3) == 32
    with pytest.raises(ValueError):
        phik.phi_k_nm(2, 12, 5)


def test_n_k_methods():
    for method in ("closed", "recursion", "oracle"):
        assert phik.n_k(2, 15, 3, 1, method=method) == 16
    assert phik.n_k(3, 10, 5) == 13


def test_menon_sides():
    assert phik.menon_lhs(2, 15, "id") == phik.menon_rhs(2, 15, "id")
    assert isinstance(phik.menon_rhs(2, 15, "tau"), Fraction)


def test_verify_sweep_json():
    report = json.loads(phik.verify("menon_gcd", 2, 20))
    assert report["failures"] == []


def test_summatory_methods_agree():
    assert phik.sum_phi_k(2, 10) == 63
    assert phik.sum_phi_k(3, 5000, "direct") == phik.sum_phi_k(3, 5000, "convolution")
    with pytest.raises(ValueError):
        phik.sum_phi_k(2, 0)


def test_constant_enclosure():
    lo, hi = phik.euler_constant(2, 10**5)
    assert isinstance(lo, Fraction) and lo < hi
    assert lo <= Fraction(286747, 10**6) <= hi


def test_budget_refusal():
    with pytest.raises(phik.BudgetExceeded):
        phik.phi_k_oracle(4, 1000, budget=10**6)


def test_error_table_header():
    csv = phik.error_table(2, [100, 1000], prime_bound=10**4)
    assert csv.splitlines()[0] == "x,sum,main_term_lo,main_term_hi,delta,normalized_ratio"
