import math
from fractions import Fraction

import pytest

from oracles import (
    GAMMA_QUARTER,
    double_factorial_brute,
    even_circuits_weighted_brute,
    exhaustive_expected_count,
    exhaustive_rank_distribution,
    f_odd_brute,
    f_odd_weighted_brute,
    second_moment_constant_1d,
    stability_integral_by_expansion,
)
from stablepart import CapExceeded, CyclicPartition
from stablepart.exact import (
    RankPolynomial,
    asymptotic_expected_partitions,
    asymptotic_p_stable,
    constants,
    double_factorial,
    exact_expected_partitions,
    exact_rank_gf,
    exact_stability_probability,
    f_even_circuits_weighted,
    f_odd,
    f_odd_by_cycles,
    f_odd_weighted,
    labelled_count,
    leading_constant,
    non_adjacent_pair_count,
    qn_bound,
    second_moment_constant,
    second_moment_integrand,
)

# frozen from the exhaustive and expansion oracles in tests/oracles.py
P22 = Fraction(233, 648)
P3FP = Fraction(1, 216)
P222 = Fraction(448035973, 5832000000)
P33 = Fraction(1742111, 7776000000)
E4 = Fraction(233, 216)
E4FP = Fraction(241, 216)
E6 = Fraction(90304039, 77760000)
E8 = Fraction(52876460957884849, 42692469120000000)


def test_frozen_values():
    assert exact_stability_probability("2,2") == P22
    assert exact_stability_probability("3+fp") == P3FP
    assert exact_stability_probability("2,2,2") == P222
    assert exact_stability_probability("3,3") == P33
    assert exact_stability_probability("2") == 1


def test_n4_against_exhaustive_oracle():
    assert sum(exhaustive_rank_distribution(4, [[0, 1], [2, 3]]).values()) == P22
    assert sum(exhaustive_rank_distribution(4, [[0, 1, 2], [3]]).values()) == P3FP
    assert exhaustive_expected_count(4, False) == E4
    assert exhaustive_expected_count(4, True) == E4FP
    assert exact_expected_partitions(4) == E4
    assert exact_expected_partitions(4, True) == E4FP


@pytest.mark.parametrize("cycles", [
    [[0, 1]],
    [[0, 1, 2]],
    [[0, 1, 2], [3]],
    [[0, 1], [2, 3]],
    [[0, 1], [2, 3], [4]],
    [[0, 1, 2, 3, 4]],
    [[0, 1, 2], [3, 4]],
    [[0, 1], [2, 3], [4, 5]],
    [[0, 1, 2], [3, 4, 5]],
    [[0, 1, 2, 3, 4], [5]],
])
def test_against_expansion_oracle(cycles):
    n = sum(map(len, cycles))
    pi = CyclicPartition.from_cycles(cycles)
    assert exact_stability_probability(pi) == stability_integral_by_expansion(n, cycles)


def test_label_invariance():
    ref = exact_stability_probability("3,2,2")
    for cycles in ([[6, 2, 4], [0, 5], [1, 3]], [[1, 0, 3], [6, 2], [5, 4]], [[2, 1], [0, 6, 3], [4, 5]]):
        assert exact_stability_probability(CyclicPartition.from_cycles(cycles)) == ref
    ref = exact_stability_probability("3+fp")
    assert exact_stability_probability(CyclicPartition.from_cycles([[3, 1, 0], [2]])) == ref


def test_expected_counts():
    assert exact_expected_partitions(2) == 1
    assert exact_expected_partitions(6) == 15 * P222 + 40 * P33
    assert exact_expected_partitions(6) == E6
    assert exact_expected_partitions(8) == E8
    assert labelled_count((2, 2, 2)) == 15 and labelled_count((3, 3)) == 40


def test_matching_probability_decreases():
    vals = [exact_stability_probability(",".join(["2"] * k)) for k in range(1, 5)]
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_cap():
    assert non_adjacent_pair_count("2,2") == 4
    with pytest.raises(CapExceeded):
        exact_stability_probability("2,2,2", cap=5)
    with pytest.raises(CapExceeded):
        exact_rank_gf("2,2,2,2")


def test_rank_gf_n4_exhaustive():
    gf = exact_rank_gf("2,2")
    assert gf.as_dict() == exhaustive_rank_distribution(4, [[0, 1], [2, 3]])
    assert gf(Fraction(1, 2)) == Fraction(97, 18432)
    assert gf.min_power == 4 and gf.max_power == 8


@pytest.mark.parametrize("shape", ["2", "3", "2,2", "5", "3,2", "2,2,2", "3,3"])
def test_rank_gf_mass_and_support(shape):
    gf = exact_rank_gf(shape)
    assert gf.total() == gf(1) == exact_stability_probability(shape)
    n = sum(int(c) for c in shape.split(","))
    m = sum(int(c) for c in shape.split(",") if int(c) % 2)
    assert gf.min_power >= n + m
    assert gf.max_power <= n * (n - 1)
    assert gf(0) == 0


def test_rank_gf_rejects_fixed_point():
    with pytest.raises(ValueError):
        exact_rank_gf("3+fp")


def test_rank_polynomial():
    p = RankPolynomial.from_dict({2: Fraction(1, 2), 0: 0, 1: 1})
    assert p.coeffs == ((1, Fraction(1)), (2, Fraction(1, 2)))
    assert p(2) == 4 and p.total() == Fraction(3, 2)
    assert RankPolynomial(()).min_power is None


def test_f_odd_against_brute():
    for m in range(9):
        assert f_odd(m) == f_odd_brute(m)
        assert f_odd_weighted(m) == f_odd_weighted_brute(m)
        assert sum(f_odd_by_cycles(m).values()) == f_odd(m)
        assert sum(k * v for k, v in f_odd_by_cycles(m).items()) == f_odd_weighted(m)
    assert [f_odd(m) for m in range(11)] == [1, 0, 0, 2, 0, 24, 40, 720, 2688, 42560, 245376]
    assert f_odd(3) == 2
    assert f_odd_weighted(6) == 80 and f_odd_weighted(8) == 5376


def test_f_even_against_brute():
    for nu in range(5):
        assert f_even_circuits_weighted(nu) == even_circuits_weighted_brute(nu)
    # two 4-cycles on 4 vertices is 3!=6 permutations with weight 2 each
    assert f_even_circuits_weighted(2) == 12


def test_double_factorial():
    for k in range(-1, 20):
        assert double_factorial(k) == double_factorial_brute(k)
    assert double_factorial(7) == 105
    for k in range(1, 10):
        assert double_factorial(2 * k - 1) == math.factorial(2 * k) // (2**k * math.factorial(k))
    with pytest.raises(ValueError):
        double_factorial(-2)


def test_leading_constant():
    c = leading_constant()
    assert c == pytest.approx(GAMMA_QUARTER / (math.sqrt(math.pi * math.e) * 2**0.25), abs=1e-14)
    assert c == pytest.approx(1.0432812417823716, abs=1e-12)
    assert asymptotic_expected_partitions(16) == pytest.approx(2 * c)
    with pytest.raises(ValueError):
        asymptotic_expected_partitions(1)


def test_second_moment_constant():
    c = second_moment_constant()
    assert c == pytest.approx(second_moment_constant_1d(), abs=1e-9)
    assert abs(second_moment_constant(1e-6, 1e-6) - c) < 1e-4
    assert c == pytest.approx(0.13569439949632353, abs=1e-9)


def test_second_moment_integrand():
    assert second_moment_integrand(1.0, 0.0) == pytest.approx(math.exp(-0.5))
    assert second_moment_integrand(4.0, 1.0) == pytest.approx(0.5 * math.exp(-8 - 8 - 1))


def test_qn_bound():
    c = second_moment_constant()
    assert qn_bound(16) == pytest.approx(2 * math.e * c / 2)
    assert qn_bound(16) == pytest.approx(0.3689, abs=1e-4)
    assert qn_bound(16, c=1.0) == pytest.approx(math.e)
    vals = [qn_bound(n) for n in (2, 8, 64, 4096)]
    assert all(a > b for a, b in zip(vals, vals[1:]))
    with pytest.raises(ValueError):
        qn_bound(1)


def test_asymptotic_p_stable():
    assert asymptotic_p_stable(4, 0) == pytest.approx(math.exp(0.5) / 3)
    assert asymptotic_p_stable(6, 2) == pytest.approx(math.exp(0.5) / 105)
    for n, m in ((10, 0), (10, 2), (20, 4)):
        ratio = asymptotic_p_stable(n, m + 2) / asymptotic_p_stable(n, m)
        assert ratio == pytest.approx(1 / (n + m + 1))
    # huge arguments stay finite
    assert 0 <= asymptotic_p_stable(400, 0) < 1e-300


def test_constants_keys():
    c = constants()
    assert set(c) == {"second_moment_constant", "leading_constant", "exp_half", "gamma_quarter"}
    assert c["gamma_quarter"] == pytest.approx(GAMMA_QUARTER, rel=1e-15)
