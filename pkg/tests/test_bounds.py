import itertools
import math
from fractions import Fraction

import pytest

from gf4lrc import bounds
from gf4lrc.errors import EmptyTauRange, InvalidShape, OddDistance, ParseError
from gf4lrc.families import cap_code, cyclic4, hamming4, hexacode
from gf4lrc.gf4 import W, W2
from gf4lrc.projective import bundled_cap_pg3_17


def lrc_ball_size_definition(ell: int, d: int) -> int:
    """The constrained multinomial sum, enumerated term by term."""
    cap = (d - 1) // 4
    total = 0
    for tup in itertools.product(range(4), repeat=ell):
        if sum(tup) <= cap:
            prod = 1
            for i in tup:
                prod *= math.comb(3, 2 * i)
            total += prod
    return total


def test_ceil_log_exact():
    assert bounds.ceil_log(2, 1) == 0
    assert bounds.ceil_log(2, 2) == 1
    assert bounds.ceil_log(2, Fraction(21077, 2)) == 14
    assert bounds.ceil_log(4, 16) == 2
    assert bounds.ceil_log(4, 17) == 3
    assert bounds.ceil_log(2, 2**100) == 100
    assert bounds.ceil_log(2, 2**100 + 1) == 101


def test_singleton_like():
    assert bounds.singleton_like_max_d(12, 4, 2) == 8
    # trivial-outer concatenations meet the bound with d = 2
    for n1 in (3, 4, 5):
        assert bounds.singleton_like_max_d(3 * n1, 2 * n1, 2) == 2
    # k = r reduces to the classical Singleton bound n - k + 1
    assert bounds.singleton_like_max_d(10, 3, 3) == 10 - 3 + 1


def test_cm_bound_collapses_when_distance_exceeds_residual():
    # kopt contributes nothing when every residual length is below d
    assert bounds.cm_bound_max_k(9, 9, 2) == 2


def test_cm_bound_sanity_on_hamming_concatenation():
    assert bounds.cm_bound_max_k(15, 6, 2) >= 6


def test_cm_bound_with_weaker_oracle_is_pointwise_weaker():
    singleton_only = lambda n, d: max(0, n - d + 1)
    for n in range(6, 40, 3):
        for d in range(2, 12, 2):
            weak = bounds.cm_bound_max_k(n, d, 2, kopt=singleton_only)
            strong = bounds.cm_bound_max_k(n, d, 2)
            assert weak >= strong


def test_griesmer_classical():
    assert bounds.griesmer_classical_min_n(2, 7, 4) == 9
    assert bounds.griesmer_classical_min_n(2, 8, 4) == 10
    assert bounds.griesmer_classical_min_n(4, 14, 2) == 27
    assert bounds.griesmer_classical_min_n(1, 9, 2) == 9


def test_griesmer_like_values():
    assert bounds.griesmer_like_min_n(4, 6, 2, 2) == 12
    assert bounds.griesmer_like_min_n(6, 30, 2, 2) == 60
    assert bounds.griesmer_like_terms(6, 8, 2, 2) == [(1, 18), (2, 18)]
    assert bounds.griesmer_like_min_n(6, 8, 2, 2) == 18


def test_griesmer_like_empty_tau_range():
    with pytest.raises(EmptyTauRange):
        bounds.griesmer_like_min_n(2, 4, 2, 2)


def test_griesmer_like_max_d():
    assert bounds.griesmer_like_max_d(27, 4, 2, 2) == 14
    assert bounds.griesmer_like_max_d(30, 4, 2, 2) == 16
    assert bounds.griesmer_like_max_d(12, 4, 2, 2) == 6
    assert bounds.griesmer_like_max_d(3, 2, 2, 2) == 2


def test_lrc_ball_size_matches_definition():
    for ell in range(1, 6):
        for d in range(2, 13, 2):
            assert bounds.lrc_ball_size(ell, d) == lrc_ball_size_definition(ell, d)


def test_sphere_packing_like():
    assert bounds.sphere_packing_like_max_k(15, 6) == (6, 16)
    assert bounds.sphere_packing_like_max_k(6, 2) == (4, 1)
    with pytest.raises(InvalidShape):
        bounds.sphere_packing_like_max_k(14, 6)
    with pytest.raises(InvalidShape):
        bounds.sphere_packing_like_max_k(15, 5)


def test_hamming_family_packs_perfectly():
    # group count (4^t-1)/3 with d = 6: 2^(2k) * Omega = 2^(2n/3)
    for t in (2, 3):
        n1 = (4**t - 1) // 3
        k = 2 * (n1 - t)
        omega = bounds.lrc_ball_size(n1, 6)
        assert 2**k * omega == 2 ** (2 * n1)


def test_sphere_packing_classical():
    assert bounds.sphere_packing_classical_max_k(5, 3, 4) == (3, 16)
    kmax, o_d = bounds.sphere_packing_classical_max_k(43, 5, 4)
    assert o_d == 8257 and 2**13 < o_d <= 2**14 and kmax == 36
    assert bounds.sphere_packing_classical_max_k(9, 1, 4) == (9, 1)


def test_johnson_classical():
    kmax, o_prime = bounds.johnson_classical_max_k(6, 4, 4)
    assert o_prime == 64 and kmax == 3
    _, o_prime17 = bounds.johnson_classical_max_k(17, 4, 4)
    assert o_prime17 == 205
    kmax2, o_prime2 = bounds.johnson_classical_max_k(7, 2, 4)
    assert o_prime2 == 4 and kmax2 == 6
    with pytest.raises(OddDistance):
        bounds.johnson_classical_max_k(6, 3, 4)


def test_johnson_like_improved():
    kmax, improved, original = bounds.johnson_like_improved_max_k(51, 8)
    assert (kmax, improved) == (26, 205)
    kmax, improved, _ = bounds.johnson_like_improved_max_k(18, 8)
    assert (kmax, improved) == (6, 64)
    kmax, improved, _ = bounds.johnson_like_improved_max_k(12, 4)
    assert (kmax, improved) == (6, 4)
    with pytest.raises(InvalidShape):
        bounds.johnson_like_improved_max_k(51, 6)
    with pytest.raises(InvalidShape):
        bounds.johnson_like_improved_max_k(50, 8)


def test_improved_dominates_on_small_grid():
    for ell in range(2, 40):
        n = 3 * ell
        for d in range(4, 2 * ell + 1, 4):
            _, improved, original = bounds.johnson_like_improved_max_k(n, d)
            assert improved >= original  # larger denominator = smaller bound


def test_outer_to_lrc_ball_correspondence():
    # classical GF(4) ball of radius (d1-1)/2 equals the LRC ball at 2*d1
    outers = [hamming4(2), hexacode(), cap_code(bundled_cap_pg3_17())]
    outers.append(cyclic4(43, [1, 0, W2, 1, 1, W, 0, 1]))
    for outer in outers:
        d1 = outer.min_distance(budget=1 << 22).d
        o_d = bounds.ball_size(outer.n, (d1 - 1) // 2, 4)
        assert o_d == bounds.lrc_ball_size(outer.n, 2 * d1)
        if d1 % 2 == 0:
            _, o_prime = bounds.johnson_classical_max_k(outer.n, d1, 4)
            _, imp, _ = bounds.johnson_like_improved_max_k(3 * outer.n, 2 * d1)
            assert o_prime == imp


def test_classify_hamming_lrc_perfect():
    report = bounds.classify(15, 6, 6)
    assert report.perfect is True
    assert report.k_optimal_sp is True
    assert 2**6 * report.omega == 2**10
    assert report.griesmer_like_d_optimal is True
    assert report.singleton_optimal is False
    assert report.nearly_perfect is None  # d not a multiple of 4


def test_classify_hexacode_lrc_nearly_perfect():
    report = bounds.classify(18, 6, 8)
    assert report.nearly_perfect is True
    assert report.k_optimal_johnson is True
    assert report.omega_prime_improved == 64
    assert 2**6 * report.omega_prime_improved == 2**12


def test_classify_trivial_outer_singleton_optimal():
    report = bounds.classify(9, 6, 2)
    assert report.singleton_optimal is True


def test_classify_cap_lrc():
    report = bounds.classify(51, 26, 8)
    assert report.k_optimal_johnson is True
    assert report.nearly_perfect is False
    assert report.omega_prime_improved == 205
    assert report.entry("johnson_like_improved").value == 26


def test_report_json_shape():
    report = bounds.classify(15, 6, 6)
    obj = report.to_json()
    assert obj["verdicts"]["perfect"] is True
    assert obj["denominators"]["omega"] == 16
    names = {e["name"] for e in obj["bounds"]}
    assert "singleton_like" in names and "cm" in names


def test_kopt_table_override(tmp_path):
    table = tmp_path / "kopt.txt"
    table.write_text("# residual overrides\n9 6 2\n")
    oracle = bounds.kopt_from_table(table)
    assert oracle(9, 6) == 2
    assert oracle(10, 6) == bounds.default_kopt()(10, 6)
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2\n")
    with pytest.raises(ParseError):
        bounds.kopt_from_table(bad)


def test_default_kopt_zero_when_distance_exceeds_length():
    oracle = bounds.default_kopt()
    assert oracle(4, 5) == 0
    assert oracle(0, 1) == 0
    assert oracle(5, 1) == 5
