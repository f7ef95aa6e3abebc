import itertools

import pytest

from gf4lrc.concat import concatenate
from gf4lrc.errors import AmbiguousDecode, GroupDamaged
from gf4lrc.families import hamming4, hexacode
from gf4lrc.matrix import FieldMatrix, rows_rank
from gf4lrc.repair import (
    ErasurePattern,
    PerSymbolErasures,
    RandomErasures,
    SplitMix64,
    global_decode,
    local_repair,
    simulate,
)


@pytest.fixture(scope="module")
def lrc():
    return concatenate(hamming4(2))


def test_splitmix64_reference_stream():
    # first outputs for seed 0 of the reference SplitMix64
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


def test_local_repair_parity_forced(lrc):
    cw = lrc.code.encode([1, 0, 0, 1, 1, 0])
    word = list(cw)
    word[4] = None
    assert local_repair(lrc, word, 4) == cw[4]
    zero = [0] * lrc.n
    zero[7] = None
    assert local_repair(lrc, zero, 7) == 0


def test_local_repair_group_damaged(lrc):
    word = [0] * lrc.n
    word[3] = None
    word[4] = None
    with pytest.raises(GroupDamaged):
        local_repair(lrc, word, 3)


def test_single_erasures_always_local(lrc):
    cw = lrc.code.encode([0, 1, 1, 0, 1, 1])
    for pos in range(lrc.n):
        word = list(cw)
        word[pos] = None
        out = global_decode(lrc, word)
        assert out.word == cw
        assert out.methods[pos] == "local"
        assert out.accessed[pos] == 2


def test_empty_pattern_returns_word(lrc):
    cw = lrc.code.encode([1, 1, 1, 0, 0, 0])
    out = global_decode(lrc, list(cw), ErasurePattern.of(()))
    assert out.word == cw and out.methods == {}


def test_all_five_erasure_patterns_decode(lrc):
    cw = lrc.code.encode([1, 0, 1, 1, 0, 1])
    for pattern in itertools.combinations(range(lrc.n), 5):
        word = list(cw)
        for p in pattern:
            word[p] = None
        out = global_decode(lrc, word, ErasurePattern.of(pattern))
        assert out.word == cw


def test_ambiguous_decode_dimension_matches_rank_deficiency(lrc):
    support = [i for i, v in enumerate(lrc.code.min_distance().witness) if v]
    cw = lrc.code.encode([0, 0, 1, 0, 1, 1])
    word = list(cw)
    for p in support:
        word[p] = None
    with pytest.raises(AmbiguousDecode) as exc_info:
        global_decode(lrc, word)
    h = lrc.code.parity_check
    cols = [
        FieldMatrix.from_rows(2, [[h.entry(r, p) for r in range(h.nrows)]]).rows[0]
        for p in support
    ]
    rank = rows_rank(2, cols, h.nrows)
    assert exc_info.value.solution_dim == len(support) - rank == 1


def test_inconsistent_word_rejected(lrc):
    word = [0] * lrc.n
    word[0] = 1  # violates group parity with no erasures
    with pytest.raises(ValueError):
        global_decode(lrc, word)


def test_pattern_word_disagreement(lrc):
    word = [0] * lrc.n
    word[2] = None
    with pytest.raises(ValueError):
        global_decode(lrc, word, ErasurePattern.of((3,)))


def test_per_group_counts(lrc):
    pattern = ErasurePattern.of((0, 1, 5, 9))
    assert pattern.per_group_counts(lrc) == [2, 1, 0, 1, 0]


def test_simulate_single_erasure(lrc):
    report = simulate(lrc, 300, RandomErasures(1), seed=11)
    assert report.success_rate == 1.0
    assert report.local_fraction == 1.0
    assert report.mean_accessed == 2.0


def test_simulate_up_to_distance_minus_one(lrc):
    report = simulate(lrc, 300, RandomErasures(5), seed=23)
    assert report.success_rate == 1.0


def test_simulate_total_loss(lrc):
    report = simulate(lrc, 50, RandomErasures(lrc.n), seed=5)
    assert report.success_rate == 0.0
    assert report.local_fraction == 0.0
    assert report.mean_accessed == 0.0


def test_simulate_deterministic(lrc):
    a = simulate(lrc, 120, PerSymbolErasures(0.15), seed=99)
    b = simulate(lrc, 120, PerSymbolErasures(0.15), seed=99)
    assert a == b
    c = simulate(lrc, 120, PerSymbolErasures(0.15), seed=100)
    assert a != c


def test_simulate_hexacode_stress():
    lrc = concatenate(hexacode())
    report = simulate(lrc, 200, RandomErasures(7), seed=1)
    assert report.success_rate == 1.0  # 7 = d - 1 erasures always decode
    # more erasures than parity rows can never decode uniquely
    report13 = simulate(lrc, 50, RandomErasures(lrc.n - lrc.k + 1), seed=1)
    assert report13.success_rate == 0.0


def test_simulate_validates_trials(lrc):
    with pytest.raises(ValueError):
        simulate(lrc, 0, RandomErasures(1))


def test_model_validation(lrc):
    with pytest.raises(ValueError):
        RandomErasures(-1)
    with pytest.raises(ValueError):
        PerSymbolErasures(1.5)
    with pytest.raises(ValueError):
        simulate(lrc, 1, RandomErasures(lrc.n + 1))


def test_two_full_groups_decode_on_hexacode_lrc():
    # six erasures (d-1 = 7) spanning two whole groups: the six parity-check
    # columns are independent, so recovery is unique and fully global
    lrc = concatenate(hexacode())
    cw = lrc.code.encode([1, 0, 1, 0, 1, 1])
    word = list(cw)
    for p in lrc.groups[0] + lrc.groups[1]:
        word[p] = None
    out = global_decode(lrc, word)
    assert out.word == cw
    assert all(out.methods[p] == "global" for p in lrc.groups[0] + lrc.groups[1])


def test_weight_eight_support_is_ambiguous_on_hexacode_lrc():
    lrc = concatenate(hexacode())
    cw = lrc.code.encode([0, 1, 1, 1, 0, 0])
    support = [i for i, v in enumerate(lrc.code.min_distance().witness) if v]
    assert len(support) == 8
    word = list(cw)
    for p in support:
        word[p] = None
    with pytest.raises(AmbiguousDecode):
        global_decode(lrc, word)
