"""Factor index vs sliding-frame oracles, plus profile and window guards."""

import pytest

from factorlang import (
    PreconditionError,
    VerificationError,
    build_factor_index,
    fibonacci_word,
    parse_word_spec,
    stabilization_check,
    thue_morse,
    ultimately_periodic,
)


def frame_factors(window: str, n: int) -> set[str]:
    return {window[i:i + n] for i in range(len(window) - n + 1)}


def frame_profile(window: str, n_max: int) -> list[int]:
    return [len(frame_factors(window, n)) for n in range(1, n_max + 1)]


def frame_right_special(window: str, n: int) -> set[str]:
    out = {}
    for i in range(len(window) - n):
        out.setdefault(window[i:i + n], set()).add(window[i + n])
    return {v for v, ext in out.items() if len(ext) >= 2}


def frame_left_special(window: str, n: int) -> set[str]:
    out = {}
    for i in range(1, len(window) - n + 1):
        out.setdefault(window[i:i + n], set()).add(window[i - 1])
    return {v for v, ext in out.items() if len(ext) >= 2}


SMALL_SPECS = ["tm", "fib", "abk", "pq:f=isqrt,k=p", "ultper:01|10", "sturm:2,(1)"]


@pytest.mark.parametrize("spec", SMALL_SPECS)
def test_profile_matches_frame_oracle(spec):
    source = parse_word_spec(spec)
    index = build_factor_index(source, n_work=600, n_max=24)
    window = source.prefix(600)
    assert list(index.profile().p) == frame_profile(window, 24)


@pytest.mark.parametrize("spec", SMALL_SPECS)
def test_special_factors_match_frame_oracle(spec):
    source = parse_word_spec(spec)
    index = build_factor_index(source, n_work=600, n_max=24)
    window = source.prefix(600)
    for n in (1, 2, 3, 7, 12, 23):
        assert index.right_special(n) == frame_right_special(window, n)
        assert index.left_special(n) == frame_left_special(window, n)


@pytest.mark.parametrize("spec", SMALL_SPECS)
def test_factor_enumeration_and_positions(spec):
    source = parse_word_spec(spec)
    index = build_factor_index(source, n_work=400, n_max=12)
    window = source.prefix(400)
    for n in (1, 4, 12):
        oracle = frame_factors(window, n)
        assert index.factors_of_length(n) == oracle
        for word, pos in index.factors_with_positions(n):
            assert window.find(word) == pos


def test_thue_morse_profile_values():
    index = build_factor_index(thue_morse(), n_work=2 ** 16, n_max=3)
    assert list(index.profile().p) == [2, 4, 6]
    assert index.accumulative(3) == 12
    assert index.complexity(1) == 2


def test_constant_word_profile():
    index = build_factor_index(parse_word_spec("ultper:|0"), n_max=16)
    assert set(index.profile().p) == {1}
    assert index.slope_constants() == (1, 1)
    assert index.right_special(5) == set()


def test_fibonacci_complexity_and_specials():
    index = build_factor_index(fibonacci_word(), n_work=10 ** 5, n_max=100)
    assert all(index.complexity(n) == n + 1 for n in range(1, 101))
    assert index.complexity(7) == 8
    for n in (1, 10, 50, 99):
        assert len(index.right_special(n)) == 1
        assert len(index.left_special(n)) == 1
    c, k = index.slope_constants()
    assert c == 2


def test_slope_constants_bound_each_other():
    for spec in SMALL_SPECS:
        index = build_factor_index(parse_word_spec(spec), n_work=800, n_max=16)
        c, k = index.slope_constants()
        assert c >= 1
        assert 2 * k >= c
        p = index.profile().p
        assert all(p[n - 1] <= c * n for n in range(1, 17))
        g = index.profile().g
        assert all(g[n - 1] <= k * n for n in range(1, 17))


def test_accumulative_telescopes():
    index = build_factor_index(thue_morse(), n_max=32)
    g = index.profile().g
    p = index.profile().p
    assert g[0] == p[0]
    assert all(g[n] - g[n - 1] == p[n] for n in range(1, 32))


def test_factor_closure():
    index = build_factor_index(parse_word_spec("abk"), n_work=500, n_max=10)
    for word in index.factors_of_length(10):
        for n in range(1, 10):
            for i in range(len(word) - n + 1):
                assert word[i:i + n] in index.factors_of_length(n)


def test_detect_eventual_periodicity():
    periodic = build_factor_index(ultimately_periodic("01", "10"), n_max=64)
    n0 = periodic.detect_eventual_periodicity()
    assert n0 is not None
    assert periodic.complexity(n0) == periodic.complexity(n0 + 1)
    assert build_factor_index(thue_morse(), n_max=64).detect_eventual_periodicity() is None
    assert build_factor_index(fibonacci_word(), n_max=64).detect_eventual_periodicity() is None


def test_occurrences():
    index = build_factor_index(thue_morse(), n_work=64, n_max=16)
    window = thue_morse().prefix(64)
    occ = index.occurrences("11")
    assert occ[:3] == [1, 7, 13]
    assert occ == [i for i in range(63) if window[i:i + 2] == "11"]
    assert index.occurrences("") == list(range(65))
    assert index.first_occurrence("10") == 2
    assert index.first_occurrence("0000") is None
    assert not index.contains("0000")
    fib = build_factor_index(fibonacci_word(), n_work=64, n_max=16)
    assert fib.occurrences("11") == []


def test_range_guards():
    index = build_factor_index(thue_morse(), n_max=8)
    with pytest.raises(PreconditionError, match="out-of-range"):
        index.complexity(9)
    with pytest.raises(PreconditionError, match="out-of-range"):
        index.complexity(0)
    with pytest.raises(PreconditionError, match="out-of-range"):
        index.right_special(8)  # extensions do not fit at the cap
    with pytest.raises(PreconditionError, match="out-of-range"):
        index.occurrences("0" * 9)


def test_window_too_small():
    with pytest.raises(PreconditionError, match="window-too-small"):
        build_factor_index(thue_morse(), n_work=100, n_max=64)


def test_stabilization_check():
    assert stabilization_check(fibonacci_word(), n_work=10 ** 5, n_max=100)
    assert stabilization_check(parse_word_spec("ultper:|0"), n_max=32)
    # a window this small misses length-192 factors of the block word
    assert not stabilization_check(parse_word_spec("pq:f=isqrt,k=p"),
                                   n_work=400, n_max=192)


def test_csv_export():
    index = build_factor_index(thue_morse(), n_max=3)
    assert index.profile().to_csv() == "n,p,g\n1,2,2\n2,4,6\n3,6,12\n"
