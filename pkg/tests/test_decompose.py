"""Decomposition routes: marker cuts, word-specific sets, greedy, counting."""

import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from factorlang import (
    LeveledLanguage,
    PreconditionError,
    SplitRecord,
    VerificationError,
    build_all_markers,
    build_factor_index,
    build_st,
    compositions_count,
    fibonacci_word,
    greedy_two_sets,
    parse_word_spec,
    product_complexity_bound,
    refine_decomposition,
    split_factor,
    split_records_to_csv,
    split_sets_bound,
    sturmian_split_sets,
    thue_morse,
    thue_morse_split_sets,
    verify_cover,
    witness_split,
)


# -- leveled languages ---------------------------------------------------------


def test_leveled_language_basics():
    lang = LeveledLanguage(["ab", "ba", "a", ""])
    assert lang.includes_epsilon
    assert "" in lang
    assert "ab" in lang and "aa" not in lang
    assert lang.cardinality(2) == 2
    assert lang.cardinality(0) == 1
    assert lang.accumulative(2) == 3
    assert lang.lengths() == [0, 1, 2]
    assert lang.per_length_max() == 2
    assert list(lang.words()) == ["", "a", "ab", "ba"]
    assert lang.total() == 4


def test_leveled_language_jsonl_round_trip():
    lang = LeveledLanguage(["01", "10", "0", ""])
    text = lang.to_jsonl("S")
    lines = text.splitlines()
    assert lines[0] == '{"len": 0, "set": "S", "word": ""}'
    back = LeveledLanguage.from_jsonl(text)
    assert list(back.words()) == list(lang.words())
    assert back.includes_epsilon


def test_leveled_language_from_jsonl_rejects_bad_rows():
    with pytest.raises(PreconditionError, match="bad-set-file"):
        LeveledLanguage.from_jsonl('{"len": 3, "set": "S", "word": "01"}\n')
    with pytest.raises(PreconditionError, match="bad-set-file"):
        LeveledLanguage.from_jsonl('{"word": "01"}\n')
    with pytest.raises(PreconditionError, match="bad-set-file"):
        LeveledLanguage.from_jsonl("not json\n")


@settings(max_examples=50)
@given(st.lists(st.text(alphabet="01", max_size=8), max_size=30))
def test_leveled_language_round_trip_random(words):
    lang = LeveledLanguage(words)
    back = LeveledLanguage.from_jsonl(lang.to_jsonl("T"))
    assert list(back.words()) == list(lang.words())


def test_split_record_must_rebuild():
    with pytest.raises(PreconditionError, match="bad-split"):
        SplitRecord(v="ab", s="a", t="a", order=None, position=None,
                    occurrence_class=None)


def test_split_records_csv():
    records = [
        SplitRecord(v="ab", s="a", t="b", order=1, position=4,
                    occurrence_class=None),
        SplitRecord(v="a", s="a", t="", order=None, position=0,
                    occurrence_class=None),
    ]
    assert split_records_to_csv(records) == (
        "v,s,t,k,pos,class\nab,a,b,1,4,\na,a,,,0,\n")


# -- marker route ----------------------------------------------------------------


@pytest.fixture(scope="module")
def tm_index():
    return build_factor_index(thue_morse(), n_max=128)


@pytest.fixture(scope="module")
def fib_index():
    return build_factor_index(fibonacci_word(), n_max=128)


def _family_d(markers):
    return next(iter(markers.values())).D


@pytest.mark.parametrize("index_name", ["tm_index", "fib_index"])
def test_split_factor_invariants(index_name, request):
    index = request.getfixturevalue(index_name)
    markers = build_all_markers(index)
    d = _family_d(markers)
    top = max(markers)
    for n in (2 * d, 3 * d, 40, 97, 128):
        for v in sorted(index.factors_of_length(n)):
            rec = split_factor(index, markers, v)
            assert rec.s + rec.t == v
            half = 2 ** (rec.order - 1)
            assert len(rec.s) >= half and len(rec.t) >= half
            # the cut sits at the midpoint of an order-k marker occurrence
            joint = rec.s[-half:] + rec.t[:half]
            assert joint in markers[rec.order].markers
            # no higher order in the family has a marker inside v
            for higher in range(rec.order + 1, top + 1):
                assert not any(m in v for m in markers[higher].markers)
            # both sufficiently long parts obey the block-length inequality
            for part in (rec.s, rec.t):
                l = len(part)
                if l >= 2 * d:
                    assert l / (2 * d) < 2 ** rec.order <= 2 * l


def test_split_factor_rejects_short_and_foreign(tm_index):
    markers = build_all_markers(tm_index)
    d = _family_d(markers)
    short = thue_morse().prefix(2 * d - 1)
    with pytest.raises(PreconditionError, match="precondition-violation"):
        split_factor(tm_index, markers, short)
    with pytest.raises(PreconditionError, match="precondition-violation"):
        split_factor(tm_index, markers, "2" * 2 * d)


def test_split_factor_leftmost_fib(fib_index):
    markers = build_all_markers(fib_index)
    d = _family_d(markers)
    v = fibonacci_word().prefix(2 * d)
    rec = split_factor(fib_index, markers, v)
    assert rec.s + rec.t == v
    half = 2 ** (rec.order - 1)
    assert rec.s.endswith((rec.s[-half:]))
    assert (rec.s[-half:] + rec.t[:half]) in markers[rec.order].markers


@pytest.mark.parametrize("index_name", ["tm_index", "fib_index"])
def test_build_st_coverage_and_bound(index_name, request):
    index = request.getfixturevalue(index_name)
    markers = build_all_markers(index)
    s_lang, t_lang, records = build_st(index, markers)
    report = verify_cover(index, s_lang, t_lang)
    assert report.coverage == 1.0
    assert report.total == sum(index.complexity(n) for n in range(1, 129))
    c, _ = index.slope_constants()
    d = _family_d(markers)
    r = max(len(ms.markers) for ms in markers.values())
    bound = split_sets_bound(r, c, d)
    assert s_lang.per_length_max() <= bound
    assert t_lang.per_length_max() <= bound
    # short factors are present wholesale, paired with the empty word
    assert t_lang.includes_epsilon
    for n in range(1, 2 * d):
        assert index.factors_of_length(n) <= s_lang.by_length[n]
    assert len(records) == report.total


def test_verify_cover_degenerate_cases(tm_index):
    everything = LeveledLanguage(
        w for n in range(1, 17) for w in tm_index.factors_of_length(n))
    just_epsilon = LeveledLanguage(include_epsilon=True)
    report = verify_cover(tm_index, everything, just_epsilon, n_max=16)
    assert report.coverage == 1.0
    empty = LeveledLanguage()
    report = verify_cover(tm_index, empty, just_epsilon, n_max=16)
    assert report.coverage == 0.0
    assert len(report.uncovered) == report.total
    with pytest.raises(PreconditionError, match="out-of-range"):
        verify_cover(tm_index, everything, just_epsilon, n_max=500)


# -- doubling-morphism route -----------------------------------------------------


def test_thue_morse_sets_counts_and_cuts(tm_index):
    s1, s2, cut = thue_morse_split_sets(128, tm_index.n_work)
    for m in range(1, 65):
        assert s1.cardinality(m) == 2
        assert s2.cardinality(m) == 2
    rec = cut("11")
    assert (rec.s, rec.t) == ("1", "1")
    assert rec.position == 2  # boundary after the second letter, 1-based
    rec = cut("0")
    assert (rec.s, rec.t) == ("0", "")
    report = verify_cover(tm_index, s1, s2)
    assert report.coverage == 1.0
    # each cut produces parts from the sets themselves
    for n in (1, 2, 7, 32, 128):
        for v in tm_index.factors_of_length(n):
            rec = cut(v)
            assert rec.s in s1 and rec.t in s2


def test_thue_morse_sets_window_guard():
    with pytest.raises(PreconditionError, match="window-too-small"):
        thue_morse_split_sets(64, 100)
    with pytest.raises(PreconditionError, match="out-of-range"):
        thue_morse_split_sets(0)


def test_witness_split():
    s = LeveledLanguage(["0"])
    t = LeveledLanguage(["1"], include_epsilon=True)
    rec = witness_split("01", s, t)
    assert (rec.s, rec.t) == ("0", "1")
    with pytest.raises(VerificationError, match="coverage-incomplete"):
        witness_split("11", s, t)


# -- Sturmian route --------------------------------------------------------------


def test_sturmian_sets(fib_index):
    s1, s2 = sturmian_split_sets(fib_index)
    for n in range(1, 129):
        assert s1.cardinality(n) == 2
        assert s2.cardinality(n) == 2
    assert s1.by_length[2] == {"00", "01"}
    report = verify_cover(fib_index, s1, s2)
    assert report.coverage == 1.0


def test_sturmian_rejects_thue_morse(tm_index):
    with pytest.raises(VerificationError, match="not-sturmian"):
        sturmian_split_sets(tm_index)


def test_sturmian_other_directive():
    index = build_factor_index(parse_word_spec("sturm:2,(1)"), n_max=64)
    s1, s2 = sturmian_split_sets(index)
    assert verify_cover(index, s1, s2).coverage == 1.0


# -- greedy route ----------------------------------------------------------------


def test_greedy_on_prefixes(tm_index):
    prefixes = LeveledLanguage(thue_morse().prefix(64)[:n] for n in range(1, 65))
    s_lang, t_lang = greedy_two_sets(prefixes, 1)
    assert s_lang.per_length_max() <= 3
    assert t_lang.per_length_max() <= 3
    for v in prefixes.words():
        witness_split(v, s_lang, t_lang)  # raises if uncovered


def test_greedy_trivial_epsilon():
    s_lang, t_lang = greedy_two_sets(LeveledLanguage([""]), 1)
    assert s_lang.includes_epsilon and t_lang.includes_epsilon
    assert s_lang.per_length_max() == 0


def test_greedy_planted_violation():
    # every binary word of length <= 6: the accumulative count reaches 126 > n
    dense = LeveledLanguage(
        "".join(w) for n in range(1, 7) for w in itertools.product("01", repeat=n))
    with pytest.raises(PreconditionError, match="no-feasible-split"):
        greedy_two_sets(dense, 1)


def test_greedy_budget_guard():
    with pytest.raises(PreconditionError, match="out-of-range"):
        greedy_two_sets(LeveledLanguage(["0"]), 0)


@settings(max_examples=60, deadline=None)
@given(st.text(alphabet="01", min_size=1, max_size=48))
def test_greedy_prefix_language_always_feasible(word):
    # prefix languages have exactly one word per length, so the slope promise
    # holds with budget 1; insertion never overruns 3 words at any length
    prefixes = LeveledLanguage(word[:n] for n in range(1, len(word) + 1))
    s_lang, t_lang = greedy_two_sets(prefixes, 1)
    assert s_lang.per_length_max() <= 3
    assert t_lang.per_length_max() <= 3
    for v in prefixes.words():
        witness_split(v, s_lang, t_lang)


@settings(max_examples=40, deadline=None)
@given(st.sets(st.text(alphabet="ab", min_size=1, max_size=10), max_size=20),
       st.integers(min_value=1, max_value=4))
def test_greedy_respects_cap_when_it_succeeds(words, budget):
    lang = LeveledLanguage(words)
    try:
        s_lang, t_lang = greedy_two_sets(lang, budget)
    except PreconditionError:
        return  # the random language broke the slope promise, allowed
    assert s_lang.per_length_max() <= 2 * budget + 1
    assert t_lang.per_length_max() <= 2 * budget + 1
    for v in lang.words():
        witness_split(v, s_lang, t_lang)


def test_refine_decomposition():
    parts = [
        LeveledLanguage(("01" * 8)[:n] for n in range(1, 9)),
        LeveledLanguage(("10" * 8)[:n] for n in range(1, 9)),
    ]
    out = refine_decomposition(parts, [1, 1])
    assert len(out) == 4
    for lang in out:
        assert lang.per_length_max() <= 3
    with pytest.raises(PreconditionError, match="out-of-range"):
        refine_decomposition(parts, [1])


# -- counting bounds ---------------------------------------------------------------


def test_compositions_count_examples():
    assert compositions_count(2, 1) == 3
    assert compositions_count(0, 7) == 1
    assert compositions_count(5, 2) == 21
    with pytest.raises(PreconditionError, match="out-of-range"):
        compositions_count(-1, 2)


@settings(max_examples=40)
@given(st.integers(min_value=0, max_value=12), st.integers(min_value=0, max_value=4))
def test_compositions_count_matches_enumeration(n, k):
    slots = k + 1
    brute = sum(1 for combo in itertools.product(range(n + 1), repeat=slots)
                if sum(combo) == n)
    assert compositions_count(n, k) == brute


def test_product_complexity_bound_examples():
    assert product_complexity_bound(1, 1, 2) == 3
    assert product_complexity_bound(2, 1, 5) == 24
    assert product_complexity_bound(2, 2, 4) == 120
    with pytest.raises(PreconditionError, match="out-of-range"):
        product_complexity_bound(0, 1, 2)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_product_bound_dominates_brute_force(data):
    # build two random languages capped at 2 words per length and compare the
    # realized product complexity against the counting bound
    caps = 2
    def capped_language(tag):
        lang = LeveledLanguage(include_epsilon=True)
        for n in (1, 2, 3):
            words = data.draw(
                st.sets(st.text(alphabet="01", min_size=n, max_size=n),
                        max_size=caps),
                label=f"{tag}{n}")
            for w in words:
                lang.add(w)
        return lang
    s_lang = capped_language("s")
    t_lang = capped_language("t")
    for n in range(1, 7):
        products = {s + t for s in s_lang.words() for t in t_lang.words()
                    if len(s) + len(t) == n}
        assert len(products) <= product_complexity_bound(caps, 1, n)
