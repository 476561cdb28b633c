"""Decompositions of factor languages into products of two small languages.

Four routes produce a pair of languages (S, T) whose product covers every
indexed factor while each keeps a bounded number of words per length:

* :func:`build_st` cuts every long factor at the midpoint of a marker
  occurrence chosen inside its first occurrence (the general construction
  for linear-complexity words);
* :func:`thue_morse_split_sets` uses suffixes and prefixes of the iterated
  doubling morphism, cutting at the boundary of maximal 2-adic valuation;
* :func:`sturmian_split_sets` extends the unique right and left special
  factors of a Sturmian window;
* :func:`greedy_two_sets` processes an arbitrary language in length order,
  inserting the two halves of the cheapest split under a per-length budget.

:func:`verify_cover` re-checks any claimed decomposition by membership alone,
independently of how the sets were produced.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .errors import PreconditionError, VerificationError
from .factors import FactorIndex
from .periodicity import MarkerSet, build_all_markers, classify_occurrence, OccurrenceClass
from .words import Morphism, thue_morse


class LeveledLanguage:
    """A finite language organized by word length.

    Words of length >= 1 live in per-length sets; the empty word is a flag so
    that cardinality and membership stay uniform. Iteration is sorted by
    (length, word) to keep every downstream artifact deterministic.
    """

    def __init__(self, words=(), include_epsilon: bool = False):
        self.by_length: dict[int, set[str]] = {}
        self.includes_epsilon = bool(include_epsilon)
        for w in words:
            self.add(w)

    def add(self, word: str):
        if word == "":
            self.includes_epsilon = True
        else:
            self.by_length.setdefault(len(word), set()).add(word)

    def __contains__(self, word: str) -> bool:
        if word == "":
            return self.includes_epsilon
        bucket = self.by_length.get(len(word))
        return bucket is not None and word in bucket

    def cardinality(self, n: int) -> int:
        if n == 0:
            return 1 if self.includes_epsilon else 0
        return len(self.by_length.get(n, ()))

    def accumulative(self, n: int) -> int:
        """Number of words of lengths 1..n (the empty word is not counted)."""
        return sum(len(ws) for ln, ws in self.by_length.items() if ln <= n)

    def lengths(self) -> list[int]:
        out = sorted(self.by_length)
        if self.includes_epsilon:
            out.insert(0, 0)
        return out

    @property
    def max_length(self) -> int:
        return max(self.by_length, default=0)

    def per_length_max(self) -> int:
        return max((len(ws) for ws in self.by_length.values()), default=0)

    def words(self):
        """All words sorted by (length, word), the empty word first."""
        if self.includes_epsilon:
            yield ""
        for n in sorted(self.by_length):
            yield from sorted(self.by_length[n])

    def total(self) -> int:
        return sum(len(ws) for ws in self.by_length.values()) + (
            1 if self.includes_epsilon else 0)

    def to_jsonl(self, set_name: str) -> str:
        lines = [json.dumps({"len": len(w), "word": w, "set": set_name},
                            sort_keys=True)
                 for w in self.words()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_jsonl(cls, text: str) -> "LeveledLanguage":
        lang = cls()
        for i, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                row = json.loads(line)
                word, ln = row["word"], row["len"]
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise PreconditionError("bad-set-file", f"line {i}: {exc}")
            if not isinstance(word, str) or ln != len(word):
                raise PreconditionError(
                    "bad-set-file", f"line {i}: len field disagrees with word")
            lang.add(word)
        return lang


@dataclass(frozen=True)
class SplitRecord:
    """One factor's decomposition witness: ``v = s + t``.

    For marker splits, ``order`` is the marker order, ``position`` the window
    position of the chosen marker occurrence and ``occurrence_class`` its
    classification. Short factors that go into S wholesale carry their first
    occurrence position and no order or class. The doubling-morphism route
    stores the 2-adic valuation of the cut boundary as ``order`` and the
    1-based boundary position as ``position``.
    """

    v: str
    s: str
    t: str
    order: int | None
    position: int | None
    occurrence_class: OccurrenceClass | None

    def __post_init__(self):
        if self.s + self.t != self.v:
            raise PreconditionError(
                "bad-split", f"parts {self.s!r} + {self.t!r} do not rebuild {self.v!r}")


SPLIT_CSV_HEADER = "v,s,t,k,pos,class"


def split_records_to_csv(records) -> str:
    lines = [SPLIT_CSV_HEADER]
    for r in records:
        k = "" if r.order is None else str(r.order)
        pos = "" if r.position is None else str(r.position)
        label = "" if r.occurrence_class is None else r.occurrence_class.label
        lines.append(f"{r.v},{r.s},{r.t},{k},{pos},{label}")
    return "\n".join(lines) + "\n"


# -- marker construction ------------------------------------------------------


def split_factor(index: FactorIndex, markers: dict[int, MarkerSet], v: str) -> SplitRecord:
    """Cut ``v`` at the midpoint of a chosen marker occurrence.

    The order is the largest one with a marker occurring inside ``v``; within
    that order the marker with the leftmost occurrence is chosen. Among the
    occurrences of that marker inside the first window occurrence of ``v``,
    an extreme one (initial or final) is preferred, the first of them; if all
    are internal the first occurrence is used. The cut falls at the middle of
    the marker, so s ends with its left half and t starts with its right half.
    """
    if not markers:
        raise PreconditionError("no-marker-orders", "empty marker family")
    d = next(iter(markers.values())).D
    if len(v) < 2 * d:
        raise PreconditionError(
            "precondition-violation",
            f"marker splitting needs |v| >= {2 * d}, got {len(v)}")
    start = index.first_occurrence(v)
    if start is None:
        raise PreconditionError(
            "precondition-violation", f"{v!r} is not a factor of the window")
    for order in sorted(markers, reverse=True):
        half = 2 ** (order - 1)
        hits = [(v.find(m), m) for m in markers[order].markers]
        hits = [(pos, m) for pos, m in hits if pos != -1]
        if not hits:
            continue
        _, marker = min(hits)
        rel_positions = []
        at = v.find(marker)
        while at != -1:
            rel_positions.append(at)
            at = v.find(marker, at + 1)
        chosen_rel = None
        chosen_class = None
        first_classified = None
        for rel in rel_positions:
            try:
                cls = classify_occurrence(index.window, start + rel, 2 ** order)
            except PreconditionError:
                continue
            if first_classified is None:
                first_classified = (rel, cls)
            if not cls.internal:
                chosen_rel, chosen_class = rel, cls
                break
        if chosen_rel is None:
            chosen_rel, chosen_class = first_classified or (rel_positions[0], None)
        cut = start + chosen_rel + half
        s = index.window[start:cut]
        t = index.window[cut:start + len(v)]
        return SplitRecord(v=v, s=s, t=t, order=order,
                           position=start + chosen_rel,
                           occurrence_class=chosen_class)
    raise VerificationError(
        "no-marker-found",
        f"no marker of any order occurs in {v!r} (undersized window?)")


def split_sets_bound(R: int, C: int, D: int) -> float:
    """Per-length cardinality bound R(log2 D + 2)(1 + 4C(2D + 1))."""
    return R * (math.log2(D) + 2) * (1 + 4 * C * (2 * D + 1))


def build_st(index: FactorIndex, markers: dict[int, MarkerSet] | None = None):
    """Split every indexed factor into S and T via marker midpoints.

    Factors shorter than 2D go into S wholesale, paired with the empty word;
    the rest are cut by :func:`split_factor`. Returns (S, T, records) with one
    record per indexed factor in (length, word) order.
    """
    if markers is None:
        markers = build_all_markers(index)
    if not markers:
        raise PreconditionError("no-marker-orders", "empty marker family")
    d = next(iter(markers.values())).D
    s_lang = LeveledLanguage()
    t_lang = LeveledLanguage(include_epsilon=True)
    records = []
    for n in range(1, index.n_max + 1):
        for v, first in index.factors_with_positions(n):
            if n < 2 * d:
                s_lang.add(v)
                records.append(SplitRecord(v=v, s=v, t="", order=None,
                                           position=first, occurrence_class=None))
            else:
                rec = split_factor(index, markers, v)
                s_lang.add(rec.s)
                t_lang.add(rec.t)
                records.append(rec)
    return s_lang, t_lang, records


# -- independent coverage check ----------------------------------------------


@dataclass
class CoverReport:
    total: int
    uncovered: list[str]
    s_cardinalities: dict[int, int]
    t_cardinalities: dict[int, int]

    @property
    def covered(self) -> int:
        return self.total - len(self.uncovered)

    @property
    def coverage(self) -> float:
        return 1.0 if self.total == 0 else self.covered / self.total

    @property
    def s_per_length_max(self) -> int:
        return max([v for k, v in self.s_cardinalities.items() if k > 0], default=0)

    @property
    def t_per_length_max(self) -> int:
        return max([v for k, v in self.t_cardinalities.items() if k > 0], default=0)


def verify_cover(index: FactorIndex, s_lang: LeveledLanguage,
                 t_lang: LeveledLanguage, n_max: int | None = None) -> CoverReport:
    """Check by membership that every indexed factor is a word of S times T.

    This deliberately ignores any split records: a factor counts as covered
    when some cut position puts its left part in S and its right part in T.
    """
    hi = index.n_max if n_max is None else n_max
    if not 1 <= hi <= index.n_max:
        raise PreconditionError(
            "out-of-range", f"cover range 1..{hi} outside the indexed 1..{index.n_max}")
    s_lens = set(s_lang.lengths())
    t_lens = set(t_lang.lengths())
    uncovered = []
    total = 0
    for n in range(1, hi + 1):
        cuts = [c for c in range(n + 1) if c in s_lens and (n - c) in t_lens]
        for v, _ in index.factors_with_positions(n):
            total += 1
            if not any(v[:c] in s_lang and v[c:] in t_lang for c in cuts):
                uncovered.append(v)
    s_cards = {n: s_lang.cardinality(n) for n in s_lang.lengths()}
    t_cards = {n: t_lang.cardinality(n) for n in t_lang.lengths()}
    return CoverReport(total=total, uncovered=uncovered,
                       s_cardinalities=s_cards, t_cardinalities=t_cards)


# -- doubling-morphism route ---------------------------------------------------


def _max_valuation_boundary(lo: int, hi: int) -> tuple[int, int]:
    """The unique position in [lo, hi] with maximal 2-adic valuation.

    Two positions sharing the maximal valuation would have a higher-valuation
    multiple strictly between them, so the argmax is unique.
    """
    best, best_val = lo, (lo & -lo).bit_length() - 1
    for m in range(lo + 1, hi + 1):
        val = (m & -m).bit_length() - 1
        if val > best_val:
            best, best_val = m, val
    return best, best_val


def thue_morse_split_sets(n_max: int, n_work: int | None = None):
    """Suffix and prefix sets of the doubling-morphism iterates, with a cut rule.

    S1 holds every suffix (and S2 every prefix) of the n-fold images of both
    letters under 0->01, 1->10, which gives exactly two words per length. The
    returned ``cut`` callable splits a factor at the boundary of maximal
    2-adic valuation inside its first occurrence, preferring a boundary that
    keeps both parts non-empty; the valuation makes the left part a suffix,
    and the right part a prefix, of some iterate.
    """
    if n_max < 1:
        raise PreconditionError("out-of-range", f"n_max must be >= 1, got {n_max}")
    if n_work is None:
        n_work = 50 * n_max
    if n_work < 2 * n_max:
        raise PreconditionError(
            "window-too-small", f"window of {n_work} letters cannot support n_max = {n_max}")
    source = thue_morse()
    window = source.prefix(n_work)
    rounds = max(1, (n_max - 1).bit_length())
    morphism = Morphism({"0": "01", "1": "10"}, "0")
    block, coblock = "0", "1"
    for _ in range(rounds):
        block, coblock = morphism.apply(block), morphism.apply(coblock)
    s1 = LeveledLanguage(include_epsilon=True)
    s2 = LeveledLanguage(include_epsilon=True)
    for m in range(1, n_max + 1):
        s1.add(block[-m:])
        s1.add(coblock[-m:])
        s2.add(block[:m])
        s2.add(coblock[:m])

    def cut(v: str) -> SplitRecord:
        if not 1 <= len(v) <= n_max:
            raise PreconditionError(
                "out-of-range", f"cut is defined for lengths 1..{n_max}")
        start = window.find(v)
        if start == -1:
            raise PreconditionError(
                "precondition-violation", f"{v!r} is not a factor of the window")
        last = start + len(v) - 1
        if len(v) == 1:
            boundary = start + 1
            val = (boundary & -boundary).bit_length() - 1
            return SplitRecord(v=v, s=v, t="", order=val, position=boundary,
                               occurrence_class=None)
        boundary, val = _max_valuation_boundary(start + 1, last)
        s = window[start:boundary]
        t = window[boundary:start + len(v)]
        return SplitRecord(v=v, s=s, t=t, order=val, position=boundary,
                           occurrence_class=None)

    return s1, s2, cut


def witness_split(v: str, s_lang: LeveledLanguage, t_lang: LeveledLanguage) -> SplitRecord:
    """The leftmost cut of ``v`` with both parts in the given sets."""
    for c in range(len(v) + 1):
        if v[:c] in s_lang and v[c:] in t_lang:
            return SplitRecord(v=v, s=v[:c], t=v[c:], order=None,
                               position=None, occurrence_class=None)
    raise VerificationError("coverage-incomplete", f"no split found for {v!r}")


# -- Sturmian route -------------------------------------------------------------


def sturmian_split_sets(index: FactorIndex):
    """Right-special extensions and left-special extensions of a Sturmian window.

    Requires complexity exactly n + 1 across the indexed range, which forces a
    binary alphabet and a unique special factor of each length per side. S1
    collects both one-letter extensions of each right special factor, S2 both
    one-letter left extensions of each left special factor, plus the empty
    word on both sides.
    """
    for n in range(1, index.n_max + 1):
        if index.complexity(n) != n + 1:
            raise VerificationError(
                "not-sturmian",
                f"p({n}) = {index.complexity(n)}, expected {n + 1}")
    alphabet = index.alphabet
    s1 = LeveledLanguage(include_epsilon=True)
    s2 = LeveledLanguage(include_epsilon=True)
    for length in range(1, index.n_max + 1):
        if length == 1:
            rs_set = ls_set = {""}
        else:
            rs_set = index.right_special(length - 1)
            ls_set = index.left_special(length - 1)
        if len(rs_set) != 1 or len(ls_set) != 1:
            raise VerificationError(
                "not-sturmian",
                f"expected one special factor of length {length - 1} per side,"
                f" got {len(rs_set)} right and {len(ls_set)} left")
        rs, ls = next(iter(rs_set)), next(iter(ls_set))
        for a in alphabet:
            s1.add(rs + a)
            s2.add(a + ls)
    return s1, s2


# -- greedy route ---------------------------------------------------------------


def greedy_two_sets(lang: LeveledLanguage, budget_slope: int):
    """Split every word of ``lang`` in length order under a per-length budget.

    Each word v admits len(v) + 1 factorizations v = s + t. The cheapest one
    is taken (fewest missing parts, leftmost cut on ties), and a missing part
    is inserted only while its length holds at most 2 * budget_slope words,
    so both sets stay below 2 * budget_slope + 1 words per length. Feasibility
    for every word is guaranteed when the accumulative count of ``lang`` stays
    within budget_slope * n; a word with no affordable split certifies that
    the input broke that promise.
    """
    if budget_slope < 1:
        raise PreconditionError(
            "out-of-range", f"budget slope must be >= 1, got {budget_slope}")
    cap = 2 * budget_slope
    s_lang = LeveledLanguage()
    t_lang = LeveledLanguage()

    def insert_cost(part: str, lang_side: LeveledLanguage):
        if part in lang_side:
            return 0
        if lang_side.cardinality(len(part)) <= cap:
            return 1
        return None

    for v in lang.words():
        best_cut = None
        best_cost = None
        for c in range(len(v) + 1):
            s, t = v[:c], v[c:]
            cost_s = insert_cost(s, s_lang)
            if cost_s is None:
                continue
            cost_t = insert_cost(t, t_lang)
            if cost_t is None:
                continue
            cost = cost_s + cost_t
            if best_cost is None or cost < best_cost:
                best_cut, best_cost = c, cost
                if cost == 0:
                    break
        if best_cut is None:
            raise PreconditionError(
                "no-feasible-split",
                f"no affordable factorization for {v!r}; the accumulative"
                f" count must exceed {budget_slope} * n somewhere")
        s_lang.add(v[:best_cut])
        t_lang.add(v[best_cut:])
        for side, part in ((s_lang, v[:best_cut]), (t_lang, v[best_cut:])):
            if part and side.cardinality(len(part)) > cap + 1:
                raise VerificationError(
                    "budget-overflow",
                    f"length {len(part)} exceeded {cap + 1} words")
    return s_lang, t_lang


def refine_decomposition(parts, budget_slopes):
    """Apply the greedy split to each language of a product, in order.

    ``parts`` is a sequence of languages whose concatenation covers some
    target; each is split under its own slope and the resulting 2k languages
    are returned in product order [S1, T1, S2, T2, ...].
    """
    parts = list(parts)
    budget_slopes = list(budget_slopes)
    if len(parts) != len(budget_slopes):
        raise PreconditionError(
            "out-of-range",
            f"{len(parts)} parts but {len(budget_slopes)} budget slopes")
    out = []
    for part, slope in zip(parts, budget_slopes):
        s_lang, t_lang = greedy_two_sets(part, slope)
        out.append(s_lang)
        out.append(t_lang)
    return out


# -- counting bounds -------------------------------------------------------------


def compositions_count(n: int, k: int) -> int:
    """Number of ways to write n as an ordered sum of k + 1 counts >= 0."""
    if n < 0 or k < 0:
        raise PreconditionError("out-of-range", f"need n >= 0 and k >= 0, got {n}, {k}")
    return math.comb(n + k, k)


def product_complexity_bound(cap: int, k: int, n: int) -> int:
    """Upper bound cap^(k+1) * comb(n+k, k) for the complexity at length n
    of a product of k + 1 languages each holding at most ``cap`` words per
    length."""
    if cap < 1:
        raise PreconditionError("out-of-range", f"per-length cap must be >= 1, got {cap}")
    return cap ** (k + 1) * compositions_count(n, k)
