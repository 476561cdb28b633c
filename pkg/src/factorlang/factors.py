"""Factor statistics of a finite window of an infinite word.

A :class:`FactorIndex` fixes a window (a prefix of the source of length
``n_work``) and a length cap ``n_max``, and answers per-length questions
about the distinct factors of the window: how many there are, which of them
are right or left special, where a factor first occurs. All results are
statements about the window; ``stabilization_check`` compares profiles at
``n_work`` and ``2 * n_work`` to justify reading them as properties of the
infinite word.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .automaton import SuffixAutomaton
from .errors import PreconditionError
from .words import WordSource

DEFAULT_N_MAX = 128
DEFAULT_STABILIZATION_FACTOR = 50


@dataclass(frozen=True)
class ComplexityProfile:
    """Complexity counts of one window, stamped with where they came from.

    ``p[i]`` is the number of distinct factors of length i+1 and ``g[i]`` the
    cumulative count over lengths 1..i+1. ``C`` and ``K`` are the smallest
    integer slopes with p(n) <= C*n and g(n) <= K*n over the indexed range;
    they are properties of this window and range, not of the infinite word.
    """

    source_spec: str
    n_work: int
    n_max: int
    p: tuple[int, ...]
    g: tuple[int, ...]
    C: int
    K: int

    def to_csv(self) -> str:
        lines = ["n,p,g"]
        for i, (pn, gn) in enumerate(zip(self.p, self.g)):
            lines.append(f"{i + 1},{pn},{gn}")
        return "\n".join(lines) + "\n"


class FactorIndex:
    """Queries over the distinct factors of ``window`` up to length ``n_max``."""

    def __init__(self, source: WordSource, window: str, n_max: int):
        self.source = source
        self.source_spec = source.spec
        self.window = window
        self.n_work = len(window)
        self.n_max = n_max
        self.alphabet = tuple(sorted(set(window)))
        self._sam = SuffixAutomaton(window)
        self._rev_sam: SuffixAutomaton | None = None
        self._p = self._sam.length_counts(n_max)
        self._g = np.cumsum(self._p)
        branching = self._sam.outdeg >= 2
        self._right_special_counts = self._sam.length_counts(n_max, mask=branching)
        # Arrays for enumerating right special factors: one row per branching
        # state, holding its length interval and first ending position.
        idx = np.nonzero(branching)[0]
        idx = idx[idx > 0]
        self._rs_lo = self._sam.minlen[idx]
        self._rs_hi = self._sam.maxlen[idx]
        self._rs_end = self._sam.first_end[idx]

    # -- complexity ----------------------------------------------------------

    def _check_range(self, n: int, hi: int | None = None):
        hi = self.n_max if hi is None else hi
        if not 1 <= n <= hi:
            raise PreconditionError(
                "out-of-range", f"length {n} outside the indexed range 1..{hi}")

    def complexity(self, n: int) -> int:
        """Number of distinct factors of length ``n`` in the window."""
        self._check_range(n)
        return int(self._p[n - 1])

    def accumulative(self, n: int) -> int:
        """Total number of distinct factors of lengths 1..``n``."""
        self._check_range(n)
        return int(self._g[n - 1])

    def slope_constants(self, up_to: int | None = None) -> tuple[int, int]:
        """Smallest integer slopes (C, K) with p(n) <= C*n and g(n) <= K*n.

        Computed over lengths 1..up_to (default: the whole indexed range), so
        both constants are stamped by that range.
        """
        hi = self.n_max if up_to is None else up_to
        self._check_range(hi)
        ns = np.arange(1, hi + 1)
        c = int(np.max(-(-self._p[:hi] // ns)))
        k = int(np.max(-(-self._g[:hi] // ns)))
        return c, k

    def profile(self) -> ComplexityProfile:
        c, k = self.slope_constants()
        return ComplexityProfile(
            source_spec=self.source_spec,
            n_work=self.n_work,
            n_max=self.n_max,
            p=tuple(int(x) for x in self._p),
            g=tuple(int(x) for x in self._g),
            C=c,
            K=k,
        )

    def detect_eventual_periodicity(self) -> int | None:
        """Smallest n with p(n+1) = p(n) within the indexed range, or None.

        A plateau in the complexity profile is the classical certificate that
        the window behaves like an ultimately periodic word; aperiodic words
        have strictly increasing complexity.
        """
        for n in range(1, self.n_max):
            if self._p[n] == self._p[n - 1]:
                return n
        return None

    # -- factor enumeration --------------------------------------------------

    def factors_of_length(self, n: int) -> set[str]:
        """The distinct factors of length ``n``."""
        self._check_range(n)
        sam = self._sam
        text = self.window
        out = set()
        lo, hi, end = sam.minlen, sam.maxlen, sam.first_end
        for s in range(1, sam.n_states):
            if lo[s] <= n <= hi[s]:
                e = int(end[s])
                out.add(text[e - n + 1:e + 1])
        return out

    def factors_with_positions(self, n: int) -> list[tuple[str, int]]:
        """(factor, first occurrence start) pairs of length ``n``, sorted."""
        self._check_range(n)
        sam = self._sam
        text = self.window
        out = []
        lo, hi, end = sam.minlen, sam.maxlen, sam.first_end
        for s in range(1, sam.n_states):
            if lo[s] <= n <= hi[s]:
                e = int(end[s])
                out.append((text[e - n + 1:e + 1], e - n + 1))
        out.sort()
        return out

    # -- special factors -----------------------------------------------------

    def right_special(self, n: int) -> set[str]:
        """Factors of length ``n`` with at least two right extensions.

        Queries stop one short of ``n_max`` because specialness of a factor
        of length n is read off extensions of length n+1.
        """
        self._check_range(n, self.n_max - 1)
        text = self.window
        keep = (self._rs_lo <= n) & (n <= self._rs_hi)
        return {text[int(e) - n + 1:int(e) + 1] for e in self._rs_end[keep]}

    def right_special_count(self, n: int) -> int:
        self._check_range(n, self.n_max - 1)
        return int(self._right_special_counts[n - 1])

    def left_special(self, n: int) -> set[str]:
        """Factors of length ``n`` with at least two left extensions.

        Computed on a suffix automaton of the reversed window, built lazily on
        first use: left special factors are reversed right special factors of
        the reversed window.
        """
        self._check_range(n, self.n_max - 1)
        if self._rev_sam is None:
            self._rev_sam = SuffixAutomaton(self.window[::-1])
        sam = self._rev_sam
        text = sam.text
        out = set()
        lo, hi, end, deg = sam.minlen, sam.maxlen, sam.first_end, sam.outdeg
        for s in range(1, sam.n_states):
            if deg[s] >= 2 and lo[s] <= n <= hi[s]:
                e = int(end[s])
                out.add(text[e - n + 1:e + 1][::-1])
        return out

    # -- membership and occurrences ------------------------------------------

    def contains(self, word: str) -> bool:
        return self._sam.state_of(word) is not None

    def first_occurrence(self, word: str) -> int | None:
        """Start of the leftmost occurrence in the window, or None."""
        return self._sam.first_occurrence(word)

    def occurrences(self, word: str) -> list[int]:
        """All start positions of ``word`` in the window, in order.

        The empty word occurs at every boundary 0..n_work.
        """
        if len(word) > self.n_max:
            raise PreconditionError(
                "out-of-range",
                f"occurrence queries are limited to length <= {self.n_max}")
        if word == "":
            return list(range(self.n_work + 1))
        out = []
        start = self.window.find(word)
        while start != -1:
            out.append(start)
            start = self.window.find(word, start + 1)
        return out


def build_factor_index(source: WordSource, n_work: int | None = None,
                       n_max: int = DEFAULT_N_MAX,
                       stabilization_factor: int = DEFAULT_STABILIZATION_FACTOR,
                       ) -> FactorIndex:
    """Index the length-``n_work`` prefix of ``source`` up to factor length ``n_max``.

    ``n_work`` defaults to ``stabilization_factor * n_max``. Windows shorter
    than ``2 * n_max`` are rejected, since then even a single factor of
    maximal length cannot have two occurrences.
    """
    if n_max < 1:
        raise PreconditionError("out-of-range", f"n_max must be >= 1, got {n_max}")
    if n_work is None:
        n_work = stabilization_factor * n_max
    if n_work < 2 * n_max:
        raise PreconditionError(
            "window-too-small",
            f"window of {n_work} letters cannot support n_max = {n_max}"
            f" (need at least {2 * n_max})")
    return FactorIndex(source, source.prefix(n_work), n_max)


def stabilization_check(source: WordSource, n_work: int | None = None,
                        n_max: int = DEFAULT_N_MAX) -> bool:
    """True when doubling the window leaves the complexity profile unchanged."""
    a = build_factor_index(source, n_work, n_max)
    b = build_factor_index(source, 2 * a.n_work, n_max)
    return a.profile().p == b.profile().p
