"""Suffix automaton over a text window, specialized for factor statistics.

The automaton recognizes exactly the factors of the window. Each state is an
equivalence class of factors sharing the same set of ending positions, so a
state covers a contiguous interval of factor lengths [minlen, maxlen], all
its factors have the same set of right-extension letters (the out-going
transition letters), and they share the first (leftmost) ending position.
Those three facts drive every per-length statistic downstream.

States are integers into parallel arrays; transitions are one dense array per
alphabet letter, which is compact for the two- or three-letter alphabets used
here. Construction is the classic online algorithm; Python lists are used
during the build and converted to numpy arrays afterwards to keep resident
memory small for windows of a million letters.
"""

from __future__ import annotations

import numpy as np


class SuffixAutomaton:

    __slots__ = ("text", "alphabet", "n_states", "maxlen", "minlen", "link",
                 "first_end", "outdeg", "trans", "_letter_index")

    def __init__(self, text: str):
        self.text = text
        self.alphabet = tuple(sorted(set(text)))
        letter_index = {ch: i for i, ch in enumerate(self.alphabet)}
        self._letter_index = letter_index

        maxlen = [0]
        link = [-1]
        first_end = [-1]
        trans = [[-1] for _ in self.alphabet]
        last = 0
        for pos, ch in enumerate(text):
            c = letter_index[ch]
            tc = trans[c]
            cur = len(maxlen)
            maxlen.append(pos + 1)
            link.append(-1)
            first_end.append(pos)
            for t in trans:
                t.append(-1)
            p = last
            while p != -1 and tc[p] == -1:
                tc[p] = cur
                p = link[p]
            if p == -1:
                link[cur] = 0
            else:
                q = tc[p]
                if maxlen[p] + 1 == maxlen[q]:
                    link[cur] = q
                else:
                    clone = len(maxlen)
                    maxlen.append(maxlen[p] + 1)
                    link.append(link[q])
                    first_end.append(first_end[q])
                    for t in trans:
                        t.append(t[q])
                    while p != -1 and tc[p] == q:
                        tc[p] = clone
                        p = link[p]
                    link[q] = clone
                    link[cur] = clone
            last = cur

        self.n_states = len(maxlen)
        self.maxlen = np.asarray(maxlen, dtype=np.int64)
        self.link = np.asarray(link, dtype=np.int64)
        self.first_end = np.asarray(first_end, dtype=np.int64)
        self.trans = [np.asarray(t, dtype=np.int64) for t in trans]
        minlen = np.empty(self.n_states, dtype=np.int64)
        minlen[0] = 0
        minlen[1:] = self.maxlen[self.link[1:]] + 1
        self.minlen = minlen
        outdeg = np.zeros(self.n_states, dtype=np.int64)
        for t in self.trans:
            outdeg += t != -1
        self.outdeg = outdeg

    def state_of(self, word: str) -> int | None:
        """State holding ``word``, or None when it is not a factor."""
        s = 0
        li = self._letter_index
        trans = self.trans
        for ch in word:
            c = li.get(ch)
            if c is None:
                return None
            s = int(trans[c][s])
            if s == -1:
                return None
        return s

    def first_occurrence(self, word: str) -> int | None:
        """Start of the leftmost occurrence of ``word``, or None."""
        s = self.state_of(word)
        if s is None:
            return None
        if s == 0:
            return 0
        return int(self.first_end[s]) - len(word) + 1

    def length_counts(self, n_max: int, mask: np.ndarray | None = None) -> np.ndarray:
        """Number of distinct factors per length 1..n_max (index 0 = length 1).

        Each non-initial state contributes one factor for every length in its
        [minlen, maxlen] interval, clipped at n_max. ``mask`` restricts the
        count to a boolean selection of states (e.g. branching states).
        """
        lo = self.minlen[1:]
        hi = np.minimum(self.maxlen[1:], n_max)
        keep = lo <= hi
        if mask is not None:
            keep &= mask[1:]
        diff = np.zeros(n_max + 2, dtype=np.int64)
        np.add.at(diff, lo[keep], 1)
        np.subtract.at(diff, hi[keep] + 1, 1)
        return np.cumsum(diff)[1:n_max + 1]
