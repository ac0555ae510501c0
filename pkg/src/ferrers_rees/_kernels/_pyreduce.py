"""Pure-Python monomial reducer."""

from __future__ import annotations

from bisect import insort
from itertools import combinations

Word = tuple[int, ...]


class Reducer:
    """Rewrite rules over words; lookups go through sub-multisets of the word."""

    def __init__(self, nvars: int):
        self.nvars = nvars
        self.leads: list[Word] = []
        self.trails: list[Word] = []
        self._first: dict[Word, int] = {}
        self._sizes: list[int] = []

    def __len__(self) -> int:
        return len(self.leads)

    def _check(self, word: Word) -> None:
        for v in word:
            if not 0 <= v < self.nvars:
                raise ValueError(f"rank {v} out of range for {self.nvars} variables")

    def add(self, lead: Word, trail: Word) -> int:
        if not lead:
            raise ValueError("a rule needs a nonconstant lead")
        self._check(lead)
        self._check(trail)
        idx = len(self.leads)
        self.leads.append(tuple(lead))
        self.trails.append(tuple(trail))
        self._first.setdefault(tuple(lead), idx)
        if len(lead) not in self._sizes:
            insort(self._sizes, len(lead))
        return idx

    def find(self, word: Word) -> int:
        """Smallest rule index whose lead divides ``word``, or -1."""
        first = self._first
        best = -1
        n = len(word)
        for s in self._sizes:
            if s > n:
                break
            for sub in combinations(word, s):
                i = first.get(sub)
                if i is not None and (best < 0 or i < best):
                    best = i
        return best

    def normal_form(self, word: Word) -> Word:
        self._check(word)
        leads, trails = self.leads, self.trails
        while True:
            i = self.find(word)
            if i < 0:
                return tuple(word)
            rest = list(word)
            for v in leads[i]:
                rest.remove(v)
            rest.extend(trails[i])
            rest.sort(reverse=True)
            word = tuple(rest)

    def normal_forms(self, words) -> list[Word]:
        return [self.normal_form(w) for w in words]
