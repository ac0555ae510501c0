"""Buchberger's algorithm for pure-difference binomial ideals.

All coefficients are +1/-1, so an S-polynomial or a reduction step of
binomials by binomials is again a binomial (or zero), and reducing a
binomial amounts to reducing each of its two terms.  The engine runs on
integer words (see :class:`~ferrers_rees.poly.Codec`); the public functions
take and return :class:`~ferrers_rees.poly.Binomial` values.
"""

from __future__ import annotations

import heapq
import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterable, Sequence

from ._kernels import get_reducer_class
from .core import LimitError
from .poly import (
    Binomial,
    Codec,
    Monomial,
    MonomialOrder,
    Variable,
    binomial_from_json,
    binomial_to_json,
    make_binomial,
)

Word = tuple[int, ...]
Rule = tuple[Word, Word]

DEFAULT_MAX_DEGREE = 10
DEFAULT_MAX_BASIS = 100_000
DEFAULT_MAX_PAIRS = 20_000_000


# -- word arithmetic (non-increasing tuples of ranks) ---------------------------

def w_divides(b: Word, a: Word) -> bool:
    """True iff ``b`` divides ``a``."""
    i, n = 0, len(a)
    for v in b:
        while i < n and a[i] > v:
            i += 1
        if i == n or a[i] != v:
            return False
        i += 1
    return True


def w_div(a: Word, b: Word) -> Word:
    out = list(a)
    for v in b:
        out.remove(v)
    return tuple(out)


def w_mul(a: Word, b: Word) -> Word:
    return tuple(sorted(a + b, reverse=True))


def w_lcm(a: Word, b: Word) -> Word:
    ca, cb = Counter(a), Counter(b)
    ca |= cb
    return tuple(sorted(ca.elements(), reverse=True))


def w_coprime(a: Word, b: Word) -> bool:
    return not set(a).intersection(b)


# -- bases ----------------------------------------------------------------------

@dataclass(frozen=True)
class BinomialBasis:
    """Canonically sorted, duplicate-free list of binomials under ``order``.

    Use :meth:`of` to build one; it orients every binomial for ``order``.
    """

    order: MonomialOrder
    elements: tuple[Binomial, ...]

    @classmethod
    def of(cls, order: MonomialOrder, binomials: Iterable[Binomial | None]) -> "BinomialBasis":
        oriented = {b.oriented(order) for b in binomials if b is not None}
        ordered = sorted(oriented, key=lambda b: (order.word(b.lead), order.word(b.trail)))
        return cls(order, tuple(ordered))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, b: object) -> bool:
        return b in self.elements

    @property
    def variables(self) -> set[Variable]:
        out: set[Variable] = set()
        for b in self.elements:
            out |= b.variables
        return out

    @property
    def leads(self) -> list[Monomial]:
        return [b.lead for b in self.elements]

    def codec(self, extra: Iterable[Variable] = ()) -> Codec:
        return Codec(self.order, self.variables | set(extra))

    def degree_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(b.degree for b in self.elements).items()))

    def with_order(self, order: MonomialOrder) -> "BinomialBasis":
        return BinomialBasis.of(order, self.elements)

    def union(self, other: "BinomialBasis") -> "BinomialBasis":
        return BinomialBasis.of(self.order, self.elements + other.elements)


def _encode(codec: Codec, binomials: Iterable[Binomial]) -> list[Rule]:
    return [codec.encode_binomial(b) for b in binomials]


def _decode(codec: Codec, rules: Iterable[Rule]) -> BinomialBasis:
    return BinomialBasis.of(codec.order, (codec.decode_binomial(r) for r in rules))


def _reducer_for(codec: Codec, rules: Iterable[Rule], backend: str | None = None):
    red = get_reducer_class(backend)(len(codec))
    for lead, trail in rules:
        red.add(lead, trail)
    return red


# -- normal forms & S-polynomials --------------------------------------------------

def normal_form(
    item: Binomial | Monomial, basis: BinomialBasis, backend: str | None = None
) -> Binomial | Monomial | None:
    """Fully reduce a monomial or binomial by ``basis``; None means zero.

    Reducers are tried in canonical basis order and the leading term is
    reduced first; each term ends up divisible by no lead of ``basis``.
    """
    extra = item.variables if isinstance(item, Binomial) else set(item.variables)
    codec = basis.codec(extra)
    red = _reducer_for(codec, _encode(codec, basis.elements), backend)
    if isinstance(item, Monomial):
        return codec.decode(red.normal_form(codec.encode(item)))
    lead, trail = codec.encode_binomial(item)
    nl, nt = red.normal_form(lead), red.normal_form(trail)
    if nl == nt:
        return None
    return codec.decode_binomial((nl, nt) if nl > nt else (nt, nl))


def s_polynomial(f: Binomial, g: Binomial, order: MonomialOrder) -> Binomial | None:
    f, g = f.oriented(order), g.oriented(order)
    L = f.lead.lcm(g.lead)
    return make_binomial(order, (L / f.lead) * f.trail, (L / g.lead) * g.trail)


def _s_words(a: Rule, b: Rule) -> tuple[Word, Word]:
    L = w_lcm(a[0], b[0])
    return w_mul(w_div(L, a[0]), a[1]), w_mul(w_div(L, b[0]), b[1])


# -- completion ---------------------------------------------------------------------

class _Completion:
    """Homogeneous-style Buchberger loop: generators and S-pairs are processed
    in order of degree, S-pairs by (lcm degree, i, j)."""

    def __init__(self, nvars: int, backend: str | None, max_degree: int, max_basis: int, max_pairs: int):
        self.red = get_reducer_class(backend)(nvars)
        self.rules: list[Rule] = []
        self.by_lead: dict[Word, list[int]] = {}
        self.lead_sizes: set[int] = set()
        self.by_var: dict[int, list[int]] = defaultdict(list)
        self.pending: set[tuple[int, int]] = set()
        self.heap: list[tuple[int, int, int, int]] = []
        self.max_degree = max_degree
        self.max_basis = max_basis
        self.max_pairs = max_pairs
        self.pairs_made = 0

    def _divisors(self, L: Word) -> set[int]:
        found: set[int] = set()
        for s in self.lead_sizes:
            if s > len(L):
                continue
            for sub in set(combinations(L, s)):
                found.update(self.by_lead.get(sub, ()))
        return found

    def _is_treated(self, i: int, k: int) -> bool:
        a, b = (i, k) if i < k else (k, i)
        return (a, b) not in self.pending

    def chain_skips(self, i: int, j: int, L: Word) -> bool:
        for k in self._divisors(L):
            if k != i and k != j and self._is_treated(i, k) and self._is_treated(j, k):
                return True
        return False

    def add(self, lead: Word, trail: Word) -> int:
        idx = self.red.add(lead, trail)
        self.rules.append((lead, trail))
        if len(self.rules) > self.max_basis:
            raise LimitError(f"basis exceeded {self.max_basis} elements")
        partners: set[int] = set()
        for v in set(lead):
            partners.update(self.by_var[v])
        for i in sorted(partners):
            L = w_lcm(self.rules[i][0], lead)
            heapq.heappush(self.heap, (len(L), 1, i, idx))
            self.pending.add((i, idx))
        self.pairs_made += len(partners)
        if self.pairs_made > self.max_pairs:
            raise LimitError(f"more than {self.max_pairs} S-pairs")
        for v in set(lead):
            self.by_var[v].append(idx)
        self.by_lead.setdefault(lead, []).append(idx)
        self.lead_sizes.add(len(lead))
        return idx

    def run(self, gens: Sequence[Rule]) -> list[Rule]:
        for seq, (lead, trail) in enumerate(gens):
            heapq.heappush(self.heap, (max(len(lead), len(trail)), 0, seq, -1))
        nf = self.red.normal_form
        while self.heap:
            deg, kind, i, j = heapq.heappop(self.heap)
            if deg > self.max_degree:
                raise LimitError(f"degree {deg} exceeds the budget of {self.max_degree}")
            if kind == 0:
                s1, s2 = gens[i]
            else:
                self.pending.discard((i, j))
                L = w_lcm(self.rules[i][0], self.rules[j][0])
                if self.chain_skips(i, j, L):
                    continue
                s1, s2 = _s_words(self.rules[i], self.rules[j])
            n1, n2 = nf(s1), nf(s2)
            if n1 == n2:
                continue
            self.add(*((n1, n2) if n1 > n2 else (n2, n1)))
        return self.rules


def buchberger(
    gens: BinomialBasis,
    *,
    max_degree: int = DEFAULT_MAX_DEGREE,
    max_basis: int = DEFAULT_MAX_BASIS,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    backend: str | None = None,
) -> BinomialBasis:
    """A Groebner basis of the ideal generated by ``gens`` under ``gens.order``.

    Generators are processed in canonical order (degree, then basis order),
    so the result does not depend on how the input was listed.  Raises
    :class:`LimitError` when a budget is exceeded.
    """
    codec = gens.codec()
    rules = _encode(codec, gens.elements)
    rules.sort(key=lambda r: (len(r[0]), r))
    engine = _Completion(len(codec), backend, max_degree, max_basis, max_pairs)
    return _decode(codec, engine.run(rules))


def _inter_reduce_words(codec: Codec, rules: Sequence[Rule], backend: str | None = None) -> list[Rule]:
    kept: list[Rule] = []
    probe = get_reducer_class(backend)(len(codec))
    for lead, trail in sorted(rules):
        # a lead's divisors are never larger, so they have already been seen
        if probe.find(lead) < 0:
            probe.add(lead, trail)
            kept.append((lead, trail))
    red = _reducer_for(codec, kept, backend)
    return [(lead, red.normal_form(trail)) for lead, trail in kept]


def inter_reduce(basis: BinomialBasis, backend: str | None = None) -> BinomialBasis:
    """The reduced Groebner basis, given any Groebner basis of the ideal."""
    codec = basis.codec()
    return _decode(codec, _inter_reduce_words(codec, _encode(codec, basis.elements), backend))


def reduced_groebner_basis(gens: BinomialBasis, **kwargs: Any) -> BinomialBasis:
    backend = kwargs.get("backend")
    return inter_reduce(buchberger(gens, **kwargs), backend=backend)


# -- verification ------------------------------------------------------------------

@dataclass
class GBReport:
    is_groebner: bool
    failing_spair: tuple[Binomial, Binomial, Binomial] | None = None
    reduced_basis: BinomialBasis | None = None
    initial_squarefree: bool = False
    degree_histogram: dict[int, int] = field(default_factory=dict)
    pairs_checked: int = 0

    def to_json(self) -> dict[str, Any]:
        order = self.reduced_basis.order if self.reduced_basis is not None else None
        fail = None
        if self.failing_spair is not None:
            f, g, h = self.failing_spair
            fail = {"f": f.render(order), "g": g.render(order), "normal_form": h.render(order)}
        return {
            "schema": 1,
            "is_groebner": self.is_groebner,
            "failing_spair": fail,
            "initial_squarefree": self.initial_squarefree,
            "degree_histogram": {str(k): v for k, v in self.degree_histogram.items()},
            "reduced_basis_size": None if self.reduced_basis is None else len(self.reduced_basis),
        }


def initial_squarefree(basis: BinomialBasis) -> bool:
    return all(b.lead.is_squarefree for b in basis.elements)


def is_groebner(candidate: BinomialBasis, backend: str | None = None, max_pairs: int = DEFAULT_MAX_PAIRS) -> GBReport:
    """Buchberger's criterion: every S-pair reduces to zero.

    Pairs with coprime leads are skipped, as are pairs covered by an element
    whose lead divides their lcm and whose own pairs with both partners are
    already settled.  Stops at the first failing pair.
    """
    codec = candidate.codec()
    rules = _encode(codec, candidate.elements)
    red = _reducer_for(codec, rules, backend)
    by_var: dict[int, list[int]] = defaultdict(list)
    by_lead: dict[Word, list[int]] = defaultdict(list)
    pairs: list[tuple[int, int, int]] = []
    for t, (lead, _) in enumerate(rules):
        partners: set[int] = set()
        for v in set(lead):
            partners.update(by_var[v])
            by_var[v].append(t)
        by_lead[lead].append(t)
        pairs.extend((len(w_lcm(rules[i][0], lead)), i, t) for i in partners)
        if len(pairs) > max_pairs:
            raise LimitError(f"more than {max_pairs} S-pairs")
    pairs.sort()
    sizes = sorted({len(lead) for lead, _ in rules})
    open_pairs = {(i, j) for _, i, j in pairs}

    def settled(i: int, k: int) -> bool:
        return (min(i, k), max(i, k)) not in open_pairs

    checked = 0
    for _, i, j in pairs:
        open_pairs.discard((i, j))
        L = w_lcm(rules[i][0], rules[j][0])
        skip = False
        for s in sizes:
            if s > len(L):
                break
            for sub in set(combinations(L, s)):
                for k in by_lead.get(sub, ()):
                    if k != i and k != j and settled(i, k) and settled(j, k):
                        skip = True
                        break
                if skip:
                    break
            if skip:
                break
        if skip:
            continue
        checked += 1
        s1, s2 = _s_words(rules[i], rules[j])
        n1, n2 = red.normal_form(s1), red.normal_form(s2)
        if n1 != n2:
            h = codec.decode_binomial((n1, n2) if n1 > n2 else (n2, n1))
            return GBReport(
                False,
                failing_spair=(codec.decode_binomial(rules[i]), codec.decode_binomial(rules[j]), h),
                initial_squarefree=initial_squarefree(candidate),
                degree_histogram=candidate.degree_histogram(),
                pairs_checked=checked,
            )
    reduced = _decode(codec, _inter_reduce_words(codec, rules, backend))
    return GBReport(
        True,
        reduced_basis=reduced,
        initial_squarefree=initial_squarefree(reduced),
        degree_histogram=reduced.degree_histogram(),
        pairs_checked=checked,
    )


# -- serialization -------------------------------------------------------------------

def basis_to_text(basis: BinomialBasis) -> str:
    return "\n".join(b.render(basis.order) for b in basis.elements)


def basis_to_json(basis: BinomialBasis) -> dict[str, Any]:
    return {
        "schema": 1,
        "order": basis.order.name,
        "elements": [binomial_to_json(b) for b in basis.elements],
        "degree_histogram": {str(k): v for k, v in basis.degree_histogram().items()},
    }


def basis_from_json(doc: Any) -> BinomialBasis:
    if isinstance(doc, str):
        doc = json.loads(doc)
    order = MonomialOrder.from_name(doc["order"])
    return BinomialBasis.of(order, (binomial_from_json(e) for e in doc["elements"]))
