"""Brute-force toric kernels of the fiber and Rees maps at bounded degree.

For a collection ``D_1, ..., D_r`` the fiber map sends ``T[(a);i]`` to the
generator monomial of ``a`` times a marker for component ``i`` (the extra
block ``x[n+1,i]`` when all diagrams coincide, otherwise ``t[i]``); the Rees
map sends ``T[(a);i]`` to ``x_a * t[i]`` and fixes the x-variables.  Kernel
elements are found by enumerating monomials of a given degree, grouping them
by image, and pairing every group member with the group's smallest member.
This is completely independent of the interchange/linear-relation
constructions in :mod:`ferrers_rees.presentation`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations_with_replacement
from typing import Any, Iterable, Iterator, NamedTuple

from .core import LimitError, PreconditionError
from .diagram import DiagramCollection, FerrersDiagram
from .groebner import (
    BinomialBasis,
    GBReport,
    _decode,
    _encode,
    _reducer_for,
    buchberger,
    inter_reduce,
    is_groebner,
)
from .poly import Binomial, Codec, Monomial, MonomialOrder, TVar, UVar, Variable, XVar

FIBER = "fiber"
REES = "rees"

DEFAULT_ENUMERATION_BUDGET = 20_000_000


@dataclass(frozen=True)
class ToricInstance:
    """A diagram collection together with the monomial map whose kernel we study."""

    diagrams: DiagramCollection
    map_kind: str = FIBER

    def __post_init__(self) -> None:
        if self.map_kind not in (FIBER, REES):
            raise ValueError(f"map_kind must be 'fiber' or 'rees', not {self.map_kind!r}")

    @classmethod
    def uniform(cls, diagram: FerrersDiagram, r: int = 1, map_kind: str = FIBER) -> "ToricInstance":
        return cls(DiagramCollection.uniform(diagram, r), map_kind)

    @classmethod
    def collection(cls, diagrams: Iterable[FerrersDiagram], map_kind: str = FIBER) -> "ToricInstance":
        return cls(DiagramCollection(tuple(diagrams)), map_kind)

    @property
    def r(self) -> int:
        return self.diagrams.r

    @property
    def n(self) -> int:
        return max(d.dimension for d in self.diagrams)

    @property
    def m(self) -> int:
        return max(d.max_coordinate for d in self.diagrams)

    @cached_property
    def t_variables(self) -> tuple[TVar, ...]:
        return tuple(
            TVar(a, i) for i, d in enumerate(self.diagrams, start=1) for a in d.sorted_points()
        )

    @cached_property
    def _t_set(self) -> frozenset[TVar]:
        return frozenset(self.t_variables)

    @cached_property
    def x_variables(self) -> tuple[XVar, ...]:
        """Base-ring x-variables; empty in fiber mode."""
        if self.map_kind == FIBER:
            return ()
        return tuple(XVar(k, j) for k in range(1, self.n + 1) for j in range(1, self.m + 1))

    @property
    def ring_variables(self) -> tuple[Variable, ...]:
        return self.x_variables + self.t_variables

    def order(self, t_kind: str = "sigma") -> MonomialOrder:
        """Default order of the presentation ring: ``t_kind`` on T, product with xlex for Rees."""
        if self.map_kind == REES:
            return MonomialOrder("product", t_kind)
        return MonomialOrder(t_kind)

    def _marker(self, i: int) -> Variable:
        if self.map_kind == FIBER and self.diagrams.is_uniform:
            return XVar(self.diagrams.diagrams[0].dimension + 1, i)
        return UVar(i)

    def image(self, v: Variable) -> Monomial:
        if isinstance(v, TVar):
            if v not in self._t_set:
                raise ValueError(f"{v} is not a variable of this instance")
            factors = [XVar(k, c) for k, c in enumerate(v.point, start=1)]
            factors.append(self._marker(v.component))
            return Monomial.of(*factors)
        if isinstance(v, XVar) and self.map_kind == REES and 1 <= v.block <= self.n and 1 <= v.index <= self.m:
            return Monomial.of(v)
        raise ValueError(f"{v} is not a variable of this instance")

    def monomial_map(self, m: Monomial) -> Monomial:
        out: dict[Variable, int] = {}
        for v, e in m.items:
            for w, f in self.image(v).items:
                out[w] = out.get(w, 0) + e * f
        return Monomial(out)

    def in_kernel(self, b: Binomial) -> bool:
        return self.monomial_map(b.lead) == self.monomial_map(b.trail)

    def describe(self) -> dict[str, Any]:
        from .diagram import diagram_to_json

        return {
            "map": self.map_kind,
            "r": self.r,
            "diagrams": [diagram_to_json(d) for d in self.diagrams],
        }


# -- enumeration ------------------------------------------------------------------

class _ImageTable:
    """Integer images of ring variables, for fast grouping of monomials."""

    def __init__(self, instance: ToricInstance, codec: Codec):
        ids: dict[Variable, int] = {}
        self.images: list[tuple[int, ...]] = []
        for v in codec.variables:
            img = []
            for w, e in instance.image(v).items:
                img.extend([ids.setdefault(w, len(ids))] * e)
            self.images.append(tuple(img))

    def key(self, word: tuple[int, ...]) -> tuple[int, ...]:
        images = self.images
        out: list[int] = []
        for v in word:
            out.extend(images[v])
        out.sort()
        return tuple(out)


def _slices(instance: ToricInstance, max_t_degree: int, x_degree: int) -> list[tuple[int, int]]:
    """(T-degree, x-degree) slices up to ``max_t_degree``; images never mix slices."""
    if instance.map_kind == FIBER:
        return [(k, 0) for k in range(2, max_t_degree + 1)]
    return [
        (k, e)
        for k in range(1, max_t_degree + 1)
        for e in range(x_degree + 1)
        if (k, e) != (1, 0)
    ]


def _slice_words(codec: Codec, instance: ToricInstance, k: int, e: int) -> Iterator[tuple[int, ...]]:
    rank = codec.rank
    t_ranks = sorted((rank[v] for v in instance.t_variables), reverse=True)
    x_ranks = sorted((rank[v] for v in instance.x_variables), reverse=True)
    for xs in combinations_with_replacement(x_ranks, e):
        for ts in combinations_with_replacement(t_ranks, k):
            # every x-variable outranks every T-variable, so the concatenation is sorted
            yield xs + ts


def _slice_size(instance: ToricInstance, k: int, e: int) -> int:
    from math import comb

    nt, nx = len(instance.t_variables), len(instance.x_variables)
    return comb(nt + k - 1, k) * comb(nx + e - 1, e) if e else comb(nt + k - 1, k)


def _groups(instance: ToricInstance, codec: Codec, k: int, e: int, budget: int) -> dict[tuple, list]:
    if _slice_size(instance, k, e) > budget:
        raise LimitError(f"slice (T-degree {k}, x-degree {e}) exceeds the enumeration budget of {budget}")
    table = _ImageTable(instance, codec)
    groups: dict[tuple, list] = {}
    for w in _slice_words(codec, instance, k, e):
        groups.setdefault(table.key(w), []).append(w)
    return groups


def _kernel_rules(instance: ToricInstance, codec: Codec, slices, budget: int) -> list[tuple]:
    rules = []
    for k, e in slices:
        for members in _groups(instance, codec, k, e, budget).values():
            if len(members) > 1:
                rep = min(members)
                rules.extend((w, rep) for w in members if w != rep)
    return rules


def _instance_codec(instance: ToricInstance, order: MonomialOrder, extra: Iterable[Variable] = ()) -> Codec:
    return Codec(order, set(instance.ring_variables) | set(extra))


def kernel_binomials(
    instance: ToricInstance,
    max_t_degree: int,
    order: MonomialOrder | None = None,
    *,
    x_degree: int = 1,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> BinomialBasis:
    """Spanning binomials of the kernel up to T-degree ``max_t_degree``.

    In Rees mode the x-multiplier degree of each monomial is bounded by
    ``x_degree``.
    """
    if max_t_degree < 2:
        raise PreconditionError("max_t_degree must be at least 2")
    order = order or instance.order()
    codec = _instance_codec(instance, order)
    rules = _kernel_rules(instance, codec, _slices(instance, max_t_degree, x_degree), budget)
    return _decode(codec, rules)


def _survivors(red, instance: ToricInstance, codec: Codec, slices, budget: int, limit: int):
    """Kernel pairs (member, representative) whose normal forms differ."""
    table = _ImageTable(instance, codec)
    nf = red.normal_form
    for k, e in slices:
        if _slice_size(instance, k, e) > budget:
            raise LimitError(f"slice (T-degree {k}, x-degree {e}) exceeds the enumeration budget of {budget}")
        seen: dict[tuple, tuple] = {}
        for w in _slice_words(codec, instance, k, e):
            key = table.key(w)
            n = nf(w)
            first = seen.get(key)
            if first is None:
                seen[key] = (w, n)
            elif first[1] != n:
                yield w, first[0], n, first[1]
                limit -= 1
                if limit <= 0:
                    return


# -- verification -------------------------------------------------------------------

@dataclass
class VerificationReport:
    sound: bool
    gb_closed: bool
    complete_at_degree: bool
    max_t_degree: int
    failing_witnesses: list[str] = field(default_factory=list)
    degree_histogram: dict[int, int] = field(default_factory=dict)
    gb_report: GBReport | None = None

    @property
    def passed(self) -> bool:
        return self.sound and self.gb_closed and self.complete_at_degree

    def to_json(self) -> dict[str, Any]:
        return {
            "schema": 1,
            "sound": self.sound,
            "gb_closed": self.gb_closed,
            "complete_at_degree": self.complete_at_degree,
            "max_t_degree": self.max_t_degree,
            "passed": self.passed,
            "failing_witnesses": list(self.failing_witnesses),
            "degree_histogram": {str(k): v for k, v in sorted(self.degree_histogram.items())},
        }

    def to_text(self) -> str:
        lines = [
            f"sound: {str(self.sound).lower()}",
            f"gb_closed: {str(self.gb_closed).lower()}",
            f"complete_at_degree_{self.max_t_degree}: {str(self.complete_at_degree).lower()}",
            f"passed: {str(self.passed).lower()}",
            "degree_histogram: " + json.dumps({str(k): v for k, v in sorted(self.degree_histogram.items())}),
        ]
        lines.extend(f"witness: {w}" for w in self.failing_witnesses)
        return "\n".join(lines)


def verify_candidate(
    candidate: BinomialBasis,
    instance: ToricInstance,
    max_t_degree: int = 3,
    *,
    x_degree: int = 1,
    max_witnesses: int = 10,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    backend: str | None = None,
) -> VerificationReport:
    """Soundness, Buchberger closure and bounded-degree completeness of ``candidate``."""
    witnesses: list[str] = []
    order = candidate.order

    unsound = [b for b in candidate.elements if not instance.in_kernel(b)]
    witnesses.extend(f"not in kernel: {b.render(order)}" for b in unsound[:max_witnesses])

    report = is_groebner(candidate, backend=backend)
    if not report.is_groebner:
        f, g, h = report.failing_spair
        witnesses.append(f"S-pair ({f.render(order)}) , ({g.render(order)}) -> {h.render(order)}")

    codec = _instance_codec(instance, order, candidate.variables)
    red = _reducer_for(codec, _encode(codec, candidate.elements), backend)
    slices = _slices(instance, max_t_degree, x_degree)
    complete = True
    for w, rep, nw, nrep in _survivors(red, instance, codec, slices, budget, max_witnesses):
        complete = False
        lhs, rhs = codec.decode(w), codec.decode(rep)
        witnesses.append(
            f"kernel element {lhs} - {rhs} reduces to "
            f"{codec.decode(nw)} - {codec.decode(nrep)}"
        )
    return VerificationReport(
        sound=not unsound,
        gb_closed=report.is_groebner,
        complete_at_degree=complete,
        max_t_degree=max_t_degree,
        failing_witnesses=witnesses,
        degree_histogram=(report.reduced_basis or candidate).degree_histogram(),
        gb_report=report,
    )


class KernelGB(NamedTuple):
    basis: BinomialBasis
    stable: bool


def reduced_kernel_gb(
    instance: ToricInstance,
    order: MonomialOrder | None = None,
    max_t_degree: int = 3,
    *,
    x_degree: int = 1,
    check_stability: bool = True,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    backend: str | None = None,
    **limits: Any,
) -> KernelGB:
    """Reduced Groebner basis of the degree-bounded kernel, plus a stability flag.

    ``stable`` is True when adding the kernel elements of the next degree
    would not change the reduced basis, i.e. every one of them already
    reduces to zero.
    """
    order = order or instance.order()
    gens = kernel_binomials(instance, max_t_degree, order, x_degree=x_degree, budget=budget)
    basis = inter_reduce(buchberger(gens, backend=backend, **limits), backend=backend)
    stable = False
    if check_stability:
        codec = _instance_codec(instance, order, basis.variables)
        red = _reducer_for(codec, _encode(codec, basis.elements), backend)
        nxt = [s for s in _slices(instance, max_t_degree + 1, x_degree) if s[0] == max_t_degree + 1]
        stable = next(_survivors(red, instance, codec, nxt, budget, 1), None) is None
    return KernelGB(basis, stable)


def degree_count(basis: BinomialBasis, degree: int) -> int:
    return sum(1 for b in basis.elements if b.degree == degree)
