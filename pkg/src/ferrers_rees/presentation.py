"""Candidate Groebner bases: interchange quadrics, linear Rees relations, their union."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, combinations
from typing import Iterable, Mapping, Sequence

from .core import LatticePoint
from .diagram import FerrersDiagram, tilde
from .groebner import BinomialBasis
from .oracle import FIBER, REES, ToricInstance
from .poly import (
    PRODUCT,
    SIGMA,
    XLEX,
    Binomial,
    Monomial,
    MonomialOrder,
    TVar,
    XVar,
    make_binomial,
)


def _swap(a: LatticePoint, b: LatticePoint, H: Iterable[int]) -> tuple[LatticePoint, LatticePoint]:
    hs = set(H)
    p = tuple(b[k] if k + 1 in hs else a[k] for k in range(len(a)))
    q = tuple(a[k] if k + 1 in hs else b[k] for k in range(len(a)))
    return p, q


def _check_subset(H: Iterable[int], dim: int) -> None:
    for h in H:
        if not 1 <= h <= dim:
            raise ValueError(f"interchange index {h} is outside [1, {dim}]")


def interchange_points(
    a: LatticePoint, b: LatticePoint, H: Iterable[int], diagram: FerrersDiagram
) -> tuple[LatticePoint, LatticePoint] | None:
    """The swapped pair ``(p, q)``, or None when the interchange is zero."""
    if a not in diagram.points or b not in diagram.points:
        raise ValueError(f"{a} and {b} must both lie in the diagram")
    H = tuple(H)
    _check_subset(H, diagram.dimension)
    p, q = _swap(a, b, H)
    if p not in diagram.points or q not in diagram.points:
        return None
    if sorted((a, b)) == sorted((p, q)):
        return None
    return p, q


def interchange(
    a: LatticePoint, b: LatticePoint, H: Iterable[int], diagram: FerrersDiagram, component: int = 1
) -> Binomial | None:
    """``T_a T_b - T_p T_q`` with ``p, q`` the swap of ``a, b`` on the 1-based positions ``H``."""
    a, b = tuple(a), tuple(b)
    pq = interchange_points(a, b, H, diagram)
    if pq is None:
        return None
    p, q = pq
    lhs = Monomial.of(TVar(a, component), TVar(b, component))
    rhs = Monomial.of(TVar(p, component), TVar(q, component))
    return make_binomial(SIGMA, lhs, rhs)


def _tvar(point: LatticePoint) -> TVar:
    return TVar(point[:-1], point[-1])


def fiber_candidate(diagram: FerrersDiagram, r: int = 1) -> BinomialBasis:
    """All nonzero interchange binomials of ``D x [r]``, under sigma."""
    big = tilde(diagram, r)
    pts = big.sorted_points()
    dims = range(1, big.dimension + 1)
    # H and its complement give the same binomial, so fix position 1 outside H
    subsets = [H for size in range(big.dimension) for H in combinations(dims[1:], size)]
    out: set[Binomial] = set()
    members = big.points
    for i, a in enumerate(pts):
        for b in pts[i + 1:]:
            for H in subsets:
                p, q = _swap(a, b, H)
                if p in members and q in members and sorted((p, q)) != [a, b]:
                    lhs = Monomial.of(_tvar(a), _tvar(b))
                    rhs = Monomial.of(_tvar(p), _tvar(q))
                    out.add(make_binomial(SIGMA, lhs, rhs))
    return BinomialBasis.of(SIGMA, out)


def rees_linear_relations(diagram: FerrersDiagram, r: int = 1, order: MonomialOrder = PRODUCT) -> BinomialBasis:
    """``x[k,k1] T[(a);i] - x[k,a_k] T[(b);i]`` where ``b`` lowers ``a_k`` to ``k1``."""
    out = []
    for a in diagram.sorted_points():
        for k, ak in enumerate(a, start=1):
            for k1 in range(1, ak):
                b = a[: k - 1] + (k1,) + a[k:]
                for i in range(1, r + 1):
                    out.append(
                        Binomial(
                            Monomial.of(XVar(k, k1), TVar(a, i)),
                            Monomial.of(XVar(k, ak), TVar(b, i)),
                        )
                    )
    return BinomialBasis.of(order, out)


@dataclass(frozen=True)
class PresentationCandidate:
    instance: ToricInstance
    fiber_part: BinomialBasis
    linear_part: BinomialBasis
    rees_candidate: BinomialBasis


def rees_candidate(diagram: FerrersDiagram, r: int = 1) -> PresentationCandidate:
    fiber = fiber_candidate(diagram, r)
    linear = rees_linear_relations(diagram, r)
    union = BinomialBasis.of(PRODUCT, fiber.elements + linear.elements)
    return PresentationCandidate(ToricInstance.uniform(diagram, r, REES), fiber, linear, union)


def _components(
    ideal_generators: Sequence[Sequence[Monomial] | Mapping[tuple, Monomial]],
) -> list[list[tuple[tuple, Monomial]]]:
    comps = []
    for gens in ideal_generators:
        if isinstance(gens, Mapping):
            items = list(gens.items())
        else:
            ordered = sorted(set(gens), key=XLEX.word, reverse=True)
            items = [((j,), f) for j, f in enumerate(ordered, start=1)]
        if not items:
            raise ValueError("every component needs at least one generator")
        degrees = {f.degree for _, f in items}
        if len(degrees) != 1:
            raise ValueError(f"component is not equigenerated (degrees {sorted(degrees)})")
        comps.append(items)
    return comps


def generic_rees_from_fiber(
    ideal_generators: Sequence[Sequence[Monomial] | Mapping[tuple, Monomial]],
    fiber_gb: BinomialBasis,
    order: MonomialOrder | None = None,
) -> BinomialBasis:
    """Linear relations for arbitrary equigenerated monomial ideals, joined with ``fiber_gb``.

    Component ``i`` contributes ``x_k1 T[f;i] - x_k2 T[f';i]`` for every
    generator ``f`` and variable ``x_k1``, where ``x_k2`` is the smallest
    variable below ``x_k1`` with ``x_k1 f / x_k2`` a generator ``f'``.  A
    component given as a list gets labels ``(1,), (2,), ...`` in decreasing
    lex order; a mapping supplies its own labels (e.g. lattice points).
    """
    comps = _components(ideal_generators)
    if order is None:
        fo = fiber_gb.order
        order = MonomialOrder("product", fo.t_kind if fo.kind == "product" else fo.kind)
    relations = []
    for i, items in enumerate(comps, start=1):
        by_monomial = {f: label for label, f in items}
        xs = XLEX.sorted_variables(chain.from_iterable(f.variables for _, f in items))
        for label, f in items:
            for pos, x1 in enumerate(xs):
                for x2 in reversed(xs[pos + 1:]):
                    if f.exponent(x2) == 0:
                        continue
                    target = (Monomial.of(x1) * f) / Monomial.of(x2)
                    if target in by_monomial:
                        relations.append(
                            Binomial(
                                Monomial.of(x1, TVar(label, i)),
                                Monomial.of(x2, TVar(by_monomial[target], i)),
                            )
                        )
                        break
    return BinomialBasis.of(order, list(fiber_gb.elements) + relations)


def monomial_map(instance: ToricInstance, m: Monomial) -> Monomial:
    return instance.monomial_map(m)


def in_kernel(instance: ToricInstance, b: Binomial) -> bool:
    return instance.in_kernel(b)


def ferrers_ideal_generators(diagram: FerrersDiagram) -> dict[LatticePoint, Monomial]:
    from .diagram import generator_monomial

    return {a: generator_monomial(a) for a in diagram.sorted_points()}


__all__ = [
    "FIBER",
    "REES",
    "PresentationCandidate",
    "fiber_candidate",
    "ferrers_ideal_generators",
    "generic_rees_from_fiber",
    "in_kernel",
    "interchange",
    "interchange_points",
    "monomial_map",
    "rees_candidate",
    "rees_linear_relations",
]
