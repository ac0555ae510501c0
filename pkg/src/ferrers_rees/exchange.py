"""Bounded-weight check of the strong l-exchange property, plus the Ferrers witness."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from typing import Iterable, Iterator, Sequence

from .core import PreconditionError
from .diagram import FerrersDiagram, generator_monomial
from .poly import XLEX, Monomial, XVar, render_monomial

Factorization = tuple[tuple[int, ...], ...]  # per component, sorted 1-based generator indices


@dataclass(frozen=True)
class IdealCollection:
    """Equigenerated monomial ideals in x-variables, generators sorted decreasing in xlex."""

    components: tuple[tuple[Monomial, ...], ...]
    labels: tuple[tuple[object, ...], ...] = ()
    variables: tuple[XVar, ...] = field(init=False)
    degrees: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        comps, labels = [], []
        given = self.labels or tuple(() for _ in self.components)
        if len(given) != len(self.components):
            raise ValueError("labels must match components")
        for gens, labs in zip(self.components, given):
            gens = tuple(gens)
            labs = tuple(labs) or tuple((j,) for j in range(1, len(gens) + 1))
            if not gens:
                raise ValueError("every component needs at least one generator")
            if len(labs) != len(gens):
                raise ValueError("labels must match generators")
            pairs = {}
            for f, lab in zip(gens, labs):
                if any(not isinstance(v, XVar) for v in f.variables):
                    raise ValueError(f"generator {f} is not a monomial in x-variables")
                pairs.setdefault(f, lab)
            degs = {f.degree for f in pairs}
            if len(degs) != 1:
                raise ValueError(f"component is not equigenerated (degrees {sorted(degs)})")
            ordered = sorted(pairs, key=XLEX.word, reverse=True)
            comps.append(tuple(ordered))
            labels.append(tuple(pairs[f] for f in ordered))
        object.__setattr__(self, "components", tuple(comps))
        object.__setattr__(self, "labels", tuple(labels))
        allvars = {v for gens in comps for f in gens for v in f.variables}
        object.__setattr__(self, "variables", tuple(XLEX.sorted_variables(allvars)))
        object.__setattr__(self, "degrees", tuple(gens[0].degree for gens in comps))

    @classmethod
    def of(cls, components: Iterable[Iterable[Monomial]]) -> "IdealCollection":
        return cls(tuple(tuple(c) for c in components))

    @classmethod
    def from_diagrams(cls, diagrams: Iterable[FerrersDiagram]) -> "IdealCollection":
        comps, labels = [], []
        for D in diagrams:
            pts = D.sorted_points()
            comps.append(tuple(generator_monomial(a) for a in pts))
            labels.append(tuple(pts))
        return cls(tuple(comps), tuple(labels))

    @property
    def r(self) -> int:
        return len(self.components)

    def position(self, v: XVar) -> int:
        """1-based position of ``v`` in the flattened ranking."""
        return self.variables.index(v) + 1

    def generator(self, component: int, index: int) -> Monomial:
        return self.components[component - 1][index - 1]

    def vector(self, m: Monomial) -> tuple[int, ...]:
        return tuple(m.exponent(v) for v in self.variables)


@dataclass(frozen=True)
class ExchangeInstance:
    """Weights, factorizations of ``u`` and ``v`` and the position ``q`` (1-based)."""

    weights: tuple[int, ...]
    u_factors: Factorization
    v_factors: Factorization
    q: int

    def to_json(self, ideals: IdealCollection) -> dict:
        def side(fact: Factorization) -> dict:
            m = _product(ideals, fact)
            return {
                "factors": [[ideals.labels[i][j - 1] for j in idx] for i, idx in enumerate(fact)],
                "indices": [list(idx) for idx in fact],
                "monomial": render_monomial(m),
            }

        return {
            "weights": list(self.weights),
            "u": side(self.u_factors),
            "v": side(self.v_factors),
            "q": self.q,
            "z_q": str(ideals.variables[self.q - 1]),
        }


def _product(ideals: IdealCollection, fact: Factorization) -> Monomial:
    m = Monomial.of()
    for i, idx in enumerate(fact, start=1):
        for j in idx:
            m = m * ideals.generator(i, j)
    return m


def _weight_vectors(r: int, bound: int) -> Iterator[tuple[int, ...]]:
    for total in range(1, bound + 1):
        for w in sorted(product(range(total + 1), repeat=r), reverse=True):
            if sum(w) == total:
                yield w


def _factorizations(ideals: IdealCollection, w: Sequence[int]) -> list[Factorization]:
    per = [
        list(combinations_with_replacement(range(1, len(gens) + 1), wi))
        for gens, wi in zip(ideals.components, w)
    ]
    return list(product(*per))


def _exchange_table(ideals: IdealCollection) -> list[list[frozenset[int]]]:
    """``table[i][j]``: 1-based positions ``q`` where generator ``j`` of component ``i`` admits an exchange."""
    nv = len(ideals.variables)
    table = []
    for gens in ideals.components:
        members = set(gens)
        rows = []
        for f in gens:
            ok = set()
            for q in range(1, nv + 1):
                zq = Monomial.of(ideals.variables[q - 1])
                for qq in range(q + 1, nv + 1):
                    z = ideals.variables[qq - 1]
                    if f.exponent(z) and (zq * f) / Monomial.of(z) in members:
                        ok.add(q)
                        break
            rows.append(frozenset(ok))
        table.append(rows)
    return table


def exchange_positions(ideals: IdealCollection, fact: Factorization, q: int) -> list[tuple[int, int, int]]:
    """All ``(component, generator index, q')`` exchanges available to factors of ``u`` at ``q``."""
    nv = len(ideals.variables)
    zq = Monomial.of(ideals.variables[q - 1])
    out = []
    for i, idx in enumerate(fact, start=1):
        members = set(ideals.components[i - 1])
        for j in sorted(set(idx)):
            f = ideals.generator(i, j)
            for qq in range(q + 1, nv + 1):
                z = ideals.variables[qq - 1]
                if f.exponent(z) and (zq * f) / Monomial.of(z) in members:
                    out.append((i, j, qq))
    return out


def check_strong_l_exchange(
    ideals: IdealCollection, total_weight_bound: int = 3
) -> tuple[bool, ExchangeInstance | None]:
    """Exhaustive check over all weight vectors with total at most ``total_weight_bound``.

    For fixed ``u`` and ``v`` the only candidate ``q`` is the first position
    where their degree vectors differ, so for each ``u`` we collect the
    positions where some ``v`` of the same weights agrees with ``u`` before
    ``q`` and exceeds it at ``q``.  The first failing instance in enumeration
    order is returned (weights by total then descending, factorizations
    lexicographically, ``q`` ascending, then the first such ``v``).
    """
    if total_weight_bound < 1:
        raise ValueError("weight bound must be positive")
    table = _exchange_table(ideals)
    nv = len(ideals.variables)
    for w in _weight_vectors(ideals.r, total_weight_bound):
        facts = _factorizations(ideals, w)
        vecs = [ideals.vector(_product(ideals, f)) for f in facts]
        # best[(k, prefix)] = largest value at position k among vectors with that prefix
        best: dict[tuple[int, ...], int] = {}
        for vec in vecs:
            for k in range(nv):
                key = vec[:k]
                if best.get(key, -1) < vec[k]:
                    best[key] = vec[k]
        for fact, vec in zip(facts, vecs):
            for k in range(nv):
                if best[vec[:k]] <= vec[k]:
                    continue
                q = k + 1
                # equal weights and equigenerated components give equal total degree
                assert q < nv, "the last position can never qualify"
                if any(q in table[i][j - 1] for i, idx in enumerate(fact) for j in idx):
                    continue
                v = next(
                    f for f, other in zip(facts, vecs) if other[:k] == vec[:k] and other[k] > vec[k]
                )
                return False, ExchangeInstance(tuple(w), fact, v, q)
    return True, None


def qualifying_positions(ideals: IdealCollection, u: Factorization, v: Factorization) -> int | None:
    """The 1-based ``q`` at which ``(u, v)`` meets the hypotheses, or None."""
    a = ideals.vector(_product(ideals, u))
    b = ideals.vector(_product(ideals, v))
    for k, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return k + 1 if x < y else None
    return None


def ferrers_exchange_witness(
    ideals: IdealCollection,
    u_factors: Factorization,
    q: int,
    v_factors: Factorization | None = None,
) -> tuple[tuple[int, int], int]:
    """Witness ``((component, generator index), q')`` for Ferrers collections.

    With ``z_q = x[i0,j0]`` the witness variable is ``x[i0,j1]`` for the least
    ``j1 > j0`` occurring in ``u``, and the factor is the first one divisible by it.
    """
    if not 1 <= q <= len(ideals.variables):
        raise PreconditionError(f"position {q} is outside 1..{len(ideals.variables)}")
    if v_factors is not None and qualifying_positions(ideals, u_factors, v_factors) != q:
        raise PreconditionError(f"u and v do not satisfy the exchange hypotheses at q = {q}")
    zq = ideals.variables[q - 1]
    u = _product(ideals, u_factors)
    later = [
        z for z in ideals.variables if z.block == zq.block and z.index > zq.index and u.exponent(z)
    ]
    if not later:
        raise PreconditionError(f"no variable of block {zq.block} after {zq} divides u")
    z1 = min(later, key=lambda z: z.index)
    for i, idx in enumerate(u_factors, start=1):
        for j in idx:
            f = ideals.generator(i, j)
            if f.exponent(z1):
                target = (Monomial.of(zq) * f) / Monomial.of(z1)
                if target not in set(ideals.components[i - 1]):
                    raise PreconditionError(f"{target} is not a generator; is the collection Ferrers?")
                return (i, j), ideals.position(z1)
    raise AssertionError("unreachable: z1 divides u")


def validate_witness(ideals: IdealCollection, q: int, witness: tuple[tuple[int, int], int]) -> bool:
    (i, j), qq = witness
    if qq <= q:
        return False
    f = ideals.generator(i, j)
    z = ideals.variables[qq - 1]
    if not f.exponent(z):
        return False
    return (Monomial.of(ideals.variables[q - 1]) * f) / Monomial.of(z) in set(ideals.components[i - 1])


def exchange_report(ideals: IdealCollection, bound: int) -> dict:
    ok, bad = check_strong_l_exchange(ideals, bound)
    return {
        "schema": 1,
        "weight_bound": bound,
        "components": [[render_monomial(f) for f in gens] for gens in ideals.components],
        "variables": [str(v) for v in ideals.variables],
        "holds": ok,
        "counterexample": None if bad is None else bad.to_json(ideals),
    }


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2, default=list)
