"""n-dimensional Ferrers diagrams."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, Sequence

from .core import DimensionError, LatticePoint, first_difference, lattice_point


@dataclass(frozen=True)
class StandardizableViolation:
    """A pair ``a >_sigma b`` whose completion point is missing."""

    a: LatticePoint
    b: LatticePoint
    k: int  # 1-based position of the first difference
    missing: LatticePoint


@dataclass(frozen=True, eq=False)
class FerrersDiagram:
    """A finite nonempty downward-closed set of positive lattice points.

    Build one with :func:`ferrers_closure`; the constructor trusts its input
    except for a cheap dimension check.
    """

    dimension: int
    points: frozenset[LatticePoint]

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise ValueError("dimension must be positive")
        if not self.points:
            raise ValueError("a Ferrers diagram is nonempty")
        if any(len(p) != self.dimension for p in self.points):
            raise DimensionError("all points must have the diagram's dimension")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FerrersDiagram):
            return NotImplemented
        return self.dimension == other.dimension and self.points == other.points

    def __hash__(self) -> int:
        return hash((self.dimension, self.points))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[LatticePoint]:
        return iter(self.sorted_points())

    def __contains__(self, p: object) -> bool:
        return p in self.points

    def __repr__(self) -> str:
        gens = ", ".join(map(str, sorted(maximal_points(self))))
        return f"FerrersDiagram(dimension={self.dimension}, maximal=[{gens}])"

    def sorted_points(self) -> list[LatticePoint]:
        """Points in increasing lexicographic order (sigma-decreasing)."""
        return sorted(self.points)

    @property
    def bounding_box(self) -> LatticePoint:
        return tuple(max(p[k] for p in self.points) for k in range(self.dimension))

    @property
    def max_coordinate(self) -> int:
        return max(self.bounding_box)


def _box(corner: Sequence[int]) -> Iterator[LatticePoint]:
    return itertools.product(*(range(1, c + 1) for c in corner))


def ferrers_closure(dimension: int, generators: Iterable[Sequence[int]]) -> FerrersDiagram:
    """Smallest Ferrers diagram containing ``generators``."""
    gens = [lattice_point(g) for g in generators]
    if not gens:
        raise ValueError("ferrers_closure needs at least one generator")
    for g in gens:
        if len(g) != dimension:
            raise DimensionError(f"generator {g} does not have dimension {dimension}")
    points: set[LatticePoint] = set()
    for g in gens:
        points.update(_box(g))
    return FerrersDiagram(dimension, frozenset(points))


def box(corner: Sequence[int]) -> FerrersDiagram:
    """The rectangular diagram ``[a_1] x ... x [a_n]``."""
    return ferrers_closure(len(corner), [corner])


def contains(diagram: FerrersDiagram, p: Sequence[int]) -> bool:
    if len(p) != diagram.dimension:
        raise DimensionError(f"point {tuple(p)} has the wrong dimension for this diagram")
    return tuple(p) in diagram.points


def is_rectangular(diagram: FerrersDiagram) -> bool:
    corner = diagram.bounding_box
    size = 1
    for c in corner:
        size *= c
    return size == len(diagram)


def maximal_points(diagram: FerrersDiagram) -> set[LatticePoint]:
    """The antichain of componentwise-maximal points."""
    pts = diagram.points
    out = set()
    for p in pts:
        # p is maximal iff no unit step upward stays in the diagram
        if all(p[:k] + (p[k] + 1,) + p[k + 1:] not in pts for k in range(len(p))):
            out.add(p)
    return out


def _completion(a: LatticePoint, b: LatticePoint, k: int) -> LatticePoint:
    return a[: k + 1] + tuple(max(x, y) for x, y in zip(a[k + 1:], b[k + 1:]))


def standardizable_violation(diagram: FerrersDiagram) -> StandardizableViolation | None:
    """Lexicographically first pair breaking the standardizable condition."""
    pts = diagram.sorted_points()
    members = diagram.points
    for i, a in enumerate(pts):
        for b in pts[i + 1:]:
            # a <_lex b, so the first difference has a_k < b_k
            k = first_difference(a, b)
            p = _completion(a, b, k)
            if p not in members:
                return StandardizableViolation(a, b, k + 1, p)
    return None


def is_standardizable(diagram: FerrersDiagram) -> tuple[bool, StandardizableViolation | None]:
    """Return ``(True, None)`` or ``(False, witness)``."""
    witness = standardizable_violation(diagram)
    return witness is None, witness


def standardizable_closure(dimension: int, generators: Iterable[Sequence[int]]) -> FerrersDiagram:
    """Smallest standardizable Ferrers diagram containing ``generators``.

    Every completion point forced by a pair in the diagram must belong to any
    standardizable superset, so adding missing points until none remain gives
    the least one.
    """
    diagram = ferrers_closure(dimension, generators)
    while True:
        witness = standardizable_violation(diagram)
        if witness is None:
            return diagram
        diagram = ferrers_closure(dimension, list(maximal_points(diagram)) + [witness.missing])


def tilde(diagram: FerrersDiagram, r: int) -> FerrersDiagram:
    """The product diagram ``D x [r]`` of dimension ``n + 1``."""
    if r < 1:
        raise ValueError("r must be positive")
    pts = frozenset(p + (i,) for p in diagram.points for i in range(1, r + 1))
    return FerrersDiagram(diagram.dimension + 1, pts)


@dataclass(frozen=True)
class DiagramCollection:
    """An ordered list of diagrams ``D_1, ..., D_r``, possibly of different dimensions."""

    diagrams: tuple[FerrersDiagram, ...]

    def __post_init__(self) -> None:
        if not self.diagrams:
            raise ValueError("a diagram collection needs at least one diagram")

    @classmethod
    def uniform(cls, diagram: FerrersDiagram, r: int) -> "DiagramCollection":
        if r < 1:
            raise ValueError("r must be positive")
        return cls((diagram,) * r)

    @property
    def r(self) -> int:
        return len(self.diagrams)

    @property
    def is_uniform(self) -> bool:
        return all(d == self.diagrams[0] for d in self.diagrams)

    def __iter__(self) -> Iterator[FerrersDiagram]:
        return iter(self.diagrams)

    def __len__(self) -> int:
        return len(self.diagrams)


def generator_monomial(p: Sequence[int]):
    """The squarefree monomial ``x_{1,p_1} * ... * x_{n,p_n}``."""
    from .poly import Monomial, XVar

    return Monomial({XVar(i, c): 1 for i, c in enumerate(p, start=1)})


# -- file format ------------------------------------------------------------

def diagram_to_json(diagram: FerrersDiagram) -> dict[str, Any]:
    return {
        "dimension": diagram.dimension,
        "generators": [list(p) for p in sorted(maximal_points(diagram))],
    }


def diagram_from_json(doc: Any) -> FerrersDiagram:
    """Parse ``{"dimension": n, "generators": [[...], ...]}``."""
    if not isinstance(doc, dict):
        raise ValueError("diagram document must be a JSON object")
    try:
        n = doc["dimension"]
        gens = doc["generators"]
    except KeyError as exc:
        raise ValueError(f"diagram document is missing key {exc.args[0]!r}") from None
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError("'dimension' must be a positive integer")
    if not isinstance(gens, list) or not gens:
        raise ValueError("'generators' must be a nonempty list")
    for g in gens:
        if not isinstance(g, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in g):
            raise ValueError(f"generator {g!r} must be a list of integers")
    return ferrers_closure(n, gens)


def load_diagram(path: str) -> FerrersDiagram:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    try:
        return diagram_from_json(doc)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from None
