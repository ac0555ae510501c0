"""Monomials and binomials over x-, T- and t-variables, and monomial orders.

Every order here is lexicographic with respect to some ranking of the
variables, so a monomial is compared through its *word*: the tuple of its
variable keys, repeated by exponent and sorted in decreasing order.  Plain
tuple comparison of words is then exactly the lex order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable, Mapping, Sequence, Union

from .core import EQUAL, GREATER, LESS, LatticePoint


@dataclass(frozen=True, slots=True)
class XVar:
    """Base-ring variable ``x[block, index]``."""

    block: int
    index: int

    def __str__(self) -> str:
        return f"x[{self.block},{self.index}]"

    @property
    def sort_key(self) -> tuple:
        return (0, self.block, self.index)


@dataclass(frozen=True, slots=True)
class TVar:
    """Presentation variable ``T[(a_1,...,a_n);i]`` for point ``a`` of component ``i``."""

    point: LatticePoint
    component: int = 1

    def __str__(self) -> str:
        return f"T[({','.join(map(str, self.point))});{self.component}]"

    @property
    def sort_key(self) -> tuple:
        return (1, self.point, self.component)


@dataclass(frozen=True, slots=True)
class UVar:
    """Rees auxiliary variable ``t[i]``."""

    index: int

    def __str__(self) -> str:
        return f"t[{self.index}]"

    @property
    def sort_key(self) -> tuple:
        return (2, (self.index,), 0)


Variable = Union[XVar, TVar, UVar]


class Monomial:
    """Immutable sparse power product; the empty monomial is ``1``."""

    __slots__ = ("_items", "_hash")

    def __init__(self, exponents: Mapping[Variable, int] | Iterable[tuple[Variable, int]] = ()):
        if isinstance(exponents, Mapping):
            exponents = exponents.items()
        acc: dict[Variable, int] = {}
        for v, e in exponents:
            if e < 0:
                raise ValueError("exponents must be nonnegative")
            if e:
                acc[v] = acc.get(v, 0) + e
        self._items: tuple[tuple[Variable, int], ...] = tuple(
            sorted(acc.items(), key=lambda item: item[0].sort_key)
        )
        self._hash = hash(self._items)

    @classmethod
    def of(cls, *variables: Variable) -> "Monomial":
        """Product of the given variables (repeat a variable for powers)."""
        return cls((v, 1) for v in variables)

    @property
    def items(self) -> tuple[tuple[Variable, int], ...]:
        return self._items

    def as_dict(self) -> dict[Variable, int]:
        return dict(self._items)

    @property
    def variables(self) -> tuple[Variable, ...]:
        return tuple(v for v, _ in self._items)

    def exponent(self, v: Variable) -> int:
        for w, e in self._items:
            if w == v:
                return e
        return 0

    @property
    def degree(self) -> int:
        return sum(e for _, e in self._items)

    def degree_in(self, kind: type) -> int:
        return sum(e for v, e in self._items if isinstance(v, kind))

    def part(self, kind: type) -> "Monomial":
        return Monomial((v, e) for v, e in self._items if isinstance(v, kind))

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self._items)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self._items + other._items)

    def divides(self, other: "Monomial") -> bool:
        d = other.as_dict()
        return all(d.get(v, 0) >= e for v, e in self._items)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ArithmeticError(f"{other} does not divide {self}")
        d = self.as_dict()
        for v, e in other._items:
            d[v] -= e
        return Monomial(d)

    def lcm(self, other: "Monomial") -> "Monomial":
        d = self.as_dict()
        for v, e in other._items:
            d[v] = max(d.get(v, 0), e)
        return Monomial(d)

    def __repr__(self) -> str:
        return f"Monomial({self})"

    def __str__(self) -> str:
        return render_monomial(self)


def divides(m1: Monomial, m2: Monomial) -> bool:
    return m1.divides(m2)


def mul(m1: Monomial, m2: Monomial) -> Monomial:
    return m1 * m2


def div(m1: Monomial, m2: Monomial) -> Monomial:
    return m1 / m2


def lcm(m1: Monomial, m2: Monomial) -> Monomial:
    return m1.lcm(m2)


# -- orders -----------------------------------------------------------------

_T_KINDS = ("sigma", "plain-lex-t")


@dataclass(frozen=True)
class MonomialOrder:
    """A lex order given by a ranking of variables.

    ``kind`` is one of ``"xlex"`` (x-variables, ``x[i,j] > x[i',j']`` iff
    ``(i, j)`` is lexicographically smaller), ``"sigma"`` (T-variables ranked
    by sigma on ``(a_1, ..., a_n, i)``), ``"plain-lex-t"`` (T-variables ranked
    by ordinary lex on the same tuple) or ``"product"`` (x-part in xlex first,
    ties broken by ``t_kind`` on the T-part).
    """

    kind: str
    t_kind: str = "sigma"

    def __post_init__(self) -> None:
        if self.kind not in ("xlex", "sigma", "plain-lex-t", "product"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.t_kind not in _T_KINDS:
            raise ValueError(f"unknown T-order kind {self.t_kind!r}")

    @property
    def name(self) -> str:
        if self.kind == "product":
            return "product" if self.t_kind == "sigma" else f"product/{self.t_kind}"
        return self.kind

    @classmethod
    def from_name(cls, name: str) -> "MonomialOrder":
        if name.startswith("product/"):
            return cls("product", name.split("/", 1)[1])
        return cls(name)

    def _t_key(self, v: TVar, kind: str) -> tuple:
        if kind == "sigma":
            return (tuple(-c for c in v.point), -v.component)
        return (v.point, v.component)

    def var_key(self, v: Variable) -> tuple:
        """Sort key that increases with the variable's rank."""
        kind = self.kind
        if kind == "xlex":
            if isinstance(v, XVar):
                return (-v.block, -v.index)
        elif kind in _T_KINDS:
            if isinstance(v, TVar):
                return self._t_key(v, kind)
        else:
            if isinstance(v, XVar):
                return (1, (-v.block, -v.index))
            if isinstance(v, TVar):
                return (0, self._t_key(v, self.t_kind))
        raise ValueError(f"variable {v} is outside the universe of the {self.name} order")

    def word(self, m: Monomial) -> tuple:
        keys = []
        for v, e in m.items:
            keys.extend([self.var_key(v)] * e)
        keys.sort(reverse=True)
        return tuple(keys)

    def sorted_variables(self, variables: Iterable[Variable]) -> list[Variable]:
        """Variables in decreasing rank."""
        return sorted(set(variables), key=self.var_key, reverse=True)

    def cmp(self, m1: Monomial, m2: Monomial) -> int:
        w1, w2 = self.word(m1), self.word(m2)
        if w1 == w2:
            return EQUAL
        return GREATER if w1 > w2 else LESS


XLEX = MonomialOrder("xlex")
SIGMA = MonomialOrder("sigma")
PLAIN_LEX_T = MonomialOrder("plain-lex-t")
PRODUCT = MonomialOrder("product", "sigma")


def cmp(order: MonomialOrder, m1: Monomial, m2: Monomial) -> int:
    return order.cmp(m1, m2)


# -- binomials ----------------------------------------------------------------

@dataclass(frozen=True)
class Binomial:
    """``lead - trail`` with ``lead`` greater than ``trail`` in the active order."""

    lead: Monomial
    trail: Monomial

    def __post_init__(self) -> None:
        if self.lead == self.trail:
            raise ValueError("a binomial needs two distinct terms; use None for zero")

    @property
    def degree(self) -> int:
        return max(self.lead.degree, self.trail.degree)

    @property
    def variables(self) -> set[Variable]:
        return set(self.lead.variables) | set(self.trail.variables)

    def oriented(self, order: MonomialOrder) -> "Binomial":
        if order.cmp(self.lead, self.trail) == LESS:
            return Binomial(self.trail, self.lead)
        return self

    def render(self, order: MonomialOrder | None = None) -> str:
        return f"{render_monomial(self.lead, order)} - {render_monomial(self.trail, order)}"

    def __str__(self) -> str:
        return self.render()


def make_binomial(order: MonomialOrder, m1: Monomial, m2: Monomial) -> Binomial | None:
    """``max - min`` of the two monomials under ``order``, or None when equal."""
    c = order.cmp(m1, m2)
    if c == EQUAL:
        return None
    return Binomial(m1, m2) if c == GREATER else Binomial(m2, m1)


# -- rendering & serialization ------------------------------------------------

def _default_render_key(v: Variable) -> tuple:
    return v.sort_key


def render_monomial(m: Monomial, order: MonomialOrder | None = None) -> str:
    """Factors in decreasing order (``order`` if it ranks them, else a fixed default)."""
    if not m.items:
        return "1"
    items = list(m.items)
    try:
        if order is None:
            raise ValueError
        items.sort(key=lambda it: order.var_key(it[0]), reverse=True)
    except ValueError:
        items.sort(key=lambda it: _default_render_key(it[0]))
    return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in items)


def parse_variable(text: str) -> Variable:
    text = text.strip()
    try:
        if text.startswith("x[") and text.endswith("]"):
            i, j = text[2:-1].split(",")
            return XVar(int(i), int(j))
        if text.startswith("t[") and text.endswith("]"):
            return UVar(int(text[2:-1]))
        if text.startswith("T[(") and text.endswith("]"):
            pt, comp = text[3:-1].split(");")
            return TVar(tuple(int(c) for c in pt.split(",")), int(comp))
    except ValueError:
        pass
    raise ValueError(f"cannot parse variable {text!r}")


def monomial_to_json(m: Monomial) -> dict[str, int]:
    return {str(v): e for v, e in m.items}


def monomial_from_json(doc: Mapping[str, int]) -> Monomial:
    return Monomial({parse_variable(k): int(e) for k, e in doc.items()})


def binomial_to_json(b: Binomial) -> dict[str, Any]:
    return {"lead": monomial_to_json(b.lead), "trail": monomial_to_json(b.trail)}


def binomial_from_json(doc: Mapping[str, Any]) -> Binomial:
    return Binomial(monomial_from_json(doc["lead"]), monomial_from_json(doc["trail"]))


# -- integer codec ------------------------------------------------------------

Word = tuple[int, ...]


class Codec:
    """Encode monomials as non-increasing tuples of integer variable ranks.

    Rank ``N - 1`` is the largest variable.  Tuple comparison of encoded
    words is the lex order of ``order``.
    """

    def __init__(self, order: MonomialOrder, variables: Iterable[Variable]):
        self.order = order
        ranked = sorted(set(variables), key=order.var_key)
        self.variables: tuple[Variable, ...] = tuple(ranked)
        self.rank: dict[Variable, int] = {v: i for i, v in enumerate(ranked)}

    def __len__(self) -> int:
        return len(self.variables)

    def encode(self, m: Monomial) -> Word:
        rank = self.rank
        out: list[int] = []
        for v, e in m.items:
            try:
                r = rank[v]
            except KeyError:
                raise ValueError(f"variable {v} is not in this codec's universe") from None
            out.extend([r] * e)
        out.sort(reverse=True)
        return tuple(out)

    def decode(self, word: Sequence[int]) -> Monomial:
        vs = self.variables
        return Monomial((vs[r], 1) for r in word)

    def encode_binomial(self, b: Binomial) -> tuple[Word, Word]:
        lead, trail = self.encode(b.lead), self.encode(b.trail)
        return (lead, trail) if lead > trail else (trail, lead)

    def decode_binomial(self, pair: tuple[Word, Word]) -> Binomial:
        return Binomial(self.decode(pair[0]), self.decode(pair[1]))

    @cached_property
    def names(self) -> tuple[str, ...]:
        return tuple(str(v) for v in self.variables)
