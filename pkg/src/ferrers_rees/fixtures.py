"""Built-in diagrams and tableaux used by the regression suite."""

from __future__ import annotations

from .diagram import FerrersDiagram, ferrers_closure
from .tableau import Tableau

# a non-standardizable 4-dimensional diagram with 95 points
EX34_GENERATORS = ((1, 3, 4, 4), (1, 4, 3, 3), (2, 1, 4, 4), (2, 2, 3, 3), (3, 1, 3, 3), (3, 2, 2, 2))
# the smallest standardizable diagram that is not a box, 20 points
EX36_GENERATORS = ((1, 3, 3), (2, 2, 3), (2, 3, 2), (3, 1, 2), (3, 2, 1))
# two planar diagrams whose joint fiber needs cubic generators
EX511_GENERATORS = (((4, 1), (2, 4)), ((1, 3), (3, 1)))

TABLE2_A: Tableau = tuple(
    tuple(int(c) for c in row)
    for row in "11111 11121 12222 12223 22234 22245 23346 23356 23466 33567 34577 34678".split()
)
TABLE2_B: Tableau = tuple(
    tuple(int(c) for c in row)
    for row in "13578 13677 14467 14566 22256 22345 22346 23224 23233 31122 31221 32111".split()
)


def ex34() -> FerrersDiagram:
    return ferrers_closure(4, EX34_GENERATORS)


def ex36() -> FerrersDiagram:
    return ferrers_closure(3, EX36_GENERATORS)


def ex511() -> tuple[FerrersDiagram, FerrersDiagram]:
    return tuple(ferrers_closure(2, gens) for gens in EX511_GENERATORS)
