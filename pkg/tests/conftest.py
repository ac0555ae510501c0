from __future__ import annotations

import itertools
import random
from collections import Counter

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ferrers_rees._kernels import BACKENDS
from ferrers_rees.diagram import FerrersDiagram, ferrers_closure, standardizable_closure

settings.register_profile(
    "default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(params=sorted(BACKENDS))
def backend(request):
    return request.param


# -- generators -----------------------------------------------------------------------

def random_diagram(rng: random.Random, n: int, max_points: int, side: int = 3, max_gens: int = 3) -> FerrersDiagram:
    while True:
        gens = [tuple(rng.randint(1, side) for _ in range(n)) for _ in range(rng.randint(1, max_gens))]
        D = ferrers_closure(n, gens)
        if len(D) <= max_points:
            return D


def random_standardizable(rng: random.Random, n: int, max_points: int, side: int = 3) -> FerrersDiagram:
    while True:
        gens = [tuple(rng.randint(1, side) for _ in range(n)) for _ in range(rng.randint(1, 3))]
        D = standardizable_closure(n, gens)
        if len(D) <= max_points:
            return D


@st.composite
def diagrams(draw, max_dim: int = 3, side: int = 3, max_points: int = 20):
    n = draw(st.integers(1, max_dim))
    gens = draw(st.lists(st.tuples(*[st.integers(1, side)] * n), min_size=1, max_size=3))
    D = ferrers_closure(n, gens)
    if len(D) > max_points:
        D = ferrers_closure(n, gens[:1])
    return D


@st.composite
def tableaux(draw, max_rows: int = 4, max_cols: int = 4, max_entry: int = 4):
    p = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.tuples(*[st.integers(1, max_entry)] * n), min_size=p, max_size=p))
    return tuple(sorted(rows))


# -- brute force references -------------------------------------------------------------

def all_semi_standard(support: tuple[Counter, ...], p: int) -> list[tuple]:
    """Every semi-standard tableau (rows weakly lex-increasing) with the given column multisets."""
    out = []

    def rec(cols, rows, prev):
        if len(rows) == p:
            out.append(tuple(rows))
            return
        choices = itertools.product(*[sorted(c for c in col if col[c] > 0) for col in cols])
        for row in choices:
            if prev is not None and row < prev:
                continue
            nxt = [col.copy() for col in cols]
            for c, v in zip(nxt, row):
                c[v] -= 1
            rec(nxt, rows + [row], row)

    rec([c.copy() for c in support], [], None)
    return out


def brute_standard(t: tuple) -> tuple:
    """The sigma-minimum tableau with the support of ``t``: rows compared in sigma, i.e. reverse lex."""
    n = len(t[0])
    support = tuple(Counter(r[j] for r in t) for j in range(n))
    return max(all_semi_standard(support, len(t)))


def brute_is_standard_pair(a, b) -> bool:
    return brute_standard(tuple(sorted((tuple(a), tuple(b))))) == (tuple(a), tuple(b))


def all_2d_diagrams(max_points: int):
    """Every 2-dimensional Ferrers diagram with at most ``max_points`` points, as partitions."""

    def parts(total, largest):
        if total == 0:
            yield ()
            return
        for k in range(min(total, largest), 0, -1):
            for rest in parts(total - k, k):
                yield (k,) + rest

    for size in range(1, max_points + 1):
        for lam in parts(size, size):
            pts = [(i + 1, j + 1) for i, row in enumerate(lam) for j in range(row)]
            yield FerrersDiagram(2, frozenset(pts))
