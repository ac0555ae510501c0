import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ferrers_rees.core import EQUAL, GREATER, LESS
from ferrers_rees.poly import (
    PLAIN_LEX_T,
    PRODUCT,
    SIGMA,
    XLEX,
    Binomial,
    Codec,
    Monomial,
    MonomialOrder,
    TVar,
    UVar,
    XVar,
    binomial_from_json,
    binomial_to_json,
    cmp,
    div,
    divides,
    lcm,
    make_binomial,
    monomial_from_json,
    monomial_to_json,
    parse_variable,
    render_monomial,
)


def T(*p, i=1):
    return TVar(tuple(p), i)


def M(*vs):
    return Monomial.of(*vs)


def test_order_examples():
    assert cmp(XLEX, M(XVar(1, 1)), M(XVar(1, 2))) == GREATER
    assert cmp(XLEX, M(XVar(1, 9)), M(XVar(2, 1))) == GREATER
    assert cmp(SIGMA, M(T(1, 3, 3)), M(T(2, 2, 3))) == GREATER
    assert cmp(PRODUCT, M(XVar(1, 1), T(2, 2)), M(XVar(1, 2), T(1, 1))) == GREATER
    assert cmp(PLAIN_LEX_T, M(T(2, 1)), M(T(1, 2))) == GREATER
    assert cmp(SIGMA, M(T(2, 1)), M(T(1, 2))) == LESS
    assert cmp(SIGMA, M(T(2, 1)), M(T(2, 1))) == EQUAL


def test_component_ranks_last():
    assert cmp(SIGMA, M(T(1, 1, i=1)), M(T(1, 1, i=2))) == GREATER
    assert cmp(SIGMA, M(T(1, 2, i=2)), M(T(2, 1, i=1))) == GREATER


def test_order_universe_errors():
    with pytest.raises(ValueError):
        cmp(SIGMA, M(XVar(1, 1)), M(T(1, 1)))
    with pytest.raises(ValueError):
        cmp(XLEX, M(T(1, 1)), M(XVar(1, 1)))
    with pytest.raises(ValueError):
        MonomialOrder("grevlex")


def test_order_names_roundtrip():
    for o in (XLEX, SIGMA, PLAIN_LEX_T, PRODUCT, MonomialOrder("product", "plain-lex-t")):
        assert MonomialOrder.from_name(o.name) == o


def test_arithmetic():
    x11, x23 = XVar(1, 1), XVar(2, 3)
    assert lcm(M(x11, T(1, 1)), M(x11, T(2, 2))) == M(x11, T(1, 1), T(2, 2))
    assert divides(M(T(1, 1)), M(T(1, 1), T(1, 1), T(2, 2)))
    assert div(M(x11, x11, x23), M(x23)) == M(x11, x11)
    with pytest.raises(ArithmeticError):
        div(M(x11), M(x23))
    m = M(x11, x11, x23)
    assert m.degree == 3 and m.exponent(x11) == 2 and not m.is_squarefree
    assert m.part(XVar) == m and M(x11, T(1, 1)).degree_in(TVar) == 1


def test_make_binomial():
    a = M(T(1, 1), T(2, 2))
    b = M(T(1, 2), T(2, 1))
    assert make_binomial(SIGMA, a, a) is None
    assert make_binomial(SIGMA, a, b).lead == a
    assert make_binomial(SIGMA, b, a) == make_binomial(SIGMA, a, b)
    p, q = M(XVar(1, 1), T(2, 2)), M(XVar(1, 2), T(1, 1))
    assert make_binomial(PRODUCT, q, p).lead == p
    with pytest.raises(ValueError):
        Binomial(a, a)


def test_rendering_and_json():
    m = M(XVar(1, 2), T(1, 3), T(1, 3), UVar(2))
    assert render_monomial(M()) == "1"
    assert "T[(1,3);1]^2" in render_monomial(m)
    for v in m.variables:
        assert parse_variable(str(v)) == v
    assert monomial_from_json(monomial_to_json(m)) == m
    b = make_binomial(SIGMA, M(T(1, 1), T(2, 2)), M(T(1, 2), T(2, 1)))
    assert binomial_from_json(binomial_to_json(b)) == b
    assert b.render(SIGMA) == "T[(1,1);1]*T[(2,2);1] - T[(1,2);1]*T[(2,1);1]"
    with pytest.raises(ValueError):
        parse_variable("y[1]")


t_vars = st.builds(lambda a, b, i: TVar((a, b), i), st.integers(1, 3), st.integers(1, 3), st.integers(1, 2))
x_vars = st.builds(XVar, st.integers(1, 3), st.integers(1, 3))
monomials = st.lists(st.one_of(t_vars, x_vars), max_size=5).map(lambda vs: Monomial.of(*vs))


@given(monomials)
def test_codec_roundtrip(m):
    codec = Codec(PRODUCT, m.variables)
    assert codec.decode(codec.encode(m)) == m


def test_orders_multiplicative_and_one_is_minimal():
    rng = random.Random(2)
    xs = [XVar(i, j) for i in range(1, 4) for j in range(1, 4)]
    ts = [TVar((a, b), i) for a in range(1, 4) for b in range(1, 4) for i in (1, 2)]

    def rand(pool):
        return Monomial.of(*(rng.choice(pool) for _ in range(rng.randint(0, 4))))

    cases = [(XLEX, xs), (SIGMA, ts), (PLAIN_LEX_T, ts), (PRODUCT, xs + ts)]
    for order, pool in cases:
        for _ in range(2500):
            m1, m2, w = rand(pool), rand(pool), rand(pool)
            c = cmp(order, m1, m2)
            assert cmp(order, m1 * w, m2 * w) == c
            assert cmp(order, m1, Monomial()) != LESS
