import random

import pytest

from infsurf.dsl import ParseError, parse_endspace, parse_ordinal, parse_surface
from infsurf.endspace import (
    Cantor,
    DisjointUnion,
    INFINITE,
    Interval,
    LimitCompactification,
    NONPLANAR,
    Pt,
    SeqCompactification,
    strip_marks,
    union,
)
from infsurf.ordinal import OMEGA, ZERO, from_int, omega_pow
from oracles import random_expr, random_ordinal


def test_parse_ordinal_terms():
    o = parse_ordinal("w^2*3 + w + 1")
    assert [(str(e), c) for e, c in o.terms] == [("2", 3), ("1", 1), ("0", 1)]


def test_parse_ordinal_normalizes():
    assert parse_ordinal("1 + w") == OMEGA
    assert parse_ordinal("w + w") == omega_pow(from_int(1), 2)
    assert parse_ordinal("w*0") == ZERO


def test_parse_ordinal_nested_exponents():
    o = parse_ordinal("w^(w*2+1)*3 + w + 5")
    assert str(o) == "w^(w*2+1)*3 + w + 5"
    assert parse_ordinal("w^w") == omega_pow(OMEGA)


def test_parse_ordinal_error_position():
    with pytest.raises(ParseError) as exc:
        parse_ordinal("w^^2")
    assert exc.value.offset == 2
    with pytest.raises(ParseError):
        parse_ordinal("w +")
    with pytest.raises(ParseError):
        parse_ordinal("w 3")


@pytest.mark.parametrize(
    "text, expected",
    [
        ("U(cantor!np, pt)", union(Cantor(NONPLANAR), Pt())),
        ("seq1pc(pt!p; np)", SeqCompactification(Pt(), NONPLANAR)),
        ("lim1pc(w)", LimitCompactification(OMEGA)),
        ("I(w^2)!np", Interval(omega_pow(from_int(2)), NONPLANAR)),
        ("U(pt, U(pt, pt))", DisjointUnion((Pt(), Pt(), Pt()))),
    ],
)
def test_parse_endspace_examples(text, expected):
    assert parse_endspace(text) == expected


def test_parse_endspace_errors():
    with pytest.raises(ParseError):
        parse_endspace("plane")
    with pytest.raises(ParseError):
        parse_endspace("lim1pc(w+1)")  # successor ordinal
    with pytest.raises(ParseError):
        parse_endspace("seq1pc(pt; q)")
    with pytest.raises(ParseError):
        parse_endspace("U(pt,)")


def test_parse_surface_examples():
    d = parse_surface("surface(genus=inf, boundary=0, ends=pt!np)")
    assert d.genus == INFINITE and d.boundary == 0 and d.ends == Pt(NONPLANAR)
    d = parse_surface("surface(genus=3, boundary=2, ends=U(cantor, pt))")
    assert d.genus == 3 and d.boundary == 2


def test_parse_surface_errors():
    with pytest.raises(ParseError):
        parse_surface("surface(genus=-1, boundary=0, ends=pt)")
    with pytest.raises(ParseError):
        parse_surface("surface(boundary=0, genus=1, ends=pt)")
    with pytest.raises(ParseError):
        parse_surface("surface(genus=1, boundary=0, ends=pt) junk")


def test_ordinal_round_trips():
    rng = random.Random(79)
    for _ in range(400):
        o = random_ordinal(rng, max_exp=3, max_coeff=9)
        assert parse_ordinal(str(o)) == o
    # nested exponents too
    deep = omega_pow(parse_ordinal("w^2*2 + 3"), 5)
    assert parse_ordinal(str(deep)) == deep


def test_endspace_round_trips():
    rng = random.Random(83)
    for _ in range(400):
        e = random_expr(rng, depth=4)
        if e == strip_marks(e):  # random generator emits planar-only trees
            assert parse_endspace(str(e)) == e


def test_marked_round_trips():
    texts = [
        "U(cantor!np, pt, I(w*2)!np)",
        "seq1pc(U(pt, pt!np); np)",
        "lim1pc(w^2; np)",
    ]
    for t in texts:
        e = parse_endspace(t)
        assert parse_endspace(str(e)) == e
