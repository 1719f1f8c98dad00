import json

import pytest
from hypothesis import given, settings, strategies as st

from invforge.rings import Polynomial, gen_ring, u_ring, x_ring
from invforge.textio import (
    PolyParseError,
    format_poly,
    iter_format_text,
    parse_poly,
    parse_poly_json,
)

X2, X3, U3, U4, U8 = x_ring(2), x_ring(3), u_ring(3), u_ring(4), u_ring(8)


def test_parse_literal():
    f = parse_poly("4*x0*x2^3 - 3*x1^2*x2^2", X3)
    assert f.terms == {(1, 0, 3, 0): 4, (0, 2, 2, 0): -3}


def test_parse_t_alias():
    assert parse_poly("t*u4 + 3*u2^2", U4) == parse_poly("x0*u4 + 3*u2^2", U4)


def test_parse_unknown_variable():
    with pytest.raises(PolyParseError):
        parse_poly("u9", U8)
    with pytest.raises(PolyParseError):
        parse_poly("x3", X2)


def test_parse_error_position():
    with pytest.raises(PolyParseError) as err:
        parse_poly("x0 + @", X2)
    assert "position 5" in str(err.value)


def test_parse_flexible_inputs():
    assert parse_poly("-x1^2 + x0*x2", X2) == parse_poly("x0*x2 - x1^2", X2)
    assert parse_poly(" 3 * x0 ", X2) == parse_poly("3*x0", X2)
    assert parse_poly("1/2*x0", X2).terms[(1, 0, 0)] * 2 == 1
    assert parse_poly("7", X2).terms == {(0, 0, 0): 7}
    assert parse_poly("0", X2).is_zero()
    assert parse_poly("2x0", X2) == parse_poly("2*x0", X2)


def test_format_examples():
    assert format_poly(parse_poly("x0*x2 - x1^2", X2)) == "x0*x2 - x1^2"
    assert format_poly(Polynomial.zero(X2)) == "0"
    f4 = parse_poly("4*x0*u2^3 + x0^2*u3^2", U3)
    assert format_poly(f4) == "x0^2*u3^2 + 4*x0*u2^3"


def test_format_constants_and_fractions():
    assert format_poly(parse_poly("-5", X2)) == "-5"
    assert format_poly(parse_poly("1/2*x0 - 1", X2)) == "1/2*x0 - 1"


def test_streaming_chunks_join_to_format():
    f = parse_poly("x0^2*u3^2 + 4*x0*u2^3", U3)
    assert "".join(iter_format_text(f)) == format_poly(f)


def test_json_schema():
    f4 = parse_poly("4*x0*u2^3 + x0^2*u3^2", U3)
    doc = json.loads(format_poly(f4, "json"))
    assert doc == {
        "ring": {"kind": "u", "n": 3},
        "terms": [{"c": "1", "e": [2, 0, 2]}, {"c": "4", "e": [1, 3, 0]}],
    }
    assert parse_poly_json(doc, U3) == f4


def test_json_x_and_gen_kinds():
    f = parse_poly("x0*x2 - x1^2", X2)
    doc = json.loads(format_poly(f, "json"))
    assert doc["ring"] == {"kind": "x", "n": 2}
    gctx = gen_ring([("f2", 2, 2), ("f3", 3, 3)])
    g = parse_poly("2*f2*f3 - f2^3", gctx)
    doc = json.loads(format_poly(g, "json"))
    assert doc["ring"]["kind"] == "gen"
    assert parse_poly_json(doc, gctx) == g


def test_gen_ring_symbols_parse():
    gctx = gen_ring([("f4", 4, 10), ("f8", 8, 20)])
    rel = parse_poly("f4^2 - 3*f8", gctx)
    assert rel.terms == {(2, 0): 1, (0, 1): -3}


coeffs = st.one_of(st.integers(-9, 9),
                   st.fractions(min_value=-5, max_value=5, max_denominator=7))
expts = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))


@settings(max_examples=120, deadline=None)
@given(st.dictionaries(expts, coeffs, max_size=6))
def test_round_trip_parse_format(terms):
    f = Polynomial(U3, terms)
    assert parse_poly(format_poly(f), U3) == f
    assert parse_poly_json(format_poly(f, "json"), U3) == f
