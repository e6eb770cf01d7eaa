"""Sparse polynomial arithmetic, substitution, and the coordinate models."""

import json

import pytest
from hypothesis import given, settings, strategies as st

from foldmap.cyclo import CycloElem, I_UNIT
from foldmap.folding import fold
from foldmap.poly import (
    Poly,
    PolyMap2,
    RealFormError,
    XY_VARS,
    ZW_VARS,
    poly_arith,
    swap_conjugate,
    xy_to_zw,
    zw_to_xy,
)

X = Poly.variable(XY_VARS, "x")
Y = Poly.variable(XY_VARS, "y")
Z = Poly.variable(ZW_VARS, "z")
W = Poly.variable(ZW_VARS, "w")


def poly_from(triples, vars=XY_VARS):
    return Poly(vars, {(i, j): c for i, j, c in triples})


def test_arith_examples():
    p = poly_from([(2, 1, 3), (0, 0, -1)])
    one = Poly.constant(XY_VARS, 1)
    assert poly_arith(one, p, "mul") == p
    assert poly_arith(X + Y, X + Y, "mul") == X**2 + 2 * X * Y + Y**2
    assert poly_arith(p, p, "sub").is_zero()
    assert poly_arith(p, p, "sub").terms == {}


def test_context_mismatch():
    with pytest.raises(ValueError):
        poly_arith(X, Z, "add")
    # a full image map across contexts is fine
    assert X.substitute({"x": Z, "y": W + 1}) == Z
    with pytest.raises(ValueError):
        X.substitute({"x": Z})  # missing image for y
    with pytest.raises(ValueError):
        Poly(XY_VARS, {(1,): 1})  # exponent arity mismatch


def test_coeff():
    g4 = fold("g2", 4)
    assert g4.second.coeff((6, 0)) == 2
    g3 = fold("g2", 3)
    assert g3.first.coeff((1, 1)) == -3
    assert g3.first.coeff((5, 5)) == 0
    with pytest.raises(ValueError):
        g3.first.coeff((1, 1, 1))


def test_degree_slice():
    p = X**2 - 2 * Y - 4
    assert p.degree_slice(2) == X**2
    assert p.degree_slice(7).is_zero()
    a5 = fold("a2", 5)
    assert a5.first.degree_slice(5) == Z**5
    with pytest.raises(ValueError):
        p.degree_slice(-1)


def test_substitute_identity_and_swap():
    p = X**2 - 2 * Y - 4
    assert p.substitute({"x": X, "y": Y}) == p
    q = Z**2 - 2 * W
    assert q.substitute({"z": W, "w": Z}) == W**2 - 2 * Z
    lin = X.substitute(
        {"x": poly_from([(1, 0, 3), (0, 1, 5), (0, 0, 7)]), "y": Y}
    )
    assert lin == poly_from([(1, 0, 3), (0, 1, 5), (0, 0, 7)])
    with pytest.raises(ValueError):
        p.substitute({"x": X})


def test_substitute_constants_only():
    p = X**2 + Y
    out = p.substitute({"x": 2, "y": 3})
    assert out.is_constant() and out.constant_value() == 7


def test_swap_conjugate():
    assert swap_conjugate(Z**2 - 2 * W) == W**2 - 2 * Z
    p = (Z**3 - 3 * Z * W + 3) * I_UNIT + Z
    assert swap_conjugate(swap_conjugate(p)) == p
    assert swap_conjugate(I_UNIT * Z) == -I_UNIT * W
    with pytest.raises(ValueError):
        swap_conjugate(Poly.variable(("x", "y", "z"), "x"))


def test_zw_to_xy_examples():
    a2 = fold("a2", 2)
    m = zw_to_xy(a2)
    assert m.first == X**2 - Y**2 - 2 * X
    assert m.second == 2 * X * Y + 2 * Y
    a1 = zw_to_xy(fold("a2", 1))
    assert (a1.first, a1.second) == (X, Y)
    a0 = zw_to_xy(fold("a2", 0))
    assert a0.first == Poly.constant(XY_VARS, 3) and a0.second.is_zero()


def test_zw_to_xy_rejects_malformed():
    bad = PolyMap2(Z**2 - 2 * W, Z**2 - 2 * W, "ZW", "bad")
    with pytest.raises(RealFormError):
        zw_to_xy(bad)
    with pytest.raises(ValueError):
        zw_to_xy(PolyMap2(X, Y, "XY", "wrong-model"))


@pytest.mark.parametrize("n", range(0, 11))
def test_zw_xy_round_trip(n):
    m = fold("a2", n)
    assert xy_to_zw(zw_to_xy(m)) == m


def test_canonical_order_and_render():
    p = poly_from([(0, 0, -6), (2, 0, 1), (0, 1, -2), (1, 0, -2)])
    exps = [e for e, _ in p.sorted_terms()]
    assert exps == [(2, 0), (1, 0), (0, 1), (0, 0)]
    assert str(p) == "x^2 - 2*x - 2*y - 6"
    assert p.to_latex() == "x^2 - 2 x - 2 y - 6"
    assert str(Poly.zero(XY_VARS)) == "0"


def test_json_round_trip():
    m = fold("g2", 4)
    blob = json.dumps(m.to_json_obj())
    again = PolyMap2.from_json_obj(json.loads(blob))
    assert again == m
    p = I_UNIT * X + Poly.constant(XY_VARS, CycloElem(0, 1, 0, 0)) * Y
    q = Poly.from_json_obj(json.loads(json.dumps(p.to_json_obj())))
    assert q == p


def test_json_is_canonical():
    obj = fold("b2", 3).first.to_json_obj()
    degrees = [sum(t["e"]) for t in obj["terms"]]
    assert degrees == sorted(degrees, reverse=True)
    assert obj["vars"] == ["x", "y"]


GOLDEN_B3_X = (
    '{"vars": ["x", "y"], "terms": ['
    '{"e": [3, 0], "c": ["1", "0", "0", "0"]}, '
    '{"e": [1, 1], "c": ["-3", "0", "0", "0"]}, '
    '{"e": [1, 0], "c": ["-3", "0", "0", "0"]}]}'
)


def test_golden_serialization():
    # freezes the wire format: schema keys, term order, rational rendering
    assert json.dumps(fold("b2", 3).first.to_json_obj()) == GOLDEN_B3_X


coeffs = st.integers(min_value=-9, max_value=9)
exps = st.tuples(st.integers(0, 4), st.integers(0, 4))
polys = st.dictionaries(exps, coeffs, max_size=6).map(
    lambda d: Poly(XY_VARS, d)
)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=40, deadline=None)
@given(polys, polys)
def test_substitution_is_ring_homomorphism(p, q):
    images = {"x": Y**2 - 1, "y": X + Y}
    assert (p * q).substitute(images) == p.substitute(images) * q.substitute(images)
    assert (p + q).substitute(images) == p.substitute(images) + q.substitute(images)


@settings(max_examples=40, deadline=None)
@given(polys)
def test_pow_matches_repeated_mul(p):
    assert p**3 == p * p * p
    assert p**0 == Poly.constant(XY_VARS, 1)


def test_evaluate():
    p = X**2 - 2 * Y - 4
    assert p.evaluate({"x": 3, "y": 1}) == 3
    assert abs(p.evaluate_complex({"x": 1j, "y": 0}) - (-5 + 0j)) < 1e-12
