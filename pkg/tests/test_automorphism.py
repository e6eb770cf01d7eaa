"""Automorphism membership, claimed groups, and the elimination solver."""

import pytest

from foldmap.automorphism import (
    AffineMap2,
    claimed_group,
    collect_constraints,
    is_member,
    solve_aut,
)
from foldmap.cyclo import CycloElem, SQRT3
from foldmap.folding import fold
from foldmap.poly import XY, ZW
from foldmap.rationals import rat

ZETA3 = CycloElem.zeta_pow(4)


def test_is_member_examples():
    neg = AffineMap2((-1, 0, 0, 0, 1, 0), XY)
    assert is_member(neg, fold("b2", 3)) is True
    assert is_member(neg, fold("b2", 4)) is False
    diag = AffineMap2((ZETA3, 0, 0, 0, ZETA3**2, 0), ZW)
    assert is_member(diag, fold("a2", 4)) is True
    assert is_member(diag, fold("a2", 5)) is False
    swap = AffineMap2((0, 1, 0, 1, 0, 0), ZW)
    for n in range(2, 9):
        assert is_member(swap, fold("a2", n)) is True


def test_is_member_rejects_singular():
    singular = AffineMap2((1, 0, 0, 1, 0, 0), XY)
    with pytest.raises(ValueError):
        is_member(singular, fold("b2", 2))
    with pytest.raises(ValueError):
        is_member(AffineMap2.identity(XY), fold("a2", 2))


def test_claimed_groups():
    assert (claimed_group("a2", 7).order, claimed_group("a2", 7).label) == (6, "S3")
    assert (claimed_group("a2", 5).order, claimed_group("a2", 5).label) == (2, "mu2")
    assert (claimed_group("b2", 5).order, claimed_group("b2", 5).label) == (2, "mu2")
    assert (claimed_group("b2", 6).order, claimed_group("b2", 6).label) == (1, "trivial")
    assert (claimed_group("g2", 3).order, claimed_group("g2", 3).label) == (1, "trivial")
    assert "typo" in claimed_group("b2", 4).note
    with pytest.raises(ValueError):
        claimed_group("b2", 1)


def test_claimed_group_closure_and_membership():
    for tag in ("a2", "b2", "g2"):
        for n in (2, 3, 4, 7):
            group = claimed_group(tag, n)
            fmap = fold(tag, n)
            assert any(m == AffineMap2.identity(m.model) for m in group.elements)
            for m in group.elements:
                assert is_member(m, fmap)
            # table closure was computed without error, check inverses exist
            for row in group.table:
                assert sorted(row) == list(range(group.order))


def element_order(m):
    power = m
    for k in range(1, 13):
        if power == AffineMap2.identity(m.model):
            return k
        power = power.compose(m)
    raise AssertionError("element order exceeds 12")


def test_s3_structure_by_element_orders():
    group = claimed_group("a2", 4)
    orders = sorted(element_order(m) for m in group.elements)
    assert orders == [1, 2, 2, 2, 3, 3]
    group = claimed_group("b2", 9)
    assert sorted(element_order(m) for m in group.elements) == [1, 2]


def test_affine_compose_and_apply():
    p = AffineMap2((0, 1, 0, 1, 0, 0), ZW)
    q = AffineMap2((ZETA3, 0, 0, 0, ZETA3**2, 0), ZW)
    pq = p.compose(q)
    assert pq.coeffs == (0, ZETA3**2, 0, ZETA3, 0, 0)
    assert p.apply_point((1, 2)) == (2, 1)
    assert not AffineMap2((1, 1, 0, 1, 1, 0), XY).is_invertible()


def test_zw_to_xy_conversion_is_real():
    conjugation = AffineMap2((0, 1, 0, 1, 0, 0), ZW).zw_to_xy()
    assert conjugation.coeffs == (1, 0, 0, 0, -1, 0)
    rotation = AffineMap2((ZETA3, 0, 0, 0, ZETA3**2, 0), ZW).zw_to_xy()
    half = CycloElem(rat(1, 2))
    assert rotation.coeffs[0] == -half
    with pytest.raises(ValueError):
        AffineMap2((ZETA3, 0, 0, 0, 1, 0), ZW).zw_to_xy()


def test_s3_permutes_triangle_vertices():
    """The converted S3 elements permute the cube-root triangle exactly."""
    half = CycloElem(rat(1, 2))
    s32 = SQRT3 * half
    vertices = [
        (CycloElem(1), CycloElem(0)),
        (-half, s32),
        (-half, -s32),
    ]
    group = claimed_group("a2", 7)
    assert group.label == "S3"
    permutations = set()
    for m in group.elements:
        real = m.zw_to_xy()
        images = []
        for v in vertices:
            img = real.apply_point(v)
            idx = next(
                (k for k, u in enumerate(vertices)
                 if CycloElem.from_coef(img[0]) == u[0]
                 and CycloElem.from_coef(img[1]) == u[1]),
                None,
            )
            assert idx is not None, (m, img)
            images.append(idx)
        permutations.add(tuple(images))
    assert len(permutations) == 6  # all of S3, faithfully


@pytest.mark.parametrize(
    "tag,n,order,label",
    [
        ("a2", 2, 2, "mu2"),
        ("a2", 4, 6, "S3"),
        ("a2", 6, 2, "mu2"),
        ("a2", 7, 6, "S3"),
        ("b2", 2, 1, "trivial"),
        ("b2", 3, 2, "mu2"),
        ("b2", 6, 1, "trivial"),
        ("b2", 7, 2, "mu2"),
        ("g2", 2, 1, "trivial"),
        ("g2", 5, 1, "trivial"),
        ("g2", 6, 1, "trivial"),
    ],
)
def test_solver_matches_claims(tag, n, order, label):
    out = solve_aut(tag, n)
    assert not out.unresolved
    assert (out.solutions.order, out.solutions.label) == (order, label)
    claimed = claimed_group(tag, n)
    assert all(s in claimed.elements for s in out.solutions.elements)


def test_solver_soundness():
    for tag, n in (("a2", 4), ("b2", 5), ("g2", 4)):
        out = solve_aut(tag, n)
        fmap = fold(tag, n)
        for m in out.solutions.elements:
            assert is_member(m, fmap)


def test_solver_rejects_low_n():
    with pytest.raises(ValueError):
        solve_aut("b2", 1)


def test_unresolved_outside_cyclotomic_range():
    """A map whose automorphisms need 5th roots of unity stalls honestly:
    the engine reports unresolved rather than guessing."""
    from foldmap.automorphism import _Engine
    from foldmap.poly import Poly, PolyMap2, XY_VARS

    x6 = Poly(XY_VARS, {(6, 0): 1})
    y6 = Poly(XY_VARS, {(0, 6): 1})
    engine = _Engine(PolyMap2(x6, y6, XY, "diag6"), [], depth_cap=32)
    engine.run()
    assert engine.unresolved
    assert any("order record" in u["reason"] for u in engine.unresolved)
    # the rational solutions it can certify are still sound
    for sol in engine.solutions:
        assert sol.is_invertible()


def test_depth_cap_reports_unresolved():
    out = solve_aut("b2", 5, depth_cap=0)
    assert out.unresolved
    assert out.solutions.label == "incomplete"
    assert any("depth cap" in u["reason"] for u in out.unresolved)


def test_power_equation_with_nontrivial_root_records():
    """a^2 = zeta_3 must record order(a) | 6 even with no prior record."""
    from foldmap.automorphism import ConstraintState, UNKNOWNS, _Engine
    from foldmap.poly import Poly

    engine = _Engine.__new__(_Engine)
    constraint = Poly(
        UNKNOWNS, {(2, 0, 0, 0, 0, 0): 1, (0,) * 6: -ZETA3}
    )
    state = ConstraintState([((1, (0, 0)), constraint)], {}, {})
    action = engine._find_action(state)
    assert action == ("record", "a", 6, None)


def test_solver_is_deterministic():
    a = solve_aut("a2", 4).solutions.to_json_obj()
    b = solve_aut("a2", 4).solutions.to_json_obj()
    assert a == b


def test_constraint_collection_shape():
    buckets = collect_constraints(fold("b2", 3))
    # the xy^{n-1} bucket carries the a*b^{n-1} obstruction
    key = (1, (1, 2))
    assert key in buckets
    p = buckets[key]
    assert len(p.terms) == 1
    ((exps, coef),) = p.terms.items()
    assert exps == (1, 2, 0, 0, 0, 0) and coef == -3
