from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from curvesing import modp
from curvesing.bfunction import (
    ann_fs,
    apply_to_fs,
    bs_quasihomogeneous,
    bs_ratio,
    global_bfunction,
    local_bfunction_origin,
    modular_bfunction,
)
from curvesing.fixtures import B0
from curvesing.poly import ContractError, FactoredB, MultiPoly
from curvesing.weyl import WeylContext, WeylElement

XY = ("x", "y")
CX = WeylContext(("x",), central=("s",))
CXY = WeylContext(XY, central=("s",))


def P(text, vars=XY):
    return MultiPoly.parse(text, vars)


def W(ctx, text):
    return WeylElement.parse(ctx, text)


def fb(*factors):
    return FactoredB.from_factors(factors)


# -- apply_to_fs ------------------------------------------------------------


def test_apply_examples():
    assert apply_to_fs(W(CX, "x*dx - s"), P("x", ["x"])).is_zero()
    assert apply_to_fs(W(CXY, "2*y*dx + 3*x^2*dy"), P("y^2 - x^3")).is_zero()
    out = apply_to_fs(W(CX, "dx"), P("x^2", ["x"]))
    assert out.shift == 1
    assert out.numerator == P("2*s*x", ("x", "s"))


def test_apply_reduces_shift():
    # x*dx applied to x^s gives s*x^s, no power of f left over
    out = apply_to_fs(W(CX, "x*dx"), P("x", ["x"]))
    assert out.shift == 0 and out.numerator == P("s", ("x", "s"))


def test_apply_needs_matching_context():
    with pytest.raises(ContractError):
        apply_to_fs(W(CXY, "dx"), P("x", ["x"]))


# -- closed form -------------------------------------------------------------


def test_closed_form_examples():
    assert bs_quasihomogeneous((2, 3)) == fb((1, 1), (6, 5), (6, 7))
    for pair, factors in B0.items():
        assert bs_quasihomogeneous(pair) == fb(*factors)
    assert bs_quasihomogeneous((4, 9)).format().startswith("(36s+13)(36s+17)")


@pytest.mark.parametrize("pair", [(2, 3), (2, 5), (3, 4), (4, 9), (5, 6), (5, 7), (3, 10)])
def test_closed_form_root_symmetry(pair):
    b = bs_quasihomogeneous(pair)
    others = {r for r in b.roots if r != -1}
    assert all(-2 - r in others for r in others)
    assert all(-2 < r < 0 for r in b.roots)
    assert all(m == 1 for m in b.roots.values())


# -- annihilator ---------------------------------------------------------------


def _in_left_ideal(op, gens):
    from curvesing.weyl import left_groebner, normal_form

    return not normal_form(op, left_groebner(gens))


def test_ann_of_x():
    ann = ann_fs(P("x", ["x"]))
    assert _in_left_ideal(W(CX, "x*dx - s"), ann)


def test_ann_of_circle():
    ann = ann_fs(P("x^2 + y^2"))
    assert _in_left_ideal(W(CXY, "x*dy - y*dx"), ann)
    assert _in_left_ideal(W(CXY, "x*dx + y*dy - 2*s"), ann)


def test_ann_of_cusp_both_methods():
    f = P("y^2 - x^3")
    for method in ("bm", "vweight"):
        ann = ann_fs(f, method=method)
        assert all(apply_to_fs(g, f).is_zero() for g in ann)
        assert _in_left_ideal(W(CXY, "2*x*dx + 3*y*dy - 6*s"), ann)
        assert _in_left_ideal(W(CXY, "2*y*dx + 3*x^2*dy"), ann)


def test_ann_rejects_constant():
    with pytest.raises(ContractError):
        ann_fs(P("3"))


# -- b-functions -------------------------------------------------------------


def test_global_examples():
    assert global_bfunction(P("x", ["x"])) == fb((1, 1))
    assert global_bfunction(P("x^2 + y^2")) == FactoredB({-1: 2})
    assert global_bfunction(P("y^2 - x^3")) == bs_quasihomogeneous((2, 3))


def test_local_examples():
    assert local_bfunction_origin(P("x - y^2")) == fb((1, 1))
    g = P("x^5 - 3*x^4 + 3*x^3 - x^2", ["x"])  # x^2 (x - 1)^3
    assert local_bfunction_origin(g) == fb((1, 1), (2, 1))
    glob = global_bfunction(g)
    assert glob == fb((1, 1), (2, 1), (3, 1), (3, 2))
    assert local_bfunction_origin(g).divides(glob)


@pytest.mark.parametrize("pair", [(2, 3), (2, 5), (3, 4)])
def test_pipeline_matches_closed_form(pair):
    p, q = pair
    f = P(f"y^{p} - x^{q}")
    closed = bs_quasihomogeneous(pair)
    assert global_bfunction(f) == closed
    assert local_bfunction_origin(f) == closed


def test_modular_matches_exact():
    f = P("y^3 - x^4")
    assert modular_bfunction(f, local=True) == bs_quasihomogeneous((3, 4))
    g = P("x^5 - 3*x^4 + 3*x^3 - x^2", ["x"])
    assert modular_bfunction(g, local=False) == global_bfunction(g)


def test_ratio_examples():
    b0 = bs_quasihomogeneous((4, 9))
    assert bs_ratio(b0, b0).trivial
    b14 = FactoredB({**b0.roots, Fraction(-23, 36): 1})
    del b14.roots[Fraction(-59, 36)]
    ra = bs_ratio(b14, b0)
    assert ra.gained == FactoredB({Fraction(-23, 36): 1})
    assert ra.lost == FactoredB({Fraction(-59, 36): 1})
    assert bs_ratio(b14, FactoredB(dict(b14.roots))).trivial


# -- properties over small curves --------------------------------------------

SMALL_CURVES = [
    "x^2 - y^2", "y^2 - x^2 - x^3", "x*y", "y^2 - x^4", "y^2 - x^3 - x^4", "x^3 - y^3",
    "y^2 - x^5", "x^2*y + y^3", "y^3 - x^4", "y^2 - x^3 + x^2*y", "x^2 + y^3", "x - y^2",
]


@pytest.mark.parametrize("text", SMALL_CURVES)
def test_b_properties(text):
    f = P(text)
    glob = global_bfunction(f)
    loc = local_bfunction_origin(f)
    for b in (glob, loc):
        assert all(r < 0 for r in b.roots)
        assert all(isinstance(r, Fraction) for r in b.roots)
    assert Fraction(-1) in glob.roots
    assert loc.divides(glob)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(-2, 2), st.integers(0, 3))
def test_euler_type_operators_annihilate(a, b, c, k):
    # monomials are quasi-homogeneous for every weight, so Euler operators kill their powers
    f = MultiPoly(XY, {(a, b): 1})
    op = WeylElement.parse(CXY, f"{b}*x*dx - {a}*y*dy")
    assert apply_to_fs(op, f).is_zero()
    assert apply_to_fs(WeylElement.parse(CXY, f"x*dx - {a}*s"), f).is_zero()
    const = apply_to_fs(WeylElement.parse(CXY, f"{c}*s^{k}"), f)
    assert const.shift == 0 and const.numerator == MultiPoly(("x", "y", "s"), {(0, 0, k): c})


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, modp.PRIMES[0] - 1), min_size=1, max_size=5))
def test_modular_roots(roots):
    p = modp.PRIMES[0]
    poly = [1]
    for r in roots:
        poly = modp.mul(poly, [(-r) % p, 1], p)
    found = modp.roots_mod_p(poly, p)
    expect = {}
    for r in roots:
        expect[r] = expect.get(r, 0) + 1
    assert found == expect


@settings(max_examples=60, deadline=None)
@given(st.integers(-1000, 1000), st.integers(1, 1000))
def test_rational_reconstruction(n, d):
    p = modp.PRIMES[1]
    q = Fraction(n, d)
    assert modp.rational_reconstruction(modp.from_fraction(q, p), p) == q
