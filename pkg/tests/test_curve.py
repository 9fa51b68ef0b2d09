"""Geometry layer tests: branch extensions, local frames, orders, divisors,
and j-invariants, anchored on small fixture curves."""

import random
from fractions import Fraction

import pytest

from mpbelyi.curve import (
    AffinePlace,
    BranchExt,
    BranchExtDomain,
    CurveModel,
    InfinitePlace,
    RamifiedAffinePlace,
    RamifiedInfinitePlace,
    coprime_basis,
    divisor_of,
    j_invariant,
    j_invariant_cubic,
    j_invariant_quartic,
    local_series,
    order_at,
)
from mpbelyi.parse import parse_poly
from mpbelyi.poly import MultiPoly, QQ, QuadDomain, RationalFunction
from mpbelyi.scalars import QuadExt


def curve_of(text, dom=None):
    return CurveModel(parse_poly(text, ("x",), dom=dom))


E_CUBIC = "x^3+1"
E_QUARTIC = "x^4+1"


# -- branch extensions ---------------------------------------------------------


def test_branchext_is_a_field():
    ext = BranchExtDomain(QQ, Fraction(2))
    w = ext.w()
    one = ext.one
    a = one + w
    b = one - w
    assert a * b == ext.coerce(-1)
    assert (a / b) * b == a
    inv = a.inverse()
    assert a * inv == one
    with pytest.raises(ZeroDivisionError):
        ext.zero.inverse()


def test_branchext_over_quadratic_field():
    base = QuadDomain(105)
    rad = QuadExt(595, -23, 105)
    ext = BranchExtDomain(base, rad)
    w = ext.w()
    assert w * w == ext.coerce(rad)
    z = ext.coerce(QuadExt(2, 1, 105)) + w
    assert z * z.inverse() == ext.one


def test_branchext_sqrt_recognizes_radicand_multiples():
    ext = BranchExtDomain(QQ, Fraction(3))
    r = ext.sqrt(ext.coerce(12))
    assert r is not None and r * r == ext.coerce(12)
    assert ext.sqrt(ext.coerce(5)) is None
    assert ext.sqrt(ext.coerce(Fraction(9, 4))) == ext.coerce(Fraction(3, 2))


# -- model validation ------------------------------------------------------------


def test_curve_rejects_bad_degrees_and_singular_models():
    with pytest.raises(ValueError):
        curve_of("x^2+1")
    with pytest.raises(ValueError):
        curve_of("x^5+x+1")
    with pytest.raises(ValueError):
        curve_of("x^3-3*x+2")
    with pytest.raises(ValueError):
        curve_of("(x^2-1)^2")


def test_point_validation():
    c = curve_of(E_CUBIC)
    with pytest.raises(ValueError):
        c.point(0, y0=Fraction(2))
    p = c.point(-1)
    assert isinstance(p, RamifiedAffinePlace)
    q = c.point(0, branch=-1)
    assert isinstance(q, AffinePlace) and q.y0 == -1


# -- local frames ------------------------------------------------------------------


def frame_places(curve):
    out = []
    if curve.degree == 3:
        out.append(curve.point(0, branch=1))
        out.append(curve.point(-1))
        out.extend(curve.places_at_infinity())
    else:
        out.append(curve.point(0, branch=1))
        out.extend(curve.places_at_infinity())
    return out


@pytest.mark.parametrize("ftext", [E_CUBIC, E_QUARTIC])
def test_frames_satisfy_curve_equation(ftext):
    c = curve_of(ftext)
    for place in frame_places(c):
        fr = place.frame(14)
        coeffs = c.f.univariate_coeffs("x")
        f_ser = None
        for k, co in reversed(list(enumerate(coeffs))):
            term = fr.x**k * fr.dom.coerce(co)
            f_ser = term if f_ser is None else f_ser + term
        diff = fr.y * fr.y - f_ser
        assert not diff, "y^2 != f(x) at %s" % place


def test_frame_with_extension_satisfies_curve_equation():
    c = curve_of(E_CUBIC)
    place = c.point(1)  # f(1)=2 is not a rational square
    fr = place.frame(12)
    f_ser = fr.x ** 3 + fr.dom.one
    assert not (fr.y * fr.y - f_ser)
    assert fr.y.coefficient_of(0) == fr.dom.w()


# -- orders -----------------------------------------------------------------------


def test_orders_on_cubic_fixture():
    c = curve_of(E_CUBIC)
    x = c.x()
    y = c.y()
    beta0 = -(x**3)
    p01 = c.point(0, branch=1)
    pm1 = c.point(-1)
    inf = c.places_at_infinity()[0]
    assert isinstance(inf, RamifiedInfinitePlace)
    assert order_at(beta0, p01) == 3
    assert order_at(beta0, pm1) == 0
    assert order_at(1 - beta0, pm1) == 2
    assert order_at(beta0, inf) == -6
    assert order_at(y, pm1) == 1
    assert order_at(y, inf) == -3
    assert order_at(x, inf) == -2
    assert order_at(x, p01) == 1


def test_order_at_extension_point():
    c = curve_of(E_CUBIC)
    place = c.point(1)
    x = c.x()
    y = c.y()
    assert order_at(x - 1, place) == 1
    assert order_at(y, place) == 0
    assert order_at(y * y - 2, place) == 1


def test_orders_on_quartic_fixture():
    c = curve_of(E_QUARTIC)
    x = c.x()
    y = c.y()
    plus, minus = c.places_at_infinity()
    assert order_at(x, plus) == -1
    assert order_at(y, plus) == -2
    # y/x^2 tends to +1 on the plus branch and -1 on the minus branch
    r = y * (x**2).inverse()
    assert order_at(r - 1, plus) >= 1
    assert order_at(r + 1, minus) >= 1


# -- divisors ----------------------------------------------------------------------


def entry_kinds(div):
    return sorted(e[0] for e in div.entries)


def find_entries(div, kind):
    return [e for e in div.entries if e[0] == kind]


def test_divisor_of_beta0():
    c = curve_of(E_CUBIC)
    beta0 = -(c.x() ** 3)
    d = divisor_of(beta0)
    assert d.degree() == 0
    both = find_entries(d, "cluster_both")
    assert len(both) == 1
    g, m = both[0][1], both[0][2]
    assert g == parse_poly("x", ("x",)) and m == 3
    places = find_entries(d, "place")
    assert len(places) == 1
    assert isinstance(places[0][1], RamifiedInfinitePlace)
    assert places[0][2] == -6


def test_divisor_of_one_minus_beta0_is_doubled():
    c = curve_of(E_CUBIC)
    beta0 = -(c.x() ** 3)
    d = divisor_of(1 - beta0)
    ram = find_entries(d, "cluster_ram")
    assert len(ram) == 1
    assert ram[0][1] == parse_poly("x^3+1", ("x",))
    assert ram[0][2] == 2
    assert d.degree() == 0


def test_divisor_of_y():
    c = curve_of(E_CUBIC)
    d = divisor_of(c.y())
    ram = find_entries(d, "cluster_ram")
    assert len(ram) == 1 and ram[0][2] == 1
    inf = find_entries(d, "place")
    assert len(inf) == 1 and inf[0][2] == -3
    assert d.degree() == 0


def test_divisor_branch_split_resolution():
    c = curve_of(E_CUBIC)
    d = divisor_of(1 + c.y())
    places = find_entries(d, "place")
    affine = [e for e in places if isinstance(e[1], AffinePlace)]
    assert len(affine) == 1
    pl, mult = affine[0][1], affine[0][2]
    assert c.dom.is_zero(pl.x0) and pl.y0 == -1
    assert mult == 3
    infs = [e for e in places if isinstance(e[1], RamifiedInfinitePlace)]
    assert infs and infs[0][2] == -3
    assert d.degree() == 0


def test_divisor_mixed_pole():
    c = curve_of(E_CUBIC)
    x, y = c.x(), c.y()
    d = divisor_of(y / x)
    both = find_entries(d, "cluster_both")
    assert both and both[0][1] == parse_poly("x", ("x",)) and both[0][2] == -1
    ram = find_entries(d, "cluster_ram")
    assert ram and ram[0][2] == 1
    assert d.degree() == 0


def test_divisor_degree_zero_random():
    rng = random.Random(280)
    c = curve_of(E_CUBIC)
    v = ("x",)
    for _ in range(12):
        while True:
            pn = [Fraction(rng.randrange(-3, 4)) for _ in range(3)]
            qn = [Fraction(rng.randrange(-3, 4)) for _ in range(2)]
            p = MultiPoly.from_univariate(QQ, "x", pn)
            q = MultiPoly.from_univariate(QQ, "x", qn)
            if p or q:
                break
        elem = c.element(RationalFunction(p), RationalFunction(q))
        assert divisor_of(elem).degree() == 0


def test_coprime_basis_refines_shared_factors():
    v = ("x",)
    a = parse_poly("(x-1)^2*(x+2)", v)
    b = parse_poly("(x-1)*(x+3)^4", v)
    basis = coprime_basis([a, b])
    rendered = sorted(str(g) for g in basis)
    assert rendered == ["x+2", "x+3", "x-1"]


# -- j-invariants ----------------------------------------------------------------------


def test_j_known_values():
    assert j_invariant(curve_of("x^3+1")) == 0
    assert j_invariant(curve_of("x^3+x")) == 1728
    assert j_invariant(curve_of("x^3-x")) == 1728
    assert j_invariant(curve_of("x^4+1")) == 1728
    assert j_invariant(curve_of("x^4+x")) == 0


def test_j_cubic_and_quartic_paths_agree_on_matched_pair():
    # y^2 = x^3+3x^2+4x+2 maps to v^2 = 2u^4+4u^3+3u^2+u under u=1/x, v=y/x^2
    jc = j_invariant_cubic(parse_poly("x^3+3*x^2+4*x+2", ("x",)))
    jq = j_invariant_quartic(parse_poly("2*x^4+4*x^3+3*x^2+x", ("x",)))
    assert jc == jq == 1728


def test_j_quartic_invariance_random():
    rng = random.Random(1999)
    v = ("x",)
    x = MultiPoly.var(QQ, v, "x")
    done = 0
    while done < 10:
        f = MultiPoly.from_univariate(
            QQ, "x", [Fraction(rng.randrange(-4, 5)) for _ in range(5)]
        )
        if f.degree_in("x") != 4:
            continue
        try:
            j0 = j_invariant_quartic(f)
        except ValueError:
            continue
        p, q, r, s = (rng.randrange(-3, 4) for _ in range(4))
        if p * s - q * r == 0:
            continue
        num = x.scale(p) + q
        den = x.scale(r) + s
        g = MultiPoly.zero(QQ, v)
        cs = f.univariate_coeffs("x")
        for i, ci in enumerate(cs):
            g = g + (num**i) * (den ** (4 - i)).scale(ci)
        if g.degree_in("x") != 4:
            continue
        try:
            j1 = j_invariant_quartic(g)
        except ValueError:
            continue
        assert j0 == j1
        done += 1


def test_j_twist_invariance():
    f = parse_poly("x^4+x^3+2", ("x",))
    g = f.scale(3)
    assert j_invariant_quartic(f) == j_invariant_quartic(g)


def test_j_on_quadratic_field_curve():
    dom = QuadDomain(105)
    f = parse_poly("x^3+sqrt(105)*x", ("x",), dom=dom)
    assert j_invariant_cubic(f) == QuadExt(1728, 0, 105)
