"""Genus-one hyperelliptic models y^2 = f(x) and their local geometry.

A curve is y^2 = f(x) with f square-free of degree 3 or 4 over an exact
coefficient field.  Functions on the curve are P(x) + y*Q(x) with rational
P, Q.  The module provides places (affine points, branch points, places at
infinity), exact local Laurent expansions in a uniformizer, orders of
vanishing, divisors grouped by conjugacy cluster, residues of quadratic
differentials, and exact j-invariants.

Points whose y-coordinate lives outside the coefficient field are handled
by a lightweight on-demand quadratic extension carrying y as a formal
square root; computed orders and residues are exact there too.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .poly import (
    FractionFieldDomain,
    MultiPoly,
    QuadDomain,
    RationalDomain,
    RationalFunction,
    divide_out,
    exact_divide,
    poly_gcd,
    squarefree_decomposition,
)
from .series import LaurentSeries, MAX_TRUNCATION, SeriesPrecisionError

_PREC_LADDER = (10, 18, 32, MAX_TRUNCATION)


# --------------------------------------------------------------------------
# formal quadratic extension for branch data


class BranchExt:
    """a + b*w with w^2 equal to a fixed non-square field element."""

    __slots__ = ("a", "b", "ext")

    def __init__(self, a, b, ext: "BranchExtDomain"):
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "ext", ext)

    def __setattr__(self, name, value):
        raise AttributeError("BranchExt is immutable")

    def _lift(self, other):
        if isinstance(other, BranchExt):
            if other.ext is not self.ext and other.ext != self.ext:
                return None
            return other
        try:
            base = self.ext.base.coerce(other)
        except TypeError:
            return None
        return BranchExt(base, self.ext.base.zero, self.ext)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return BranchExt(self.a + o.a, self.b + o.b, self.ext)

    __radd__ = __add__

    def __neg__(self):
        return BranchExt(-self.a, -self.b, self.ext)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        r = self.ext.radicand
        return BranchExt(
            self.a * o.a + r * (self.b * o.b),
            self.a * o.b + self.b * o.a,
            self.ext,
        )

    __rmul__ = __mul__

    def conj(self):
        return BranchExt(self.a, -self.b, self.ext)

    def norm(self):
        return self.a * self.a - self.ext.radicand * (self.b * self.b)

    def inverse(self):
        n = self.norm()
        base = self.ext.base
        if base.is_zero(n):
            raise ZeroDivisionError("inverting zero in a branch extension")
        inv = base.div(base.one, n)
        return BranchExt(self.a * inv, -self.b * inv, self.ext)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __bool__(self):
        base = self.ext.base
        return not (base.is_zero(self.a) and base.is_zero(self.b))

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        base = self.ext.base
        return base.is_zero(self.a - o.a) and base.is_zero(self.b - o.b)

    def __hash__(self):
        return hash(("BranchExt", repr(self.a), repr(self.b)))

    def __str__(self):
        base = self.ext.base
        if base.is_zero(self.b):
            return base.render(self.a)
        bs = base.render(self.b)
        body = "w" if bs == "1" else ("-w" if bs == "-1" else "%s*w" % bs)
        if base.is_zero(self.a):
            return body
        sign = "" if body.startswith("-") else "+"
        return "%s%s%s" % (base.render(self.a), sign, body)

    def __repr__(self):
        return "BranchExt(%s | w^2=%s)" % (self, self.ext.base.render(self.ext.radicand))


class BranchExtDomain:
    """Domain tag for base_field(w), w^2 = radicand (a non-square)."""

    def __init__(self, base, radicand):
        self.base = base
        self.radicand = radicand
        self.name = "%s(w)" % base.name
        self.zero = BranchExt(base.zero, base.zero, self)
        self.one = BranchExt(base.one, base.zero, self)

    def w(self):
        return BranchExt(self.base.zero, self.base.one, self)

    def coerce(self, x):
        if isinstance(x, BranchExt):
            if x.ext is self or x.ext == self:
                return x
            raise TypeError("element of a different branch extension")
        return BranchExt(self.base.coerce(x), self.base.zero, self)

    def is_zero(self, x) -> bool:
        return not x

    def div(self, x, y):
        return self.coerce(x) / self.coerce(y)

    def content_gcd(self, x, y):
        return self.one

    def canonical_sign(self, x) -> int:
        return 0 if self.is_zero(x) else 1

    def sqrt(self, x):
        x = self.coerce(x)
        if self.base.is_zero(x.b):
            r = self.base.sqrt(x.a)
            if r is not None:
                return BranchExt(r, self.base.zero, self)
            try:
                q = self.base.div(x.a, self.radicand)
            except ZeroDivisionError:
                return None
            r2 = self.base.sqrt(q)
            if r2 is not None:
                return BranchExt(self.base.zero, r2, self)
        return None

    def render(self, x) -> str:
        s = str(x)
        return "(%s)" % s if ("+" in s[1:] or "-" in s[1:]) else s

    def __eq__(self, other):
        return (
            isinstance(other, BranchExtDomain)
            and other.base == self.base
            and self.base.is_zero(other.radicand - self.radicand)
        )

    def __hash__(self):
        return hash(("BranchExtDomain", repr(self.base)))

    def __repr__(self):
        return self.name


# --------------------------------------------------------------------------
# the curve


class CurveModel:
    """y^2 = f(x), f square-free of degree 3 or 4 with nonzero discriminant."""

    def __init__(self, f: MultiPoly):
        if f.vars != ("x",):
            raise ValueError("curve polynomial must live in the ring with variable x")
        deg = f.degree_in("x")
        if deg not in (3, 4):
            raise ValueError("genus-one model needs degree 3 or 4, got %d" % deg)
        self.f = f
        self.dom = f.dom
        self.degree = deg
        if not isinstance(f.dom, FractionFieldDomain):
            g = poly_gcd(f, f.derivative("x"))
            if not g.is_constant():
                raise ValueError("branch polynomial is not square-free: gcd %s" % g)
        one = MultiPoly.const(self.dom, ("x",), self.dom.one)
        self._one_rf = RationalFunction(one)
        self.f_rf = RationalFunction(f)

    # -- elements ------------------------------------------------------------

    def element(self, p, q=None) -> "FunctionFieldElement":
        def lift(v):
            if v is None:
                return RationalFunction(MultiPoly.zero(self.dom, ("x",)))
            if isinstance(v, RationalFunction):
                return v
            if isinstance(v, MultiPoly):
                return RationalFunction(v)
            return RationalFunction(MultiPoly.const(self.dom, ("x",), v))

        return FunctionFieldElement(self, lift(p), lift(q))

    def x(self) -> "FunctionFieldElement":
        return self.element(MultiPoly.var(self.dom, ("x",), "x"))

    def y(self) -> "FunctionFieldElement":
        return self.element(None, self.dom.one)

    def f_at(self, x0):
        return self.f.eval_scalars({"x": self.dom.coerce(x0)})

    # -- places ------------------------------------------------------------

    def point(self, x0, branch: int = 1, y0=None):
        """The place over x = x0.  For a branch point (f(x0) = 0) the single
        ramified place; otherwise the point with y = y0 or the branch-signed
        square root of f(x0), extending the field when needed."""
        x0 = self.dom.coerce(x0)
        fx = self.f_at(x0)
        if self.dom.is_zero(fx):
            return RamifiedAffinePlace(self, x0)
        if y0 is not None:
            target = y0.ext.coerce(fx) if isinstance(y0, BranchExt) else fx
            if y0 * y0 != target:
                raise ValueError("y0^2 does not equal f(x0)")
            return AffinePlace(self, x0, y0)
        r = self.dom.sqrt(fx)
        if r is not None:
            y0 = r if branch >= 0 else -r
            return AffinePlace(self, x0, y0)
        ext = BranchExtDomain(self.dom, fx)
        w = ext.w()
        return AffinePlace(self, x0, w if branch >= 0 else -w)

    def places_at_infinity(self):
        if self.degree == 3:
            return [RamifiedInfinitePlace(self)]
        return [InfinitePlace(self, 1), InfinitePlace(self, -1)]


class FunctionFieldElement:
    """P(x) + y*Q(x) on a fixed curve; P, Q reduced rational functions."""

    __slots__ = ("curve", "p", "q")

    def __init__(self, curve: CurveModel, p: RationalFunction, q: RationalFunction):
        self.curve = curve
        self.p = p
        self.q = q

    def _wrap(self, other):
        if isinstance(other, FunctionFieldElement):
            if other.curve is not self.curve and other.curve.f != self.curve.f:
                raise ValueError("elements live on different curves")
            return other
        if isinstance(other, (RationalFunction, MultiPoly)):
            return self.curve.element(other)
        try:
            return self.curve.element(self.curve.dom.coerce(other))
        except TypeError:
            return None

    def __bool__(self):
        return bool(self.p) or bool(self.q)

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return FunctionFieldElement(self.curve, self.p + o.p, self.q + o.q)

    __radd__ = __add__

    def __neg__(self):
        return FunctionFieldElement(self.curve, -self.p, -self.q)

    def __sub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        f = self.curve.f_rf
        return FunctionFieldElement(
            self.curve,
            self.p * o.p + f * self.q * o.q,
            self.p * o.q + self.q * o.p,
        )

    __rmul__ = __mul__

    def conj(self) -> "FunctionFieldElement":
        return FunctionFieldElement(self.curve, self.p, -self.q)

    def norm(self) -> RationalFunction:
        return self.p * self.p - self.curve.f_rf * self.q * self.q

    def inverse(self) -> "FunctionFieldElement":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverting the zero function")
        return FunctionFieldElement(self.curve, self.p / n, -self.q / n)

    def __truediv__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.curve.element(self.curve.dom.one)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self.p == o.p and self.q == o.q

    def deriv_over_omega(self) -> "FunctionFieldElement":
        """The function (d self)/omega for omega = dx/y: equals
        (f*Q' + f'*Q/2) + y*P'."""
        f = self.curve.f_rf
        fp = RationalFunction(self.curve.f.derivative("x"))
        half = Fraction(1, 2)
        new_p = f * self.q.derivative("x") + fp * self.q * half
        new_q = self.p.derivative("x")
        return FunctionFieldElement(self.curve, new_p, new_q)

    def __str__(self):
        if not self.q:
            return str(self.p)
        return "(%s) + y*(%s)" % (self.p, self.q)

    def __repr__(self):
        return "FunctionFieldElement(%s)" % self


# --------------------------------------------------------------------------
# places and local frames


class _Frame:
    """Local data at a place: coefficient domain, x(t), y(t), dx/dt."""

    __slots__ = ("dom", "x", "y", "dxdt")

    def __init__(self, dom, x, y, dxdt):
        self.dom = dom
        self.x = x
        self.y = y
        self.dxdt = dxdt

    def omega_over_dt(self) -> LaurentSeries:
        return self.dxdt / self.y


def _series_domain_for(dom, needed_square):
    """The domain in which needed_square has a square root, extending once
    if necessary."""
    if dom.sqrt(needed_square) is not None:
        return dom
    return BranchExtDomain(dom, needed_square)


def _eval_poly_series(p: MultiPoly, x_ser: LaurentSeries) -> LaurentSeries:
    dom = x_ser.dom
    coeffs = p.univariate_coeffs("x") if p else []
    if not coeffs:
        return LaurentSeries.zero(dom, MAX_TRUNCATION)
    acc = LaurentSeries.const(dom, dom.coerce(coeffs[-1]), MAX_TRUNCATION)
    for c in reversed(coeffs[:-1]):
        acc = acc * x_ser + dom.coerce(c)
    return acc


def _eval_ratfunc_series(rf: RationalFunction, x_ser: LaurentSeries) -> LaurentSeries:
    num = _eval_poly_series(rf.num, x_ser)
    den = _eval_poly_series(rf.den, x_ser)
    return num / den


class AffinePlace:
    """Unramified affine point (x0, y0); uniformizer t = x - x0."""

    kind = "affine"

    def __init__(self, curve: CurveModel, x0, y0):
        self.curve = curve
        self.x0 = x0
        self.y0 = y0
        self.edom = y0.ext if isinstance(y0, BranchExt) else curve.dom

    def conjugate(self):
        return AffinePlace(self.curve, self.x0, -self.y0)

    def frame(self, prec: int) -> _Frame:
        dom = self.edom
        x_ser = LaurentSeries(dom, {0: dom.coerce(self.x0), 1: dom.one}, prec)
        f_ser = _eval_poly_series(self.curve.f, x_ser)
        y0 = dom.coerce(self.y0)
        inv_sq = dom.div(dom.one, y0 * y0)
        y_ser = (f_ser * inv_sq).sqrt() * y0
        dxdt = LaurentSeries.const(dom, dom.one, prec)
        return _Frame(dom, x_ser, y_ser, dxdt)

    def __eq__(self, other):
        return (
            isinstance(other, AffinePlace)
            and self.curve.f == other.curve.f
            and self.curve.dom.is_zero(self.x0 - other.x0)
            and self.y0 == other.y0
        )

    def __str__(self):
        return "(x=%s, y=%s)" % (self.curve.dom.render(self.x0), self.y0)


class RamifiedAffinePlace:
    """Branch point (x0, 0); uniformizer t with x = x0 + t^2."""

    kind = "affine_ramified"

    def __init__(self, curve: CurveModel, x0):
        self.curve = curve
        self.x0 = x0
        fp = curve.f.derivative("x").eval_scalars({"x": x0})
        self.edom = _series_domain_for(curve.dom, fp)

    def frame(self, prec: int) -> _Frame:
        dom = self.edom
        x_ser = LaurentSeries(dom, {0: dom.coerce(self.x0), 2: dom.one}, prec)
        f_ser = _eval_poly_series(self.curve.f, x_ser)
        y_ser = f_ser.sqrt()
        dxdt = LaurentSeries(dom, {1: dom.coerce(2)}, prec)
        return _Frame(dom, x_ser, y_ser, dxdt)

    def __eq__(self, other):
        return (
            isinstance(other, RamifiedAffinePlace)
            and self.curve.f == other.curve.f
            and self.curve.dom.is_zero(self.x0 - other.x0)
        )

    def __str__(self):
        return "(x=%s, y=0)" % self.curve.dom.render(self.x0)


class InfinitePlace:
    """One of the two places over x = infinity on a quartic model;
    uniformizer t = 1/x, branch tagged by the sign of y/x^2."""

    kind = "infinite"

    def __init__(self, curve: CurveModel, sign: int):
        self.curve = curve
        self.sign = 1 if sign >= 0 else -1
        lc = curve.f.coeff_of_power("x", 4).constant_value()
        self.edom = _series_domain_for(curve.dom, lc)

    def conjugate(self):
        return InfinitePlace(self.curve, -self.sign)

    def frame(self, prec: int) -> _Frame:
        dom = self.edom
        window = prec + 6
        x_ser = LaurentSeries(dom, {-1: dom.one}, window)
        f_ser = _eval_poly_series(self.curve.f, x_ser)
        y_ser = f_ser.sqrt()
        if self.sign < 0:
            y_ser = -y_ser
        dxdt = LaurentSeries(dom, {-2: -dom.one}, window)
        return _Frame(dom, x_ser, y_ser, dxdt)

    def __eq__(self, other):
        return (
            isinstance(other, InfinitePlace)
            and self.curve.f == other.curve.f
            and self.sign == other.sign
        )

    def __str__(self):
        return "(x=inf, branch %s)" % ("+" if self.sign > 0 else "-")


class RamifiedInfinitePlace:
    """The single place over x = infinity on a cubic model;
    uniformizer t with x = 1/t^2."""

    kind = "infinite_ramified"

    def __init__(self, curve: CurveModel):
        self.curve = curve
        lc = curve.f.coeff_of_power("x", 3).constant_value()
        self.edom = _series_domain_for(curve.dom, lc)

    def frame(self, prec: int) -> _Frame:
        dom = self.edom
        window = prec + 8
        x_ser = LaurentSeries(dom, {-2: dom.one}, window)
        f_ser = _eval_poly_series(self.curve.f, x_ser)
        y_ser = f_ser.sqrt()
        dxdt = LaurentSeries(dom, {-3: dom.coerce(-2)}, window)
        return _Frame(dom, x_ser, y_ser, dxdt)

    def __eq__(self, other):
        return isinstance(other, RamifiedInfinitePlace) and self.curve.f == other.curve.f

    def __str__(self):
        return "(x=inf, ramified)"


def local_series(elem: FunctionFieldElement, place, prec: int) -> LaurentSeries:
    """Expansion of P + y*Q in the uniformizer at the place."""
    frame = place.frame(prec)
    out = _eval_ratfunc_series(elem.p, frame.x)
    if elem.q:
        out = out + frame.y * _eval_ratfunc_series(elem.q, frame.x)
    return out


def order_at(elem: FunctionFieldElement, place) -> int:
    """Exact order of vanishing (negative at a pole)."""
    if not elem:
        raise ValueError("the zero function has no order")
    for prec in _PREC_LADDER:
        try:
            s = local_series(elem, place, prec)
        except (ZeroDivisionError, SeriesPrecisionError):
            continue
        v = s.valuation()
        if v is not None:
            return v
    raise ArithmeticError(
        "expansion at %s vanished to the truncation cap; order undetermined" % place
    )


def residue_of_quadratic_differential(u: FunctionFieldElement, place):
    """Coefficient of t^-2 in the expansion of u * (dx/y)^2, the invariant
    residue of the quadratic differential u*omega^2 at a double pole."""
    for prec in _PREC_LADDER:
        try:
            frame = place.frame(prec)
            w = frame.omega_over_dt()
            ser = _eval_ratfunc_series(u.p, frame.x)
            if u.q:
                ser = ser + frame.y * _eval_ratfunc_series(u.q, frame.x)
            ser = ser * w * w
            return ser.coefficient_of(-2)
        except (SeriesPrecisionError, ZeroDivisionError):
            continue
    raise ArithmeticError("could not stabilize the residue at %s" % place)


# --------------------------------------------------------------------------
# divisors


class Divisor:
    """Formal sum of places and conjugacy clusters with multiplicities.

    Entries are tuples:
      ("place", place, mult)                  a single named place
      ("cluster_both", g, m)                  every point over every root of
                                              g, both branches, multiplicity m
      ("cluster_split", g, m_hi, m_lo)        each root of g carries m_hi on
                                              one branch and m_lo on the other
      ("cluster_ram", g, m)                   the branch point over each root
    """

    def __init__(self, entries):
        self.entries = [e for e in entries if _entry_mult_nonzero(e)]

    def degree(self) -> int:
        total = 0
        for e in self.entries:
            total += _entry_degree(e)
        return total

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __str__(self):
        if not self.entries:
            return "0"
        return " + ".join(_entry_str(e) for e in self.entries)


def _entry_mult_nonzero(e) -> bool:
    if e[0] == "cluster_split":
        return bool(e[2]) or bool(e[3])
    return bool(e[2])


def _entry_degree(e) -> int:
    kind = e[0]
    if kind == "place":
        return e[2]
    g = e[1]
    d = g.degree_in("x")
    if kind == "cluster_both":
        return 2 * d * e[2]
    if kind == "cluster_split":
        return d * (e[2] + e[3])
    return d * e[2]


def _entry_str(e) -> str:
    kind = e[0]
    if kind == "place":
        return "%d*%s" % (e[2], e[1])
    if kind == "cluster_both":
        return "%d*[both branches over roots of %s]" % (e[2], e[1])
    if kind == "cluster_split":
        return "[%d/%d split over roots of %s]" % (e[2], e[3], e[1])
    return "%d*[branch points over roots of %s]" % (e[2], e[1])


def _ord_in(rf: RationalFunction, g: MultiPoly):
    """Multiplicity of g in a reduced rational function (inf for zero)."""
    if not rf:
        return math.inf
    up, _ = divide_out(rf.num, g)
    down, _ = divide_out(rf.den, g)
    return up - down


def coprime_basis(polys):
    """Pairwise-coprime square-free primitive polynomials generating the
    same set of roots as the inputs."""
    basis = []
    work = []
    for p in polys:
        if p and p.degree_in("x") >= 1:
            _, parts = squarefree_decomposition(p, "x")
            work.extend(g for g, _ in parts)
    while work:
        q = work.pop()
        q = q.primitive_part()
        if q.degree_in("x") < 1:
            continue
        split = False
        for i, b in enumerate(basis):
            g = poly_gcd(q, b)
            if g.degree_in("x") >= 1:
                basis.pop(i)
                nb = exact_divide(b, g)
                nq = exact_divide(q, g)
                work.extend([g, nb, nq])
                split = True
                break
        if not split:
            basis.append(q)
    return basis


def divisor_of(elem: FunctionFieldElement) -> Divisor:
    """Exact divisor of a nonzero function, with cluster-level entries for
    conjugate root families that are not rational."""
    if not elem:
        raise ValueError("the zero function has no divisor")
    curve = elem.curve
    f = curve.f
    n = elem.norm()
    cands = [f]
    for rf in (elem.p, elem.q, n):
        if rf:
            cands.append(rf.num)
            cands.append(rf.den)
    basis = coprime_basis(cands)
    entries = []
    for g in basis:
        ramified = exact_divide(f, g) is not None
        o_p = _ord_in(elem.p, g)
        o_q = _ord_in(elem.q, g)
        if ramified:
            v = min(2 * o_p, 1 + 2 * o_q)
            if v and v is not math.inf:
                entries.append(("cluster_ram", g, int(v)))
            continue
        o_n = _ord_in(n, g)
        m2 = min(o_p, o_q)
        if m2 is math.inf:
            continue
        m2 = int(m2)
        m1 = int(o_n) - m2
        if m1 == m2:
            if m1:
                entries.append(("cluster_both", g, m1))
            continue
        if g.degree_in("x") == 1:
            coeffs = g.univariate_coeffs("x")
            x0 = curve.dom.div(-coeffs[0], coeffs[1])
            plus = curve.point(x0, branch=1)
            minus = plus.conjugate()
            v_plus = order_at(elem, plus)
            if v_plus not in (m1, m2):
                raise ArithmeticError("branch resolution disagrees with norm data")
            v_minus = m1 + m2 - v_plus
            if v_plus:
                entries.append(("place", plus, v_plus))
            if v_minus:
                entries.append(("place", minus, v_minus))
        else:
            entries.append(("cluster_split", g, m1, m2))
    for pl in curve.places_at_infinity():
        v = order_at(elem, pl)
        if v:
            entries.append(("place", pl, v))
    return Divisor(entries)


# --------------------------------------------------------------------------
# j-invariants


def _j_from_c4_c6(dom, c4, c6):
    num = c4 * c4 * c4
    disc_scaled = num - c6 * c6
    if dom.is_zero(disc_scaled):
        raise ValueError("singular model: discriminant vanishes")
    return dom.div(num * 1728, disc_scaled)


def j_invariant_cubic(f: MultiPoly):
    """Exact j of y^2 = cubic, via the standard c4/c6 covariants after
    absorbing the leading coefficient."""
    dom = f.dom
    if f.degree_in("x") != 3:
        raise ValueError("cubic model expected")
    coeffs = f.univariate_coeffs("x")
    d, c, b, a = coeffs[0], coeffs[1], coeffs[2], coeffs[3]
    # X = a*x, Y = a*y turns y^2 = a x^3 + b x^2 + c x + d
    # into Y^2 = X^3 + b X^2 + (a c) X + a^2 d
    a2 = b
    a4 = a * c
    a6 = a * a * d
    b2 = a2 * 4
    b4 = a4 * 2
    b6 = a6 * 4
    c4 = b2 * b2 - b4 * 24
    c6 = -(b2 * b2 * b2) + b2 * b4 * 36 - b6 * 216
    return _j_from_c4_c6(dom, c4, c6)


def j_invariant_quartic(f: MultiPoly):
    """Exact j of y^2 = quartic, via the degree-2 and degree-3 invariants
    of the binary quartic."""
    dom = f.dom
    if f.degree_in("x") != 4:
        raise ValueError("quartic model expected")
    cs = f.univariate_coeffs("x")
    e, d, c, b, a = cs[0], cs[1], cs[2], cs[3], cs[4]
    i2 = a * e * 12 - b * d * 3 + c * c
    j3 = a * c * e * 72 - a * d * d * 27 - e * b * b * 27 + b * c * d * 9 - c * c * c * 2
    num = i2 * i2 * i2
    den = num * 4 - j3 * j3
    if dom.is_zero(den):
        raise ValueError("singular model: quartic discriminant vanishes")
    return dom.div(num * 6912, den)


def j_invariant(curve: CurveModel):
    if curve.degree == 3:
        return j_invariant_cubic(curve.f)
    return j_invariant_quartic(curve.f)
