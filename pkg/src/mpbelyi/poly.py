"""Sparse multivariate polynomial arithmetic over exact coefficient domains.

Polynomials are dicts mapping exponent tuples to nonzero coefficients,
ordered graded-lex for rendering and division.  Coefficient domains are
small tag objects: QQ (Fraction), QuadDomain(d) (elements of Q(sqrt(d))),
and FractionFieldDomain (coefficients that are themselves rational
functions, used for series with symbolic parameters).

The elimination-theory layer (gcd, resultants, fraction-free determinants,
nullspaces) runs on these polynomials with divisions that are exact by
construction; nothing here ever rounds.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .scalars import QuadExt, quadext_sqrt, rational_sqrt_exact


# --------------------------------------------------------------------------
# coefficient domains


class RationalDomain:
    name = "QQ"

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, QuadExt) and x.surd == 0:
            return x.rat
        raise TypeError("cannot coerce %r into QQ" % (x,))

    def is_zero(self, x) -> bool:
        return not x

    def div(self, x, y):
        return x / y

    def content_gcd(self, x, y):
        # gcd of two rationals: gcd of numerators over lcm of denominators
        return Fraction(
            math.gcd(x.numerator, y.numerator),
            math.lcm(x.denominator, y.denominator),
        )

    def canonical_sign(self, x) -> int:
        return (x > 0) - (x < 0)

    def sqrt(self, x):
        return rational_sqrt_exact(x)

    def render(self, x) -> str:
        return str(x)

    def __repr__(self):
        return "QQ"


class QuadDomain:
    def __init__(self, d: int):
        self.d = d
        self.name = "Q(sqrt(%d))" % d
        self.zero = QuadExt(0, 0, d)
        self.one = QuadExt(1, 0, d)

    def coerce(self, x):
        if isinstance(x, QuadExt):
            if x.d != self.d:
                if x.surd == 0:
                    return QuadExt(x.rat, 0, self.d)
                raise TypeError("cannot move sqrt(%d) into %s" % (x.d, self.name))
            return x
        if isinstance(x, (int, Fraction)):
            return QuadExt(x, 0, self.d)
        raise TypeError("cannot coerce %r into %s" % (x, self.name))

    def is_zero(self, x) -> bool:
        return not x

    def div(self, x, y):
        return x / y

    def content_gcd(self, x, y):
        parts = [p for p in (x.rat, x.surd, y.rat, y.surd) if p]
        g = Fraction(0)
        for p in parts:
            g = Fraction(
                math.gcd(g.numerator, p.numerator),
                math.lcm(g.denominator, p.denominator),
            ) if g else abs(p)
        return QuadExt(g, 0, self.d)

    def canonical_sign(self, x) -> int:
        return x.sign()

    def sqrt(self, x):
        return quadext_sqrt(x)

    def render(self, x) -> str:
        if x.surd == 0 or x.rat == 0:
            return str(x)
        return "(%s)" % x

    def __eq__(self, other):
        return isinstance(other, QuadDomain) and other.d == self.d

    def __hash__(self):
        return hash(("QuadDomain", self.d))

    def __repr__(self):
        return self.name


class FractionFieldDomain:
    """Coefficients that are RationalFunction over an inner polynomial ring."""

    def __init__(self, inner_dom, inner_vars: tuple):
        self.inner_dom = inner_dom
        self.inner_vars = tuple(inner_vars)
        self.name = "Frac(%s[%s])" % (inner_dom.name, ",".join(self.inner_vars))
        base = MultiPoly.const(inner_dom, self.inner_vars, inner_dom.one)
        self.one = RationalFunction(base, base)
        self.zero = RationalFunction(base * 0, base)

    def coerce(self, x):
        if isinstance(x, RationalFunction):
            if x.num.vars != self.inner_vars or x.num.dom != self.inner_dom:
                raise TypeError("mismatched fraction field")
            return x
        if isinstance(x, MultiPoly):
            if x.vars != self.inner_vars or x.dom != self.inner_dom:
                raise TypeError("mismatched fraction field")
            return RationalFunction(x)
        c = self.inner_dom.coerce(x)
        return RationalFunction(MultiPoly.const(self.inner_dom, self.inner_vars, c))

    def is_zero(self, x) -> bool:
        return not x

    def div(self, x, y):
        return x / y

    def content_gcd(self, x, y):
        return self.one

    def canonical_sign(self, x) -> int:
        if not x:
            return 0
        return 1

    def sqrt(self, x):
        return ratfunc_sqrt(x)

    def render(self, x) -> str:
        return "(%s)" % x

    def __eq__(self, other):
        return (
            isinstance(other, FractionFieldDomain)
            and other.inner_dom == self.inner_dom
            and other.inner_vars == self.inner_vars
        )

    def __hash__(self):
        return hash(("FractionFieldDomain", repr(self.inner_dom), self.inner_vars))

    def __repr__(self):
        return self.name


QQ = RationalDomain()


# --------------------------------------------------------------------------
# polynomials


def _grlex_key(exps):
    return (sum(exps), exps)


class MultiPoly:
    """Sparse polynomial: {exponent tuple: nonzero coefficient}."""

    __slots__ = ("dom", "vars", "terms")

    def __init__(self, dom, variables, terms: dict):
        self.dom = dom
        self.vars = tuple(variables)
        self.terms = {e: c for e, c in terms.items() if not dom.is_zero(c)}

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, dom, variables):
        return cls(dom, variables, {})

    @classmethod
    def const(cls, dom, variables, c):
        c = dom.coerce(c)
        zero_exp = (0,) * len(tuple(variables))
        return cls(dom, variables, {zero_exp: c})

    @classmethod
    def var(cls, dom, variables, name):
        variables = tuple(variables)
        if name not in variables:
            raise KeyError("undeclared variable %r" % name)
        e = tuple(1 if v == name else 0 for v in variables)
        return cls(dom, variables, {e: dom.one})

    @classmethod
    def from_univariate(cls, dom, varname, coeffs):
        """coeffs[k] multiplies varname**k."""
        return cls(dom, (varname,), {(k,): dom.coerce(c) for k, c in enumerate(coeffs)})

    # -- bookkeeping ------------------------------------------------------

    def _check_compatible(self, other: "MultiPoly"):
        if self.vars != other.vars or self.dom != other.dom:
            raise ValueError(
                "incompatible polynomial rings %s[%s] vs %s[%s]"
                % (self.dom, self.vars, other.dom, other.vars)
            )

    def _wrap(self, x):
        if isinstance(x, MultiPoly):
            self._check_compatible(x)
            return x
        try:
            return MultiPoly.const(self.dom, self.vars, x)
        except TypeError:
            return None

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self):
        if not self.terms:
            return self.dom.zero
        if not self.is_constant():
            raise ValueError("%s is not constant" % self)
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if not self.terms:
            return -1
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def num_terms(self) -> int:
        return len(self.terms)

    def uses(self, name: str) -> bool:
        i = self.vars.index(name)
        return any(e[i] for e in self.terms)

    def leading(self):
        """(exponent tuple, coefficient) largest in graded-lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                out[e] = s + c
        return MultiPoly(self.dom, self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.dom, self.vars, {e: -c for e, c in self.terms.items()})

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
        if not self.terms or not o.terms:
            return MultiPoly.zero(self.dom, self.vars)
        if len(self.terms) > len(o.terms):
            a, b = o, self
        else:
            a, b = self, o
        out: dict = {}
        for ea, ca in a.terms.items():
            for eb, cb in b.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                prod = ca * cb
                s = out.get(e)
                if s is None:
                    out[e] = prod
                else:
                    out[e] = s + prod
        return MultiPoly(self.dom, self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        out = MultiPoly.const(self.dom, self.vars, self.dom.one)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def scale(self, c):
        c = self.dom.coerce(c)
        if self.dom.is_zero(c):
            return MultiPoly.zero(self.dom, self.vars)
        return MultiPoly(self.dom, self.vars, {e: k * c for e, k in self.terms.items()})

    def map_coeffs(self, fn, dom=None):
        dom = dom or self.dom
        return MultiPoly(dom, self.vars, {e: fn(c) for e, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return (
                self.dom == other.dom
                and self.vars == other.vars
                and self.terms == other.terms
            )
        try:
            o = MultiPoly.const(self.dom, self.vars, other)
        except TypeError:
            return NotImplemented
        return self.terms == o.terms

    # -- coefficient extraction / substitution ------------------------------

    def coeff_of_power(self, name: str, k: int) -> "MultiPoly":
        """Coefficient of name**k, as a polynomial with that variable absent."""
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == k:
                out[e[:i] + (0,) + e[i + 1 :]] = c
        return MultiPoly(self.dom, self.vars, out)

    def coefficient(self, exps: dict):
        """Coefficient of the monomial prod(var**e); exps maps names to powers."""
        target = tuple(exps.get(v, 0) for v in self.vars)
        return self.terms.get(target, self.dom.zero)

    def univariate_coeffs(self, name: str):
        """Dense coefficient list [c0..cN] in name; other variables must be absent."""
        i = self.vars.index(name)
        for e in self.terms:
            if any(e[j] for j in range(len(e)) if j != i):
                raise ValueError("polynomial is not univariate in %s" % name)
        n = self.degree_in(name)
        out = [self.dom.zero] * (n + 1)
        for e, c in self.terms.items():
            out[e[i]] = c
        return out

    def subs(self, mapping: dict) -> "MultiPoly":
        """Substitute variables; values are MultiPoly (all over one target ring)
        or coercible scalars.  Unmapped variables must exist in the target ring."""
        targets = {}
        out_vars = None
        out_dom = None
        for name, val in mapping.items():
            if name not in self.vars:
                raise KeyError("undeclared variable %r" % name)
            if isinstance(val, MultiPoly):
                if out_vars is None:
                    out_vars, out_dom = val.vars, val.dom
                elif val.vars != out_vars or val.dom != out_dom:
                    raise ValueError("substitution targets live in different rings")
                targets[name] = val
        if out_vars is None:
            out_vars, out_dom = self.vars, self.dom
        for name, val in mapping.items():
            if not isinstance(val, MultiPoly):
                targets[name] = MultiPoly.const(out_dom, out_vars, val)
        for name in self.vars:
            if name not in targets:
                if name not in out_vars:
                    raise ValueError("variable %r missing from target ring" % name)
                targets[name] = MultiPoly.var(out_dom, out_vars, name)
        acc = MultiPoly.zero(out_dom, out_vars)
        pow_cache = {name: {0: MultiPoly.const(out_dom, out_vars, out_dom.one)} for name in self.vars}
        for e, c in self.terms.items():
            term = MultiPoly.const(out_dom, out_vars, out_dom.coerce(_coerce_between(c, self.dom, out_dom)))
            for i, name in enumerate(self.vars):
                k = e[i]
                if k == 0:
                    continue
                cache = pow_cache[name]
                if k not in cache:
                    top = max(cache)
                    cur = cache[top]
                    while top < k:
                        cur = cur * targets[name]
                        top += 1
                        cache[top] = cur
                term = term * cache[k]
            acc = acc + term
        return acc

    def eval_scalars(self, values: dict):
        """Fully evaluate at scalar values; returns a domain element."""
        acc = self.dom.zero
        vals = {v: self.dom.coerce(values[v]) for v in self.vars}
        for e, c in self.terms.items():
            t = c
            for i, v in enumerate(self.vars):
                if e[i]:
                    t = t * vals[v] ** e[i]
            acc = acc + t
        return acc

    def derivative(self, name: str) -> "MultiPoly":
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                out[e[:i] + (k - 1,) + e[i + 1 :]] = c * k
        return MultiPoly(self.dom, self.vars, out)

    def with_vars(self, new_vars) -> "MultiPoly":
        """Reinterpret over a different variable tuple (embedding or projection);
        dropped variables must not occur."""
        new_vars = tuple(new_vars)
        pos = {v: i for i, v in enumerate(new_vars)}
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(new_vars)
            for i, v in enumerate(self.vars):
                if e[i]:
                    if v not in pos:
                        raise ValueError("variable %r still occurs" % v)
                    ne[pos[v]] = e[i]
            out[tuple(ne)] = c
        return MultiPoly(self.dom, new_vars, out)

    # -- content / normalization -------------------------------------------

    def content(self):
        """Positive content: gcd of the coefficients in the domain's sense."""
        it = iter(self.terms.values())
        try:
            g = next(it)
        except StopIteration:
            return self.dom.zero
        g = g if self.dom.canonical_sign(g) >= 0 else -g
        for c in it:
            g = self.dom.content_gcd(g, c)
        return g

    def primitive(self):
        """(content-with-sign, primitive part): primitive part has content 1 and
        canonical-positive leading coefficient."""
        if not self.terms:
            return self.dom.zero, self
        c = self.content()
        _, lead = self.leading()
        if self.dom.canonical_sign(lead) < 0:
            c = -c
        inv_terms = {e: self.dom.div(k, c) for e, k in self.terms.items()}
        return c, MultiPoly(self.dom, self.vars, inv_terms)

    def primitive_part(self):
        return self.primitive()[1]

    # -- rendering -----------------------------------------------------------

    def _render_monomial(self, e):
        parts = []
        for i, v in enumerate(self.vars):
            if e[i] == 1:
                parts.append(v)
            elif e[i] > 1:
                parts.append("%s^%d" % (v, e[i]))
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)
        chunks = []
        for e, c in items:
            mono = self._render_monomial(e)
            cs = self.dom.render(c)
            neg = cs.startswith("-")
            body = cs[1:] if neg else cs
            if mono:
                if body == "1":
                    body = mono
                else:
                    body = "%s*%s" % (body, mono)
            if not chunks:
                chunks.append("-" + body if neg else body)
            else:
                chunks.append(("-" if neg else "+") + body)
        return "".join(chunks)

    def __repr__(self):
        return "MultiPoly(%s; %s)" % (",".join(self.vars), self)


def _coerce_between(c, src_dom, dst_dom):
    if src_dom == dst_dom:
        return c
    return dst_dom.coerce(c)


# --------------------------------------------------------------------------
# exact division


def exact_divide(p: MultiPoly, q: MultiPoly):
    """Quotient p/q when q divides p exactly, else None.  q must be nonzero."""
    if not isinstance(q, MultiPoly):
        q = MultiPoly.const(p.dom, p.vars, q)
    p._check_compatible(q)
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    if not p:
        return p
    qe, qc = q.leading()
    quot_terms: dict = {}
    r = p
    while r.terms:
        re, rc = r.leading()
        diff = tuple(a - b for a, b in zip(re, qe))
        if any(d < 0 for d in diff):
            return None
        c = r.dom.div(rc, qc)
        quot_terms[diff] = c
        piece = MultiPoly(p.dom, p.vars, {diff: c})
        r = r - piece * q
        if r.terms:
            if _grlex_key(r.leading()[0]) >= _grlex_key(re):
                return None
    return MultiPoly(p.dom, p.vars, quot_terms)


def divide_out(p: MultiPoly, q: MultiPoly):
    """(k, cofactor): the largest k with q**k dividing p."""
    k = 0
    while True:
        nxt = exact_divide(p, q)
        if nxt is None:
            return k, p
        p = nxt
        k += 1


# --------------------------------------------------------------------------
# univariate views (polynomials in one main variable, MultiPoly coefficients)


def _lc_in(p: MultiPoly, name: str) -> MultiPoly:
    return p.coeff_of_power(name, p.degree_in(name))


def _pseudo_rem(a: MultiPoly, b: MultiPoly, name: str) -> MultiPoly:
    """prem(a, b) in name: lc(b)^(da-db+1) * a mod b, all exact."""
    db = b.degree_in(name)
    d = _lc_in(b, name)
    r = a
    e = a.degree_in(name) - db + 1
    xv = MultiPoly.var(a.dom, a.vars, name)
    while r and r.degree_in(name) >= db:
        lr = _lc_in(r, name)
        shift = xv ** (r.degree_in(name) - db)
        r = r * d - lr * shift * b
        e -= 1
    for _ in range(e):
        r = r * d
    return r


def _content_in(p: MultiPoly, name: str) -> MultiPoly:
    """Content of p as a univariate in name: gcd of its coefficients."""
    g = MultiPoly.zero(p.dom, p.vars)
    for k in range(p.degree_in(name) + 1):
        c = p.coeff_of_power(name, k)
        if c:
            g = poly_gcd(g, c)
            if g.is_constant():
                break
    return g


def poly_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Greatest common divisor, primitive with canonical-positive leading
    coefficient (content gcd included for rational coefficients).

    Univariate steps use the subresultant polynomial remainder sequence on
    primitive parts; multivariate inputs recurse through contents.
    """
    if not isinstance(q, MultiPoly):
        q = MultiPoly.const(p.dom, p.vars, q)
    p._check_compatible(q)
    if not p:
        return _gcd_normalize(q)
    if not q:
        return _gcd_normalize(p)
    if p.is_constant() or q.is_constant():
        if p.is_constant() and q.is_constant():
            g = p.dom.content_gcd(p.constant_value(), q.constant_value())
            return MultiPoly.const(p.dom, p.vars, g)
        const = p if p.is_constant() else q
        other = q if p.is_constant() else p
        g = const.constant_value()
        for c in other.terms.values():
            g = p.dom.content_gcd(g, c)
        return MultiPoly.const(p.dom, p.vars, g)
    name = None
    for v in p.vars:
        if p.uses(v) or q.uses(v):
            name = v
            break
    pu, qu = p.uses(name), q.uses(name)
    if not pu or not qu:
        # a divisor of the name-free input and of the other one must divide
        # the other's coefficient gcd with respect to name
        namefree = p if not pu else q
        other = q if not pu else p
        return _gcd_normalize(poly_gcd(namefree, _content_in(other, name)))
    ca, pa = _primitive_in(p, name)
    cb, pb = _primitive_in(q, name)
    cont = poly_gcd(ca, cb)
    g = _gcd_prs(pa, pb, name)
    out = cont * g
    return _gcd_normalize(out)


def _gcd_normalize(p: MultiPoly) -> MultiPoly:
    if not p:
        return p
    c, prim = p.primitive()
    # fold the numeric content's gcd-meaning back in: gcd is defined up to
    # units, so return the primitive part with canonical sign for fields
    # and keep integer content for rational coefficients
    if isinstance(p.dom, (RationalDomain, QuadDomain)):
        return prim
    _, lead = prim.leading()
    inv = p.dom.div(p.dom.one, lead)
    return prim.scale(inv)


def _primitive_in(p: MultiPoly, name: str):
    if not p.uses(name):
        return p, MultiPoly.const(p.dom, p.vars, p.dom.one)
    c = _content_in(p, name)
    if c.is_constant() and p.dom.is_zero(c.constant_value() - p.dom.one):
        return c, p
    pp = exact_divide(p, c)
    assert pp is not None
    return c, pp


def _gcd_prs(a: MultiPoly, b: MultiPoly, name: str) -> MultiPoly:
    """Subresultant PRS gcd of primitive a, b (both use name)."""
    if a.degree_in(name) < b.degree_in(name):
        a, b = b, a
    one = MultiPoly.const(a.dom, a.vars, a.dom.one)
    g, h = one, one
    while True:
        delta = a.degree_in(name) - b.degree_in(name)
        r = _pseudo_rem(a, b, name)
        if not r:
            return _primitive_in(b, name)[1]
        if not r.uses(name):
            return one
        a, b = b, _exact_quot(r, g * h**delta)
        g = _lc_in(a, name)
        if delta == 0:
            h = h
        elif delta == 1:
            h = g
        else:
            h = _exact_quot(g**delta, h ** (delta - 1))


def _exact_quot(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    out = exact_divide(p, q)
    if out is None:
        raise ArithmeticError("internal exact division failed")
    return out


# --------------------------------------------------------------------------
# resultants


def resultant(p: MultiPoly, q: MultiPoly, name: str) -> MultiPoly:
    """Resultant eliminating name, by the subresultant PRS.

    The result is a polynomial in the remaining variables (a constant when
    the inputs are univariate).  Raises ValueError when name occurs in
    neither input.
    """
    p._check_compatible(q)
    if not p.uses(name) and not q.uses(name):
        raise ValueError("resultant variable %r absent from both inputs" % name)
    if not p or not q:
        return MultiPoly.zero(p.dom, p.vars)
    dp, dq = p.degree_in(name), q.degree_in(name)
    if dp == 0:
        return p**dq
    if dq == 0:
        return q**dp
    sign_swap = 1
    if dp < dq:
        p, q, dp, dq = q, p, dq, dp
        if dp * dq % 2:
            sign_swap = -1
    ca, a = _primitive_in(p, name)
    cb, b = _primitive_in(q, name)
    scale = ca**dq * cb**dp
    s = 1
    g = MultiPoly.const(p.dom, p.vars, p.dom.one)
    h = g
    while True:
        da, db = a.degree_in(name), b.degree_in(name)
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = _pseudo_rem(a, b, name)
        if not r:
            return MultiPoly.zero(p.dom, p.vars)
        a, b = b, _exact_quot(r, g * h**delta)
        g = _lc_in(a, name)
        if delta == 1:
            h = g
        elif delta > 1:
            h = _exact_quot(g**delta, h ** (delta - 1))
        if b.degree_in(name) == 0:
            da = a.degree_in(name)
            lb = b.coeff_of_power(name, 0)
            if da == 1:
                res = lb
            else:
                res = _exact_quot(lb**da, h ** (da - 1))
            out = scale * res
            if s * sign_swap < 0:
                out = -out
            return out


def discriminant(p: MultiPoly, name: str) -> MultiPoly:
    """res(p, dp/dname) / lc, with the classical sign."""
    d = p.degree_in(name)
    res = resultant(p, p.derivative(name), name)
    lc = _lc_in(p, name)
    quot = exact_divide(res, lc)
    if quot is None:
        raise ArithmeticError("leading coefficient does not divide res(p, p')")
    if (d * (d - 1) // 2) % 2:
        quot = -quot
    return quot


# --------------------------------------------------------------------------
# fraction-free determinants and nullspaces


def det_fraction_free(rows) -> MultiPoly:
    """Bareiss determinant of a square matrix of MultiPoly entries.
    Intermediate divisions are exact; no fractions appear."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    if n == 0:
        raise ValueError("empty matrix")
    m = [list(r) for r in rows]
    dom, variables = m[0][0].dom, m[0][0].vars
    one = MultiPoly.const(dom, variables, dom.one)
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero(dom, variables)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = _exact_quot(num, prev)
            m[i][k] = MultiPoly.zero(dom, variables)
        prev = m[k][k]
    out = m[n - 1][n - 1]
    return -out if sign < 0 else out


def solve_nullspace(rows):
    """Kernel basis of a matrix whose entries lie in a field (anything with
    +,-,*,/ and truthiness: Fraction, QuadExt, RationalFunction).

    Returns (pivot_columns, basis) where basis vectors are lists in the
    entry field.
    """
    if not rows:
        raise ValueError("empty matrix")
    m = [list(r) for r in rows]
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    zero = m[0][0] - m[0][0]
    one = None
    for row in m:
        for x in row:
            if x:
                one = x / x
                break
        if one is not None:
            break
    if one is None:
        one = zero + 1
    basis = []
    for fc in free:
        vec = [zero] * ncols
        vec[fc] = one
        for ri, pc in enumerate(pivots):
            vec[pc] = -m[ri][fc]
        basis.append(vec)
    return pivots, basis


class LinearSystem:
    """Rows of linear forms sum(coeff*unknown) = rhs over a fraction field."""

    def __init__(self, unknowns, rows, rhs=None):
        self.unknowns = tuple(unknowns)
        self.rows = [list(r) for r in rows]
        if any(len(r) != len(self.unknowns) for r in self.rows):
            raise ValueError("row width does not match unknowns")
        self.rhs = list(rhs) if rhs is not None else None

    @classmethod
    def from_linear_polys(cls, polys, unknowns):
        """Extract the coefficient matrix of polynomials that are linear and
        homogeneous in the given unknown variables."""
        rows = []
        for p in polys:
            row = []
            for u in unknowns:
                if p.degree_in(u) > 1:
                    raise ValueError("system is not linear in the unknowns")
                cu = p.coeff_of_power(u, 1)
                if any(cu.uses(v) for v in unknowns):
                    raise ValueError("system is not linear in the unknowns")
                row.append(cu)
            zero_part = p
            for u in unknowns:
                zero_part = zero_part.coeff_of_power(u, 0)
            if zero_part:
                raise ValueError("system is not homogeneous in the unknowns")
            rows.append(row)
        return cls(unknowns, rows)


# --------------------------------------------------------------------------
# rational functions


def _rf_normalize(num: MultiPoly, den: MultiPoly):
    if not den:
        raise ZeroDivisionError("rational function with zero denominator")
    if not num:
        one = MultiPoly.const(num.dom, num.vars, num.dom.one)
        return num, one
    g = poly_gcd(num, den)
    if not g.is_constant() or g.constant_value() != num.dom.one:
        num = _exact_quot(num, g)
        den = _exact_quot(den, g)
    cd, dprim = den.primitive()
    cn, nprim = num.primitive()
    ratio = num.dom.div(cn, cd)
    return nprim.scale(ratio), dprim


class RationalFunction:
    """Quotient of MultiPolys over the same ring, reduced on construction:
    gcd cancelled, denominator primitive with canonical-positive leading
    coefficient."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        if den is None:
            den = MultiPoly.const(num.dom, num.vars, num.dom.one)
        num._check_compatible(den)
        n, d = _rf_normalize(num, den)
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def const(cls, dom, variables, c):
        return cls(MultiPoly.const(dom, variables, c))

    def _wrap(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, MultiPoly):
            return RationalFunction(other)
        try:
            return RationalFunction(MultiPoly.const(self.num.dom, self.num.vars, other))
        except TypeError:
            return None

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

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
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return (1 / self) ** (-n)
        return RationalFunction(self.num**n, self.den**n)

    def __eq__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_poly(self) -> MultiPoly:
        if not self.is_polynomial():
            raise ValueError("%s has a nontrivial denominator" % self)
        c = self.den.constant_value()
        return self.num.scale(self.num.dom.div(self.num.dom.one, c))

    def subs(self, mapping: dict) -> "RationalFunction":
        return RationalFunction(self.num.subs(mapping), self.den.subs(mapping))

    def derivative(self, name: str) -> "RationalFunction":
        n, d = self.num, self.den
        return RationalFunction(
            n.derivative(name) * d - n * d.derivative(name), d * d
        )

    def eval_scalars(self, values: dict):
        dv = self.den.eval_scalars(values)
        if self.den.dom.is_zero(dv):
            raise ZeroDivisionError("denominator vanishes at the given point")
        return self.num.dom.div(self.num.eval_scalars(values), dv)

    def __str__(self):
        if self.den.is_constant() and self.den.constant_value() == self.num.dom.one:
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    def __repr__(self):
        return "RationalFunction(%s)" % self


# --------------------------------------------------------------------------
# square-free machinery and polynomial square roots


def squarefree_decomposition(p: MultiPoly, name: str):
    """Yun decomposition of a univariate-in-name polynomial over a field:
    returns (unit, [(g1, 1), (g2, 2), ...]) with the gi primitive, pairwise
    coprime, square-free, and p = unit * prod(gi**i) (unit a domain element
    when the gi are normalized)."""
    if not p:
        raise ValueError("square-free decomposition of zero")
    parts = []
    c, prim = p.primitive()
    f = prim
    df = f.derivative(name)
    a = poly_gcd(f, df)
    if a.is_constant():
        return c, [(prim, 1)] if prim.uses(name) else []
    b = _exact_quot(f, a)
    d = _exact_quot(df, a) - b.derivative(name)
    i = 1
    while True:
        if not b.uses(name):
            break
        g = poly_gcd(b, d)
        if g.uses(name):
            parts.append((g, i))
        b2 = _exact_quot(b, g)
        d = _exact_quot(d, g) - b2.derivative(name)
        b = b2
        i += 1
    check = MultiPoly.const(p.dom, p.vars, p.dom.one)
    for g, k in parts:
        check = check * g**k
    q = exact_divide(prim, check)
    if q is None or not q.is_constant():
        raise ArithmeticError("square-free decomposition went inconsistent")
    return q.constant_value() * c, parts


def poly_sqrt(p: MultiPoly, name: str):
    """Exact square root of a univariate-in-name polynomial, or None."""
    if not p:
        return p
    unit, parts = squarefree_decomposition(p, name)
    root_unit = p.dom.sqrt(unit)
    if root_unit is None:
        return None
    out = MultiPoly.const(p.dom, p.vars, root_unit)
    for g, k in parts:
        if k % 2:
            return None
        out = out * g ** (k // 2)
    return out


def ratfunc_sqrt(rf: RationalFunction):
    """Exact square root of a rational function in one variable, or None."""
    if not rf:
        return rf
    name = None
    for v in rf.num.vars:
        if rf.num.uses(v) or rf.den.uses(v):
            name = v
            break
    if name is None:
        r = rf.num.dom.sqrt(rf.num.dom.div(rf.num.constant_value(), rf.den.constant_value()))
        if r is None:
            return None
        return RationalFunction(MultiPoly.const(rf.num.dom, rf.num.vars, r))
    n = poly_sqrt(rf.num, name) if rf.num.uses(name) else None
    if n is None and not rf.num.uses(name):
        c = rf.num.dom.sqrt(rf.num.constant_value())
        n = MultiPoly.const(rf.num.dom, rf.num.vars, c) if c is not None else None
    d = poly_sqrt(rf.den, name) if rf.den.uses(name) else None
    if d is None and not rf.den.uses(name):
        c = rf.num.dom.sqrt(rf.den.constant_value())
        d = MultiPoly.const(rf.num.dom, rf.num.vars, c) if c is not None else None
    if n is None or d is None:
        return None
    return RationalFunction(n, d)
