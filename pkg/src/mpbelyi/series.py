"""Truncated Laurent series over an exact coefficient field.

A series stores finitely many coefficients plus a truncation exponent
``prec``: coefficients are known exactly for every exponent below prec and
unknown from prec on.  All operations propagate prec honestly, so asking
for a coefficient the truncation cannot see raises instead of silently
returning zero.  Division and square roots are exact in the coefficient
field; nothing is ever rounded.

Coefficient fields are the domain tags from the polynomial layer (or any
object with the same small protocol), which lets one series type serve
rational, quadratic-field, rational-function, and extension coefficients.
"""

from __future__ import annotations

MAX_TRUNCATION = 64


class SeriesPrecisionError(ArithmeticError):
    """A computation needed coefficients beyond the stored truncation."""

    def __init__(self, message: str, needed: int | None = None):
        super().__init__(message)
        self.needed = needed


class LaurentSeries:
    """Finite window of exponents with an O(t^prec) tail marker."""

    __slots__ = ("dom", "var", "coeffs", "prec")

    def __init__(self, dom, coeffs: dict, prec: int, var: str = "t"):
        # precision beyond the cap is clamped, never manufactured; adaptive
        # refinement loops treat a demand past the cap as a hard failure
        prec = min(prec, MAX_TRUNCATION)
        self.dom = dom
        self.var = var
        self.prec = prec
        self.coeffs = {
            k: c for k, c in coeffs.items() if k < prec and not dom.is_zero(c)
        }

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, dom, prec: int, var: str = "t"):
        return cls(dom, {}, prec, var)

    @classmethod
    def const(cls, dom, value, prec: int, var: str = "t"):
        return cls(dom, {0: dom.coerce(value)}, prec, var)

    @classmethod
    def uniformizer(cls, dom, prec: int, var: str = "t"):
        return cls(dom, {1: dom.one}, prec, var)

    @classmethod
    def from_coeff_list(cls, dom, start: int, values, prec: int, var: str = "t"):
        """values[i] is the coefficient of var**(start+i)."""
        return cls(
            dom,
            {start + i: dom.coerce(v) for i, v in enumerate(values)},
            prec,
            var,
        )

    # -- inspection -----------------------------------------------------------

    def valuation(self):
        """Order of the lowest known nonzero term; None when indistinguishable
        from zero at this truncation."""
        if not self.coeffs:
            return None
        return min(self.coeffs)

    def coefficient_of(self, k: int):
        if k >= self.prec:
            raise SeriesPrecisionError(
                "coefficient of %s^%d requested but series is only known "
                "below order %d" % (self.var, k, self.prec),
                needed=k + 1,
            )
        return self.coeffs.get(k, self.dom.zero)

    def is_zero_to_prec(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other: "LaurentSeries"):
        if self.dom != other.dom or self.var != other.var:
            raise ValueError("series live over different coefficient fields")

    def _wrap(self, x):
        if isinstance(x, LaurentSeries):
            self._check(x)
            return x
        try:
            return LaurentSeries.const(self.dom, x, self.prec, self.var)
        except TypeError:
            return None

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        prec = min(self.prec, o.prec)
        out = dict(self.coeffs)
        for k, c in o.coeffs.items():
            cur = out.get(k)
            out[k] = c if cur is None else cur + c
        return LaurentSeries(self.dom, out, prec, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(
            self.dom, {k: -c for k, c in self.coeffs.items()}, self.prec, self.var
        )

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

    def _effective_valuation(self) -> int:
        v = self.valuation()
        return self.prec if v is None else v

    def __mul__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        va, vb = self._effective_valuation(), o._effective_valuation()
        prec = min(va + o.prec, vb + self.prec)
        out: dict = {}
        for i, ci in self.coeffs.items():
            for j, cj in o.coeffs.items():
                k = i + j
                if k >= prec:
                    continue
                prod = ci * cj
                cur = out.get(k)
                out[k] = prod if cur is None else cur + prod
        return LaurentSeries(self.dom, out, prec, self.var)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by var**k."""
        return LaurentSeries(
            self.dom,
            {e + k: c for e, c in self.coeffs.items()},
            self.prec + k,
            self.var,
        )

    def truncate(self, prec: int) -> "LaurentSeries":
        if prec > self.prec:
            raise SeriesPrecisionError(
                "cannot extend truncation from %d to %d" % (self.prec, prec),
                needed=prec,
            )
        return LaurentSeries(self.dom, self.coeffs, prec, self.var)

    def inverse(self) -> "LaurentSeries":
        v = self.valuation()
        if v is None:
            raise ZeroDivisionError("inverting a series that vanishes to its truncation")
        lead = self.coeffs[v]
        rel = self.prec - v
        inv_lead = self.dom.div(self.dom.one, lead)
        # u = self / (lead * t^v) - 1 has valuation >= 1, known below order rel
        u = {k - v: c * inv_lead for k, c in self.coeffs.items() if k != v}
        g = {0: self.dom.one}
        for n in range(1, rel):
            s = self.dom.zero
            for k, uk in u.items():
                if 0 < k <= n:
                    gk = g.get(n - k)
                    if gk is not None:
                        s = s + uk * gk
            if not self.dom.is_zero(s):
                g[n] = -s
        out = {e - v: c * inv_lead for e, c in g.items()}
        return LaurentSeries(self.dom, out, rel - v, self.var)

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
        if not isinstance(n, int):
            raise TypeError("series powers must be integers")
        if n < 0:
            return self.inverse() ** (-n)
        out = None
        base = self
        while n:
            if n & 1:
                out = base if out is None else out * base
            n >>= 1
            if n:
                base = base * base
        if out is None:
            return LaurentSeries.const(self.dom, self.dom.one, self.prec, self.var)
        return out

    def sqrt(self) -> "LaurentSeries":
        """Exact square root: valuation must be even and the leading
        coefficient a square in the coefficient field."""
        v = self.valuation()
        if v is None:
            raise ZeroDivisionError("square root of a series that vanishes to its truncation")
        if v % 2:
            raise ArithmeticError("series has odd valuation %d, no square root" % v)
        lead = self.coeffs[v]
        root = self.dom.sqrt(lead)
        if root is None:
            raise ArithmeticError("leading coefficient is not a square in the coefficient field")
        rel = self.prec - v
        inv_lead = self.dom.div(self.dom.one, lead)
        u = {k - v: c * inv_lead for k, c in self.coeffs.items() if k != v}
        s = {0: self.dom.one}
        half = self.dom.div(self.dom.one, self.dom.coerce(2))
        for n in range(1, rel):
            acc = u.get(n, self.dom.zero)
            for i in range(1, n):
                si, sj = s.get(i), s.get(n - i)
                if si is not None and sj is not None:
                    acc = acc - si * sj
            cn = acc * half
            if not self.dom.is_zero(cn):
                s[n] = cn
        out = {e + v // 2: c * root for e, c in s.items()}
        return LaurentSeries(self.dom, out, rel + v // 2, self.var)

    def derivative(self) -> "LaurentSeries":
        out = {}
        for k, c in self.coeffs.items():
            if k != 0:
                out[k - 1] = c * k
        return LaurentSeries(self.dom, out, self.prec - 1, self.var)

    def compose(self, inner: "LaurentSeries") -> "LaurentSeries":
        """Substitute the series variable by ``inner`` (valuation >= 1).

        The tail of the outer series contributes O(inner^prec) and the tail
        of the inner one is amplified worst by the lowest outer exponent;
        the result's truncation honours both.
        """
        self._check(inner)
        vi = inner.valuation()
        if vi is None or vi < 1:
            raise ValueError("composition needs an inner series of valuation >= 1")
        if not self.coeffs:
            return LaurentSeries.zero(self.dom, vi * self.prec, self.var)
        lo = min(self.coeffs)
        hi = max(self.coeffs)
        prec = min(vi * self.prec, (lo - 1) * vi + inner.prec)
        out = LaurentSeries.zero(self.dom, prec, self.var)
        power = inner**lo
        for k in range(lo, hi + 1):
            c = self.coeffs.get(k)
            if c is not None:
                out = out + power * c
            if k < hi:
                power = power * inner
        return out

    def map_coefficients(self, fn, dom=None) -> "LaurentSeries":
        dom = dom or self.dom
        return LaurentSeries(
            dom, {k: fn(c) for k, c in self.coeffs.items()}, self.prec, self.var
        )

    # -- comparison and rendering --------------------------------------------------

    def __eq__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        prec = min(self.prec, o.prec)
        for k in set(self.coeffs) | set(o.coeffs):
            if k < prec:
                a = self.coeffs.get(k, self.dom.zero)
                b = o.coeffs.get(k, self.dom.zero)
                if not self.dom.is_zero(a - b):
                    return False
        return True

    def __str__(self):
        if not self.coeffs:
            return "O(%s^%d)" % (self.var, self.prec)
        bits = []
        for k in sorted(self.coeffs):
            c = self.dom.render(self.coeffs[k])
            if k == 0:
                mono = ""
            elif k == 1:
                mono = self.var
            else:
                mono = "%s^%d" % (self.var, k)
            body = c if not mono else ("%s*%s" % (c, mono) if c not in ("1", "-1") else ("-" + mono if c == "-1" else mono))
            if bits and not body.startswith("-"):
                bits.append("+" + body)
            else:
                bits.append(body)
        return "%s+O(%s^%d)" % ("".join(bits), self.var, self.prec)

    def __repr__(self):
        return "LaurentSeries(%s)" % self
