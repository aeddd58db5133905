"""Sparse exact polynomials in one and two variables over a field object.

``Poly1`` maps exponents to nonzero coefficients, ``Poly2`` maps exponent
pairs (i, j) to nonzero coefficients (i for the first variable, j for the
second).  Coefficients are whatever scalars the field backend produces and
are never stored when zero.  The degree of the zero polynomial is ``NEG_INF``
so that degree comparisons and products behave uniformly.

>>> from tameplane.scalars import QQ
>>> t = Poly1.gen(QQ)
>>> ((t + 1) ** 2).items()
[(0, Fraction(1, 1)), (1, Fraction(2, 1)), (2, Fraction(1, 1))]
"""

from __future__ import annotations

NEG_INF = float("-inf")


class Poly1:
    """A univariate polynomial with exact coefficients."""

    __slots__ = ("field", "terms", "_hash")

    def __init__(self, field, terms: dict | None = None):
        self.field = field
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[e] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _make(cls, field, clean_terms: dict) -> Poly1:
        # internal fast path: caller guarantees no zero coefficients
        p = object.__new__(cls)
        p.field = field
        p.terms = clean_terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, field) -> Poly1:
        return cls._make(field, {})

    @classmethod
    def one(cls, field) -> Poly1:
        return cls._make(field, {0: field.one})

    @classmethod
    def gen(cls, field) -> Poly1:
        return cls._make(field, {1: field.one})

    @classmethod
    def constant(cls, field, c) -> Poly1:
        c = field.of(c)
        return cls._make(field, {0: c} if c else {})

    @classmethod
    def monomial(cls, field, e: int, c) -> Poly1:
        c = field.of(c)
        return cls._make(field, {e: c} if c else {})

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        return max(self.terms) if self.terms else NEG_INF

    def valuation(self):
        """Smallest exponent with a nonzero coefficient (NEG_INF if zero...

        actually +inf would be the lattice-correct value for zero, but no
        caller ever takes the valuation of zero; raise instead."""
        if not self.terms:
            raise ValueError("valuation of the zero polynomial")
        return min(self.terms)

    def coeff(self, e: int):
        return self.terms.get(e, self.field.zero)

    def leading_coeff(self):
        if not self.terms:
            return self.field.zero
        return self.terms[max(self.terms)]

    def is_constant(self) -> bool:
        return self.degree() <= 0

    def constant_value(self):
        return self.terms.get(0, self.field.zero)

    def items(self) -> list:
        return sorted(self.terms.items())

    # -- ring operations -----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly1):
            return other
        try:
            return Poly1.constant(self.field, other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly1._make(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly1._make(self.field, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, Poly1):
            out: dict = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = e1 + e2
                    s = out.get(e)
                    s = c1 * c2 if s is None else s + c1 * c2
                    if s:
                        out[e] = s
                    else:
                        out.pop(e, None)
            return Poly1._make(self.field, out)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o

    __rmul__ = __mul__

    def scale(self, c) -> Poly1:
        c = self.field.of(c)
        if not c:
            return Poly1.zero(self.field)
        return Poly1._make(self.field, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, n: int) -> Poly1:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly1.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __divmod__(self, other: Poly1):
        if not isinstance(other, Poly1):
            other = Poly1.constant(self.field, other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = Poly1.zero(self.field)
        r = self
        d = other.degree()
        lc = other.leading_coeff()
        while r.terms and r.degree() >= d:
            shift = r.degree() - d
            c = r.leading_coeff() / lc
            m = Poly1._make(self.field, {shift: c})
            q = q + m
            r = r - m * other
        return q, r

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: Poly1) -> Poly1:
        q, r = divmod(self, other)
        if r.terms:
            raise ValueError("inexact polynomial division")
        return q

    def monic(self) -> Poly1:
        if not self.terms:
            return self
        return self.scale(self.field.one / self.leading_coeff())

    def gcd(self, other: Poly1) -> Poly1:
        a, b = self, other
        while b.terms:
            a, b = b, a % b
        return a.monic()

    # -- substitution and calculus ---------------------------------------

    def evaluate(self, point):
        """Horner evaluation at a scalar of the coefficient field."""
        acc = self.field.zero
        prev = None
        for e in sorted(self.terms, reverse=True):
            if prev is not None:
                for _ in range(prev - e):
                    acc = acc * point
            acc = acc + self.terms[e]
            prev = e
        if prev is not None:
            for _ in range(prev):
                acc = acc * point
        return acc

    def substitute(self, value):
        """Plug any ring element (scalar, Poly1, Poly2) in for the variable.

        The element only needs + and * with itself and with coefficients.
        """
        if isinstance(value, (Poly1, Poly2)):
            acc = type(value).zero(self.field)
            pw = type(value).one(self.field)
        else:
            acc = self.field.zero
            pw = self.field.one
        last_e = 0
        for e, c in self.items():
            for _ in range(e - last_e):
                pw = pw * value
            last_e = e
            acc = acc + pw * c
        return acc

    def compose(self, other: Poly1) -> Poly1:
        """self(other(t)) as a Poly1."""
        out = self.substitute(other)
        if not isinstance(out, Poly1):
            out = Poly1.constant(self.field, out)
        return out

    def scale_argument(self, c) -> Poly1:
        """The polynomial t -> self(c*t)."""
        c = self.field.of(c)
        out = {}
        cp = self.field.one
        for e in range(0, (self.degree() + 1) if self.terms else 0):
            if e:
                cp = cp * c
            v = self.terms.get(e)
            if v:
                w = v * cp
                if w:
                    out[e] = w
        return Poly1._make(self.field, out)

    def shift_down(self, k: int = 1) -> Poly1:
        """Exact division by t**k (raises if any low coefficient survives)."""
        out = {}
        for e, c in self.terms.items():
            if e < k:
                raise ValueError("polynomial not divisible by t^%d" % k)
            out[e - k] = c
        return Poly1._make(self.field, out)

    def shift_up(self, k: int = 1) -> Poly1:
        return Poly1._make(self.field, {e + k: c for e, c in self.terms.items()})

    def drop_below(self, k: int) -> Poly1:
        """Zero out all coefficients of exponent < k."""
        return Poly1._make(self.field, {e: c for e, c in self.terms.items() if e >= k})

    def truncate_from(self, k: int) -> Poly1:
        """Keep only coefficients of exponent < k."""
        return Poly1._make(self.field, {e: c for e, c in self.terms.items() if e < k})

    def derivative(self) -> Poly1:
        out = {}
        for e, c in self.terms.items():
            if e:
                v = c * e
                if v:
                    out[e - 1] = v
        return Poly1._make(self.field, out)

    # -- comparisons ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly1):
            return self.field == other.field and self.terms == other.terms
        try:
            o = Poly1.constant(self.field, other)
        except TypeError:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, tuple(sorted(self.terms.items()))))
        return self._hash

    def __repr__(self):
        if not self.terms:
            return "Poly1(0)"
        bits = ["%r*t^%d" % (c, e) for e, c in self.items()]
        return "Poly1(%s)" % " + ".join(bits)


class Poly2:
    """A polynomial in two variables, exponent pairs (i, j) -> coefficient."""

    __slots__ = ("field", "terms", "_hash")

    def __init__(self, field, terms: dict | None = None):
        self.field = field
        clean = {}
        if terms:
            for ij, c in terms.items():
                if c:
                    clean[ij] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _make(cls, field, clean_terms: dict) -> Poly2:
        p = object.__new__(cls)
        p.field = field
        p.terms = clean_terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, field) -> Poly2:
        return cls._make(field, {})

    @classmethod
    def one(cls, field) -> Poly2:
        return cls._make(field, {(0, 0): field.one})

    @classmethod
    def constant(cls, field, c) -> Poly2:
        c = field.of(c)
        return cls._make(field, {(0, 0): c} if c else {})

    @classmethod
    def x(cls, field) -> Poly2:
        return cls._make(field, {(1, 0): field.one})

    @classmethod
    def y(cls, field) -> Poly2:
        return cls._make(field, {(0, 1): field.one})

    @classmethod
    def monomial(cls, field, i: int, j: int, c) -> Poly2:
        c = field.of(c)
        return cls._make(field, {(i, j): c} if c else {})

    @classmethod
    def from_poly1_in_x(cls, p: Poly1) -> Poly2:
        return cls._make(p.field, {(e, 0): c for e, c in p.terms.items()})

    @classmethod
    def from_poly1_in_y(cls, p: Poly1) -> Poly2:
        return cls._make(p.field, {(0, e): c for e, c in p.terms.items()})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self):
        return max(i + j for i, j in self.terms) if self.terms else NEG_INF

    def coeff(self, i: int, j: int):
        return self.terms.get((i, j), self.field.zero)

    def constant_term(self):
        return self.terms.get((0, 0), self.field.zero)

    def is_constant(self) -> bool:
        return self.total_degree() <= 0

    def leading_form(self) -> Poly2:
        """The top homogeneous component."""
        d = self.total_degree()
        if d is NEG_INF:
            return self
        return Poly2._make(self.field, {ij: c for ij, c in self.terms.items() if ij[0] + ij[1] == d})

    def items(self) -> list:
        return sorted(self.terms.items())

    def depends_on_y(self) -> bool:
        return any(j for _, j in self.terms)

    def depends_on_x(self) -> bool:
        return any(i for i, _ in self.terms)

    def poly1_in_x(self) -> Poly1:
        """View as a Poly1 when no second-variable dependence exists."""
        if self.depends_on_y():
            raise ValueError("polynomial depends on the second variable")
        return Poly1._make(self.field, {i: c for (i, _), c in self.terms.items()})

    def poly1_in_y(self) -> Poly1:
        if self.depends_on_x():
            raise ValueError("polynomial depends on the first variable")
        return Poly1._make(self.field, {j: c for (_, j), c in self.terms.items()})

    # -- ring operations -----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly2):
            return other
        if isinstance(other, Poly1):
            return None
        try:
            return Poly2.constant(self.field, other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for ij, c in o.terms.items():
            s = out.get(ij)
            s = c if s is None else s + c
            if s:
                out[ij] = s
            else:
                out.pop(ij, None)
        return Poly2._make(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly2._make(self.field, {ij: -c for ij, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, Poly2):
            out: dict = {}
            for (i1, j1), c1 in self.terms.items():
                for (i2, j2), c2 in other.terms.items():
                    ij = (i1 + i2, j1 + j2)
                    s = out.get(ij)
                    s = c1 * c2 if s is None else s + c1 * c2
                    if s:
                        out[ij] = s
                    else:
                        out.pop(ij, None)
            return Poly2._make(self.field, out)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o

    __rmul__ = __mul__

    def scale(self, c) -> Poly2:
        c = self.field.of(c)
        if not c:
            return Poly2.zero(self.field)
        return Poly2._make(self.field, {ij: c * v for ij, v in self.terms.items()})

    def __pow__(self, n: int) -> Poly2:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly2.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- substitution and calculus ---------------------------------------

    def substitute(self, u: Poly2, v: Poly2) -> Poly2:
        """self with u plugged in for the first variable and v for the second.

        Powers of u and v are cached because compositions reuse them heavily.
        """
        if not self.terms:
            return Poly2.zero(self.field)
        pu: list[Poly2] = [Poly2.one(self.field)]
        pv: list[Poly2] = [Poly2.one(self.field)]
        for _ in range(max(i for i, _ in self.terms)):
            pu.append(pu[-1] * u)
        for _ in range(max(j for _, j in self.terms)):
            pv.append(pv[-1] * v)
        out = Poly2.zero(self.field)
        for (i, j), c in self.items():
            out = out + (pu[i] * pv[j]).scale(c)
        return out

    def evaluate(self, a, b):
        a = self.field.of(a)
        b = self.field.of(b)
        acc = self.field.zero
        pa: dict[int, object] = {0: self.field.one}
        pb: dict[int, object] = {0: self.field.one}

        def power(table, base, n):
            if n not in table:
                table[n] = power(table, base, n - 1) * base
            return table[n]

        for (i, j), c in self.terms.items():
            acc = acc + c * power(pa, a, i) * power(pb, b, j)
        return acc

    def partial_x(self) -> Poly2:
        out = {}
        for (i, j), c in self.terms.items():
            if i:
                v = c * i
                if v:
                    out[(i - 1, j)] = v
        return Poly2._make(self.field, out)

    def partial_y(self) -> Poly2:
        out = {}
        for (i, j), c in self.terms.items():
            if j:
                v = c * j
                if v:
                    out[(i, j - 1)] = v
        return Poly2._make(self.field, out)

    # -- comparisons ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly2):
            return self.field == other.field and self.terms == other.terms
        try:
            o = Poly2.constant(self.field, other)
        except TypeError:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, tuple(sorted(self.terms.items()))))
        return self._hash

    def __repr__(self):
        if not self.terms:
            return "Poly2(0)"
        bits = ["%r*x^%d*y^%d" % (c, i, j) for (i, j), c in self.items()]
        return "Poly2(%s)" % " + ".join(bits)
