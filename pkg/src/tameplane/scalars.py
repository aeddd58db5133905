"""Exact scalar backends.

Two field objects live here: the rationals (a singleton wrapping gmpy2's
mpq when available, fractions.Fraction otherwise) and prime fields F_p.
Rational function fields K(z) are built on top of these in
:mod:`tameplane.ratfunc`.

Every field object exposes the same small protocol used throughout the
package: ``zero``, ``one``, ``of``, ``characteristic``, ``random_element``.
Scalars themselves are immutable, hashable, support ``+ - * / **`` and are
falsy exactly when zero.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _ratio
except ImportError:  # pragma: no cover - gmpy2 is a speedup, not a requirement
    _ratio = Fraction

_RATIO_TYPES = (int, Fraction) if _ratio is Fraction else (int, Fraction, type(_ratio(1)))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeFieldElement:
    """A residue in F_p.  Arithmetic coerces plain ints.

    Instances are interned per field; ops hand back table entries instead of
    allocating, which matters in polynomial inner loops.
    """

    __slots__ = ("field", "value")

    def __new__(cls, field: PrimeField, value: int):
        table = field._elems
        if table is not None:
            return table[value % field.p]
        self = object.__new__(cls)
        self.field = field
        self.value = value % field.p
        return self

    def __add__(self, other):
        f = self.field
        if type(other) is PrimeFieldElement:
            if other.field is not f:
                raise ValueError("mixed prime fields")
            return f._elems[(self.value + other.value) % f.p]
        if isinstance(other, int):
            return f._elems[(self.value + other) % f.p]
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        f = self.field
        if type(other) is PrimeFieldElement:
            if other.field is not f:
                raise ValueError("mixed prime fields")
            return f._elems[(self.value - other.value) % f.p]
        if isinstance(other, int):
            return f._elems[(self.value - other) % f.p]
        return NotImplemented

    def __rsub__(self, other):
        f = self.field
        if isinstance(other, int):
            return f._elems[(other - self.value) % f.p]
        return NotImplemented

    def __mul__(self, other):
        f = self.field
        if type(other) is PrimeFieldElement:
            if other.field is not f:
                raise ValueError("mixed prime fields")
            return f._elems[(self.value * other.value) % f.p]
        if isinstance(other, int):
            return f._elems[(self.value * other) % f.p]
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        f = self.field
        if type(other) is PrimeFieldElement:
            if other.field is not f:
                raise ValueError("mixed prime fields")
            return f._elems[(self.value * f._inv(other.value)) % f.p]
        if isinstance(other, int):
            return f._elems[(self.value * f._inv(other % f.p)) % f.p]
        return NotImplemented

    def __rtruediv__(self, other):
        f = self.field
        if isinstance(other, int):
            return f._elems[(other * f._inv(self.value)) % f.p]
        return NotImplemented

    def __pow__(self, n: int):
        f = self.field
        v = self.value
        if n < 0:
            v = f._inv(v)
            n = -n
        return f._elems[pow(v, n, f.p)]

    def __neg__(self):
        return self.field._elems[-self.value % self.field.p]

    def inverse(self) -> PrimeFieldElement:
        f = self.field
        return f._elems[f._inv(self.value)]

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if self is other:
            return True
        if isinstance(other, int):
            return self.value == other % self.field.p
        return (
            type(other) is PrimeFieldElement
            and other.field is self.field
            and other.value == self.value
        )

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __repr__(self):
        return "%d" % self.value


class PrimeField:
    """The field with p elements.  Instances are interned per prime."""

    _cache: dict[int, PrimeField] = {}

    def __new__(cls, p: int):
        inst = cls._cache.get(p)
        if inst is None:
            if not _is_prime(p):
                raise ValueError("not a prime: %d" % p)
            inst = super().__new__(cls)
            inst.p = p
            inst._elems = None
            table = []
            for v in range(p):
                e = PrimeFieldElement(inst, v)
                table.append(e)
            inst._elems = table
            inst._inverses = [0] + [pow(v, p - 2, p) for v in range(1, p)]
            inst.zero = table[0]
            inst.one = table[1 % p]
            cls._cache[p] = inst
        return inst

    def _inv(self, v: int) -> int:
        if v == 0:
            raise ZeroDivisionError("division by zero in %r" % self)
        return self._inverses[v]

    @property
    def characteristic(self) -> int:
        return self.p

    def of(self, v) -> PrimeFieldElement:
        """Coerce an int, rational, or element of this field."""
        if type(v) is PrimeFieldElement:
            if v.field is not self:
                raise ValueError("element of %r, not %r" % (v.field, self))
            return v
        if isinstance(v, int):
            return self._elems[v % self.p]
        if isinstance(v, _RATIO_TYPES):
            num, den = v.numerator, v.denominator
            return self._elems[(num % self.p) * self._inv(den % self.p) % self.p]
        raise TypeError("cannot coerce %r into %r" % (v, self))

    def elements(self):
        return iter(self._elems)

    def random_element(self, rng, height: int = 0) -> PrimeFieldElement:
        # height is ignored; every residue is equally small
        return self._elems[rng.randrange(self.p)]

    def random_nonzero(self, rng, height: int = 4) -> PrimeFieldElement:
        return self._elems[rng.randrange(1, self.p)]

    def __eq__(self, other):
        return self is other or (isinstance(other, PrimeField) and other.p == self.p)

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return "F_%d" % self.p


class RationalField:
    """The rationals; elements are gmpy2.mpq (or Fraction without gmpy2)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    zero = _ratio(0)
    one = _ratio(1)
    characteristic = 0

    def of(self, v):
        if isinstance(v, _RATIO_TYPES):
            return _ratio(v)
        raise TypeError("cannot coerce %r into Q" % (v,))

    def ratio(self, num: int, den: int):
        return _ratio(num, den)

    def random_element(self, rng, height: int = 4):
        return _ratio(rng.randint(-height, height), rng.randint(1, height))

    def random_nonzero(self, rng, height: int = 4):
        num = rng.choice([n for n in range(-height, height + 1) if n != 0])
        return _ratio(num, rng.randint(1, height))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")

    def __repr__(self):
        return "Q"


QQ = RationalField()
