"""Quasi-unipotent matrices over the rationals: orders, logs, and the
conjugation-scaling identity.

All arithmetic is exact.  Matrices here are square of any small size,
independent of the 2x2 types used by the plane-map machinery, because the
log/exp identities are worth checking on 3x3 and 4x4 witnesses too.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..poly import Poly1
from ..scalars import QQ, _ratio


class RationalMatrix:
    """An immutable n x n matrix of exact rationals."""

    __slots__ = ("n", "entries")

    def __init__(self, rows):
        rows = tuple(tuple(_ratio(v) for v in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise ValueError("square matrix required")
        self.n = n
        self.entries = rows

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> RationalMatrix:
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def diagonal(cls, values) -> RationalMatrix:
        values = list(values)
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def __mul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.n != other.n:
            raise ValueError("size mismatch")
        cols = tuple(zip(*other.entries))
        return RationalMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols]
             for row in self.entries])

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        return RationalMatrix(
            [[a + b for a, b in zip(r1, r2)]
             for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        return RationalMatrix(
            [[a - b for a, b in zip(r1, r2)]
             for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self) -> RationalMatrix:
        return RationalMatrix([[-a for a in row] for row in self.entries])

    def scale(self, c) -> RationalMatrix:
        c = _ratio(c)
        return RationalMatrix([[c * a for a in row] for row in self.entries])

    def trace(self):
        return sum(self.entries[i][i] for i in range(self.n))

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(list(zip(*self.entries)))

    def __pow__(self, k: int) -> RationalMatrix:
        if k < 0:
            return self.inverse() ** (-k)
        out = RationalMatrix.identity(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> RationalMatrix:
        """Gauss-Jordan; raises ValueError on singular input."""
        n = self.n
        work = [list(row) + [1 if i == j else 0 for j in range(n)]
                for i, row in enumerate(self.entries)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col]), None)
            if pivot is None:
                raise ValueError("singular matrix")
            work[col], work[pivot] = work[pivot], work[col]
            inv = 1 / work[col][col]
            work[col] = [v * inv for v in work[col]]
            for r in range(n):
                if r != col and work[r][col]:
                    factor = work[r][col]
                    work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
        return RationalMatrix([row[n:] for row in work])

    def is_zero(self) -> bool:
        return all(not v for row in self.entries for v in row)

    def is_identity(self) -> bool:
        return self == RationalMatrix.identity(self.n)

    def charpoly(self) -> Poly1:
        """det(x*I - self) as a monic Poly1 over Q (Faddeev-LeVerrier)."""
        n = self.n
        coeffs = {n: QQ.one}
        m = RationalMatrix.identity(n)
        for k in range(1, n + 1):
            am = self * m
            ck = -am.trace() / k
            coeffs[n - k] = _ratio(ck)
            m = am + RationalMatrix.identity(n).scale(ck)
        return Poly1(QQ, coeffs)

    def det(self):
        chi0 = self.charpoly().coeff(0)
        return chi0 if self.n % 2 == 0 else -chi0

    def __eq__(self, other):
        return (isinstance(other, RationalMatrix) and other.n == self.n
                and other.entries == self.entries)

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "RationalMatrix(%r)" % (self.entries,)


def euler_phi(d: int) -> int:
    out = d
    q = d
    f = 2
    while f * f <= q:
        if q % f == 0:
            out -= out // f
            while q % f == 0:
                q //= f
        f += 1
    if q > 1:
        out -= out // q
    return out


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> Poly1:
    """The d-th cyclotomic polynomial over Q, by exact trial division."""
    p = Poly1(QQ, {d: QQ.one, 0: -QQ.one})
    for e in range(1, d):
        if d % e == 0:
            p = p.exact_div(cyclotomic(e))
    return p


def quasi_unipotent_order(u: RationalMatrix):
    """Least n with u**n unipotent, or None if some eigenvalue is not a
    root of unity.  Works by dividing the characteristic polynomial by
    cyclotomic polynomials; raises ValueError on singular input."""
    chi = u.charpoly()
    if not chi.coeff(0):
        raise ValueError("singular matrix")
    # phi(d) <= n forces d <= 2 n^2, so this range is exhaustive
    order = 1
    for d in range(1, 2 * u.n * u.n + 1):
        if euler_phi(d) > u.n:
            continue
        phi_d = cyclotomic(d)
        while True:
            quotient, remainder = divmod(chi, phi_d)
            if not remainder.is_zero():
                break
            chi = quotient
            order = order * d // _gcd(order, d)
    return order if chi.degree() == 0 else None


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def is_unipotent(u: RationalMatrix) -> bool:
    return ((u - RationalMatrix.identity(u.n)) ** u.n).is_zero()


def unipotent_log(u: RationalMatrix) -> RationalMatrix:
    """-sum (1-u)^m / m, a nilpotent matrix with exp(log u) = u."""
    if not is_unipotent(u):
        raise ValueError("matrix is not unipotent")
    nilpart = RationalMatrix.identity(u.n) - u
    acc = RationalMatrix.zero(u.n)
    power = nilpart
    m = 1
    while not power.is_zero():
        acc = acc - power.scale(_ratio(1, m))
        power = power * nilpart
        m += 1
    return acc


def matrix_exp(a: RationalMatrix) -> RationalMatrix:
    """Finite exponential series; requires nilpotent input."""
    if not (a ** a.n).is_zero():
        raise ValueError("matrix is not nilpotent")
    acc = RationalMatrix.identity(a.n)
    power = a
    factorial = 1
    m = 1
    while not power.is_zero():
        acc = acc + power.scale(_ratio(1, factorial))
        m += 1
        factorial *= m
        power = power * a
    return acc


@dataclass(frozen=True)
class LogScalingResult:
    """Outcome of the conjugation-scaling check, with the precondition
    (h u h^-1 = u^(2^k)) reported separately from the scaling conclusion
    (h e h^-1 = 2^k e for e = log of the unipotent power of u)."""

    quasi_order: int
    precondition_ok: bool
    conclusion_ok: bool

    @property
    def ok(self) -> bool:
        return self.precondition_ok and self.conclusion_ok

    def __bool__(self) -> bool:
        return self.ok


def log_scaling_check(h: RationalMatrix, u: RationalMatrix, k: int) -> LogScalingResult:
    """Verify that conjugation by h doubling u (2^k)-fold scales log(u^n)
    by 2^k, where n is the quasi-order of u."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    order = quasi_unipotent_order(u)
    if order is None:
        raise ValueError("matrix is not quasi-unipotent")
    h_inv = h.inverse()
    conj = h * u * h_inv
    precondition_ok = conj == u ** (2 ** k)
    e = unipotent_log(u ** order)
    conclusion_ok = (h * e * h_inv) == e.scale(2 ** k)
    return LogScalingResult(order, precondition_ok, conclusion_ok)
