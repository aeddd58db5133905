"""Matrix realization of plane maps tangent to the identity.

Maps fixing the origin with identity differential decompose into shears
along projective directions; sending the shear with parameter f along delta
to the polynomial matrix id + (f(t)/t) e_delta (with e_delta the canonical
square-zero endomorphism onto delta) extends to an isomorphism onto the
group of determinant-one polynomial matrices with value id at t = 0.  This
module computes that correspondence in both directions, factors such
matrices into one-line shear factors, and runs the ping-pong degree growth
argument underlying faithfulness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .amalgam import free_reduce, shear_decompose
from .automorphisms import PlaneAuto
from .linear import Mat2, PolyMat2, PolyVec, ProjPoint, det_polarization, direction_of, nil_endo
from .poly import NEG_INF, Poly1


class NotInMatrixGroup(ValueError):
    """Determinant is not the constant 1 or the value at t = 0 is not id."""


class FactorizationInvariantError(RuntimeError):
    """Internal rank or degree bookkeeping broke during matrix peeling."""


@dataclass(frozen=True)
class ShearFactor:
    """One factor id + c t^k e_delta with c nonzero and k >= 1."""

    delta: ProjPoint
    c: object
    k: int

    def to_matrix(self) -> PolyMat2:
        field = self.delta.field
        e = nil_endo(self.delta).scale(self.c)
        return PolyMat2.identity(field) + PolyMat2.scalar_monomial(e, self.k)

    def inverse_matrix(self) -> PolyMat2:
        field = self.delta.field
        e = nil_endo(self.delta).scale(-self.c)
        return PolyMat2.identity(field) + PolyMat2.scalar_monomial(e, self.k)


def line_matrix(delta: ProjPoint, h: Poly1) -> PolyMat2:
    """id + h(t) e_delta for a polynomial h vanishing at 0."""
    field = delta.field
    e = nil_endo(delta)
    out = PolyMat2.identity(field)
    return PolyMat2(
        field,
        out.e00 + h.scale(e.e00),
        out.e01 + h.scale(e.e01),
        out.e10 + h.scale(e.e10),
        out.e11 + h.scale(e.e11),
    )


def _validate_group_member(g: PolyMat2) -> None:
    field = g.field
    if g.det() != Poly1.one(field):
        raise NotInMatrixGroup("determinant %r is not 1" % (g.det(),))
    if not g.at_zero().is_identity():
        raise NotInMatrixGroup("value at t = 0 is not the identity")


def matrix_factor(g: PolyMat2) -> list[ShearFactor]:
    """Peel g into shear factors, product left to right.

    Each step removes the top degree: the top coefficient matrix lies in a
    single line's image, the step size is the gap down to the last
    coefficient outside that line, and the scalar matches exactly; any
    mismatch raises FactorizationInvariantError.
    """
    _validate_group_member(g)
    field = g.field
    factors: list[ShearFactor] = []
    guard = 0
    while g.degree() >= 1:
        guard += 1
        if guard > 10000:
            raise FactorizationInvariantError("peeling failed to terminate")
        deg = g.degree()
        top = g.coeff_matrix(deg)
        if top.det():
            raise FactorizationInvariantError("top coefficient %r is invertible" % (top,))
        col = (top.e00, top.e10) if (top.e00 or top.e10) else (top.e01, top.e11)
        delta = direction_of(field, col)
        if not delta.contains((top.e01, top.e11)) or not delta.contains((top.e00, top.e10)):
            raise FactorizationInvariantError("top coefficient image is not one line")
        w0, w1 = delta.annihilator()
        n = None
        for k in range(deg - 1, -1, -1):
            a = g.coeff_matrix(k)
            if (w0 * a.e00 + w1 * a.e10) or (w0 * a.e01 + w1 * a.e11):
                n = k
                break
        if n is None:
            raise FactorizationInvariantError("no anchor coefficient below degree %d" % deg)
        b = nil_endo(delta) * g.coeff_matrix(n)
        c = None
        for be, te in zip(
            (b.e00, b.e01, b.e10, b.e11), (top.e00, top.e01, top.e10, top.e11)
        ):
            if be:
                c = te / be
                break
        if not c:
            raise FactorizationInvariantError("anchor produced a zero scalar")
        if b.scale(c) != top:
            raise FactorizationInvariantError("top coefficient is not a multiple of the anchor")
        step = ShearFactor(delta, c, deg - n)
        g = step.inverse_matrix() * g
        if g.degree() >= deg:
            raise FactorizationInvariantError("degree did not drop at degree %d" % deg)
        factors.append(step)
    if not g.is_identity():
        raise FactorizationInvariantError("constant remainder %r is not the identity" % (g,))
    return factors


def matrix_reduced_word(g: PolyMat2) -> tuple:
    """The reduced word of g: (direction, parameter) pairs with parameters
    vanishing at 0, adjacent directions distinct, product left to right."""
    merged: list = []
    for fac in matrix_factor(g):
        h = Poly1.monomial(fac.delta.field, fac.k, fac.c)
        merged.append((fac.delta, h))
    return free_reduce(merged)


def matrix_recompose(field, pairs) -> PolyMat2:
    out = PolyMat2.identity(field)
    for delta, h in pairs:
        out = out * line_matrix(delta, h)
    return out


# -- the isomorphism with the shear decomposition ------------------------------


def to_matrix(auto_or_pairs) -> PolyMat2:
    """The polynomial matrix image of a map tangent to the identity.

    Accepts either the map itself or its shear decomposition; each shear
    (delta, f) contributes id + (f(t)/t) e_delta, multiplied left to right.
    """
    if isinstance(auto_or_pairs, PlaneAuto):
        pairs = shear_decompose(auto_or_pairs)
        field = auto_or_pairs.field
    else:
        pairs = tuple(auto_or_pairs)
        if not pairs:
            raise ValueError("cannot infer the field from an empty decomposition")
        field = pairs[0][0].field
    out = PolyMat2.identity(field)
    for delta, f in pairs:
        out = out * line_matrix(delta, f.shift_down(1))
    return out


def from_matrix(g: PolyMat2) -> tuple:
    """The shear decomposition whose matrix image is g.

    Each reduced matrix pair (delta, h) lifts to the shear parameter t h(t).
    """
    return tuple((delta, h.shift_up(1)) for delta, h in matrix_reduced_word(g))


def base_value_membership(g: PolyMat2, predicate) -> bool:
    """Membership in the subgroup anchored at a constant group: determinant
    must be the constant 1, and the value at t = 0 is tested by the caller's
    predicate."""
    field = g.field
    if g.det() != Poly1.one(field):
        raise NotInMatrixGroup("determinant %r is not 1" % (g.det(),))
    return bool(predicate(g.at_zero()))


# -- ping-pong degree growth ----------------------------------------------------


@dataclass
class PingPongResult:
    """Outcome of pushing a sample direction through a reduced word."""

    start: ProjPoint
    degree: int
    expected_degree: int
    end_direction: ProjPoint | None
    expected_direction: ProjPoint
    moved: bool

    @property
    def ok(self) -> bool:
        return (
            self.moved
            and self.degree == self.expected_degree
            and self.end_direction == self.expected_direction
        )


def pingpong_check(pairs, sample: ProjPoint) -> PingPongResult:
    """Apply the product of (direction, parameter) factors to a constant
    vector along ``sample`` and verify the degree-growth prediction.

    Precondition: pairs is reduced (adjacent directions distinct, parameters
    nonzero with zero constant term) and sample differs from the last
    factor's direction, which acts first.
    """
    pairs = tuple(pairs)
    if not pairs:
        raise ValueError("empty word has nothing to check")
    field = sample.field
    if sample == pairs[-1][0]:
        raise ValueError("sample direction must avoid the first-acting factor")
    for (d1, _), (d2, _) in zip(pairs, pairs[1:]):
        if d1 == d2:
            raise ValueError("word is not reduced")
    g = matrix_recompose(field, pairs)
    vec = PolyVec.of_scalars(field, *sample.vector())
    out = g.act(vec)
    expected_degree = sum(h.degree() for _, h in pairs)
    deg = out.degree()
    if deg is NEG_INF:
        return PingPongResult(sample, -1, expected_degree, None, pairs[0][0], False)
    top = out.top_coeff_pair()
    end_dir = direction_of(field, top)
    moved = deg > 0 or end_dir != sample
    return PingPongResult(sample, deg, expected_degree, end_dir, pairs[0][0], moved)


__all__ = [
    "NotInMatrixGroup",
    "FactorizationInvariantError",
    "ShearFactor",
    "line_matrix",
    "matrix_factor",
    "matrix_reduced_word",
    "matrix_recompose",
    "to_matrix",
    "from_matrix",
    "base_value_membership",
    "PingPongResult",
    "pingpong_check",
    "det_polarization",
]
