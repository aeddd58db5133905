"""Factorization of tame plane automorphisms and reduced amalgam words.

Every automorphism with constant nonzero jacobian factors through the affine
and triangular subgroups.  This module computes such a factorization by
degree reduction, normalizes it into the unique reduced word over fixed
coset representatives, and builds on that normal form: inversion, word
shape classification, conjugation into a prescribed shape, escape witnesses
from the triangular subgroup, and the finer decomposition of maps tangent
to the identity into shears along projective directions.

Coset representative conventions (right factor acts first everywhere):

* non-triangular affine representatives are the linear maps with matrix
  rows ((0, 1), (1, lam)), one per scalar lam; lam = 0 is the coordinate swap;
* non-triangular shear representatives are (x, y + g(x)) with g having zero
  constant and linear coefficients;
* the word's tail is the leftover triangular map, kept on the right.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from .linear import Mat2, ProjPoint, direction_of
from .poly import Poly1, Poly2
from .automorphisms import (
    AffineAuto,
    ElemAuto,
    NotAnAutomorphism,
    PlaneAuto,
    as_affine,
    as_elementary,
    classify,
    line_shear,
)


def in_borel(auto: PlaneAuto) -> bool:
    """Is the map triangular (affine with lower triangular linear part)?"""
    aff = as_affine(auto)
    return aff is not None and aff.is_lower_triangular()


def _atom_in_borel(g) -> bool:
    if isinstance(g, AffineAuto):
        return g.is_lower_triangular()
    return g.is_lower_triangular()


def _to_borel_elem(g) -> ElemAuto:
    if isinstance(g, AffineAuto):
        return ElemAuto.from_affine(g)
    return g


def _split_affine(g: AffineAuto) -> tuple[AffineAuto, ElemAuto]:
    """g = rep o b with rep a coset representative and b triangular."""
    f = g.field
    if not g.m.e01:
        raise ValueError("affine map already triangular")
    lam = g.m.e11 / g.m.e01
    rep = AffineAuto(Mat2(f, f.zero, f.one, f.one, lam))
    b = rep.inverse().compose(g)
    if not b.is_lower_triangular():
        raise AssertionError("affine split left a non-triangular remainder")
    return rep, ElemAuto.from_affine(b)


def _split_elem(g: ElemAuto) -> tuple[ElemAuto, ElemAuto]:
    """g = rep o b with rep = (x, y + g~(x)), g~ without constant or linear part."""
    f = g.field
    if g.f.degree() <= 1:
        raise ValueError("shear already triangular")
    iz1 = f.one / g.z1
    arg = Poly1(f, {1: iz1, 0: -g.t0 * iz1})
    shifted = g.f.compose(arg)
    gtilde = shifted.drop_below(2)
    rep = ElemAuto.shear(f, gtilde)
    b = rep.inverse().compose(g)
    if b.f.degree() > 1:
        raise AssertionError("shear split left a nonlinear remainder")
    return rep, b


class _Normalizer:
    """Streaming push-down of atoms into (representatives..., tail)."""

    def __init__(self, field):
        self.field = field
        self.stack: list = []
        self.carry = ElemAuto.identity(field)

    def push(self, atom) -> None:
        if isinstance(atom, AffineAuto):
            if not atom.is_invertible():
                raise NotAnAutomorphism("singular affine factor")
            g = self.carry.to_affine().compose(atom)
        elif isinstance(atom, ElemAuto):
            if not atom.is_invertible():
                raise NotAnAutomorphism("degenerate triangular factor")
            g = self.carry.compose(atom)
        else:
            raise TypeError("expected an affine or triangular factor, got %r" % (atom,))
        self.carry = ElemAuto.identity(self.field)
        self._settle(g)

    def _settle(self, g) -> None:
        if _atom_in_borel(g):
            self.carry = _to_borel_elem(g)
            return
        top = self.stack[-1] if self.stack else None
        if top is not None and type(top) is type(g):
            self.stack.pop()
            self._settle(top.compose(g))
            return
        if isinstance(g, AffineAuto):
            rep, b = _split_affine(g)
        else:
            rep, b = _split_elem(g)
        self.stack.append(rep)
        self.carry = b

    def finish(self) -> AmalgamWord:
        return AmalgamWord(self.field, tuple(self.stack), self.carry)


@dataclass(frozen=True)
class AmalgamWord:
    """A word (factors..., tail): alternating coset representatives, then a
    triangular tail applied first (rightmost)."""

    field: object
    factors: tuple
    tail: ElemAuto

    def __len__(self) -> int:
        return len(self.factors)

    def factor_kinds(self) -> tuple[str, ...]:
        return tuple("affine" if isinstance(g, AffineAuto) else "shear" for g in self.factors)

    def recompose(self) -> PlaneAuto:
        """Multiply the word back out into a plane map."""
        f = self.field
        p, q = Poly2.x(f), Poly2.y(f)
        for atom in reversed((*self.factors, self.tail)):
            p, q = _apply_left(atom, p, q)
        return PlaneAuto(p, q)

    def is_reduced(self) -> bool:
        """Factors alternate in kind, each a genuine representative, and
        neither representative kind is triangular."""
        kinds = self.factor_kinds()
        for a, b in zip(kinds, kinds[1:]):
            if a == b:
                return False
        for g in self.factors:
            if isinstance(g, AffineAuto):
                if g.shift[0] or g.shift[1] or g.m.e00 or not (g.m.e01 == self.field.one and g.m.e10 == self.field.one):
                    return False
            else:
                if not (g.z1 == self.field.one and g.z2 == self.field.one) or g.t0:
                    return False
                if g.f.is_zero() or g.f.degree() <= 1 or (g.f.terms and g.f.valuation() < 2):
                    return False
        return self.tail.is_lower_triangular()

    def __eq__(self, other):
        return (
            isinstance(other, AmalgamWord)
            and self.field == other.field
            and self.factors == other.factors
            and self.tail == other.tail
        )


def _apply_left(atom, p: Poly2, q: Poly2) -> tuple[Poly2, Poly2]:
    """Components of atom o (p, q), without generic substitution."""
    if isinstance(atom, AffineAuto):
        m, (v0, v1) = atom.m, atom.shift
        f = atom.field
        return (
            p.scale(m.e00) + q.scale(m.e01) + Poly2.constant(f, v0),
            p.scale(m.e10) + q.scale(m.e11) + Poly2.constant(f, v1),
        )
    f = atom.field
    fp = atom.f.substitute(p)
    if not isinstance(fp, Poly2):
        fp = Poly2.constant(f, fp)
    return (
        p.scale(atom.z1) + Poly2.constant(f, atom.t0),
        q.scale(atom.z2) + fp,
    )


def normal_form(word: AmalgamWord) -> AmalgamWord:
    """Canonicalize a word; idempotent, and invariant under recomposition."""
    nz = _Normalizer(word.field)
    for atom in word.factors:
        nz.push(atom)
    nz.push(word.tail)
    return nz.finish()


def word_of_atoms(field, atoms) -> AmalgamWord:
    """Normal form of an explicit product of affine and triangular maps."""
    nz = _Normalizer(field)
    for atom in atoms:
        nz.push(atom)
    return nz.finish()


class WordType(Enum):
    """Shape of a reduced word: which representative kinds sit at the ends."""

    TAIL_ONLY = "tail_only"
    AFFINE_AFFINE = "affine_affine"
    SHEAR_SHEAR = "shear_shear"
    AFFINE_SHEAR = "affine_shear"
    SHEAR_AFFINE = "shear_affine"


def word_type(word: AmalgamWord) -> WordType:
    kinds = word.factor_kinds()
    if not kinds:
        return WordType.TAIL_ONLY
    first = kinds[0] == "affine"
    last = kinds[-1] == "affine"
    if first and last:
        return WordType.AFFINE_AFFINE
    if not first and not last:
        return WordType.SHEAR_SHEAR
    if first:
        return WordType.AFFINE_SHEAR
    return WordType.SHEAR_AFFINE


# -- factorization ------------------------------------------------------------


def vdk_factor(auto: PlaneAuto) -> AmalgamWord:
    """Factor a tame automorphism into the reduced amalgam word.

    Raises NotAnAutomorphism when the jacobian is nonconstant or zero, when
    degree reduction gets stuck (e.g. (x + x^p, y) in characteristic p), or
    when the affine remainder is singular.
    """
    f = auto.field
    jac = auto.jacobian()
    if not jac.is_constant() or not jac.constant_term():
        raise NotAnAutomorphism("jacobian %r is not a nonzero constant" % (jac,))
    applied: list = []
    p, q = auto.p, auto.q
    swap = AffineAuto(Mat2(f, f.zero, f.one, f.one, f.zero))
    p_powers: list[Poly2] = []

    def reduce_once(p: Poly2, q: Poly2):
        # try to cancel the top form of q with a multiple of a power of p
        dp, dq = p.total_degree(), q.total_degree()
        if dp < 1 or dq % dp:
            return None
        k = dq // dp
        if not p_powers:
            p_powers.append(Poly2.one(f))
        while len(p_powers) <= k:
            p_powers.append(p_powers[-1] * p)
        top_p = p_powers[k].leading_form()
        top_q = q.leading_form()
        probe = next(iter(top_p.terms))
        c = top_q.coeff(*probe) / top_p.terms[probe]
        if not c or top_p.scale(c) != top_q:
            return None
        applied.append(ElemAuto.shear(f, Poly1.monomial(f, k, -c)))
        return q - p_powers[k].scale(c)

    guard = 0
    while max(p.total_degree(), q.total_degree()) > 1:
        guard += 1
        if guard > 10000:
            raise AssertionError("degree reduction failed to terminate")
        if p.total_degree() > q.total_degree():
            applied.append(swap)
            p, q = q, p
            p_powers.clear()
            continue
        new_q = reduce_once(p, q)
        if new_q is None and p.total_degree() == q.total_degree():
            applied.append(swap)
            p, q = q, p
            p_powers.clear()
            new_q = reduce_once(p, q)
        if new_q is None:
            raise NotAnAutomorphism(
                "degree reduction stuck at degrees (%s, %s)" % (p.total_degree(), q.total_degree())
            )
        q = new_q
    ending = as_affine(PlaneAuto(p, q))
    if ending is None:
        raise NotAnAutomorphism("affine remainder is singular")
    atoms = [w.inverse() for w in applied]
    atoms.append(ending)
    return word_of_atoms(f, atoms)


def invert(auto: PlaneAuto) -> PlaneAuto:
    """The inverse automorphism, through the amalgam factorization."""
    word = vdk_factor(auto)
    f = word.field
    p, q = Poly2.x(f), Poly2.y(f)
    for atom in (*word.factors, word.tail):
        p, q = _apply_left(atom.inverse(), p, q)
    return PlaneAuto(p, q)


# -- conjugation into a prescribed shape --------------------------------------


def _affine_candidates(field):
    # spread over distinct left AND right cosets of the triangular subgroup,
    # so at most two candidates can be eaten by end cancellations
    one, zero = field.one, field.zero
    two = one + one
    rows = [
        (zero, one, one, zero),
        (one, one, zero, one),
        (zero, one, one, one),
        (one, one, one, zero),
        (one, two, one, one),
    ]
    for m in rows:
        cand = Mat2(field, *m)
        if cand.det() and cand.e01:
            yield AffineAuto(cand)


def _shear_candidates(field):
    for k in (2, 3, 4):
        yield ElemAuto.shear(field, Poly1.monomial(field, k, field.one))


def conjugate_to_corner(
    word: AmalgamWord,
    target: WordType,
    witness: PlaneAuto | None = None,
) -> tuple[PlaneAuto, AmalgamWord]:
    """A conjugator gamma and the normal form of gamma o w o gamma^{-1}
    whose ends match the target shape.

    Tail-only words cannot be moved by the search alone; the caller must
    supply (or let borel_escape_witness find) a map conjugating the tail out
    of the triangular subgroup, passed here as ``witness``.
    """
    if target not in (WordType.AFFINE_AFFINE, WordType.SHEAR_SHEAR):
        raise ValueError("target must be a both-ends shape, got %r" % (target,))
    field = word.field
    if word_type(word) is WordType.TAIL_ONLY:
        base = word.tail.to_plane()
        if base.is_identity():
            raise ValueError("the identity conjugates into no shape")
        if witness is None:
            witness, _ = borel_escape_witness(base)
        moved = witness.compose(base).compose(invert(witness))
        inner_gamma, out = conjugate_to_corner(vdk_factor(moved), target)
        return inner_gamma.compose(witness), out
    if word_type(word) is target:
        return PlaneAuto.identity(field), word
    candidates = _affine_candidates(field) if target is WordType.AFFINE_AFFINE else _shear_candidates(field)
    for gamma in candidates:
        atoms = [gamma, *word.factors, word.tail, gamma.inverse()]
        out = word_of_atoms(field, atoms)
        if word_type(out) is target:
            return gamma.to_plane(), out
    raise AssertionError("no candidate conjugator reshaped the word")


def borel_escape_witness(
    g: PlaneAuto,
    context: str = "any",
    generator=None,
) -> tuple[PlaneAuto, PlaneAuto]:
    """A conjugator gamma with gamma o g o gamma^{-1} outside the triangular
    subgroup, returned with that conjugate.

    ``context`` picks the finite candidate family:

    - "origin_special": g scales the axes and shears y by a multiple of x,
      with unit jacobian; the conjugator fixes the origin with jacobian one
      (a rotation, a row operation, or the parabola shear for -id).
    - "congruence": g is (x + u, y + v + w x) with u, v, w multiples of the
      ideal generator r (default: the function-field variable); the
      conjugator is (x + r y, y), (x, y + r x^3), or their composite, and
      lies in the same congruence subgroup.
    - "any": a union family that works over every coefficient field.

    Raises ValueError for the identity and for maps not in the triangular
    subgroup to begin with.
    """
    field = g.field
    if g.is_identity():
        raise ValueError("the identity has no conjugate outside the triangular subgroup")
    if not in_borel(g):
        raise ValueError("map is already outside the triangular subgroup")

    def linear(m00, m01, m10, m11):
        return AffineAuto(Mat2(field, m00, m01, m10, m11)).to_plane()

    one, zero = field.one, field.zero
    rotation = linear(zero, -one, one, zero)
    row_add = linear(one, one, zero, one)
    shears = [ElemAuto.shear(field, Poly1.monomial(field, k, one)).to_plane() for k in (2, 3, 4)]
    if context == "origin_special":
        candidates = [rotation, row_add, shears[0]]
    elif context == "congruence":
        r = field.of(generator) if generator is not None else getattr(field, "gen", None)
        if not r:
            raise ValueError("congruence context needs a nonzero ideal generator")
        row_add_r = linear(one, r, zero, one)
        cubic = ElemAuto.shear(field, Poly1.monomial(field, 3, r)).to_plane()
        candidates = [row_add_r, cubic, cubic.compose(row_add_r)]
    elif context == "any":
        candidates = [row_add, *shears]
        candidates += [s.compose(row_add) for s in shears]
        candidates += [rotation, rotation.compose(shears[0])]
    else:
        raise ValueError("unknown context %r" % (context,))
    for gamma in candidates:
        conj = gamma.compose(g).compose(invert(gamma))
        if not in_borel(conj):
            return gamma, conj
    raise ValueError("no conjugate of %r left the triangular subgroup" % (g,))


# -- decomposition into line shears -------------------------------------------


def free_reduce(pairs) -> tuple:
    """Merge adjacent shears along equal directions, dropping cancellations."""
    out: list = []
    for delta, f in pairs:
        if f.is_zero():
            continue
        if out and out[-1][0] == delta:
            merged = out[-1][1] + f
            out.pop()
            if not merged.is_zero():
                out.append((delta, merged))
        else:
            out.append((delta, f))
    return tuple(out)


def shear_decompose(auto: PlaneAuto) -> tuple:
    """Write a map tangent to the identity as a product of line shears.

    The result is a reduced tuple of (direction, parameter polynomial)
    pairs, parameters with zero constant and linear coefficients, the
    product taken left to right:
    auto = line_shear(*pairs[0]) o line_shear(*pairs[1]) o ...
    """
    field = auto.field
    profile = classify(auto)
    if not profile.tangent_to_identity():
        raise ValueError("map is not tangent to the identity at the origin")
    word = vdk_factor(auto)
    lin = Mat2.identity(field)
    pairs: list = []
    for fac in word.factors:
        if isinstance(fac, AffineAuto):
            lin = lin * fac.m
            continue
        u = (lin.e01, lin.e11)
        delta = direction_of(field, u)
        inv = lin.inverse()
        row = (inv.e00, inv.e01)
        if delta.at_infinity:
            mu = u[0]
            nu = -row[1]
            if row[0]:
                raise AssertionError("conjugated covector escaped the line")
        else:
            mu = u[1]
            nu = row[0]
            if row[1] != -nu * delta.a:
                raise AssertionError("conjugated covector escaped the line")
        pairs.append((delta, fac.f.scale_argument(nu).scale(mu)))
    remainder = AffineAuto.identity(field)
    for fac in word.factors:
        if isinstance(fac, AffineAuto):
            remainder = remainder.compose(fac)
    remainder = remainder.compose(word.tail.to_affine())
    if not remainder.is_identity():
        raise AssertionError("affine residue %r after shear extraction" % (remainder,))
    return free_reduce(pairs)


def shear_recompose(field, pairs) -> PlaneAuto:
    """Multiply (direction, parameter) pairs back into a plane map."""
    out = PlaneAuto.identity(field)
    for delta, f in pairs:
        out = out.compose(line_shear(delta, f))
    return out


# -- serialization -------------------------------------------------------------

_FORMAT = "tameplane-word"
_VERSION = 1


def word_to_json(word: AmalgamWord) -> str:
    from .textio import field_spec, format_poly1, format_scalar

    def scalar(s) -> str:
        return format_scalar(word.field, s)

    recs = []
    for g in word.factors:
        if isinstance(g, AffineAuto):
            recs.append(
                {
                    "kind": "affine",
                    "matrix": [[scalar(g.m.e00), scalar(g.m.e01)], [scalar(g.m.e10), scalar(g.m.e11)]],
                    "shift": [scalar(g.shift[0]), scalar(g.shift[1])],
                }
            )
        else:
            recs.append(
                {
                    "kind": "shear",
                    "z1": scalar(g.z1),
                    "t0": scalar(g.t0),
                    "z2": scalar(g.z2),
                    "f": format_poly1(g.f, "x"),
                }
            )
    tail = word.tail
    doc = {
        "format": _FORMAT,
        "version": _VERSION,
        "field": field_spec(word.field),
        "factors": recs,
        "tail": {
            "z1": scalar(tail.z1),
            "t0": scalar(tail.t0),
            "z2": scalar(tail.z2),
            "f": format_poly1(tail.f, "x"),
        },
    }
    return json.dumps(doc, indent=2)


def word_from_json(text: str) -> AmalgamWord:
    from .ratfunc import field_from_spec
    from .textio import parse_poly1, parse_scalar

    doc = json.loads(text)
    if doc.get("format") != _FORMAT:
        raise ValueError("not a %s document" % _FORMAT)
    if doc.get("version") != _VERSION:
        raise ValueError("unsupported version %r" % doc.get("version"))
    field = field_from_spec(doc["field"])

    def scal(s):
        return parse_scalar(field, s)

    def shear(rec) -> ElemAuto:
        return ElemAuto(field, scal(rec["z1"]), scal(rec["t0"]), scal(rec["z2"]), parse_poly1(field, rec["f"], "x"))

    factors: list = []
    for rec in doc["factors"]:
        if rec["kind"] == "affine":
            (a, b), (c, d) = rec["matrix"]
            sh = rec.get("shift", ["0", "0"])
            factors.append(AffineAuto(Mat2(field, scal(a), scal(b), scal(c), scal(d)), (scal(sh[0]), scal(sh[1]))))
        elif rec["kind"] == "shear":
            factors.append(shear(rec))
        else:
            raise ValueError("unknown factor kind %r" % rec.get("kind"))
    return AmalgamWord(field, tuple(factors), shear(doc["tail"]))
