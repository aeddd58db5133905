"""Seeded random generators for test corpora and the CLI lab drivers.

Everything takes an explicit ``random.Random`` so runs are reproducible;
degree budgets keep composite degrees at desk scale (the exact arithmetic
is happy to blow up otherwise).
"""

from __future__ import annotations

import random

from .automorphisms import AffineAuto, ElemAuto, PlaneAuto, compose_all
from .linear import Mat2, ProjPoint
from .matrixrep import ShearFactor
from .poly import Poly1


def random_unit(field, rng: random.Random, height: int = 8):
    return field.random_nonzero(rng, height)


def random_invertible_matrix(field, rng: random.Random, height: int = 8) -> Mat2:
    while True:
        m = Mat2(field,
                 field.random_element(rng, height), field.random_element(rng, height),
                 field.random_element(rng, height), field.random_element(rng, height))
        if m.det():
            return m


def random_affine(field, rng: random.Random, height: int = 8) -> AffineAuto:
    shift = (field.random_element(rng, height), field.random_element(rng, height))
    return AffineAuto(random_invertible_matrix(field, rng, height), shift)


def random_elementary(field, rng: random.Random, max_deg: int = 3,
                      height: int = 8) -> ElemAuto:
    deg = rng.randint(0, max_deg)
    terms = {e: field.random_element(rng, height) for e in range(deg)}
    terms[deg] = field.random_nonzero(rng, height)
    return ElemAuto(field,
                    random_unit(field, rng, height), field.random_element(rng, height),
                    random_unit(field, rng, height), Poly1(field, terms))


def random_tame_atoms(field, rng: random.Random, max_factors: int = 6,
                      height: int = 8, degree_budget: int = 12) -> list:
    """Affine/elementary atoms whose elementary degrees multiply to at
    most ``degree_budget``, so the composite stays desk-sized."""
    atoms = []
    budget = degree_budget
    for _ in range(rng.randint(1, max_factors)):
        if rng.random() < 0.5:
            atoms.append(random_affine(field, rng, height))
        else:
            atom = random_elementary(field, rng, max_deg=min(3, budget), height=height)
            d = atom.f.degree()
            if d >= 2:
                budget = max(1, budget // d)
            atoms.append(atom)
    return atoms


def random_tame_auto(field, rng: random.Random, **kwargs) -> PlaneAuto:
    atoms = random_tame_atoms(field, rng, **kwargs)
    return compose_all(*[a.to_plane() for a in atoms])


def random_proj_point(field, rng: random.Random, height: int = 4) -> ProjPoint:
    if rng.random() < 0.15:
        return ProjPoint.infinity(field)
    return ProjPoint.of(field, field.random_element(rng, height), field.one)


def random_shear_pairs(field, rng: random.Random, max_factors: int = 4,
                       deg_cap: int = 6, degree_budget: int = 30) -> list:
    """A reduced word of (direction, parameter) line-shear pairs with
    parameter valuation >= 2 and degree product <= ``degree_budget``."""
    pairs: list = []
    product = 1
    for _ in range(rng.randint(1, max_factors)):
        delta = random_proj_point(field, rng)
        if pairs and pairs[-1][0] == delta:
            continue
        cap = min(deg_cap, degree_budget // product)
        if cap < 2:
            break
        deg = rng.randint(2, cap)
        product *= deg
        terms = {e: field.random_element(rng, 4) for e in range(2, deg)}
        terms[deg] = field.random_nonzero(rng, 4)
        pairs.append((delta, Poly1(field, terms)))
    if not pairs:
        pairs.append((random_proj_point(field, rng),
                      Poly1(field, {2: field.random_nonzero(rng, 4)})))
    return pairs


def random_matrix_factors(field, rng: random.Random, max_factors: int = 5,
                          deg_cap: int = 4, height: int = 6) -> list:
    """Reduced elementary matrix factors (adjacent directions distinct)."""
    factors: list = []
    for _ in range(rng.randint(1, max_factors)):
        delta = random_proj_point(field, rng)
        if factors and factors[-1].delta == delta:
            continue
        factors.append(ShearFactor(delta, field.random_nonzero(rng, height),
                                   rng.randint(1, deg_cap)))
    if not factors:
        factors.append(ShearFactor(random_proj_point(field, rng),
                                   field.random_nonzero(rng, height), 1))
    return factors


def random_origin_special_borel(field, rng: random.Random,
                                height: int = 6) -> PlaneAuto:
    """A nonidentity map (x, y) -> (z1 x, y/z1 + c x): lower triangular
    linear with determinant one, fixing the origin."""
    while True:
        z1 = random_unit(field, rng, height)
        c = field.random_element(rng, height)
        g = ElemAuto(field, z1, field.zero, field.one / z1,
                     Poly1.monomial(field, 1, c))
        if not g.is_identity():
            return g.to_plane()


def random_congruence_borel(funcfield, rng: random.Random, max_deg: int = 2,
                            height: int = 4) -> PlaneAuto:
    """A nonidentity map (x + u, y + v + w x) with u, v, w nonunit
    multiples of the function-field variable, so it is the identity at
    z = 0 and lower triangular."""
    base = funcfield.base
    gen = funcfield.gen

    def small():
        deg = rng.randint(0, max_deg)
        poly = Poly1(base, {e: base.random_element(rng, height) for e in range(deg + 1)})
        return funcfield.of(poly) * gen

    while True:
        w = small()
        m = Mat2(funcfield, funcfield.one, funcfield.zero, w, funcfield.one)
        shift = (small(), small())
        g = AffineAuto(m, shift)
        if not g.is_identity():
            return g.to_plane()
