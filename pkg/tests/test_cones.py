import random

from coxtoric.cones import (
    RationalCone,
    cone_member,
    double_description,
    generators_to_hrep,
    primitive,
)
from coxtoric.exact import dot, rank


def test_primitive():
    assert primitive([2, 4, 6]) == (1, 2, 3)
    assert primitive([-3, 6]) == (-1, 2)
    from fractions import Fraction
    assert primitive([Fraction(1, 2), Fraction(1, 3)]) == (3, 2)
    assert primitive([0, 0]) == (0, 0)


def test_quadrant_hrep():
    eqs, ineqs = generators_to_hrep(2, [(1, 0), (0, 1)])
    assert eqs == ()
    assert set(ineqs) == {(1, 0), (0, 1)}


def test_halfplane_has_lineality():
    c = RationalCone.from_generators([(1, 0), (-1, 0), (0, 1)], dim=2)
    eqs, ineqs = c.hrep
    assert eqs == ()
    assert set(ineqs) == {(0, 1)}
    lin, rays = c.generator_form
    assert len(lin) == 1 and lin[0][1] == 0
    assert not c.is_pointed


def test_full_space_and_origin():
    full = RationalCone.from_generators(
        [(1, 0), (-1, 0), (0, 1), (0, -1)], dim=2)
    assert full.hrep == ((), ())
    lin, rays = full.generator_form
    assert len(lin) == 2 and rays == ()

    origin = RationalCone.from_generators([], dim=2)
    eqs, ineqs = origin.hrep
    assert rank(eqs) == 2 and ineqs == ()
    assert origin.contains((0, 0))
    assert not origin.contains((1, 0))


def test_interior_generator_not_extreme():
    gens = [(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1), (0, 0, 1)]
    c = RationalCone.from_generators(gens, dim=3)
    assert set(c.extreme_rays) == set(gens[:4])
    eqs, ineqs = c.hrep
    assert eqs == () and len(ineqs) == 4


def test_equality_cut():
    # octant sliced by x = y
    lin, rays = double_description(
        3, equalities=[(1, -1, 0)],
        inequalities=[(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert lin == []
    assert set(rays) == {(1, 1, 0), (0, 0, 1)}


def test_cone_member():
    gens = [(1, 0), (1, 1)]
    assert cone_member(gens, (2, 1), dim=2)
    assert cone_member(gens, (0, 0), dim=2)
    assert not cone_member(gens, (0, 1), dim=2)
    assert not cone_member(gens, (-1, 0), dim=2)
    assert not cone_member([], (1, 0), dim=2)
    assert cone_member([], (0, 0), dim=2)


def test_contains_and_interior():
    c = RationalCone.from_generators([(1, 0), (1, 2)], dim=2)
    assert c.contains((1, 1))
    assert c.contains((1, 0))
    assert c.contains_interior((1, 1))
    assert not c.contains_interior((1, 0))
    assert not c.contains((0, 1))


def test_pointedness():
    assert RationalCone.from_generators([(1, 0), (0, 1)], dim=2).is_pointed
    assert not RationalCone.from_generators([(1, 0), (-1, 0)], dim=2).is_pointed
    assert RationalCone.from_generators([], dim=2).is_pointed


def test_random_round_trip():
    rng = random.Random(55221)
    for _ in range(40):
        d = rng.randint(2, 4)
        k = rng.randint(1, d + 2)
        gens = [tuple(rng.randint(-4, 4) for _ in range(d)) for _ in range(k)]
        c = RationalCone.from_generators(gens, dim=d)
        eqs, ineqs = c.hrep
        # every generator satisfies the computed constraints
        for g in c.generators:
            assert all(dot(e, g) == 0 for e in eqs)
            assert all(dot(a, g) >= 0 for a in ineqs)
        # the recovered generator form spans the same cone
        lin, rays = c.generator_form
        back = list(rays) + list(lin) + [tuple(-x for x in l) for l in lin]
        for g in c.generators:
            assert cone_member(back, g, dim=d)
        for r in back:
            assert cone_member(list(c.generators), r, dim=d)
