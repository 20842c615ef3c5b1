"""Exact polyhedral cone computations via the double description method.

Cones are rational; generators (V-form) and constraint normals (H-form) are
kept as primitive integer vectors, and conversion between the two forms is
one dual computation. During incremental insertion every ray carries the set
of already-processed inequality indices it satisfies with equality, which
powers the combinatorial adjacency test of Fukuda and Prodon. Lineality is
handled by pivoting: while some lineality vector meets the new constraint,
the constraint cuts the lineality space instead of the ray list.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Sequence

from .exact import dot, rank
from .linprog import simplex_nonneg

Vec = tuple[int, ...]


def primitive(vec: Sequence) -> Vec:
    """Scale a rational vector to primitive integer form, keeping direction."""
    fr = [Fraction(x) for x in vec]
    den = 1
    for f in fr:
        den = den * f.denominator // gcd(den, f.denominator)
    ints = [int(f * den) for f in fr]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints)


def _project_off(v: Vec, normal: Vec, pivot: Vec, dp: int) -> Vec:
    # v * dp - pivot * (normal . v), with dp = normal . pivot > 0 so the
    # direction of v is preserved
    dv = dot(normal, v)
    return primitive(tuple(x * dp - p * dv for x, p in zip(v, pivot)))


def double_description(dim: int,
                       equalities: Sequence[Sequence[int]] = (),
                       inequalities: Sequence[Sequence[int]] = ()):
    """Generator form (lineality basis, extreme rays) of the cone
    {x : e.x = 0 for all equalities, a.x >= 0 for all inequalities}.

    Rays are primitive integer vectors, minimal in the sense that each is
    extreme modulo the lineality space.
    """
    if dim < 1:
        raise ValueError("ambient dimension must be positive")
    lin: list[Vec] = [tuple(1 if i == j else 0 for j in range(dim))
                      for i in range(dim)]
    rays: list[tuple[Vec, frozenset[int]]] = []

    def cut_with(normal: Vec, idx: int | None) -> None:
        nonlocal lin, rays
        porig = next((l for l in lin if dot(normal, l) != 0), None)
        if porig is not None:
            pivot = porig if dot(normal, porig) > 0 else tuple(-x for x in porig)
            dp = dot(normal, pivot)
            lin = [_project_off(l, normal, pivot, dp)
                   for l in lin if l is not porig]
            new_rays = [(_project_off(r, normal, pivot, dp),
                         z | {idx} if idx is not None else z)
                        for r, z in rays]
            if idx is not None:
                # the pivot itself survives on the positive side; as former
                # lineality it is tight on every previously processed row
                new_rays.append((pivot, frozenset(range(idx))))
            rays = new_rays
            return
        pos, zero, neg = [], [], []
        for r, z in rays:
            s = dot(normal, r)
            if s > 0:
                pos.append((r, z, s))
            elif s < 0:
                neg.append((r, z, s))
            else:
                zero.append((r, z | {idx} if idx is not None else z))
        if idx is None:
            kept = zero
        else:
            kept = zero + [(r, z) for r, z, _ in pos]
        combos = []
        for rp, zp, sp in pos:
            for rn, zn, sn in neg:
                meet = zp & zn
                adjacent = True
                for r3, z3 in rays:
                    if r3 is rp or r3 is rn:
                        continue
                    if z3 >= meet:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                w = primitive(tuple(sp * b - sn * a for a, b in zip(rp, rn)))
                combos.append((w, meet | {idx} if idx is not None else meet))
        rays = kept + combos

    for e in equalities:
        en = primitive(e)
        if any(en):
            cut_with(en, None)
    count = 0
    for a in inequalities:
        an = primitive(a)
        if any(an):
            cut_with(an, count)
            count += 1

    return lin, [r for r, _ in rays]


def generators_to_hrep(dim: int, gens: Sequence[Sequence[int]]):
    """Constraint form (equalities, inequalities) of cone(gens): the dual
    cone's lineality gives the equalities, its rays give the facets."""
    cleaned = [primitive(g) for g in gens]
    cleaned = [g for g in cleaned if any(g)]
    lin, rays = double_description(dim, inequalities=cleaned)
    return tuple(lin), tuple(rays)


def cone_member(gens: Sequence[Sequence[int]], target: Sequence, dim: int) -> bool:
    """Whether target is a nonnegative rational combination of gens."""
    gens = [tuple(g) for g in gens]
    if not gens:
        return all(x == 0 for x in target)
    rows = [[g[i] for g in gens] for i in range(dim)]
    status, _, _ = simplex_nonneg(rows, list(target), [0] * len(gens))
    return status == "optimal"


@dataclass(frozen=True)
class RationalCone:
    """Rational polyhedral cone stored by primitive integer generators."""

    dim: int
    generators: tuple[Vec, ...]

    @classmethod
    def from_generators(cls, gens: Sequence[Sequence], dim: int) -> "RationalCone":
        cleaned = []
        seen = set()
        for g in gens:
            p = primitive(g)
            if any(p) and p not in seen:
                seen.add(p)
                cleaned.append(p)
        return cls(dim, tuple(cleaned))

    @cached_property
    def hrep(self) -> tuple[tuple[Vec, ...], tuple[Vec, ...]]:
        """(equality normals, inequality normals)."""
        return generators_to_hrep(self.dim, self.generators)

    @cached_property
    def generator_form(self) -> tuple[tuple[Vec, ...], tuple[Vec, ...]]:
        """(lineality basis, extreme rays) recovered from the H-form."""
        eqs, ineqs = self.hrep
        lin, rays = double_description(self.dim, eqs, ineqs)
        return tuple(lin), tuple(rays)

    @cached_property
    def extreme_rays(self) -> tuple[Vec, ...]:
        lin, rays = self.generator_form
        if lin:
            raise ValueError("extreme rays undefined for a cone with lineality")
        return rays

    @cached_property
    def space_dim(self) -> int:
        """Dimension of the linear span of the cone."""
        if not self.generators:
            return 0
        return rank(self.generators)

    @cached_property
    def is_pointed(self) -> bool:
        eqs, ineqs = self.hrep
        stacked = list(eqs) + list(ineqs)
        if not stacked:
            return self.dim == 0
        return rank(stacked) == self.dim

    def contains(self, vec: Sequence) -> bool:
        eqs, ineqs = self.hrep
        v = [Fraction(x) for x in vec]
        return all(dot(e, v) == 0 for e in eqs) and \
            all(dot(a, v) >= 0 for a in ineqs)

    def contains_interior(self, vec: Sequence) -> bool:
        """Relative interior membership: tight on no facet."""
        eqs, ineqs = self.hrep
        v = [Fraction(x) for x in vec]
        return all(dot(e, v) == 0 for e in eqs) and \
            all(dot(a, v) > 0 for a in ineqs)
