"""Fans assembled from irrelevant-ideal data, with exact certification.

The maximal cones attached to a squarefree irrelevant ideal are spanned by
the ray sets complementary to its minimal supports. Validity (pairwise
intersections are common faces), simpliciality, completeness, and
projectivity are certified by exact integer and rational computation;
projectivity returns a strictly convex piecewise-linear support function,
replayed against every wall before it is reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm

from .cones import (
    RationalCone,
    cone_member,
    double_description,
    primitive,
)
from .exact import dot, nullspace, rank
from .grading import GaleDual
from .linprog import LinearRow, LinearSystem, lp_feasible
from .monomials import SquarefreeIdeal

Vec = tuple[int, ...]


@dataclass(frozen=True)
class Cone:
    """Maximal cone of a fan: sorted 1-based ray indices and the rays."""

    ray_indices: tuple[int, ...]
    rays: tuple[Vec, ...]

    def __post_init__(self) -> None:
        if not self.ray_indices:
            raise ValueError("cone needs at least one ray")
        if tuple(sorted(set(self.ray_indices))) != self.ray_indices:
            raise ValueError("ray indices must be sorted and distinct")
        if len(self.rays) != len(self.ray_indices):
            raise ValueError("one ray vector per ray index required")

    @property
    def ambient_dim(self) -> int:
        return len(self.rays[0])

    @cached_property
    def geometry(self) -> RationalCone:
        return RationalCone.from_generators(self.rays, dim=self.ambient_dim)

    @cached_property
    def facets(self) -> tuple[tuple[Vec, tuple[int, ...]], ...]:
        """(inward normal, tight 1-based ray indices) per facet."""
        _eqs, ineqs = self.geometry.hrep
        out = []
        for n in ineqs:
            tight = tuple(idx for idx, ray in zip(self.ray_indices, self.rays)
                          if dot(n, ray) == 0)
            out.append((n, tight))
        return tuple(out)


@dataclass(frozen=True)
class Fan:
    """A fan recorded by its rays and maximal cones."""

    rays: tuple[Vec, ...]
    maximal_cones: tuple[Cone, ...]

    @property
    def ambient_dim(self) -> int:
        return len(self.rays[0])

    @classmethod
    def from_index_sets(cls, rays, index_sets) -> "Fan":
        rays = tuple(tuple(int(x) for x in r) for r in rays)
        cones = []
        for s in index_sets:
            idx = tuple(sorted(set(int(i) for i in s)))
            if not all(1 <= i <= len(rays) for i in idx):
                raise ValueError("ray index out of range")
            cones.append(Cone(idx, tuple(rays[i - 1] for i in idx)))
        return cls(rays, tuple(cones))


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class ProjectivityCertificate:
    projective: bool
    support_function: tuple[Vec, ...] | None = None


def fan_from_irrelevant(gale: GaleDual, ideal: SquarefreeIdeal) -> Fan:
    """The fan whose maximal cones are spanned by the ray sets complementary
    to the minimal supports of the irrelevant radical."""
    n = gale.num_rays
    if not ideal.generators:
        raise ValueError("irrelevant ideal has no generators")
    for ray in gale.rays:
        if not any(ray):
            raise ValueError("zero ray in Gale dual")
    prims = [primitive(r) for r in gale.rays]
    if len(set(prims)) != n:
        raise ValueError("repeated ray direction in Gale dual")
    index_sets = []
    for support in ideal.generators:
        if any(i < 1 or i > n for i in support):
            raise ValueError("support index out of range")
        comp = tuple(i for i in range(1, n + 1) if i not in support)
        if not comp:
            raise ValueError(f"support {support} leaves an empty complement")
        index_sets.append(comp)
    used = set()
    for s in index_sets:
        used.update(s)
    if used != set(range(1, n + 1)):
        raise ValueError("some ray appears in no maximal cone")
    fan = Fan.from_index_sets(gale.rays, index_sets)
    for cone, support in zip(fan.maximal_cones, ideal.generators):
        if not cone.geometry.is_pointed:
            raise ValueError(
                f"complement of support {support} is not strongly convex")
    return fan


def validate_fan(fan: Fan) -> Verdict:
    """Certify that every pairwise intersection of maximal cones is exactly
    the cone on their common rays and is a face of both."""
    d = fan.ambient_dim
    cones = fan.maximal_cones
    for a in range(len(cones)):
        for b in range(a + 1, len(cones)):
            ca, cb = cones[a], cones[b]
            eqa, ina = ca.geometry.hrep
            eqb, inb = cb.geometry.hrep
            lin, meet = double_description(
                d, list(eqa) + list(eqb), list(ina) + list(inb))
            if lin:
                return Verdict(False,
                               f"cones {a + 1} and {b + 1} meet in a cone "
                               f"with lineality")
            if not meet:
                continue
            shared = sorted(set(ca.ray_indices) & set(cb.ray_indices))
            common = [fan.rays[i - 1] for i in shared]
            for w in meet:
                if not cone_member(common, w, dim=d):
                    return Verdict(False,
                                   f"intersection of cones {a + 1} and "
                                   f"{b + 1} is not spanned by their common "
                                   f"rays")
            for label, cone in ((a + 1, ca), (b + 1, cb)):
                eqs, ineqs = cone.geometry.hrep
                active = [nrm for nrm in ineqs
                          if all(dot(nrm, w) == 0 for w in meet)]
                _flin, face = double_description(
                    d, list(eqs) + active, list(ineqs))
                for w in face:
                    if not cone_member(common, w, dim=d):
                        return Verdict(False,
                                       f"intersection of cones {a + 1} and "
                                       f"{b + 1} is not a face of cone "
                                       f"{label}")
    return Verdict(True)


def is_simplicial(fan: Fan) -> bool:
    """Every maximal cone is spanned by linearly independent rays."""
    return all(rank(c.rays) == len(c.rays) for c in fan.maximal_cones)


def _facet_pairing(fan: Fan) -> dict[tuple[int, ...], list[int]]:
    """Facet key (tight ray indices) -> positions of the cones sharing it."""
    pairing: dict[tuple[int, ...], list[int]] = {}
    for pos, cone in enumerate(fan.maximal_cones):
        for _normal, tight in cone.facets:
            pairing.setdefault(tight, []).append(pos)
    return pairing


def is_complete(fan: Fan) -> Verdict:
    """Support covers the whole space: all maximal cones full-dimensional,
    every facet shared by exactly two cones, adjacency connected."""
    d = fan.ambient_dim
    for pos, cone in enumerate(fan.maximal_cones):
        if rank(cone.rays) < d:
            return Verdict(False,
                           f"cone {pos + 1} is not full-dimensional")
    pairing = _facet_pairing(fan)
    adjacency: dict[int, set[int]] = {i: set()
                                      for i in range(len(fan.maximal_cones))}
    for key, owners in pairing.items():
        if len(owners) == 1:
            return Verdict(False,
                           f"facet with rays {key} belongs to only one "
                           f"maximal cone")
        if len(owners) > 2:
            return Verdict(False,
                           f"facet with rays {key} is shared by more than "
                           f"two maximal cones")
        adjacency[owners[0]].add(owners[1])
        adjacency[owners[1]].add(owners[0])
    seen = {0}
    queue = [0]
    while queue:
        cur = queue.pop()
        for nxt in adjacency[cur]:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    if len(seen) != len(fan.maximal_cones):
        return Verdict(False, "maximal cones are not wall-connected")
    return Verdict(True)


def _walls(fan: Fan) -> list[tuple[int, int, tuple[int, ...], Vec]]:
    """(cone position a, cone position b, tight ray indices, wall normal)
    for every shared facet of a complete fan."""
    walls = []
    for key, owners in _facet_pairing(fan).items():
        if len(owners) != 2:
            raise ValueError("facet pairing is not two-to-one")
        tau_rays = [fan.rays[i - 1] for i in key]
        if tau_rays:
            basis = nullspace(tau_rays)
        else:
            # dimension one: the wall is the origin and any nonzero
            # functional spans its annihilator
            basis = nullspace([[0] * fan.ambient_dim])
        if len(basis) != 1:
            raise ValueError("wall does not span a hyperplane")
        walls.append((owners[0], owners[1], key, primitive(basis[0])))
    return walls


def is_projective(fan: Fan) -> ProjectivityCertificate:
    """Search for a strictly convex support function, one linear functional
    per maximal cone, exact over Q.

    Differences across a wall are multiples of the wall normal, so the
    functionals are parametrized by one coefficient per spanning-tree wall;
    agreement on non-tree walls and a normalized strict jump across every
    wall become one small linear program. A feasible solution is replayed
    on every wall before the certificate is returned.
    """
    comp = is_complete(fan)
    if not comp.ok:
        raise ValueError(f"projectivity test requires a complete fan: "
                         f"{comp.reason}")
    cones = fan.maximal_cones
    ncones = len(cones)
    walls = _walls(fan)

    # spanning tree over the wall graph
    tree: list[tuple[int, int, Vec]] = []
    seen = {0}
    queue = [0]
    graph: dict[int, list[tuple[int, int]]] = {i: [] for i in range(ncones)}
    for w, (ca, cb, key, normal) in enumerate(walls):
        graph[ca].append((cb, w))
        graph[cb].append((ca, w))
    used_walls = set()
    while queue:
        cur = queue.pop(0)
        for nxt, w in graph[cur]:
            if nxt not in seen:
                seen.add(nxt)
                used_walls.add(w)
                tree.append((cur, nxt, walls[w][3]))
                queue.append(nxt)

    t = len(tree)
    d = fan.ambient_dim
    # symbolic functionals: m[cone] is a d x t integer matrix applied to the
    # tree coefficient vector; crossing tree wall k adds n_k to column k
    msym: list[list[list[int]] | None] = [None] * ncones
    msym[0] = [[0] * t for _ in range(d)]
    pending = [0]
    tree_edges: dict[int, list[tuple[int, int, Vec]]] = {i: []
                                                         for i in range(ncones)}
    for k, (pa, pb, normal) in enumerate(tree):
        tree_edges[pa].append((pb, k, normal))
        tree_edges[pb].append((pa, k, normal))
    while pending:
        cur = pending.pop()
        for nxt, k, normal in tree_edges[cur]:
            if msym[nxt] is None:
                mat = [row[:] for row in msym[cur]]
                for i in range(d):
                    mat[i][k] += normal[i]
                msym[nxt] = mat
                pending.append(nxt)

    def evaluate(pos: int, v: Vec) -> list[int]:
        mat = msym[pos]
        return [sum(mat[i][k] * v[i] for i in range(d)) for k in range(t)]

    equalities = []
    inequalities = []
    for w, (ca, cb, key, normal) in enumerate(walls):
        if w not in used_walls:
            for i in key:
                va = evaluate(ca, fan.rays[i - 1])
                vb = evaluate(cb, fan.rays[i - 1])
                equalities.append(
                    LinearRow.make([x - y for x, y in zip(va, vb)], 0))
        keyset = set(key)
        for near, far in ((ca, cb), (cb, ca)):
            for i in cones[far].ray_indices:
                if i in keyset:
                    continue
                vn = evaluate(near, fan.rays[i - 1])
                vf = evaluate(far, fan.rays[i - 1])
                inequalities.append(
                    LinearRow.make([x - y for x, y in zip(vn, vf)], 1))

    res = lp_feasible(LinearSystem(t, tuple(equalities), tuple(inequalities)))
    if not res.feasible:
        return ProjectivityCertificate(False, None)

    coeff = list(res.witness)
    support = []
    for pos in range(ncones):
        mat = msym[pos]
        support.append(tuple(sum(Fraction(mat[i][k]) * coeff[k]
                                 for k in range(t)) for i in range(d)))
    denom = lcm(*(f.denominator for vec in support for f in vec)) \
        if support else 1
    support_int = tuple(tuple(int(f * denom) for f in vec) for vec in support)

    # replay the integer certificate on every wall of the fan
    for ca, cb, key, _normal in walls:
        for i in key:
            ray = fan.rays[i - 1]
            if dot(support_int[ca], ray) != dot(support_int[cb], ray):
                raise RuntimeError("support function fails wall agreement")
        keyset = set(key)
        for near, far in ((ca, cb), (cb, ca)):
            for i in cones[far].ray_indices:
                if i not in keyset:
                    ray = fan.rays[i - 1]
                    if not dot(support_int[near], ray) > \
                            dot(support_int[far], ray):
                        raise RuntimeError(
                            "support function fails strict convexity")
    return ProjectivityCertificate(True, support_int)


def fan_report(fan: Fan) -> dict:
    """Certification summary in JSON-ready form."""
    valid = validate_fan(fan)
    simplicial = is_simplicial(fan)
    complete = is_complete(fan)
    report = {
        "ambientDim": fan.ambient_dim,
        "numRays": len(fan.rays),
        "numMaximalCones": len(fan.maximal_cones),
        "rays": [list(r) for r in fan.rays],
        "maximalCones": [list(c.ray_indices) for c in fan.maximal_cones],
        "valid": valid.ok,
        "simplicial": simplicial,
        "complete": complete.ok,
    }
    if not valid.ok:
        report["validityViolation"] = valid.reason
    if not complete.ok:
        report["completenessViolation"] = complete.reason
    if valid.ok and complete.ok:
        cert = is_projective(fan)
        report["projective"] = cert.projective
        if cert.projective:
            report["supportFunction"] = [list(v)
                                         for v in cert.support_function]
    else:
        report["projective"] = None
    return report
