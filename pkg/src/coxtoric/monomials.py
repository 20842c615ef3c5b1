"""Monomial enumeration in a positively graded ring, and squarefree radicals.

monomials_of_degree lists every exponent vector of a fixed multidegree. The
search runs over generators in order, bounding each exponent by an exact
heft budget and pruning any residual degree that falls outside the cone
spanned by the remaining generator degrees. Both tests are integer
arithmetic on precomputed constraint normals, so the hot loop never touches
Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import lcm

from .cones import generators_to_hrep
from .exact import dot
from .grading import DegreeMatrix
from .linprog import LinearRow, LinearSystem, lp_feasible

Exponent = tuple[int, ...]
Support = tuple[int, ...]


@dataclass(frozen=True)
class SquarefreeIdeal:
    """Radical monomial ideal, stored as the antichain of minimal supports
    (1-based generator indices, each support sorted, supports ordered by
    size then lexicographically)."""

    generators: tuple[Support, ...]

    def __post_init__(self) -> None:
        sets = [frozenset(s) for s in self.generators]
        for s, t in zip(self.generators, self.generators[1:]):
            if not (len(s), s) < (len(t), t):
                raise ValueError("supports not in canonical order")
        for i, a in enumerate(sets):
            for j, b in enumerate(sets):
                if i != j and a <= b:
                    raise ValueError("supports do not form an antichain")

    @classmethod
    def from_supports(cls, supports) -> "SquarefreeIdeal":
        canon = sorted({tuple(sorted(set(int(i) for i in s))) for s in supports},
                       key=lambda s: (len(s), s))
        return cls(tuple(canon))

    def support_sets(self) -> list[frozenset]:
        return [frozenset(s) for s in self.generators]


def minimal_antichain(supports) -> tuple[Support, ...]:
    """Inclusion-minimal elements of a family of index sets."""
    uniq = sorted({frozenset(s) for s in supports}, key=len)
    kept: list[frozenset] = []
    for s in uniq:
        if not any(k <= s for k in kept):
            kept.append(s)
    return tuple(sorted((tuple(sorted(s)) for s in kept),
                        key=lambda s: (len(s), s)))


def derive_heft(q: DegreeMatrix) -> tuple[int, ...]:
    """An integer functional taking value >= 1 on every generator degree.

    Existence of such a functional is exactly positivity of the grading.
    """
    system = LinearSystem(
        q.pic_rank,
        inequalities=tuple(LinearRow.make(col, 1) for col in q.columns))
    res = lp_feasible(system)
    if not res.feasible:
        raise ValueError("grading not positive")
    scale = lcm(*(w.denominator for w in res.witness)) if res.witness else 1
    heft = tuple(int(w * scale) for w in res.witness)
    if any(dot(heft, col) < 1 for col in q.columns):
        raise RuntimeError("derived heft fails positivity")
    return heft


def _checked_heft(q: DegreeMatrix, heft) -> tuple[int, ...]:
    if heft is None:
        return derive_heft(q)
    h = tuple(int(x) for x in heft)
    if len(h) != q.pic_rank:
        raise ValueError("heft has wrong length")
    if any(dot(h, col) < 1 for col in q.columns):
        raise ValueError("heft not positive on the grading")
    return h


def monomials_of_degree(q: DegreeMatrix, degree, heft=None) -> tuple[Exponent, ...]:
    """All exponent vectors e with sum(e_i * column_i) == degree, in
    lexicographic order. The grading must be positive (a heft is derived
    when not supplied), which makes every graded piece finite."""
    d = tuple(int(x) for x in degree)
    if len(d) != q.pic_rank:
        raise ValueError("degree has wrong length")
    h = _checked_heft(q, heft)
    n = q.num_gens
    cols = q.columns
    budgets = [dot(h, c) for c in cols]

    # hrep of the cone spanned by the degree columns from position i on;
    # membership of the residual degree prunes dead branches exactly
    suffix = [generators_to_hrep(q.pic_rank, cols[i:]) for i in range(n + 1)]

    def member(i: int, v: list[int]) -> bool:
        eqs, ineqs = suffix[i]
        return all(dot(e, v) == 0 for e in eqs) and \
            all(dot(a, v) >= 0 for a in ineqs)

    if not member(0, list(d)):
        return ()

    out: list[Exponent] = []
    prefix = [0] * n

    def rec(i: int, residual: list[int], hbudget: int) -> None:
        if i == n:
            out.append(tuple(prefix))
            return
        col = cols[i]
        v = list(residual)
        for e in range(hbudget // budgets[i] + 1):
            if e:
                for j in range(len(v)):
                    v[j] -= col[j]
            if member(i + 1, v):
                prefix[i] = e
                rec(i + 1, v, hbudget - e * budgets[i])
        prefix[i] = 0

    rec(0, list(d), dot(h, d))
    return tuple(out)


@lru_cache(maxsize=None)
def _subset_hrep(q: DegreeMatrix, subset: tuple[int, ...]):
    return generators_to_hrep(q.pic_rank, [q.columns[j] for j in subset])


def _support_achievable(q: DegreeMatrix, d, h, subset: tuple[int, ...]) -> bool:
    """Whether some monomial of degree d has support exactly subset
    (0-based). Backtracking search over the mandatory-one exponents,
    stopping at the first solution."""
    cols = q.columns
    res = list(d)
    for j in subset:
        for k in range(len(res)):
            res[k] -= cols[j][k]
    hbudget = dot(h, res)
    if hbudget < 0:
        return False
    m = len(subset)
    budgets = [dot(h, cols[j]) for j in subset]

    def member(i: int, v: list[int]) -> bool:
        eqs, ineqs = _subset_hrep(q, subset[i:])
        return all(dot(e, v) == 0 for e in eqs) and \
            all(dot(a, v) >= 0 for a in ineqs)

    if not member(0, res):
        return False

    def rec(i: int, v: list[int], left: int) -> bool:
        if i == m:
            return True
        col = cols[subset[i]]
        vv = list(v)
        for e in range(left // budgets[i] + 1):
            if e:
                for k in range(len(vv)):
                    vv[k] -= col[k]
            if member(i + 1, vv) and rec(i + 1, vv, left - e * budgets[i]):
                return True
        return False

    return rec(0, res, hbudget)


def minimal_supports_of_degree(q: DegreeMatrix, degree, heft=None) -> tuple[Support, ...]:
    """Inclusion-minimal supports among all monomials of the given degree
    (1-based, canonical order). Searches the support lattice directly, so
    large graded pieces never get enumerated."""
    d = tuple(int(x) for x in degree)
    if len(d) != q.pic_rank:
        raise ValueError("degree has wrong length")
    h = _checked_heft(q, heft)
    minimal: list[tuple[int, ...]] = []
    for size in range(q.num_gens + 1):
        for subset in combinations(range(q.num_gens), size):
            sset = set(subset)
            if any(set(mn) <= sset for mn in minimal):
                continue
            if _support_achievable(q, d, h, subset):
                minimal.append(subset)
    return tuple(tuple(j + 1 for j in s) for s in minimal)


def radical_of_monomials(monomials) -> SquarefreeIdeal:
    """Radical of the monomial ideal generated by the given exponents:
    the antichain of inclusion-minimal supports."""
    supports = {tuple(i + 1 for i, e in enumerate(m) if e > 0)
                for m in monomials}
    return SquarefreeIdeal(minimal_antichain(supports))


def irrelevant_radical(q: DegreeMatrix, degree, depth: int = 1, heft=None,
                       check_stable: bool = False):
    """Radical of the ideal generated by all monomials of degrees
    j * degree for j = 1..depth.

    With check_stable=True, returns (ideal, stable) where stable reports
    whether going to depth + 1 leaves the radical unchanged.
    """
    if depth < 1:
        raise ValueError("saturation depth must be at least 1")
    d = tuple(int(x) for x in degree)
    h = _checked_heft(q, heft)
    layers: list[Support] = []
    for j in range(1, depth + 1):
        layers.extend(minimal_supports_of_degree(q, tuple(j * x for x in d), h))
    ideal = SquarefreeIdeal(minimal_antichain(layers))
    if not check_stable:
        return ideal
    layers.extend(
        minimal_supports_of_degree(q, tuple((depth + 1) * x for x in d), h))
    stable = SquarefreeIdeal(minimal_antichain(layers)) == ideal
    return ideal, stable
