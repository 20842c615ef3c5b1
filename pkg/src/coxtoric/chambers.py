"""GIT chamber analysis of a positively graded presentation.

The effective cone is spanned by the degree columns. The chamber of a class
w is the intersection of all cones spanned by subsets of columns containing
w; only inclusion-minimal such subsets contribute constraints, and the
resulting inequality list is reduced to an irredundant set by exact LP.
Chamber equality at a fixed saturation depth is decided through the
irrelevant radicals.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cones import RationalCone, cone_member, generators_to_hrep, primitive
from .exact import dot
from .grading import DegreeMatrix
from .linprog import LinearRow, LinearSystem, lp_feasible
from .monomials import irrelevant_radical

Vec = tuple[int, ...]


class GuardExceeded(ValueError):
    """A computation would exceed its configured size guard."""


@dataclass(frozen=True)
class Chamber:
    """GIT chamber as an irredundant homogeneous inequality system."""

    representative: Vec
    hrep: tuple[Vec, ...]
    full_dimensional: bool


@dataclass(frozen=True)
class SameChamberResult:
    same: bool
    stable: bool | None = None


def effective_cone(q: DegreeMatrix) -> RationalCone:
    """Cone spanned by all generator degrees."""
    return RationalCone.from_generators(q.columns, dim=q.pic_rank)


def spans_extremal_ray(q: DegreeMatrix, i: int) -> bool:
    """Whether generator i (1-based) spans an extremal ray of the effective
    cone: its degree is not a nonnegative combination of the non-parallel
    remaining degrees."""
    if not 1 <= i <= q.num_gens:
        raise ValueError("generator index out of range")
    col = q.columns[i - 1]
    if not any(col):
        raise ValueError("zero degree column")
    direction = primitive(col)
    others = [c for j, c in enumerate(q.columns)
              if j != i - 1 and primitive(c) != direction]
    return not cone_member(others, col, dim=q.pic_rank)


def _minimal_supports_of(q: DegreeMatrix, w: Vec) -> list[tuple[int, ...]]:
    """Inclusion-minimal column subsets whose cone contains w (0-based)."""
    n = q.num_gens
    minimal: list[tuple[int, ...]] = []
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            sset = set(subset)
            if any(set(m) <= sset for m in minimal):
                continue
            gens = [q.columns[j] for j in subset]
            if cone_member(gens, w, dim=q.pic_rank):
                minimal.append(subset)
    return minimal


def chamber_of(q: DegreeMatrix, w, max_gens: int = 16) -> Chamber:
    """The GIT chamber containing w: the intersection of the cones on all
    minimal column subsets containing w, with irredundant constraints."""
    if q.num_gens > max_gens:
        raise GuardExceeded("subset enumeration too large")
    w = tuple(int(x) for x in w)
    if len(w) != q.pic_rank:
        raise ValueError("class has wrong length")
    if not cone_member(list(q.columns), w, dim=q.pic_rank):
        raise ValueError("class outside the effective cone")

    rows: set[Vec] = set()
    for subset in _minimal_supports_of(q, w):
        eqs, ineqs = generators_to_hrep(
            q.pic_rank, [q.columns[j] for j in subset])
        for e in eqs:
            rows.add(primitive(e))
            rows.add(primitive(tuple(-x for x in e)))
        for a in ineqs:
            rows.add(primitive(a))

    # strip redundant rows: a row is redundant when no point satisfies the
    # others while violating it
    working = sorted(rows)
    for row in list(working):
        others = [r for r in working if r != row]
        probe = LinearSystem(
            q.pic_rank,
            inequalities=tuple(LinearRow.make(r, 0) for r in others) +
            (LinearRow.make([-x for x in row], 0, strict=True),))
        if not lp_feasible(probe).feasible:
            working = others

    for row in working:
        if dot(row, w) < 0:
            raise RuntimeError("representative violates chamber constraint")

    interior = LinearSystem(
        q.pic_rank,
        inequalities=tuple(LinearRow.make(r, 0, strict=True)
                           for r in working))
    full = lp_feasible(interior).feasible
    return Chamber(representative=w, hrep=tuple(working),
                   full_dimensional=full)


def same_chamber(q: DegreeMatrix, w1, w2, depth: int = 1, heft=None,
                 check_stable: bool = False) -> SameChamberResult:
    """Whether w1 and w2 produce identical irrelevant radicals at the given
    saturation depth. With check_stable=True the depth+1 radicals are
    compared as well and instability is reported."""
    for w in (w1, w2):
        if not cone_member(list(q.columns), tuple(int(x) for x in w),
                           dim=q.pic_rank):
            raise ValueError("class outside the effective cone")
    if check_stable:
        rad1, st1 = irrelevant_radical(q, w1, depth, heft, check_stable=True)
        rad2, st2 = irrelevant_radical(q, w2, depth, heft, check_stable=True)
        return SameChamberResult(rad1 == rad2, st1 and st2)
    rad1 = irrelevant_radical(q, w1, depth, heft)
    rad2 = irrelevant_radical(q, w2, depth, heft)
    return SameChamberResult(rad1 == rad2, None)
