"""Exact rational linear programming.

Strict and non-strict linear systems over Q are decided exactly, with no
floating point. Equalities are eliminated first by sparse substitution; the
remaining inequality system is decided through its LP dual, which keeps the
simplex tableau at (free dimension + 1) rows no matter how many inequality
rows there are. All strict rows share one margin variable eps, capped at 1
and maximized; the strict system is feasible iff the optimum margin is
positive. (Normalizing to eps >= 1 instead would misclassify affine strict
systems whose margin is forced below 1, e.g. interior-point tests.)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import rational_solve


@dataclass(frozen=True)
class LinearRow:
    """One constraint  normal . x  (>=, >, or = as used)  offset."""

    normal: tuple[Fraction, ...]
    offset: Fraction = Fraction(0)
    strict: bool = False

    @classmethod
    def make(cls, normal: Sequence, offset=0, strict: bool = False) -> "LinearRow":
        return cls(tuple(Fraction(x) for x in normal), Fraction(offset), strict)


@dataclass(frozen=True)
class LinearSystem:
    """A conjunction of linear equalities and (possibly strict) inequalities."""

    dim: int
    equalities: tuple[LinearRow, ...] = ()
    inequalities: tuple[LinearRow, ...] = ()

    def __post_init__(self) -> None:
        for row in self.equalities:
            if len(row.normal) != self.dim:
                raise ValueError("equality row has wrong dimension")
            if row.strict:
                raise ValueError("equality rows cannot be strict")
        for row in self.inequalities:
            if len(row.normal) != self.dim:
                raise ValueError("inequality row has wrong dimension")

    @classmethod
    def make(cls, dim: int, equalities=(), inequalities=()) -> "LinearSystem":
        eqs = tuple(r if isinstance(r, LinearRow) else LinearRow.make(*r)
                    for r in equalities)
        ins = tuple(r if isinstance(r, LinearRow) else LinearRow.make(*r)
                    for r in inequalities)
        return cls(dim, eqs, ins)


@dataclass(frozen=True)
class LPResult:
    """Feasibility verdict with an exact rational witness.

    margin is the maximized shared strict slack (capped at 1) when the
    decided system contained strict rows, None otherwise.
    """

    feasible: bool
    witness: tuple[Fraction, ...] | None
    margin: Fraction | None = None


def _pivot(T: list[list[Fraction]], b: list[Fraction], basis: list[int],
           r: int, c: int) -> None:
    inv = 1 / T[r][c]
    T[r] = [x * inv for x in T[r]]
    b[r] *= inv
    for i in range(len(T)):
        if i != r and T[i][c]:
            f = T[i][c]
            Ti, Tr = T[i], T[r]
            T[i] = [x - f * y for x, y in zip(Ti, Tr)]
            b[i] -= f * b[r]
    basis[r] = c


def _optimize(T: list[list[Fraction]], b: list[Fraction], basis: list[int],
              cost: list[Fraction], nenter: int) -> str:
    """Minimize cost.y on the current tableau, Bland's rule, columns < nenter
    may enter. Returns "optimal" or "unbounded"."""
    m = len(T)
    while True:
        cb = [cost[basis[i]] for i in range(m)]
        entering = -1
        for j in range(nenter):
            rc = cost[j] - sum(cb[i] * T[i][j] for i in range(m) if T[i][j])
            if rc < 0:
                entering = j
                break
        if entering < 0:
            return "optimal"
        leave = -1
        best = None
        for i in range(m):
            if T[i][entering] > 0:
                ratio = b[i] / T[i][entering]
                if best is None or ratio < best or \
                        (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            return "unbounded"
        _pivot(T, b, basis, leave, entering)


def simplex_nonneg(rows: Sequence[Sequence], rhs: Sequence, cost: Sequence):
    """min cost.y subject to rows.y = rhs, y >= 0, all exact.

    Returns (status, y, mult): status in {"optimal", "infeasible",
    "unbounded"}; at an optimum, mult are equality multipliers pi with
    pi.col_j <= cost_j for every column j, with equality on basic columns.
    """
    m = len(rows)
    n = len(cost)
    cost = [Fraction(c) for c in cost]
    if m == 0:
        if any(c < 0 for c in cost):
            return "unbounded", None, None
        return "optimal", [Fraction(0)] * n, []

    sign = [1] * m
    T: list[list[Fraction]] = []
    b: list[Fraction] = []
    for i in range(m):
        r = [Fraction(x) for x in rows[i]]
        bi = Fraction(rhs[i])
        if bi < 0:
            r = [-x for x in r]
            bi = -bi
            sign[i] = -1
        T.append(r)
        b.append(bi)
    a_norm = [list(r) for r in T]

    for i in range(m):
        T[i] = T[i] + [Fraction(1) if k == i else Fraction(0) for k in range(m)]
    basis = list(range(n, n + m))
    rowmap = list(range(m))

    phase1 = [Fraction(0)] * n + [Fraction(1)] * m
    _optimize(T, b, basis, phase1, n + m)
    if sum(phase1[basis[i]] * b[i] for i in range(len(T))) > 0:
        return "infeasible", None, None

    # pivot remaining artificial basics out; a row that cannot release its
    # artificial is a dependent equation and is dropped
    for i in range(len(T) - 1, -1, -1):
        if basis[i] >= n:
            for j in range(n):
                if T[i][j]:
                    _pivot(T, b, basis, i, j)
                    break
            else:
                del T[i], b[i], basis[i], rowmap[i]

    phase2 = cost + [Fraction(0)] * m
    status = _optimize(T, b, basis, phase2, n)
    if status == "unbounded":
        return "unbounded", None, None

    y = [Fraction(0)] * n
    for i, bs in enumerate(basis):
        y[bs] = b[i]

    k = len(basis)
    if k:
        solve_rows = [[a_norm[rowmap[i]][j] for i in range(k)] for j in basis]
        solve_rhs = [cost[j] for j in basis]
        pin = rational_solve(solve_rows, solve_rhs)
        if pin is None:
            raise RuntimeError("singular basis in multiplier recovery")
    else:
        pin = []
    pi = [Fraction(0)] * m
    for i in range(k):
        pi[rowmap[i]] = sign[rowmap[i]] * pin[i]
    return "optimal", y, pi


def _eliminate_equalities(system: LinearSystem):
    """Gauss elimination of the equalities in sparse dict form.

    Returns (x0, free, resolved) where eliminated variable v satisfies
    x_v = resolved[v][0] + sum over free u of resolved[v][1][u] * x_u,
    or None if the equalities are inconsistent.
    """
    subs: dict[int, tuple[Fraction, dict[int, Fraction]]] = {}
    order: list[int] = []
    for row in system.equalities:
        expr = {j: Fraction(c) for j, c in enumerate(row.normal) if c}
        rhs = Fraction(row.offset)
        while True:
            hit = [v for v in expr if v in subs]
            if not hit:
                break
            for v in hit:
                cv = expr.pop(v)
                sc, se = subs[v]
                rhs -= cv * sc
                for w, cw in se.items():
                    expr[w] = expr.get(w, Fraction(0)) + cv * cw
            expr = {w: c for w, c in expr.items() if c}
        if not expr:
            if rhs != 0:
                return None
            continue
        pivot = min(expr)
        c = expr.pop(pivot)
        subs[pivot] = (rhs / c, {w: -cw / c for w, cw in expr.items()})
        order.append(pivot)

    resolved: dict[int, tuple[Fraction, dict[int, Fraction]]] = {}
    for v in reversed(order):
        sc, se = subs[v]
        const = sc
        acc: dict[int, Fraction] = {}
        for w, cw in se.items():
            if w in resolved:
                rc, re = resolved[w]
                const += cw * rc
                for u, cu in re.items():
                    acc[u] = acc.get(u, Fraction(0)) + cw * cu
            else:
                acc[w] = acc.get(w, Fraction(0)) + cw
        resolved[v] = (const, {u: c for u, c in acc.items() if c})

    free = [j for j in range(system.dim) if j not in subs]
    x0 = [resolved[j][0] if j in resolved else Fraction(0)
          for j in range(system.dim)]
    return x0, free, resolved


def _reduce_inequality(row: LinearRow, free: list[int], resolved) \
        -> tuple[list[Fraction], Fraction]:
    acc: dict[int, Fraction] = {}
    shift = Fraction(0)
    for j, c in enumerate(row.normal):
        if not c:
            continue
        c = Fraction(c)
        if j in resolved:
            rc, re = resolved[j]
            shift += c * rc
            for u, cu in re.items():
                acc[u] = acc.get(u, Fraction(0)) + c * cu
        else:
            acc[j] = acc.get(j, Fraction(0)) + c
    coeffs = [acc.get(f, Fraction(0)) for f in free]
    return coeffs, Fraction(row.offset) - shift


def lp_feasible(system: LinearSystem) -> LPResult:
    """Exact feasibility of a mixed strict/non-strict rational linear system.

    The returned witness is replayed against every row of the input system
    before being reported, so a feasible verdict always carries a checked
    rational point.
    """
    elim = _eliminate_equalities(system)
    if elim is None:
        return LPResult(False, None, None)
    x0, free, resolved = elim
    nf = len(free)

    # reduce, normalize and deduplicate the inequality rows
    kept: dict[tuple[Fraction, ...], tuple[Fraction, bool]] = {}
    for row in system.inequalities:
        coeffs, off = _reduce_inequality(row, free, resolved)
        lead = next((c for c in coeffs if c), None)
        if lead is None:
            if off > 0 or (row.strict and off >= 0):
                return LPResult(False, None, None)
            if row.strict:
                # still constrains the shared margin: 0 - eps >= off
                kept_key = (Fraction(0),) * nf
                # handled below through a synthetic keyed row; fold in now
                old = kept.get(kept_key)
                cand = (off, True)
                if old is None or cand > old:
                    kept[kept_key] = cand
            continue
        scale = abs(lead)
        key = tuple(c / scale for c in coeffs)
        cand = (off / scale, row.strict)
        old = kept.get(key)
        if old is None or cand[0] > old[0] or \
                (cand[0] == old[0] and cand[1] and not old[1]):
            kept[key] = cand

    rows = [(list(k), off, strict) for k, (off, strict) in kept.items()]
    has_strict = any(strict for _, _, strict in rows)

    pos_of = {f: pos for pos, f in enumerate(free)}

    def compose(tvals: list[Fraction]) -> list[Fraction]:
        x = list(x0)
        for pos, f in enumerate(free):
            x[f] = tvals[pos]
        for v, (const, expr) in resolved.items():
            x[v] = const + sum(c * tvals[pos_of[u]] for u, c in expr.items())
        return x

    def replay(x: list[Fraction]) -> None:
        for row in system.equalities:
            if sum(a * b for a, b in zip(row.normal, x)) != row.offset:
                raise RuntimeError("witness failed equality replay")
        for row in system.inequalities:
            val = sum(a * b for a, b in zip(row.normal, x))
            if row.strict:
                if not val > row.offset:
                    raise RuntimeError("witness failed strict replay")
            elif not val >= row.offset:
                raise RuntimeError("witness failed replay")

    if not rows:
        x = compose([Fraction(0)] * nf)
        replay(x)
        return LPResult(True, tuple(x), None)

    # primal: max eps s.t. a.t - (strict)eps >= off, 0 <= eps <= 1
    width = nf + 1 if has_strict else nf
    mrows: list[list[Fraction]] = []
    dvec: list[Fraction] = []
    for coeffs, off, strict in rows:
        r = list(coeffs)
        if has_strict:
            r.append(Fraction(-1) if strict else Fraction(0))
        mrows.append(r)
        dvec.append(off)
    if has_strict:
        mrows.append([Fraction(0)] * nf + [Fraction(-1)])
        dvec.append(Fraction(-1))
        mrows.append([Fraction(0)] * nf + [Fraction(1)])
        dvec.append(Fraction(0))

    # dual: min (-d).y s.t. (-M^T).y = c, y >= 0; the dual multipliers at
    # the optimum are exactly a primal point satisfying M z >= d
    nrows = len(mrows)
    amat = [[-mrows[j][i] for j in range(nrows)] for i in range(width)]
    cvec = [Fraction(0)] * width
    if has_strict:
        cvec[nf] = Fraction(1)
    dualcost = [-dvec[j] for j in range(nrows)]

    status, _y, pi = simplex_nonneg(amat, cvec, dualcost)
    if status != "optimal":
        return LPResult(False, None, None)

    z = list(pi)
    margin = z[nf] if has_strict else None
    if has_strict and margin <= 0:
        return LPResult(False, None, margin)
    x = compose(z[:nf])
    replay(x)
    return LPResult(True, tuple(x), margin)
