"""Exact linear programming over the rationals.

A small two-phase primal simplex on dense Fraction tableaus.  Bland's rule
picks both the entering and the leaving variable, so cycling is impossible
even on the heavily degenerate systems produced by the structural-model
search (almost every right-hand side there is zero).
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import RankTestError


class Infeasible(RankTestError):
    """The constraint system has no solution."""


class Unbounded(RankTestError):
    """The objective is unbounded above on the feasible region."""


@dataclass(frozen=True)
class LPResult:
    objective: Fraction
    x: tuple[Fraction, ...]
    basis: tuple[int, ...]  # indices of basic columns, the optimality certificate


def maximize(c, a_ub=(), b_ub=(), a_eq=(), b_eq=()) -> LPResult:
    """Maximize c·x subject to a_ub·x <= b_ub, a_eq·x = b_eq, x >= 0.

    All data is taken exactly (ints, Fractions, or strings accepted by
    Fraction); the result is exact.
    """
    c = [Fraction(v) for v in c]
    nvars = len(c)
    rows: list[list[Fraction]] = []
    senses: list[str] = []
    for a, b in zip(a_ub, b_ub, strict=True):
        rows.append([Fraction(v) for v in a] + [Fraction(b)])
        senses.append("<=")
    for a, b in zip(a_eq, b_eq, strict=True):
        rows.append([Fraction(v) for v in a] + [Fraction(b)])
        senses.append("==")
    for row in rows:
        if len(row) != nvars + 1:
            raise ValueError("constraint width does not match objective length")

    m = len(rows)
    if m == 0:
        if any(v > 0 for v in c):
            raise Unbounded("no constraints bound an improving direction")
        return LPResult(Fraction(0), tuple([Fraction(0)] * nvars), ())

    # Normalize right-hand sides to be nonnegative, add slacks for
    # inequalities, artificials wherever no natural basic column exists.
    nslack = sum(1 for s in senses if s == "<=")
    tableau: list[list[Fraction]] = []
    basis: list[int] = []
    artificial_from = nvars + nslack
    nart = 0
    slack_idx = 0
    art_plan: list[int | None] = []
    for row, sense in zip(rows, senses):
        flip = row[-1] < 0
        body = [-v if flip else v for v in row[:-1]]
        rhs = -row[-1] if flip else row[-1]
        slacks = [Fraction(0)] * nslack
        if sense == "<=":
            slacks[slack_idx] = Fraction(-1) if flip else Fraction(1)
            natural = None if flip else nvars + slack_idx
            slack_idx += 1
        else:
            natural = None
        if natural is None:
            art_plan.append(artificial_from + nart)
            nart += 1
        else:
            art_plan.append(None)
        tableau.append(body + slacks + [rhs])
        basis.append(natural if natural is not None else -1)

    ncols = nvars + nslack + nart
    for r, art in enumerate(art_plan):
        arts = [Fraction(0)] * nart
        if art is not None:
            arts[art - artificial_from] = Fraction(1)
            basis[r] = art
        tableau[r] = tableau[r][:-1] + arts + [tableau[r][-1]]

    def pivot(obj: list[Fraction], r: int, col: int) -> None:
        piv = tableau[r][col]
        tableau[r] = [v / piv for v in tableau[r]]
        for rr in range(m):
            if rr != r and tableau[rr][col] != 0:
                f = tableau[rr][col]
                tableau[rr] = [v - f * w for v, w in zip(tableau[rr], tableau[r])]
        if obj[col] != 0:
            f = obj[col]
            for j in range(ncols + 1):
                obj[j] -= f * tableau[r][j]
        basis[r] = col

    def run(obj: list[Fraction], allowed: int) -> None:
        # Bland: entering = lowest improving column, leaving = lowest basic
        # variable among the minimum-ratio rows.
        while True:
            col = next((j for j in range(allowed) if obj[j] > 0), None)
            if col is None:
                return
            best = None
            for r in range(m):
                a = tableau[r][col]
                if a > 0:
                    ratio = tableau[r][-1] / a
                    if best is None or ratio < best[0] or (ratio == best[0] and basis[r] < basis[best[1]]):
                        best = (ratio, r)
            if best is None:
                raise Unbounded("improving column has no positive entries")
            pivot(obj, best[1], col)

    def objective_row(costs: list[Fraction]) -> list[Fraction]:
        obj = list(costs) + [Fraction(0)] * (ncols - len(costs) + 1)
        for r in range(m):
            cb = obj_costs_full[basis[r]]
            if cb != 0:
                for j in range(ncols + 1):
                    obj[j] -= cb * tableau[r][j]
        return obj

    if nart:
        obj_costs_full = [Fraction(0)] * ncols + [Fraction(0)]
        for k in range(nart):
            obj_costs_full[artificial_from + k] = Fraction(-1)
        phase1 = objective_row([Fraction(0)] * ncols)
        # expressed through the artificial basis: add artificial rows back in
        phase1 = [Fraction(0)] * (ncols + 1)
        for r in range(m):
            if basis[r] >= artificial_from:
                for j in range(ncols + 1):
                    phase1[j] += tableau[r][j]
        for k in range(nart):
            phase1[artificial_from + k] = Fraction(0)
        run(phase1, artificial_from)
        infeas = sum(tableau[r][-1] for r in range(m) if basis[r] >= artificial_from)
        if infeas != 0:
            raise Infeasible(f"phase 1 left total infeasibility {infeas}")
        # drive remaining (degenerate) artificials out of the basis
        for r in range(m):
            if basis[r] >= artificial_from:
                col = next((j for j in range(artificial_from) if tableau[r][j] != 0), None)
                if col is not None:
                    pivot(phase1, r, col)
        keep = [r for r in range(m) if basis[r] < artificial_from]
        tableau[:] = [tableau[r] for r in keep]
        basis[:] = [basis[r] for r in keep]
        m = len(tableau)

    obj_costs_full = c + [Fraction(0)] * (ncols - nvars) + [Fraction(0)]
    obj = [obj_costs_full[j] for j in range(ncols)] + [Fraction(0)]
    for r in range(m):
        cb = obj_costs_full[basis[r]]
        if cb != 0:
            for j in range(ncols + 1):
                obj[j] -= cb * tableau[r][j]
    run(obj, artificial_from)

    x = [Fraction(0)] * nvars
    value = Fraction(0)
    for r in range(m):
        if basis[r] < nvars:
            x[basis[r]] = tableau[r][-1]
    for j, v in enumerate(x):
        value += c[j] * v
    return LPResult(value, tuple(x), tuple(sorted(basis)))
