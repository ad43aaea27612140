"""Exact rational feasibility LP (phase-one simplex, Bland's rule).

Only feasibility is needed here: positivity certificates for gradings and
interior points of cones and facets. Problem sizes are desk scale, so a
dense Fraction tableau is adequate.
"""

from fractions import Fraction


def feasible_point(n, equalities=(), inequalities=()):
    """Find x in Q^n (free variables) satisfying the given constraints.

    equalities:   iterable of (a, b) meaning a.x == b
    inequalities: iterable of (a, b) meaning a.x >= b

    Returns a tuple of Fractions, or None if the system is infeasible.
    """
    eqs = [(list(a), Fraction(b)) for a, b in equalities]
    ges = [(list(a), Fraction(b)) for a, b in inequalities]
    m = len(eqs) + len(ges)
    if m == 0:
        return tuple(Fraction(0) for _ in range(n))

    # columns: p (n), q (n), surplus (len(ges)), artificial (m)
    nsur = len(ges)
    ncol = 2 * n + nsur + m
    rows = []
    rhs = []
    for k, (a, b) in enumerate(eqs + ges):
        row = [Fraction(0)] * ncol
        for j, x in enumerate(a):
            row[j] = Fraction(x)
            row[n + j] = -Fraction(x)
        if k >= len(eqs):
            row[2 * n + (k - len(eqs))] = Fraction(-1)
        if b < 0:
            row = [-x for x in row]
            b = -b
        row[2 * n + nsur + k] = Fraction(1)
        rows.append(row)
        rhs.append(b)

    basis = [2 * n + nsur + k for k in range(m)]
    # phase-one objective: minimize sum of artificials; reduced costs
    art = set(basis)
    cost = [Fraction(0) if j in art else -sum(rows[i][j] for i in range(m))
            for j in range(ncol)]
    obj = -sum(rhs)

    while True:
        enter = next((j for j in range(ncol) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if rows[i][enter] > 0:
                ratio = rhs[i] / rows[i][enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            # unbounded direction cannot occur in phase one (objective >= 0)
            break
        i = best[1]
        piv = rows[i][enter]
        rows[i] = [x / piv for x in rows[i]]
        rhs[i] = rhs[i] / piv
        for k in range(m):
            if k != i and rows[k][enter] != 0:
                f = rows[k][enter]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[i])]
                rhs[k] -= f * rhs[i]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, rows[i])]
        obj -= f * rhs[i]
        basis[i] = enter

    if obj != 0:
        return None
    values = [Fraction(0)] * ncol
    for i, j in enumerate(basis):
        values[j] = rhs[i]
    return tuple(values[j] - values[n + j] for j in range(n))


def strictly_inside(normals, n, on=()):
    """A point w with w.u >= 1 for every u in normals and w.v == 0 for v in on."""
    return feasible_point(n, [(v, 0) for v in on], [(u, 1) for u in normals])


def to_integer_vector(x):
    """Scale a rational vector by the lcm of its denominators."""
    from math import lcm

    den = 1
    for q in x:
        den = lcm(den, Fraction(q).denominator)
    return tuple(int(Fraction(q) * den) for q in x)
