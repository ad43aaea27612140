"""Independent oracles and instance generators shared by the tests.

Nothing here calls into the code paths under test except for building
inputs; the oracles use plain dict polynomials over Q.
"""

import itertools
import random
from fractions import Fraction

# criterion number -> "PASS ..." / "FAIL ..." line, filled by test_acceptance
ACCEPTANCE = {}

# ---------------------------------------------------------------- polynomials


def _key(matrix, u):
    return tuple(sum(a * b for a, b in zip(row, u)) for row in matrix)


def _lead(f, matrix):
    return max(f, key=lambda u: _key(matrix, u))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _mul_term(f, m, c):
    return {tuple(x + y for x, y in zip(u, m)): c * a for u, a in f.items()}


def _add(f, g):
    h = dict(f)
    for u, a in g.items():
        h[u] = h.get(u, 0) + a
        if h[u] == 0:
            del h[u]
    return h


def _reduce(f, G, matrix, full=True):
    """Remainder of f on division by G (dict polynomials, monic heads)."""
    f = dict(f)
    rem = {}
    leads = [(_lead(g, matrix), g) for g in G]
    while f:
        u = _lead(f, matrix)
        c = f[u]
        for lu, g in leads:
            if _divides(lu, u):
                m = tuple(x - y for x, y in zip(u, lu))
                f = _add(f, _mul_term(g, m, -c / g[lu]))
                break
        else:
            if not full:
                return _add(f, rem)
            rem[u] = c
            del f[u]
    return rem


def poly_groebner(F, matrix):
    """Reduced Groebner basis over Q of the polynomials F (dicts).

    Plain Buchberger with all pairs; the order is the matrix order with
    rows `matrix`. Inputs must be homogeneous for a positive grading when
    the order is not a well-order.
    """
    G = [dict(f) for f in F if f]
    pairs = list(itertools.combinations(range(len(G)), 2))
    while pairs:
        i, j = pairs.pop()
        f, g = G[i], G[j]
        lf, lg = _lead(f, matrix), _lead(g, matrix)
        if all(not (x and y) for x, y in zip(lf, lg)):
            continue
        L = tuple(max(x, y) for x, y in zip(lf, lg))
        s = _add(_mul_term(f, tuple(a - b for a, b in zip(L, lf)), Fraction(1) / f[lf]),
                 _mul_term(g, tuple(a - b for a, b in zip(L, lg)), -Fraction(1) / g[lg]))
        r = _reduce(s, G, matrix)
        if r:
            G.append(r)
            pairs.extend((k, len(G) - 1) for k in range(len(G) - 1))
    # minimalize and interreduce
    G.sort(key=lambda f: _key(matrix, _lead(f, matrix)))
    mins = []
    for f in G:
        lf = _lead(f, matrix)
        if not any(_divides(_lead(g, matrix), lf) for g in mins):
            mins = [g for g in mins if not _divides(lf, _lead(g, matrix))]
            mins.append(f)
    out = []
    for i, f in enumerate(mins):
        r = _reduce(f, mins[:i] + mins[i + 1:], matrix)
        lr = _lead(r, matrix)
        out.append({u: a / r[lr] for u, a in r.items()})
    return out


def binomial_poly(w):
    p = tuple(max(x, 0) for x in w)
    m = tuple(max(-x, 0) for x in w)
    return _add({p: Fraction(1)}, {m: Fraction(-1)})


def monomial_poly(u):
    return {tuple(u): Fraction(1)}


def poly_heads(G, matrix):
    return {_lead(g, matrix) for g in G}


def poly_basis_as_vectors(G, matrix):
    """Reduced binomial GB as oriented vectors (head minus tail)."""
    out = set()
    for g in G:
        assert len(g) == 2, g
        h = _lead(g, matrix)
        t = next(u for u in g if u != h)
        out.add(tuple(a - b for a, b in zip(h, t)))
    return out


# --------------------------------------------------------------- knapsacks


def knapsack_dp(a, b):
    """Table best[s] = some x with a.x = s, or None; plus representation counts."""
    reach = [None] * (b + 1)
    reach[0] = (0,) * len(a)
    for s in range(1, b + 1):
        for i, ai in enumerate(a):
            if ai <= s and reach[s - ai] is not None:
                x = list(reach[s - ai])
                x[i] += 1
                reach[s] = tuple(x)
                break
    return reach


def fiber(a_rows, b):
    """All x in N^n with A x = b, A given by rows with positive first row."""
    n = len(a_rows[0])
    first = a_rows[0]
    out = []

    def rec(i, x, rest):
        if i == n:
            if rest == 0 and all(sum(r[j] * x[j] for j in range(n)) == bb
                                 for r, bb in zip(a_rows[1:], b[1:])):
                out.append(tuple(x))
            return
        for k in range(rest // first[i] + 1):
            x.append(k)
            rec(i + 1, x, rest - k * first[i])
            x.pop()

    rec(0, [], b[0])
    return out


# --------------------------------------------------------------- lattices


def box_kernel_vectors(A, bound):
    """Nonzero v with A v = 0 and |v_i| <= bound (brute force)."""
    n = len(A[0])
    out = []
    for v in itertools.product(range(-bound, bound + 1), repeat=n):
        if any(v) and all(sum(r[i] * v[i] for i in range(n)) == 0 for r in A):
            out.append(v)
    return out


def random_grading(rng, n, d):
    A = [tuple(rng.randint(1, 4) for _ in range(n))]
    for _ in range(d - 1):
        A.append(tuple(rng.randint(0, 3) for _ in range(n)))
    return tuple(A)


def random_instances(seed, count, max_n=5, max_entry=4):
    """Positively graded lattice ideals with small LLL-reduced kernels.

    Yields (A, kernel basis) with every kernel entry bounded by max_entry.
    """
    from latticewalk.lattice import kernel_basis, lll_reduce

    rng = random.Random(seed)
    made = 0
    while made < count:
        n = rng.randint(3, max_n)
        d = rng.randint(1, 2)
        A = random_grading(rng, n, d)
        K = kernel_basis(A)
        if not K:
            continue
        K = lll_reduce(K)
        if max(abs(x) for v in K for x in v) > max_entry:
            continue
        made += 1
        yield A, K


def random_weight(rng, n, lo=-5, hi=5):
    return tuple(rng.randint(lo, hi) for _ in range(n))


# --------------------------------------------------------------- labels


def parse_binomial(s, variables):
    """'a^2 c - b^2 e' -> exponent difference vector over `variables`."""
    left, right = s.split("-")

    def mono(t):
        v = [0] * len(variables)
        for part in t.split():
            if "^" in part:
                x, e = part.split("^")
                v[variables.index(x)] += int(e)
            else:
                for ch in part:
                    v[variables.index(ch)] += 1
        return v

    l, r = mono(left), mono(right)
    return tuple(x - y for x, y in zip(l, r))


# --------------------------------------------------------------- octagon

OCTAGON = ((1, 1, 1, 1, 1), (0, 1, 2, 1, 0), (0, 0, 1, 2, 1))

OCTAGON_CELLS = [
    ["a^2 d^2 - c e^3", "b^2 e - a^2 c", "b e^2 - a^2 d", "b d - c e"],
    ["c e^3 - a^2 d^2", "b^2 e - a^2 c", "b e^2 - a^2 d", "b d - c e"],
    ["b^2 e - a^2 c", "a^2 d - b e^2", "b d - c e"],
    ["a^2 c - b^2 e", "a^2 d - b e^2", "b d - c e"],
    ["a^2 c - b^2 e", "a^2 d - b e^2", "c e - b d"],
    ["a^2 c - b^2 e", "b e^2 - a^2 d", "c e - b d"],
    ["a^2 c^2 - b^3 d", "b^2 e - a^2 c", "b e^2 - a^2 d", "c e - b d"],
    ["b^3 d - a^2 c^2", "b^2 e - a^2 c", "b e^2 - a^2 d", "c e - b d"],
]

OCTAGON_TRUNCATED_CELLS = [
    ["b^2 e - a^2 c", "b e^2 - a^2 d", "b d - c e"],
    ["b^2 e - a^2 c", "a^2 d - b e^2", "b d - c e"],
    ["a^2 c - b^2 e", "a^2 d - b e^2", "b d - c e"],
    ["a^2 c - b^2 e", "a^2 d - b e^2", "c e - b d"],
    ["a^2 c - b^2 e", "b e^2 - a^2 d", "c e - b d"],
    ["b^2 e - a^2 c", "b e^2 - a^2 d", "c e - b d"],
]


def label_sets(cells):
    return {frozenset(parse_binomial(s, "abcde") for s in cell) for cell in cells}
