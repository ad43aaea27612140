"""Binomials as integer vectors.

The vector w stands for bin(w) = x^{w+} - x^{w-}; a vector is "oriented"
under an order when x^{w+} is the initial term. Subtracting vectors is
S-polynomial formation and reduction with the common monomial factor
already divided out, so everything here is automatically saturated.
"""

from .errors import TerminationError
from .linalg import check_int64
from .order import neg, orient, pos

MAX_REDUCTION_STEPS = 1_000_000


def divides(a, b):
    """a <= b componentwise (for nonnegative exponent vectors)."""
    return all(x <= y for x, y in zip(a, b))


def coprime(a, b):
    return not any(x and y for x, y in zip(a, b))


def lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def sub(u, v):
    return check_int64(tuple(a - b for a, b in zip(u, v)))


def add(u, v):
    return check_int64(tuple(a + b for a, b in zip(u, v)))


def spair(u, v):
    """u - v, or None when the heads of u and v are coprime."""
    if coprime(pos(u), pos(v)):
        return None
    return sub(u, v)


def reduce_monomial(u, G, heads=None, stats=None):
    """Normal form of the monomial x^u: replace x^u by x^{u - g+ + g-}.

    Only needs the heads of G; the result is the standard monomial in the
    fiber of u when G is a Groebner basis.
    """
    if heads is None:
        heads = [pos(g) for g in G]
    u = tuple(u)
    for _ in range(MAX_REDUCTION_STEPS):
        for g, h in zip(G, heads):
            if divides(h, u):
                # head and tail have disjoint support: take k steps at once
                k = min(x // y for x, y in zip(u, h) if y)
                u = check_int64(tuple(a - k * b for a, b in zip(u, g)))
                if stats is not None:
                    stats.reductions += k
                break
        else:
            return u
    raise TerminationError("monomial reduction did not terminate")


def normal_form(w, G, ord, heads=None, tails=True, stats=None):
    """Fully reduced representative of bin(w) modulo bin(G).

    Head steps subtract g when g+ divides w+; tail steps add g when g+
    divides w-. The vector is reoriented after every step. A vector with no
    negative entries is read as the monomial x^w and reduced as such unless
    the order is global (otherwise x^w and 1 are not comparable in a
    meaningful way).
    """
    w = tuple(w)
    if not any(w):
        return w
    if not ord.is_global():
        if all(x >= 0 for x in w):
            return reduce_monomial(w, G, heads, stats)
        if all(x <= 0 for x in w):
            return tuple(-x for x in reduce_monomial(tuple(-x for x in w), G, heads, stats))
    return reduce_binomial(w, G, ord, heads, tails, stats)


def reduce_binomial(w, G, ord, heads=None, tails=True, stats=None):
    """Binomial reduction of bin(w); see normal_form."""
    w = tuple(w)
    if not any(w):
        return w
    if heads is None:
        heads = [pos(g) for g in G]
    w = orient(ord, w)
    for _ in range(MAX_REDUCTION_STEPS):
        wp = pos(w)
        for g, h in zip(G, heads):
            if divides(h, wp):
                w = sub(w, g)
                break
        else:
            if not tails:
                return w
            wn = neg(w)
            for g, h in zip(G, heads):
                if divides(h, wn):
                    w = add(w, g)
                    break
            else:
                return w
        if stats is not None:
            stats.reductions += 1
        if not any(w):
            return w
        w = orient(ord, w)
    raise TerminationError("reduction did not terminate; is the grading positive?")
