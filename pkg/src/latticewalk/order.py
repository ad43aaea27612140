"""Term orders, gradings, truncating predicates and the facet preorder."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .errors import DimensionError, InhomogeneousError, NotPositiveError, ZeroBinomialError
from .linalg import dot, rank
from .linprog import feasible_point

IntVec = Tuple[int, ...]

LESS, EQUAL, GREATER = -1, 0, 1


def _sign(x):
    return (x > 0) - (x < 0)


def pos(w):
    return tuple(x if x > 0 else 0 for x in w)


def neg(w):
    return tuple(-x if x < 0 else 0 for x in w)


@dataclass(frozen=True)
class TermOrder:
    """A monomial order given by a k x n integer matrix of rank n.

    x^u < x^v iff the first nonzero entry of M(v - u) is positive. The order
    is multiplicative but need not be a well-order.
    """

    matrix: Tuple[IntVec, ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", rows)
        if not rows:
            raise DimensionError("term order needs at least one row")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise DimensionError("ragged term order matrix")
        if rank(rows, n) != n:
            raise DimensionError("term order matrix must have rank n")

    @property
    def n(self):
        return len(self.matrix[0])

    def key(self, u):
        """Sort key: ascending keys are ascending monomials."""
        return tuple(dot(row, u) for row in self.matrix)

    def sign(self, w):
        """Sign of the first nonzero entry of M w (compare(w+, w-))."""
        for row in self.matrix:
            s = dot(row, w)
            if s:
                return 1 if s > 0 else -1
        return 0

    def compare(self, u, v):
        if len(u) != self.n or len(v) != self.n:
            raise DimensionError(f"expected vectors of length {self.n}")
        return self.sign(tuple(a - b for a, b in zip(u, v)))

    def is_global(self):
        """True if every variable exceeds 1, i.e. the order is a well-order."""
        for j in range(self.n):
            col = next((row[j] for row in self.matrix if row[j]), 0)
            if col <= 0:
                return False
        return True


def weight_order(c, *refinements):
    """Order by the weight c, then the given refinements, then revlex.

    The tie-break rows are -e_1, ..., -e_n: among monomials of equal weight
    the one with the smaller exponent of x_1 is larger, then x_2, ...
    """
    c = tuple(int(x) for x in c)
    n = len(c)
    for r in refinements:
        if len(r) != n:
            raise DimensionError("refinement length mismatch")
    tie = tuple(tuple(-int(i == j) for j in range(n)) for i in range(n))
    return TermOrder((c,) + tuple(tuple(r) for r in refinements) + tie)


def refine(order, *weights):
    """Prepend weight rows to an order: `order` modified by the weights."""
    for w in weights:
        if len(w) != order.n:
            raise DimensionError("weight length mismatch")
    return TermOrder(tuple(tuple(w) for w in weights) + order.matrix)


def compare(ord, u, v):
    return ord.compare(u, v)


def orient(ord, w):
    """Return +-w so that its positive part is the initial term."""
    w = tuple(w)
    if len(w) != ord.n:
        raise DimensionError(f"expected vector of length {ord.n}")
    s = ord.sign(w)
    if s == 0:
        raise ZeroBinomialError("zero binomial")
    return w if s > 0 else tuple(-x for x in w)


@dataclass(frozen=True)
class WalkContext:
    source: TermOrder
    target: TermOrder

    def __post_init__(self):
        if self.source.n != self.target.n:
            raise DimensionError("source and target orders differ in size")


def facet_compare(ctx, u, v):
    """The facet preorder between binomials bin(u) and bin(v).

    Compares T u v^t with T v u^t: the first nonzero row d of their
    difference decides, by the sign of d under the source order.
    Parallel vectors compare EQUAL.
    """
    n = ctx.source.n
    if len(u) != n or len(v) != n:
        raise DimensionError(f"expected vectors of length {n}")
    for row in ctx.target.matrix:
        tu = dot(row, u)
        tv = dot(row, v)
        if tu == 0 and tv == 0:
            continue
        d = tuple(tu * b - tv * a for a, b in zip(u, v))
        s = ctx.source.sign(d)
        if s:
            return s
        if any(d):
            # S has rank n, so a nonzero d always has a nonzero image
            raise AssertionError("unreachable")
    return EQUAL


def facet_key_compare(ctx, u, v):
    """Total order used for facet lists: the preorder, then raw lex order."""
    c = facet_compare(ctx, u, v)
    if c:
        return c
    return (u > v) - (u < v)


def is_candidate(ctx, w):
    """Source-positive and target-negative: a facet still to be crossed."""
    if len(w) != ctx.source.n:
        raise DimensionError(f"expected vector of length {ctx.source.n}")
    return ctx.source.sign(w) > 0 and ctx.target.sign(w) < 0


@dataclass(frozen=True)
class Grading:
    """Columns of A are the degrees of the variables."""

    A: Tuple[IntVec, ...]
    certificate: Optional[Tuple[Fraction, ...]] = None

    def __post_init__(self):
        A = tuple(tuple(int(x) for x in row) for row in self.A)
        object.__setattr__(self, "A", A)
        if not A:
            raise DimensionError("grading needs at least one row")
        n = len(A[0])
        if any(len(r) != n for r in A):
            raise DimensionError("ragged grading matrix")
        if self.certificate is not None:
            h = tuple(Fraction(x) for x in self.certificate)
            object.__setattr__(self, "certificate", h)
            if len(h) != len(A):
                raise DimensionError("certificate length must equal the number of rows")
            for j in range(n):
                if sum(h[i] * A[i][j] for i in range(len(A))) <= 0:
                    raise NotPositiveError(f"certificate fails on column {j}")

    @property
    def n(self):
        return len(self.A[0])

    @property
    def d(self):
        return len(self.A)

    def monomial_degree(self, u):
        return tuple(dot(row, u) for row in self.A)

    def weight_vector(self):
        """Integer positive weight h^T A scaled to integers, or None."""
        if self.certificate is None:
            return None
        from .linprog import to_integer_vector

        w = [sum(self.certificate[i] * self.A[i][j] for i in range(self.d)) for j in range(self.n)]
        return to_integer_vector(w)


def check_homogeneous(g, w):
    """Raise unless A w+ == A w-, i.e. w lies in ker A."""
    if g.monomial_degree(pos(w)) != g.monomial_degree(neg(w)):
        raise InhomogeneousError(f"vector {tuple(w)} is not in ker A")


def degree(g, w):
    """Degree of bin(w): A w+, after checking A w+ == A w-.

    A vector with no negative entries is read as the monomial x^w.
    """
    if len(w) != g.n:
        raise DimensionError(f"expected vector of length {g.n}")
    dp = g.monomial_degree(pos(w))
    if all(x >= 0 for x in w):
        return dp
    dn = g.monomial_degree(neg(w))
    if dp != dn:
        raise InhomogeneousError(f"vector {tuple(w)} is not in ker A")
    return dp


def validate_positive_grading(g):
    """Return g with a positivity certificate h (h^T A > 0), or raise."""
    if g.certificate is not None:
        return g
    d, n = g.d, g.n
    for i in range(d):
        for s in (1, -1):
            if all(s * x > 0 for x in g.A[i]):
                h = tuple(Fraction(s * int(k == i)) for k in range(d))
                return Grading(g.A, h)
    cols = [tuple(g.A[i][j] for i in range(d)) for j in range(n)]
    h = feasible_point(d, inequalities=[(a, 1) for a in cols])
    if h is None:
        raise NotPositiveError("grading not positive")
    return Grading(g.A, h)


class TruncatingPredicate:
    """A degree set closed under taking summands."""

    def contains(self, s):
        raise NotImplementedError

    @property
    def is_all(self):
        return False


@dataclass(frozen=True)
class All(TruncatingPredicate):
    def contains(self, s):
        return True

    @property
    def is_all(self):
        return True


@dataclass(frozen=True)
class LinearBound(TruncatingPredicate):
    """{s : h.s <= bound} (or < bound when not inclusive); h >= 0."""

    h: Tuple[Fraction, ...]
    bound: Fraction
    inclusive: bool = True

    def __post_init__(self):
        h = tuple(Fraction(x) for x in self.h)
        if any(x < 0 for x in h):
            raise ValueError("linear bound needs a nonnegative functional")
        object.__setattr__(self, "h", h)
        object.__setattr__(self, "bound", Fraction(self.bound))

    def contains(self, s):
        if len(s) != len(self.h):
            raise DimensionError("degree length does not match the functional")
        v = sum(a * b for a, b in zip(self.h, s))
        return v <= self.bound if self.inclusive else v < self.bound


@dataclass(frozen=True)
class RhsBound(TruncatingPredicate):
    """Omega_b for a one-row grading: degrees s with 0 <= s <= b."""

    b: int

    def __post_init__(self):
        if self.b < 0:
            raise ValueError("right-hand side must be nonnegative")

    def contains(self, s):
        if len(s) != 1:
            raise DimensionError("RhsBound needs a one-row grading")
        return s[0] <= self.b


ALL = All()


def omega_contains(p, s):
    return p.contains(tuple(s))
