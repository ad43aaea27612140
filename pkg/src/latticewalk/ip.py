"""Integer programming with test sets: knapsack feasibility and optimization."""

from dataclasses import dataclass
from typing import Optional, Tuple

from .binomial import reduce_monomial
from .buchberger import truncated_buchberger
from .errors import DimensionError, GeometryError, LatticeWalkError
from .lattice import kernel_basis, lll_reduce, saturate
from .linalg import mat_vec
from .order import ALL, Grading, RhsBound, WalkContext, validate_positive_grading, weight_order
from .walk import generic_walk


class InfeasibleStart(LatticeWalkError, ValueError):
    """The starting point supplied to optimize is not in the fiber."""


@dataclass(frozen=True)
class IPInstance:
    """maximize c.x subject to a.x = b, x in N^n."""

    a: Tuple[int, ...]
    b: int
    c: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if any(x < 1 for x in self.a):
            raise ValueError("constraint coefficients must be positive")
        if self.b < 0:
            raise ValueError("right-hand side must be nonnegative")
        if self.c is not None and len(self.c) != len(self.a):
            raise DimensionError("cost vector length differs from the constraint row")


def feasibility_ideal(a):
    """Vectors of x_i - t^{a_i} in Z^{1+n}, t first."""
    a = tuple(a)
    if any(x < 1 for x in a):
        raise ValueError("constraint coefficients must be positive")
    n = len(a)
    return [tuple([-ai] + [int(j == i) for j in range(n)]) for i, ai in enumerate(a)]


def feasibility_grading(a):
    return Grading(((1,) + tuple(a),), (1,))


def feasibility_basis(a, b=None, method="direct", truncated=False, stats=None):
    """Reduced basis of the feasibility ideal over tau = e_t (revlex ties)."""
    n = len(a)
    gens = feasibility_ideal(a)
    grading = feasibility_grading(a)
    truncation = RhsBound(b) if truncated else ALL
    target = weight_order((1,) + (0,) * n)
    if method == "direct":
        return truncated_buchberger(gens, target, truncation, grading, stats=stats)
    if method == "walk":
        # the generators are a Groebner basis over sigma = -e_t: heads x_i
        source = weight_order((-1,) + (0,) * n)
        return generic_walk(gens, WalkContext(source, target), truncation, grading, stats=stats)
    raise ValueError(f"unknown method {method!r}")


def solve_feasibility(a, b, method="direct", truncated=False, stats=None):
    """A point x in N^n with a.x = b, or None if there is none."""
    G = feasibility_basis(a, b, method, truncated, stats)
    nf = reduce_monomial((b,) + (0,) * len(a), G.elements)
    if nf[0] != 0:
        return None
    return nf[1:]


def toric_ideal(A, ord=None, truncation=ALL, stats=None):
    """Reduced basis of I_A: saturate an LLL-reduced kernel basis of A."""
    grading = validate_positive_grading(Grading(tuple(tuple(r) for r in A)))
    K = kernel_basis(grading.A, grading.n)
    if K:
        K = list(lll_reduce(K))
    ord = ord or weight_order(grading.weight_vector())
    if truncation.is_all:
        return saturate(K, ord, grading, stats=stats)
    markov = saturate(K, None, grading, stats=stats)
    return truncated_buchberger(markov.elements, ord, truncation, grading, stats=stats)


def optimize(A, b, c, x0, truncated=False, stats=None):
    """Maximize c.x over {x in N^n : A x = b} by reducing x0 with a test set.

    The test set is the reduced basis of I_A over the weight -c; with
    truncated=True (one-row A only) it is truncated at the right-hand side.
    """
    A = tuple(tuple(r) for r in A)
    b = tuple(b) if isinstance(b, (tuple, list)) else (b,)
    x0 = tuple(x0)
    if any(x < 0 for x in x0) or mat_vec(A, x0) != b:
        raise InfeasibleStart(f"x0 = {x0} is not a feasible point")
    if c is None:
        raise ValueError("optimize needs a cost vector")
    truncation = ALL
    if truncated:
        if len(A) != 1:
            raise GeometryError("truncation at the right-hand side needs a one-row matrix")
        truncation = RhsBound(b[0])
    ord = weight_order(tuple(-x for x in c))
    G = toric_ideal(A, ord, truncation, stats=stats)
    return reduce_monomial(x0, G.elements)
