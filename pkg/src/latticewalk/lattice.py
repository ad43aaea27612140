"""Lattices: kernels, LLL reduction and lattice-ideal saturation."""

from dataclasses import dataclass
from fractions import Fraction

from .buchberger import truncated_buchberger
from .errors import DimensionError, TerminationError
from .linalg import check_int64, kernel_basis, rank
from .order import ALL, Grading, TermOrder, validate_positive_grading, weight_order

__all__ = [
    "LLLResult",
    "gram_schmidt",
    "is_lll_reduced",
    "kernel_basis",
    "lll_reduce",
    "orthogonal_grading",
    "saturate",
]


def gram_schmidt(basis):
    """Exact Gram-Schmidt data: (squared norms of b*_i, mu matrix)."""
    k = len(basis)
    bstar = []
    norms = []
    mu = [[Fraction(0)] * k for _ in range(k)]
    for i, b in enumerate(basis):
        v = [Fraction(x) for x in b]
        for j in range(i):
            if norms[j] == 0:
                continue
            mu[i][j] = sum(Fraction(x) * y for x, y in zip(b, bstar[j])) / norms[j]
            v = [a - mu[i][j] * c for a, c in zip(v, bstar[j])]
        bstar.append(v)
        norms.append(sum(x * x for x in v))
    return norms, mu


@dataclass(frozen=True)
class LLLResult:
    basis: tuple
    transform: tuple  # rows: output_i = sum_j transform[i][j] * input_j


def lll_reduce(basis, delta=Fraction(3, 4), with_transform=False):
    """LLL-reduce a list of independent integer vectors (rows), exactly."""
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta <= 1:
        raise ValueError("delta must lie in (1/4, 1]")
    b = [list(v) for v in basis]
    k = len(b)
    if k and rank(b) < k:
        raise DimensionError("lll_reduce needs linearly independent vectors")
    U = [[int(i == j) for j in range(k)] for i in range(k)]
    norms, mu = gram_schmidt(b)
    i = 1
    while i < k:
        for j in range(i - 1, -1, -1):
            q = round(mu[i][j])
            if q:
                b[i] = [x - q * y for x, y in zip(b[i], b[j])]
                U[i] = [x - q * y for x, y in zip(U[i], U[j])]
                for l in range(j):
                    mu[i][l] -= q * mu[j][l]
                mu[i][j] -= q
        if norms[i] >= (delta - mu[i][i - 1] ** 2) * norms[i - 1]:
            i += 1
        else:
            b[i], b[i - 1] = b[i - 1], b[i]
            U[i], U[i - 1] = U[i - 1], U[i]
            norms, mu = gram_schmidt(b)
            i = max(i - 1, 1)
    for v in b:
        check_int64(v)
    out = tuple(tuple(v) for v in b)
    if with_transform:
        return LLLResult(out, tuple(tuple(r) for r in U))
    return out


def is_lll_reduced(basis, delta=Fraction(3, 4)):
    """Size reduction |mu_ij| <= 1/2 and the Lovasz condition, exactly."""
    norms, mu = gram_schmidt(basis)
    for i in range(len(basis)):
        for j in range(i):
            if abs(mu[i][j]) > Fraction(1, 2):
                return False
    for i in range(1, len(basis)):
        if norms[i] < (Fraction(delta) - mu[i][i - 1] ** 2) * norms[i - 1]:
            return False
    return True


def orthogonal_grading(B, n):
    """Grading whose rows span the orthogonal complement of span(B)."""
    rows = kernel_basis([tuple(v) for v in B], n) if B else [
        tuple(int(i == j) for j in range(n)) for i in range(n)]
    if not rows:
        raise TerminationError("lattice has full rank; no grading exists")
    return Grading(tuple(rows))


def _has_positive_vector(B):
    return any(all(x >= 0 for x in v) and any(v) for v in B) or any(
        all(x <= 0 for x in v) and any(v) for v in B)


def saturation_order(grading, i):
    """Weight order by the positive grading, ties broken revlex with x_i last."""
    n = grading.n
    w = grading.weight_vector()
    rows = [w, tuple(-int(j == i) for j in range(n))]
    rows += [tuple(-int(j == k) for j in range(n)) for k in range(n) if k != i]
    return TermOrder(tuple(rows))


def saturate(B, ord=None, grading=None, stats=None):
    """Reduced Groebner basis of the lattice ideal I_L, L spanned by B.

    For a positively graded lattice ideal this runs one vector Buchberger
    pass per variable x_i, under an order where x_i is the revlex-smallest
    variable; after pass i the ideal is saturated with respect to x_i. A
    final pass computes the reduced basis over `ord` (default: the grading
    weight with revlex ties). If B contains a positive vector, I_B is
    already the lattice ideal and a single pass under a global order does.
    """
    B = [tuple(v) for v in B if any(v)]
    if ord is not None:
        n = ord.n
    elif grading is not None:
        n = grading.n
    elif B:
        n = len(B[0])
    else:
        raise DimensionError("cannot infer the number of variables")
    if any(len(v) != n for v in B):
        raise DimensionError("vectors of different lengths")

    if _has_positive_vector(B):
        if ord is None or not ord.is_global():
            raise TerminationError("cannot certify termination: lattice meets N^n and the order is not global")
        return truncated_buchberger(B, ord, ALL, None, stats=stats)

    if grading is None:
        grading = orthogonal_grading(B, n)
    try:
        grading = validate_positive_grading(grading)
    except TerminationError as e:
        raise TerminationError(f"cannot certify termination: {e}") from None
    if ord is None:
        ord = weight_order(grading.weight_vector())

    current = B
    for i in range(n):
        current = truncated_buchberger(current, saturation_order(grading, i), ALL, grading, stats=stats).elements
    return truncated_buchberger(current, ord, ALL, grading, stats=stats)
