"""Homogeneous Buchberger algorithm on vectors, with degree truncation."""

import heapq
from dataclasses import dataclass
from itertools import count
from typing import NamedTuple, Optional, Tuple

from .binomial import coprime, divides, lcm, reduce_binomial, sub
from .errors import DimensionError, GeometryError, TerminationError
from .linalg import dot
from .order import ALL, Grading, TermOrder, TruncatingPredicate, check_homogeneous, orient, pos, validate_positive_grading


@dataclass
class BuchbergerStats:
    pairs: int = 0
    skipped: int = 0
    reductions: int = 0
    max_size: int = 0


@dataclass(frozen=True)
class GroebnerBasis:
    elements: Tuple[Tuple[int, ...], ...]
    order: TermOrder
    truncation: TruncatingPredicate = ALL
    grading: Optional[Grading] = None
    reduced: bool = False

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def heads(self):
        return [pos(w) for w in self.elements]

    def key(self):
        """Order-independent identity of the basis (as a set of vectors)."""
        return frozenset(self.elements)


def canonical(elements, ord):
    """Sort oriented vectors by ascending head."""
    return tuple(sorted(elements, key=lambda w: (ord.key(pos(w)), w)))


def prepare_grading(ord, truncation, grading):
    """Validate the termination certificate; returns (grading, pair weight)."""
    if grading is not None:
        if grading.n != ord.n:
            raise TerminationError("grading and order have different numbers of variables")
        grading = validate_positive_grading(grading)
        return grading, grading.weight_vector()
    if not truncation.is_all:
        raise TerminationError("truncation needs a grading")
    if not ord.is_global():
        raise TerminationError("cannot certify termination: no positive grading and the order is not global")
    return None, None


def truncated_buchberger(gens, ord, truncation=ALL, grading=None, stats=None):
    """Reduced (truncated) Groebner basis of the binomials bin(v), v in gens.

    All arithmetic is on vectors, so the computed ideal is closed under
    dividing out monomial factors. When gens generate the lattice ideal
    (for instance after `lattice.saturate`) the result is its reduced
    Omega-Groebner basis. S-pairs are taken in ascending weighted degree and
    discarded when the degree of their lcm falls outside the truncation.
    """
    grading, wt = prepare_grading(ord, truncation, grading)
    if stats is None:
        stats = BuchbergerStats()

    def weight(m):
        return dot(wt, m) if wt is not None else sum(m)

    def in_omega(m):
        return truncation.is_all or truncation.contains(grading.monomial_degree(m))

    oriented = []
    for v in gens:
        v = tuple(v)
        if len(v) != ord.n:
            raise DimensionError(f"generator {v} has the wrong length")
        if not any(v):
            continue
        if grading is not None:
            check_homogeneous(grading, v)
        w = orient(ord, v)
        if in_omega(pos(w)):
            oriented.append(w)
    oriented.sort(key=lambda w: (weight(pos(w)), ord.key(pos(w)), w))

    G, heads = [], []
    queue = []
    seq = count()

    def add(w):
        h = pos(w)
        for i, hi in enumerate(heads):
            if coprime(hi, h):
                stats.skipped += 1
                continue
            m = lcm(hi, h)
            if in_omega(m):
                heapq.heappush(queue, (weight(m), next(seq), i, len(G)))
            else:
                stats.skipped += 1
        G.append(w)
        heads.append(h)
        stats.max_size = max(stats.max_size, len(G))

    for w in oriented:
        r = reduce_binomial(w, G, ord, heads, tails=False, stats=stats)
        if any(r):
            add(r)
    while queue:
        _, _, i, j = heapq.heappop(queue)
        stats.pairs += 1
        s = sub(G[i], G[j])
        if not any(s):
            continue
        r = reduce_binomial(s, G, ord, heads, tails=False, stats=stats)
        if any(r):
            add(r)
    return autoreduce(GroebnerBasis(tuple(G), ord, truncation, grading), stats=stats)


def autoreduce(G, stats=None):
    """Interreduce: minimal heads, reduced tails.

    An element whose head is divisible by another head is replaced by its
    normal form modulo the rest (dropped if zero); on a Groebner basis this
    just removes it.
    """
    ord = G.order
    work = sorted({orient(ord, w) for w in G.elements if any(w)}, key=lambda w: (ord.key(pos(w)), w))
    changed = True
    while changed:
        changed = False
        for i, w in enumerate(work):
            others = work[:i] + work[i + 1:]
            h = pos(w)
            if any(divides(pos(o), h) for o in others):
                r = reduce_binomial(w, others, ord, tails=True, stats=stats)
                work = others + ([r] if any(r) and r not in others else [])
                changed = True
                break
    out = []
    heads = [pos(w) for w in work]
    for i, w in enumerate(work):
        others = work[:i] + work[i + 1:]
        oheads = heads[:i] + heads[i + 1:]
        out.append(reduce_binomial(w, others, ord, oheads, tails=True, stats=stats))
    return GroebnerBasis(canonical(set(out), ord), ord, G.truncation, G.grading, reduced=True)


def is_reduced(elements, ord):
    heads = [pos(w) for w in elements]
    for i, w in enumerate(elements):
        if ord.sign(w) <= 0:
            return False
        tail = tuple(-x if x < 0 else 0 for x in w)
        for j, h in enumerate(heads):
            if j != i and (divides(h, heads[i]) or divides(h, tail)):
                return False
    return True


def is_groebner(G, ord, truncation=ALL, grading=None):
    """Buchberger's criterion: every S-pair with degree in Omega reduces to 0."""
    G = [tuple(w) for w in G]
    if any(ord.sign(w) <= 0 for w in G):
        return False
    heads = [pos(w) for w in G]
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if coprime(heads[i], heads[j]):
                continue
            m = lcm(heads[i], heads[j])
            if not truncation.is_all and not truncation.contains(grading.monomial_degree(m)):
                continue
            s = sub(G[i], G[j])
            if any(s) and any(reduce_binomial(s, G, ord, heads, tails=False)):
                return False
    return True


class InitialForm(NamedTuple):
    """in_omega(bin(w)): the whole binomial, or just the monomial x^{w+}."""

    vector: Tuple[int, ...]
    monomial: bool


def initial_forms(G, omega):
    """Initial forms of the elements of G with respect to the weight omega."""
    out = []
    for w in G.elements:
        s = dot(omega, w)
        if s < 0:
            raise GeometryError(f"weight {tuple(omega)} is outside the closed cone of the basis")
        if s == 0:
            out.append(InitialForm(w, False))
        else:
            out.append(InitialForm(pos(w), True))
    return out


def degree_filter(G, truncation):
    """Elements of G whose degree lies in the truncation."""
    return GroebnerBasis(
        tuple(w for w in G.elements if truncation.contains(G.grading.monomial_degree(pos(w)))),
        G.order, truncation, G.grading, reduced=G.reduced)
