"""The generic Groebner walk for lattice ideals, with optional truncation.

The walk keeps a minimal Groebner basis G (vectors oriented by the current
intermediate order) and a list of candidate facet binomials, i.e. elements
that are positive for the source order and negative for the target order,
sorted by the facet preorder. Each step crosses the facet of the smallest
candidate with a local monomial computation and lifts the result.
"""

from collections import deque
from dataclasses import dataclass, field

from .binomial import coprime, divides, lcm, sub
from .buchberger import GroebnerBasis, autoreduce, is_groebner, prepare_grading
from .errors import LatticeWalkError, TerminationError
from .order import ALL, check_homogeneous, facet_key_compare, is_candidate, orient, pos

MAX_CHAIN = 100_000


class WalkPreconditionError(LatticeWalkError, ValueError):
    pass


@dataclass
class WalkStats:
    facets_crossed: int = 0
    max_intermediate_size: int = 0
    reductions: int = 0


@dataclass
class WalkState:
    G: list
    facet_list: list
    ctx: object
    truncation: object = ALL
    grading: object = None
    stats: WalkStats = field(default_factory=WalkStats)
    max_chain: int = MAX_CHAIN

    def in_omega(self, m):
        return self.truncation.is_all or self.truncation.contains(self.grading.monomial_degree(m))

    def _facet_index(self, w):
        # binary search for the insertion point under the facet order
        lo, hi = 0, len(self.facet_list)
        while lo < hi:
            mid = (lo + hi) // 2
            if facet_key_compare(self.ctx, self.facet_list[mid], w) < 0:
                lo = mid + 1
            else:
                hi = mid
        return lo

    def insert(self, w):
        """Add w to G; if it is a candidate, place it in facet_list."""
        w = tuple(w)
        self.G.append(w)
        if is_candidate(self.ctx, w):
            self.facet_list.insert(self._facet_index(w), w)
        self.stats.max_intermediate_size = max(self.stats.max_intermediate_size, len(self.G))

    def delete(self, w):
        self.G.remove(w)
        if w in self.facet_list:
            self.facet_list.remove(w)

    def delete_where(self, pred):
        for v in [v for v in self.G if pred(v)]:
            self.delete(v)


def initialize(B, ctx, truncation=ALL, grading=None, stats=None):
    """Orient B under the source order, drop degrees outside Omega."""
    state = WalkState([], [], ctx, truncation, grading, stats or WalkStats())
    for v in B:
        v = tuple(v)
        if not any(v):
            continue
        if grading is not None:
            check_homogeneous(grading, v)
        w = orient(ctx.source, v)
        if state.in_omega(pos(w)) and w not in state.G:
            state.insert(w)
    return state


def facet_buchberger(state, facet_bin):
    """Cross the facet defined by facet_bin and lift to a new minimal basis."""
    stats = state.stats
    stats.facets_crossed += 1
    state.delete(facet_bin)
    bin_ = tuple(-x for x in facet_bin)
    bp = pos(bin_)

    # facet_bin was not a real facet: its tail is divisible by another head
    if any(divides(pos(w), bp) for w in state.G):
        for _ in range(state.max_chain):
            bp = pos(bin_)
            g = next((w for w in state.G if divides(pos(w), bp)), None)
            if g is None:
                break
            bin_ = sub(bin_, g)
            stats.reductions += 1
        else:
            raise TerminationError("reduction in facet step did not terminate")
        state.insert(tuple(-x for x in bin_))
        return state

    spairs = deque()
    for v in state.G:
        vp = pos(v)
        if coprime(bp, vp):
            continue
        if state.in_omega(lcm(bp, vp)):
            spairs.append(sub(v, bin_))
    state.delete_where(lambda v: divides(bp, pos(v)))

    steps = 0
    while spairs:
        steps += 1
        if steps > state.max_chain:
            raise TerminationError("facet computation exceeded the chain guard")
        s = spairs.popleft()
        while divides(bp, pos(s)):
            s = sub(s, bin_)
            stats.reductions += 1
        sp = pos(s)
        if not any(s) or not any(sp):
            continue
        if any(divides(pos(v), sp) for v in state.G):
            continue
        state.delete_where(lambda v: divides(sp, pos(v)))
        state.insert(s)
        if not coprime(bp, sp) and state.in_omega(lcm(bp, sp)):
            spairs.append(sub(s, bin_))
    state.insert(bin_)
    return state


def generic_walk(B, ctx, truncation=ALL, grading=None, stats=None, check=False):
    """Convert a minimal (Omega-)Groebner basis over ctx.source to the
    reduced (Omega-)Groebner basis over ctx.target."""
    grading, _ = prepare_grading(ctx.target, truncation, grading)
    state = initialize(B, ctx, truncation, grading, stats)
    if check and not is_groebner(state.G, ctx.source, truncation, grading):
        raise WalkPreconditionError("input is not a Groebner basis over the source order")
    while state.facet_list:
        facet_buchberger(state, state.facet_list[0])
        if check and not _is_intermediate_groebner(state):
            raise AssertionError("walk lost the Groebner property")
    final = [orient(ctx.target, w) for w in state.G]
    return autoreduce(GroebnerBasis(tuple(final), ctx.target, truncation, grading))


def _is_intermediate_groebner(state):
    """Check G against an explicit order realizing its current orientation."""
    from .linprog import strictly_inside, to_integer_vector
    from .order import weight_order

    n = state.ctx.source.n
    omega = strictly_inside(state.G, n)
    if omega is None:
        return False
    ord = weight_order(to_integer_vector(omega))
    return is_groebner(state.G, ord, state.truncation, state.grading)
