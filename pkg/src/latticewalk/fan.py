"""Enumeration of (truncated) Groebner fans of lattice ideals by facet flips."""

from collections import deque
from dataclasses import dataclass, field
from typing import List, Tuple

from .buchberger import GroebnerBasis, truncated_buchberger
from .errors import GeometryError, TerminationError
from .linalg import dot, kernel_basis
from .linprog import strictly_inside, to_integer_vector
from .order import ALL, WalkContext, validate_positive_grading, weight_order
from .walk import generic_walk


@dataclass(frozen=True)
class FanCell:
    """Closed cone {w : w.v >= 0 for v in basis} of a reduced basis."""

    basis: GroebnerBasis
    normals: Tuple[Tuple[int, ...], ...]
    facets: Tuple[Tuple[int, ...], ...]
    interior: Tuple[int, ...]

    def key(self):
        return self.basis.key()

    def contains(self, omega):
        return all(dot(omega, v) >= 0 for v in self.normals)


def _parallel(u, v):
    """u is a positive multiple of v."""
    n = len(u)
    for i in range(n):
        for j in range(i + 1, n):
            if u[i] * v[j] != u[j] * v[i]:
                return False
    return dot(u, v) > 0


def cone_of(G):
    """The cell of a reduced basis, with irredundant facets found by exact LP."""
    n = G.order.n
    normals = tuple(G.elements)
    interior = strictly_inside(normals, n)
    if interior is None:
        raise GeometryError("basis has an empty open cone; is it reduced?")
    facets = []
    for v in normals:
        if any(_parallel(f, v) for f in facets):
            continue
        others = [u for u in normals if not _parallel(u, v)]
        if strictly_inside(others, n, on=[v]) is not None:
            facets.append(v)
    return FanCell(G, normals, tuple(facets), to_integer_vector(interior))


def flip(cell, v):
    """The neighbouring maximal cell across the facet with normal v.

    Picks a point in the relative interior of the facet and walks from the
    cell's interior to the order "facet point, then -v", whose cell is the
    one just across the facet.
    """
    v = tuple(v)
    if v not in cell.facets:
        raise GeometryError(f"{v} is not a facet of the cell")
    n = len(v)
    others = [u for u in cell.normals if not _parallel(u, v)]
    point = strictly_inside(others, n, on=[v])
    point = to_integer_vector(point)
    G = cell.basis
    source = weight_order(cell.interior)
    target = weight_order(point, tuple(-x for x in v))
    walked = generic_walk(G.elements, WalkContext(source, target), G.truncation, G.grading)
    return cone_of(walked)


@dataclass
class FanResult:
    cells: List[FanCell]
    edges: List[Tuple[int, int]]
    gens: tuple
    truncation: object
    grading: object
    lineality: list = field(default_factory=list)

    def __len__(self):
        return len(self.cells)

    def index(self, basis):
        key = basis.key()
        for i, c in enumerate(self.cells):
            if c.key() == key:
                return i
        return None


def enumerate_fan(gens, truncation=ALL, grading=None, start=None, max_cells=10_000):
    """Breadth-first closure under flips of the maximal cells of the fan.

    gens must generate the lattice ideal; grading must be positive. Cells
    are deduplicated by their reduced basis.
    """
    if grading is None:
        raise TerminationError("enumerate_fan needs a positive grading")
    grading = validate_positive_grading(grading)
    n = grading.n
    if start is None:
        start = weight_order(grading.weight_vector())
    first = cone_of(truncated_buchberger(gens, start, truncation, grading))
    cells = [first]
    seen = {first.key(): 0}
    edges = set()
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for v in cells[i].facets:
            nb = flip(cells[i], v)
            j = seen.get(nb.key())
            if j is None:
                if len(cells) >= max_cells:
                    raise TerminationError(f"more than {max_cells} cells")
                j = len(cells)
                seen[nb.key()] = j
                cells.append(nb)
                queue.append(j)
            edges.add((min(i, j), max(i, j)))
    lineality = kernel_basis(list(first.normals), n) if first.normals else [
        tuple(int(i == j) for j in range(n)) for i in range(n)]
    return FanResult(cells, sorted(edges), tuple(gens), truncation, grading, lineality)


def locate_cell(fan, omega):
    """The enumerated cell whose interior contains the generic weight omega."""
    omega = tuple(omega)
    G = truncated_buchberger(fan.gens, weight_order(omega), fan.truncation, fan.grading)
    if any(dot(omega, v) == 0 for v in G.elements):
        raise GeometryError(f"weight {omega} is not generic; perturb it")
    i = fan.index(G)
    if i is None:
        raise GeometryError(f"no enumerated cell contains {omega}; the fan is incomplete")
    return fan.cells[i]


def adjacency_lines(fan):
    return [f"{i} {j}" for i, j in fan.edges]
