"""Command-line front end.

Exit codes: 0 success, 1 infeasible (feasible only), 2 malformed input,
3 arithmetic overflow, 4 termination cannot be certified.
"""

import argparse
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from . import formats
from .buchberger import BuchbergerStats, is_groebner, truncated_buchberger
from .errors import ArithmeticOverflow, LatticeWalkError, TerminationError
from .fan import adjacency_lines, enumerate_fan
from .ip import IPInstance, optimize, solve_feasibility, toric_ideal
from .lattice import kernel_basis, lll_reduce, orthogonal_grading, saturate
from .order import (
    ALL, Grading, LinearBound, RhsBound, WalkContext, orient, validate_positive_grading, weight_order)
from .walk import WalkStats, generic_walk

EXIT_OK, EXIT_INFEASIBLE, EXIT_INPUT, EXIT_OVERFLOW, EXIT_TERMINATION = 0, 1, 2, 3, 4


@dataclass
class RunReport:
    command: str
    wall_time: float = 0.0
    facets: int = 0
    max_gb: int = 0
    reductions: int = 0
    exit_code: int = 0

    def line(self):
        return f"facets={self.facets} max_gb={self.max_gb} reductions={self.reductions} ms={self.wall_time * 1000:.0f}"

    def absorb(self, stats):
        if isinstance(stats, WalkStats):
            self.facets += stats.facets_crossed
            self.max_gb = max(self.max_gb, stats.max_intermediate_size)
        else:
            self.max_gb = max(self.max_gb, stats.max_size)
        self.reductions += stats.reductions


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as f:
        return f.read()


def _vec(s, n, what):
    v = formats.parse_int_list(s, what)
    if len(v) != n:
        raise formats.ParseError(f"{what}: expected {n} entries, found {len(v)}")
    return v


def _truncation(args, grading):
    if getattr(args, "truncate_b", None) is not None and getattr(args, "truncate_linear", None):
        raise formats.ParseError("give at most one of --truncate-b and --truncate-linear")
    if getattr(args, "truncate_b", None) is not None:
        if grading.d != 1:
            raise formats.ParseError("--truncate-b needs a one-row grading")
        return RhsBound(args.truncate_b)
    if getattr(args, "truncate_linear", None):
        vals = formats.parse_int_list(args.truncate_linear, "--truncate-linear")
        if len(vals) != grading.d + 1:
            raise formats.ParseError(f"--truncate-linear needs {grading.d} weights and a bound")
        return LinearBound(vals[:-1], vals[-1], inclusive=True)
    return ALL


def _load_ideal(args, stats):
    """(n, generators of the lattice ideal, grading) from a matrix or vector list."""
    text = _read(args.input)
    kind = formats.sniff(text)
    if kind == "matrix":
        A = formats.parse_matrix(text)
        grading = validate_positive_grading(Grading(A))
        gens = toric_ideal(A, stats=stats).elements
        return grading.n, gens, grading
    n, vecs = formats.parse_vectors(text)
    if getattr(args, "grading", None):
        grading = Grading(formats.parse_matrix(_read(args.grading)))
        if grading.n != n:
            raise formats.ParseError("grading width differs from the vector length")
    else:
        grading = orthogonal_grading(vecs, n)
    return n, vecs, validate_positive_grading(grading)


def _order(spec, n, grading, what="--order-c"):
    if spec:
        return weight_order(_vec(spec, n, what))
    return weight_order(grading.weight_vector())


def cmd_kernel(args, out, report):
    A = formats.parse_matrix(_read(args.input))
    n = len(A[0]) if A else 0
    out.write(formats.format_vectors(kernel_basis(A, n), n))


def cmd_lll(args, out, report):
    n, vecs = formats.parse_vectors(_read(args.input))
    out.write(formats.format_vectors(lll_reduce(vecs, Fraction(args.delta)), n))


def cmd_saturate(args, out, report):
    stats = BuchbergerStats()
    n, vecs = formats.parse_vectors(_read(args.input))
    grading = None
    if args.grading:
        grading = Grading(formats.parse_matrix(_read(args.grading)))
    ord = weight_order(_vec(args.order_c, n, "--order-c")) if args.order_c else None
    G = saturate(vecs, ord, grading, stats=stats)
    report.absorb(stats)
    out.write(formats.format_vectors(G.elements, n))


def cmd_gbasis(args, out, report):
    stats = BuchbergerStats()
    n, gens, grading = _load_ideal(args, stats)
    ord = _order(args.order_c, n, grading)
    G = truncated_buchberger(gens, ord, _truncation(args, grading), grading, stats=stats)
    report.absorb(stats)
    out.write(formats.format_vectors(G.elements, n))


def cmd_walk(args, out, report):
    stats = BuchbergerStats()
    n, gens, grading = _load_ideal(args, stats)
    S = weight_order(_vec(args.source_c, n, "--source-c"))
    T = weight_order(_vec(args.target_c, n, "--target-c"))
    truncation = _truncation(args, grading)
    if not is_groebner([orient(S, v) for v in gens if any(v)], S, truncation, grading):
        print("input is not a Groebner basis over the source order; computing one", file=sys.stderr)
        gens = truncated_buchberger(gens, S, truncation, grading, stats=stats).elements
    wstats = WalkStats()
    G = generic_walk(gens, WalkContext(S, T), truncation, grading, stats=wstats)
    report.absorb(stats)
    report.absorb(wstats)
    out.write(formats.format_vectors(G.elements, n))


def cmd_fan(args, out, report):
    stats = BuchbergerStats()
    n, gens, grading = _load_ideal(args, stats)
    fan = enumerate_fan(gens, _truncation(args, grading), grading)
    report.absorb(stats)
    report.facets = len(fan.edges)
    report.max_gb = max([report.max_gb] + [len(c.basis) for c in fan.cells])
    out.write(f"cells = {len(fan)}\n")
    for i, cell in enumerate(fan.cells):
        out.write(f"cell {i} size {len(cell.basis)}\n")
        for v in cell.basis.elements:
            out.write(" ".join(str(x) for x in v) + "\n")
    if args.graph:
        for line in adjacency_lines(fan):
            out.write(line + "\n")


def _instance(args):
    a, b, c = formats.parse_instance(_read(args.input))
    try:
        return IPInstance(a, b, c)
    except ValueError as e:
        raise formats.ParseError(str(e)) from None


def cmd_feasible(args, out, report):
    inst = _instance(args)
    stats = WalkStats() if args.method == "walk" else BuchbergerStats()
    x = solve_feasibility(inst.a, inst.b, args.method, args.truncate, stats=stats)
    report.absorb(stats)
    if x is None:
        out.write("infeasible\n")
        return EXIT_INFEASIBLE
    out.write("x = " + " ".join(map(str, x)) + "\n")
    return EXIT_OK


def cmd_optimize(args, out, report):
    inst = _instance(args)
    if inst.c is None:
        raise formats.ParseError("instance has no cost line; optimize needs one")
    if args.x0:
        x0 = _vec(args.x0, len(inst.a), "--x0")
    else:
        x0 = solve_feasibility(inst.a, inst.b, "direct", True)
        if x0 is None:
            raise formats.ParseError("instance is infeasible; nothing to optimize")
    stats = BuchbergerStats()
    x = optimize((inst.a,), inst.b, inst.c, x0, args.truncate, stats=stats)
    report.absorb(stats)
    out.write("x = " + " ".join(map(str, x)) + "\n")
    out.write(f"value = {sum(a * b for a, b in zip(inst.c, x))}\n")
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="latticewalk", description="Groebner bases, walks and fans of lattice ideals.")
    p.add_argument("--stats", action="store_true", help="print run statistics to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("input", nargs="?", default="-", help="input file ('-' for stdin)")
        sp.set_defaults(func=func)
        return sp

    def trunc(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--truncate-b", type=int, metavar="B", help="keep degrees <= B (one-row grading)")
        g.add_argument("--truncate-linear", metavar='"h1 .. hd B"', help="keep degrees s with h.s <= B")

    add("kernel", cmd_kernel, "integer kernel basis of a matrix")
    sp = add("lll", cmd_lll, "LLL-reduce a vector list")
    sp.add_argument("--delta", default="3/4")
    sp = add("saturate", cmd_saturate, "lattice ideal of a lattice basis")
    sp.add_argument("--order-c", metavar='"c1 .. cn"')
    sp.add_argument("--grading", metavar="FILE")
    sp = add("gbasis", cmd_gbasis, "reduced (truncated) Groebner basis")
    sp.add_argument("--order-c", metavar='"c1 .. cn"')
    sp.add_argument("--grading", metavar="FILE")
    trunc(sp)
    sp = add("walk", cmd_walk, "generic Groebner walk between two weight orders")
    sp.add_argument("--source-c", required=True, metavar='"c1 .. cn"')
    sp.add_argument("--target-c", required=True, metavar='"c1 .. cn"')
    sp.add_argument("--grading", metavar="FILE")
    trunc(sp)
    sp = add("fan", cmd_fan, "enumerate the (truncated) Groebner fan")
    sp.add_argument("--grading", metavar="FILE")
    sp.add_argument("--graph", action="store_true", help="print adjacency lines 'i j'")
    trunc(sp)
    sp = add("feasible", cmd_feasible, "knapsack feasibility via a test set")
    sp.add_argument("--method", choices=["direct", "walk"], default="direct")
    sp.add_argument("--truncate", action="store_true", help="truncate at the right-hand side")
    sp = add("optimize", cmd_optimize, "maximize c.x over the knapsack fiber")
    sp.add_argument("--x0", metavar='"x1 .. xn"', help="feasible starting point")
    sp.add_argument("--truncate", action="store_true", help="truncate at the right-hand side")
    return p


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    report = RunReport(args.command)
    t0 = time.perf_counter()
    try:
        code = args.func(args, out, report) or EXIT_OK
    except OSError as e:
        print(f"error: {e}", file=err)
        code = EXIT_INPUT
    except ArithmeticOverflow as e:
        print(f"error: arithmetic overflow: {e}", file=err)
        code = EXIT_OVERFLOW
    except TerminationError as e:
        print(f"error: {e}", file=err)
        code = EXIT_TERMINATION
    except (LatticeWalkError, ValueError) as e:
        print(f"error: {e}", file=err)
        code = EXIT_INPUT
    report.wall_time = time.perf_counter() - t0
    report.exit_code = code
    if args.stats:
        print(report.line(), file=err)
    return code


def main():
    sys.exit(run())
