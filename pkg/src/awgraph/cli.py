"""Command line front end.

Subcommands: aw, verify, extremal, table, construct, product-bound.  Output
is plain text, one record per line, stable field order, no timing or other
nondeterministic content, so runs are byte-identical for identical inputs.

Graph specs: path:N, cycle:N, complete:N, star:N, grid:MxN,
product:<spec>,<spec> (nesting depth at most 3), file:<path>.

Exit codes: 0 success, 1 reported mismatch or failed bound, 2 usage or
validation error, 3 node budget exceeded.  The AWGRAPH_BUDGET environment
variable overrides the default node budget; --budget overrides both.
"""

from __future__ import annotations

import argparse
import os
import sys

from .aps import enumerate_k_aps, find_rainbow_ap
from .certify import emit_certificate
from .coloring import coloring_to_text, parse_coloring
from .constructions import (
    GridColoringSpec,
    build_grid_coloring,
    grid_formula_table,
    verify_product_bound,
)
from .errors import AwgraphError, BudgetExceededError
from .graphs import (
    Graph,
    GridCoordinates,
    all_pairs_distances,
    build_complete,
    build_cycle,
    build_grid,
    build_path,
    build_star,
    cartesian_product,
    parse_graph,
)
from .search import DEFAULT_NODE_BUDGET, compute_aw, enumerate_rainbow_free_colorings

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

BUDGET_ENV_VAR = "AWGRAPH_BUDGET"

_MAX_PRODUCT_DEPTH = 3


class SpecError(AwgraphError, ValueError):
    """Unparseable graph spec string."""


# ======================================================================
# Graph specs
# ======================================================================


def _parse_int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise SpecError(f"{what} must be an integer, got {token!r}") from None


def _parse_one(spec: str, depth: int) -> tuple[Graph, GridCoordinates | None, str]:
    """Parse one spec from the front of the string; returns the unconsumed rest."""
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise SpecError(f"graph spec needs '<kind>:...', got {spec!r}")
    if kind == "product":
        if depth >= _MAX_PRODUCT_DEPTH:
            raise SpecError(f"product nesting deeper than {_MAX_PRODUCT_DEPTH}")
        left, left_coords, rest = _parse_one(rest, depth + 1)
        if not rest.startswith(","):
            raise SpecError("product spec needs two comma-separated operands")
        right, right_coords, rest = _parse_one(rest[1:], depth + 1)
        product = cartesian_product(left, right)
        coords = None
        # A product of two bare paths is a grid; report coordinates for it.
        if _is_path(left) and _is_path(right):
            coords = GridCoordinates(left.n, right.n)
        return product, coords, rest
    if kind == "file":
        if depth == 0:
            path, rest = rest, ""  # top level: the whole remainder, commas allowed
        else:
            # Inside a product the path ends at the operand separator, so
            # nested file paths may not contain commas.
            path, sep2, tail = rest.partition(",")
            rest = (sep2 + tail) if sep2 else ""
        with open(path, "r", encoding="utf-8") as fh:
            return parse_graph(fh.read()), None, rest
    arg, sep, rest = rest.partition(",")
    rest = (sep + rest) if sep else rest
    if kind == "grid":
        dims = arg.split("x")
        if len(dims) != 2:
            raise SpecError(f"grid spec must be grid:MxN, got {arg!r}")
        m, n = _parse_int(dims[0], "grid rows"), _parse_int(dims[1], "grid columns")
        g, coords = build_grid(m, n)
        return g, coords, rest
    builders = {
        "path": build_path,
        "cycle": build_cycle,
        "complete": build_complete,
        "star": build_star,
    }
    if kind not in builders:
        raise SpecError(f"unknown graph kind {kind!r}")
    return builders[kind](_parse_int(arg, f"{kind} size")), None, rest


def _is_path(g: Graph) -> bool:
    """True for a graph built as path:N (the canonical 0-1-...-n-1 chain)."""
    return g.m == g.n - 1 and all(
        v == u + 1 for u in range(g.n) for v in g.adjacency[u] if v > u
    )


def parse_graph_spec(spec: str) -> tuple[Graph, GridCoordinates | None]:
    g, coords, rest = _parse_one(spec.strip(), 0)
    if rest:
        raise SpecError(f"trailing characters {rest!r} after graph spec")
    return g, coords


# ======================================================================
# Shared helpers
# ======================================================================


def _budget_from(args) -> int:
    if args.budget is not None:
        if args.budget < 1:
            raise SpecError(f"--budget must be positive, got {args.budget}")
        return args.budget
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_NODE_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise SpecError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise SpecError(f"{BUDGET_ENV_VAR} must be positive, got {value}")
    return value


def _coloring_line(colors) -> str:
    return " ".join(str(c) for c in colors)


def _coords_suffix(coords: GridCoordinates | None, vertices) -> str:
    if coords is None:
        return ""
    return " coords=" + ",".join(
        "({},{})".format(*coords.coords(v)) for v in vertices
    )


def _print_graph_line(spec: str, g: Graph) -> None:
    print(f"graph {spec} n={g.n} m={g.m}")


# ======================================================================
# Subcommands
# ======================================================================


def cmd_aw(args) -> int:
    g, coords = parse_graph_spec(args.graph)
    result = compute_aw(g, args.k, budget=_budget_from(args), threads=args.threads)
    _print_graph_line(args.graph, g)
    print(f"k = {args.k}")
    print(f"aw = {result.aw}")
    if result.per_r:
        flags = " ".join(
            f"{r}={'exists' if flag else 'none'}" for r, flag in result.per_r
        )
    else:
        flags = "none-examined"
    print(f"per-r: {flags}")
    if result.witness is not None:
        print(f"witness: {_coloring_line(result.witness.colors)}")
    else:
        print("witness: none")
    if args.cert is not None:
        with open(args.cert, "w", encoding="utf-8") as fh:
            fh.write(emit_certificate(result, g))
        print(f"certificate: {args.cert}")
    return EXIT_OK


def cmd_verify(args) -> int:
    g, coords = parse_graph_spec(args.graph)
    with open(args.coloring, "r", encoding="utf-8") as fh:
        coloring = parse_coloring(fh.read())
    if coloring.n != g.n:
        raise SpecError(
            f"coloring has {coloring.n} vertices but the graph has {g.n}"
        )
    table = enumerate_k_aps(all_pairs_distances(g), args.k)
    _print_graph_line(args.graph, g)
    print(f"k = {args.k}")
    print(f"coloring: r={coloring.r} {_coloring_line(coloring.colors)}")
    ap = find_rainbow_ap(table, coloring.colors)
    if ap is None:
        print("result: rainbow-free")
    else:
        print(
            "result: rainbow-ap"
            f" vertices={','.join(map(str, ap.vertices))}"
            f" ordering={','.join(map(str, ap.witness))}"
            f" d={ap.d}" + _coords_suffix(coords, ap.witness)
        )
    return EXIT_OK


def cmd_extremal(args) -> int:
    g, _ = parse_graph_spec(args.graph)
    table = enumerate_k_aps(all_pairs_distances(g), args.k)
    colorings = enumerate_rainbow_free_colorings(
        table, g.n, args.r, budget=_budget_from(args), threads=args.threads
    )
    _print_graph_line(args.graph, g)
    print(f"k = {args.k}")
    print(f"r = {args.r}")
    for c in colorings:
        print(f"coloring: {_coloring_line(c.colors)}")
    count = len(colorings)
    factorial = 1
    for i in range(2, args.r + 1):
        factorial *= i
    print(f"count = {count}")
    print(f"labeled-count = {count} x {args.r}! = {count * factorial}")
    return EXIT_OK


def cmd_table(args) -> int:
    rows = grid_formula_table(
        args.max_cells, budget=_budget_from(args), threads=args.threads
    )
    all_match = True
    for row in rows:
        match = "yes" if row.match else "no"
        all_match = all_match and row.match
        print(
            f"m={row.m} n={row.n} formula={row.formula}"
            f" search={row.searched} match={match}"
        )
    print(f"all-match: {'yes' if all_match else 'no'}")
    return EXIT_OK if all_match else EXIT_FAIL


def cmd_construct(args) -> int:
    spec = GridColoringSpec(args.name, args.m, args.n)
    coloring = build_grid_coloring(spec)
    g, _ = build_grid(args.m, args.n)
    table = enumerate_k_aps(all_pairs_distances(g), 3)
    ap = find_rainbow_ap(table, coloring.colors)
    print(f"construction: {args.name} m={args.m} n={args.n}")
    if ap is not None:
        print(
            "self-check: FAILED rainbow-ap"
            f" vertices={','.join(map(str, ap.vertices))} d={ap.d}"
        )
        return EXIT_FAIL
    print("self-check: rainbow-free")
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(coloring_to_text(coloring))
    print(f"wrote: {args.out}")
    return EXIT_OK


def cmd_product_bound(args) -> int:
    left, _ = parse_graph_spec(args.left)
    right, _ = parse_graph_spec(args.right)
    report = verify_product_bound(
        left, right, budget=_budget_from(args), threads=args.threads
    )
    print(f"product: {args.left} x {args.right} n={report.n}")
    print(f"aw = {report.aw}")
    if report.aw == 4 and report.witness is not None:
        print(f"witness: {_coloring_line(report.witness.colors)}")
    print(f"bound: {'pass' if report.passed else 'FAIL'}")
    return EXIT_OK if report.passed else EXIT_FAIL


# ======================================================================
# Parser
# ======================================================================


def _add_budget_and_threads(sub) -> None:
    sub.add_argument("--budget", type=int, default=None, help="node-expansion budget")
    sub.add_argument("--threads", type=int, default=1, help="search worker count (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="awgraph",
        description="Anti-van der Waerden numbers of connected graphs by exhaustive search.",
        epilog=f"The {BUDGET_ENV_VAR} environment variable overrides the default node budget.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("aw", help="compute aw(G, k) with optional certificate")
    p.add_argument("--graph", required=True, help="graph spec")
    p.add_argument("--k", type=int, required=True, help="progression length")
    p.add_argument("--cert", default=None, help="write a certificate to this path")
    _add_budget_and_threads(p)
    p.set_defaults(func=cmd_aw)

    p = subs.add_parser("verify", help="check a coloring file for rainbow k-APs")
    p.add_argument("--graph", required=True, help="graph spec")
    p.add_argument("--coloring", required=True, help="coloring file path")
    p.add_argument("--k", type=int, required=True, help="progression length")
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("extremal", help="enumerate canonical rainbow-free exact r-colorings")
    p.add_argument("--graph", required=True, help="graph spec")
    p.add_argument("--r", type=int, required=True, help="number of colors")
    p.add_argument("--k", type=int, required=True, help="progression length")
    _add_budget_and_threads(p)
    p.set_defaults(func=cmd_extremal)

    p = subs.add_parser("table", help="closed form versus search for all small grids")
    p.add_argument("--max-cells", type=int, required=True, help="largest grid size m*n")
    _add_budget_and_threads(p)
    p.set_defaults(func=cmd_table)

    p = subs.add_parser("construct", help="write a named extremal grid coloring")
    p.add_argument("--name", required=True, choices=["corner", "two-red-corner"])
    p.add_argument("--m", type=int, required=True, help="grid rows")
    p.add_argument("--n", type=int, required=True, help="grid columns")
    p.add_argument("--out", required=True, help="output coloring file path")
    p.set_defaults(func=cmd_construct)

    p = subs.add_parser(
        "product-bound",
        aliases=["product_bound"],
        help="check aw(G box H, 3) <= 4 for a Cartesian product",
    )
    p.add_argument("--left", required=True, help="left factor graph spec")
    p.add_argument("--right", required=True, help="right factor graph spec")
    _add_budget_and_threads(p)
    p.set_defaults(func=cmd_product_bound)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (AwgraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
