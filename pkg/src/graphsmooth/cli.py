"""Command-line interface: ``graphsmooth {gen,compute,partition,bounds,compare,export-model}``.

Exit codes: 0 success, 1 usage error, 2 input/format error, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .bounds import bounds_report
from .complementarity import export_complementarity_model
from .families import FAMILIES, FamilySpec, generate, random_geometric_graph
from .graph import Graph, GraphFormatError, cut, is_connected, parse_edge_list, render_edge_list
from .l1 import DEFAULT_CAP, CapExceeded, b_exact, heuristic_b_upper
from .linf import gamma
from .spectral import DEFAULT_TOL, spectral

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def rational(q: Fraction) -> dict:
    return {"exact": str(q), "float": float(q)}


def _load(args) -> Graph:
    try:
        if args.input in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc}") from None
    G = parse_edge_list(text)
    if G.n < 2 or not is_connected(G):
        raise InputError(
            "input graph is not connected (or has fewer than two vertices); "
            "every quantity here is defined for connected graphs only"
        )
    return G


def _emit(args, text: str) -> None:
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _cut_summary(G: Graph, S) -> dict:
    c = cut(G, S)
    return {
        "side": sorted(c.S),
        "complement": sorted(c.complement),
        "cut_size": c.boundary_size,
        "part_sizes": [len(c.S), G.n - len(c.S)],
        "density": rational(c.rho),
    }


def _l1_part(G: Graph, args) -> dict:
    if G.n <= args.cap:
        res = b_exact(G, cap=args.cap, workers=args.workers)
        out = {"method": "exact", "b": rational(res.b), "vector": [str(v) for v in res.vector.values]}
        out.update(_cut_summary(G, res.sparsest.S))
        return out
    if not args.heuristic:
        raise CapExceeded(f"n={G.n} exceeds --cap {args.cap}; pass --heuristic for bounds only")
    bound, witness = heuristic_b_upper(G)
    out = {"method": "heuristic", "b_upper": rational(bound)}
    out.update(_cut_summary(G, witness.S))
    return out


def _bounds_part(G: Graph, args) -> dict:
    if G.n > args.cap and not args.heuristic:
        raise CapExceeded(f"n={G.n} exceeds --cap {args.cap}; pass --heuristic for partial bounds")
    rep = bounds_report(G, cap=args.cap, eig_tol=args.tol, workers=args.workers)

    def val(x):
        if x is None:
            return None
        return rational(x) if isinstance(x, (int, Fraction)) else float(x)

    return {
        "a": rep.a,
        "lambda_max": rep.lambda_max,
        "b": val(rep.b),
        "b_upper": val(rep.b_upper),
        "xi_min": val(rep.xi_min),
        "isoperimetric": val(rep.i_G),
        "mc": rep.mc,
        "mc_side_size": rep.mc_side,
        "d_min": rep.d_min,
        "d_max": rep.d_max,
        "m": rep.m,
        "n": rep.n,
        "all_hold": rep.all_hold,
        "records": [
            {
                "name": r.name,
                "statement": r.statement,
                "lhs": val(r.lhs),
                "rhs": val(r.rhs),
                "holds": r.holds,
                "slack": r.slack,
                "status": r.status,
            }
            for r in rep.records
        ],
        "notes": rep.notes,
    }


def cmd_gen(args) -> int:
    if args.rgg:
        if args.n is None or args.radius is None:
            raise InputError("--rgg needs --n and --radius")
        res = random_geometric_graph(args.n, args.radius, seed=args.seed, max_retries=args.max_retries)
        comment = f"random geometric graph n={args.n} radius={args.radius} seed={res.seed}"
        print(f"seed used: {res.seed}", file=sys.stderr)
        G = res.graph
    else:
        if args.family is None:
            raise InputError("choose --family or --rgg")
        parts = tuple(int(p) for p in args.parts.split(",")) if args.parts else None
        try:
            spec = FamilySpec(args.family, args.n, ell=args.ell, parts=parts)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        G = generate(spec)
        comment = f"{args.family} " + " ".join(
            f"{k}={v}" for k, v in (("n", spec.n), ("ell", spec.ell), ("parts", args.parts)) if v is not None
        )
    _emit(args, render_edge_list(G, comment))
    return EXIT_OK


def cmd_compute(args) -> int:
    G = _load(args)
    what = [w.strip() for w in args.what.split(",") if w.strip()]
    unknown = set(what) - {"a", "b", "gamma", "bounds"}
    if unknown:
        raise InputError(f"unknown quantity in --what: {', '.join(sorted(unknown))}")
    report: dict = {"graph": {"n": G.n, "m": G.m}}
    timings = {}
    for w in what:
        t0 = time.perf_counter()
        if w == "a":
            sp = spectral(G, args.tol)
            report["a"] = {
                "a": sp.a,
                "lambda_max": sp.lambda_max,
                "fiedler": sp.fiedler.as_array().tolist(),
                "bisection": sorted(sp.bisection),
            }
        elif w == "b":
            report["b"] = _l1_part(G, args)
        elif w == "gamma":
            res = gamma(G, workers=args.workers)
            report["gamma"] = {"gamma": res.gamma, "argmin_k": res.argmin_k, "x": res.x.as_array().tolist()}
        else:
            report["bounds"] = _bounds_part(G, args)
        timings[w] = time.perf_counter() - t0
    if args.timings:
        report["timings"] = timings
    _emit(args, _dump(report))
    return EXIT_OK


def cmd_bounds(args) -> int:
    G = _load(args)
    _emit(args, _dump({"graph": {"n": G.n, "m": G.m}, "bounds": _bounds_part(G, args)}))
    return EXIT_OK


def _partition(G: Graph, args, method: str) -> tuple[frozenset[int], dict]:
    if method == "l2":
        sp = spectral(G, args.tol)
        info = {"method": "l2", "a": sp.a}
        S = sp.bisection
    else:
        info = _l1_part(G, args)
        S = frozenset(info["side"])
    info.update(_cut_summary(G, S))
    return S, info


def render_dot(G: Graph, S, name: str = "partition") -> str:
    """DOT rendering: vertices colored by side, cut edges dashed red."""
    S = frozenset(S)
    lines = [f"graph {name} {{", "  node [shape=circle, style=filled];"]
    for v in range(G.n):
        color = "lightblue" if v in S else "salmon"
        lines.append(f'  {v} [fillcolor="{color}"];')
    for u, v in G.edges:
        if (u in S) != (v in S):
            lines.append(f"  {u} -- {v} [style=dashed, color=red];")
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_partition(args) -> int:
    G = _load(args)
    S, info = _partition(G, args, args.method)
    _emit(args, render_dot(G, S, name=f"{args.method}_partition"))
    summary = (
        f"method={args.method} cut_size={info['cut_size']} "
        f"parts={info['part_sizes'][0]}|{info['part_sizes'][1]} density={info['density']['exact']}"
    )
    print(summary, file=sys.stderr if args.output in (None, "-") else sys.stdout)
    return EXIT_OK


def cmd_compare(args) -> int:
    G = _load(args)
    _, l2 = _partition(G, args, "l2")
    _, l1 = _partition(G, args, "l1")
    d1 = Fraction(l1["density"]["exact"])
    d2 = Fraction(l2["density"]["exact"])
    out = {"graph": {"n": G.n, "m": G.m}, "l1": l1, "l2": l2, "l1_density_le_l2": d1 <= d2, "equal_density": d1 == d2}
    if l1["method"] == "exact" and d1 > d2:
        raise AssertionError("exact sparsest cut is denser than the spectral cut")
    _emit(args, _dump(out))
    return EXIT_OK


def cmd_export_model(args) -> int:
    G = _load(args)
    _emit(args, export_complementarity_model(G).render())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="graphsmooth",
        description="l1 / l2 / l-infinity graph smoothing and sparsest cuts",
        epilog="Input is an edge list; formats, JSON schemas and exit codes are described in FORMATS.md.",
    )
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--input", "-i", help="edge-list file ('-' or omitted: stdin)")
    common.add_argument("--output", "-o", help="output file ('-' or omitted: stdout)")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest n for exact b (default %(default)s)")
    common.add_argument("--heuristic", action="store_true", help="above the cap, report min-cut bounds instead of failing")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="Jacobi off-diagonal tolerance (default %(default)s)")
    common.add_argument("--workers", type=int, default=1, help="threads for enumeration and LP solves")
    common.add_argument("--seed", type=int, default=0, help="accepted for uniformity; computations are deterministic")

    g = sub.add_parser("gen", help="write a family graph or random geometric graph as an edge list")
    g.add_argument("--family", choices=FAMILIES)
    g.add_argument("--n", type=int)
    g.add_argument("--ell", type=int, help="broom path length")
    g.add_argument("--parts", help="starlike star sizes, e.g. 3,3,3")
    g.add_argument("--rgg", action="store_true", help="random geometric graph in the unit square")
    g.add_argument("--radius", type=float)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--max-retries", type=int, default=100, help="reseeding attempts for a connected rgg")
    g.add_argument("--output", "-o")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("compute", parents=[common], help="compute a, b, gamma and/or bounds as JSON")
    c.add_argument("--what", default="a,b", help="comma list from a,b,gamma,bounds (default %(default)s)")
    c.add_argument("--timings", action="store_true", help="include wall-clock timings (breaks byte-identical output)")
    c.set_defaults(func=cmd_compute)

    b = sub.add_parser("bounds", parents=[common], help="evaluate every bound on b(G) as JSON")
    b.set_defaults(func=cmd_bounds)

    pa = sub.add_parser("partition", parents=[common], help="DOT rendering of the l1 or l2 partition")
    pa.add_argument("--method", choices=("l1", "l2"), default="l1")
    pa.set_defaults(func=cmd_partition)

    co = sub.add_parser("compare", parents=[common], help="compare l1 (sparsest cut) and l2 (Fiedler) partitions")
    co.set_defaults(func=cmd_compare)

    em = sub.add_parser("export-model", parents=[common], help="write the complementarity model as text")
    em.set_defaults(func=cmd_export_model)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help or a usage error
        return exc.code
    try:
        return args.func(args)
    except (GraphFormatError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
