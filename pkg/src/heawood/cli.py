"""Command-line interface: ``heawood <command> ...``.

Exit codes: 0 success (including informative "inapplicable" answers),
2 input error, 3 precondition violation, 4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import re
import sys
from pathlib import Path

from . import bounds, enumeration, graph6
from .graph import Graph, GraphError, family, family_params, from_edge_list, to_edge_list
from .invariants import PreconditionError, ResourceLimitError, is_connected, is_regular
from .spectral import ramanujan_check
from .surfaces import SurfaceError, parse_surface, surface_for_chi, surface_row, Surface

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_RESOURCE = 4

DEFAULT_MAX_N = 8


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


def fmt(x: float | None) -> str:
    """Real number with 12 significant digits."""
    if x is None:
        return "-"
    return f"{x:.12g}"


def parse_range(text: str) -> list[int]:
    """``a..b`` inclusive, ascending or descending."""
    m = re.fullmatch(r"\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*", text)
    if not m:
        raise CliError(f"bad range {text!r}; expected a..b")
    a, b = int(m.group(1)), int(m.group(2))
    step = 1 if b >= a else -1
    return list(range(a, b + step, step))


def parse_bool(text: str) -> bool:
    low = text.strip().lower()
    if low in ("true", "yes", "1"):
        return True
    if low in ("false", "no", "0"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def parse_family_spec(text: str) -> Graph:
    """``name`` or ``name:k[,k...]`` with positional family parameters."""
    name, _, rest = text.partition(":")
    params = family_params(name)
    values = [v for v in rest.split(",") if v.strip()] if rest else []
    if len(values) != len(params):
        raise GraphError(f"family {name!r} takes {len(params)} parameter(s) {params}")
    try:
        kwargs = {k: int(v) for k, v in zip(params, values)}
    except ValueError:
        raise GraphError(f"family parameters must be integers: {rest!r}") from None
    return family(name, **kwargs)


def load_graph(source: str) -> Graph:
    """Read a graph from an edge-list or graph6 file, a graph6 string, or a family spec."""
    path = Path(source)
    if path.is_file():
        try:
            text = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise CliError(f"cannot read {source}: {exc}") from None
        try:
            return from_edge_list(text)
        except GraphError as first:
            lines = [ln for ln in text.splitlines() if ln.strip()]
            if len(lines) == 1:
                try:
                    return graph6.decode(lines[0])
                except GraphError:
                    pass
            raise CliError(f"cannot parse {source}: {first}") from None
    try:
        return parse_family_spec(source)
    except GraphError:
        pass
    try:
        return graph6.decode(source)
    except GraphError as exc:
        raise CliError(f"{source!r} is not a readable file, family spec or graph6 string ({exc})") from None


def emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    if args.output == "json":
        print(json.dumps(payload, sort_keys=False))
    else:
        print(text)


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------


def cmd_analyze(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    if g.n < 2 or not is_connected(g):
        raise CliError("graph is disconnected (or has a single vertex); a(G) = 0 and no bound applies",
                       EXIT_PRECONDITION)
    if args.surface == "auto":
        ctx = bounds.SurfaceContext.auto(g)
    else:
        try:
            ctx = bounds.SurfaceContext.given(parse_surface(args.surface))
        except SurfaceError as exc:
            raise CliError(str(exc)) from None
    report = bounds.verdict(g, ctx)
    payload = report.to_dict()
    payload["surface"] = ctx.surface.spec() if ctx.surface is not None else None
    payload["surface_source"] = ctx.source
    payload["best_name"] = report.best_name

    where = ctx.surface.name() if ctx.surface is not None else "none"
    lines = [
        f"graph      {report.graph_id}",
        f"n, e       {report.n}, {report.e}",
        f"surface    {where} ({ctx.source})",
        f"a(G)       {fmt(report.a_computed)}",
        "",
        f"{'bound':<28} {'value':>16}  status",
    ]
    for item in report.entries:
        mark = ""
        if item.applicable and abs(item.value - report.a_computed) <= bounds.TIGHT_TOL:
            mark = "  (tight)"
        status = "applies" + mark if item.applicable else "inapplicable: " + item.reason
        lines.append(f"{item.name:<28} {fmt(item.value):>16}  {status}")
    lines.append("")
    if report.best_upper is None:
        lines.append("best upper bound: none applicable")
    else:
        lines.append(f"best upper bound: {fmt(report.best_upper)} ({report.best_name})"
                     f"{', tight' if report.tight else ''}")
    emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _surface_rows(args: argparse.Namespace) -> list[tuple[Surface | None, int]]:
    if (args.chi_range is None) == (args.genus_range is None):
        raise CliError("give exactly one of --chi-range or --genus-range")
    out = []
    if args.genus_range is not None:
        orientable = True if args.orientable is None else args.orientable
        for h in parse_range(args.genus_range):
            try:
                s = Surface(orientable, h)
            except SurfaceError as exc:
                raise CliError(str(exc)) from None
            out.append((s, s.chi))
    else:
        for chi in parse_range(args.chi_range):
            if chi > 2:
                raise CliError(f"Euler characteristic must be <= 2, got {chi}")
            out.append((surface_for_chi(chi, args.orientable), chi))
    return out


def cmd_surface(args: argparse.Namespace) -> int:
    rows = []
    for s, chi in _surface_rows(args):
        row = surface_row(chi, s.orientable if s is not None else args.orientable)
        rows.append({
            "surface": s.spec() if s is not None else None,
            "name": s.name() if s is not None else None,
            "chi": chi,
            "heawood": row.heawood,
            "cook": row.cook,
            "max_complete": row.max_complete,
            "note": row.note,
        })
    lines = [f"{'chi':>5} {'surface':<26} {'H(S)':>5} {'C(S)':>5} {'K^g':>5}  note"]
    for r in rows:
        lines.append(
            f"{r['chi']:>5} {r['name'] or '-':<26} {r['heawood']:>5} "
            f"{r['cook'] if r['cook'] is not None else '-':>5} "
            f"{r['max_complete'] if r['max_complete'] is not None else '-':>5}  {r['note']}".rstrip()
        )
    emit(args, {"rows": rows}, "\n".join(lines))
    return EXIT_OK


def max_n_cap() -> int:
    raw = os.environ.get("HEAWOOD_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise CliError(f"HEAWOOD_MAX_N must be an integer, got {raw!r}") from None
    return min(value, enumeration.MAX_N)


def cmd_sweep(args: argparse.Namespace) -> int:
    cap = max_n_cap()
    if args.max_n > cap:
        raise CliError(f"--max-n {args.max_n} exceeds the enumeration cap {cap} (set HEAWOOD_MAX_N)",
                       EXIT_RESOURCE)
    if args.max_n < 1:
        raise CliError("--max-n must be positive")
    filters = [f for item in args.filters for f in item.split(",") if f.strip()]
    try:
        report = enumeration.sweep(args.predicate, args.max_n, filters, workers=args.workers)
    except enumeration.EnumerationError as exc:
        raise CliError(str(exc)) from None
    lines = [
        f"predicate        {report.predicate}"
        + (" (conjecture)" if report.is_conjecture else " (theorem re-check)"),
        f"n <= {report.n_max}, filters: {', '.join(report.filters) or 'none'}",
        f"graphs checked   {report.checked}",
        f"counterexamples  {len(report.counterexamples)}",
    ]
    if report.counterexamples:
        banner = ("COUNTEREXAMPLE TO A CONJECTURE - verify independently"
                  if report.is_conjecture else "THEOREM VIOLATED - implementation bug suspected")
        lines.append(f"*** {banner} ***")
        lines += [f"  {text}" for text in report.counterexamples]
    lines.append(f"extremal         {len(report.extremal)}")
    lines += [f"  {x['g6']:<12} a = {fmt(x['a'])}  bound = {fmt(x['bound'])}" for x in report.extremal]
    emit(args, report.to_dict(), "\n".join(lines))
    return EXIT_OK


def cmd_trend(args: argparse.Namespace) -> int:
    try:
        values = enumeration.trend(args.family, parse_range(args.n))
    except (enumeration.EnumerationError, GraphError) as exc:
        raise CliError(str(exc)) from None
    closed = enumeration.CLOSED_FORMS.get(args.family)
    rows = []
    for n, a in values:
        rows.append({"n": n, "a": bounds.sig12(a),
                     "closed_form": bounds.sig12(closed(n)) if closed else None})
    lines = [f"{'n':>4} {'a(G)':>16} {'closed form':>16}"]
    lines += [f"{r['n']:>4} {fmt(r['a']):>16} {fmt(r['closed_form']):>16}" for r in rows]
    emit(args, {"family": args.family, "rows": rows}, "\n".join(lines))
    return EXIT_OK


def _ramanujan_answer(d: int, n: int | None) -> dict:
    if d < 9:
        return {"d": d, "n": n, "applicable": False,
                "reason": f"degree {d} < 9: the spectral gap gives no genus information"}
    if n is not None and d == n - 1:
        return {"d": d, "n": n, "applicable": False,
                "reason": "d = n - 1: the graph is complete, whose genus is known exactly"}
    return {"d": d, "n": n, "applicable": True, "genus_lower_bound": bounds.ramanujan_genus_lower_bound(d),
            "gap": bounds.sig12(bounds.ramanujan_gap(d))}


def cmd_ramanujan(args: argparse.Namespace) -> int:
    if (args.d is None) == (args.graph is None):
        raise CliError("give exactly one of --d or a graph")
    if args.d is not None:
        if args.d < 1:
            raise CliError("--d must be positive")
        answer = _ramanujan_answer(args.d, None)
    else:
        g = load_graph(args.graph)
        d = is_regular(g)
        if d is None or g.n < 2 or not is_connected(g):
            answer = {"d": d, "n": g.n, "applicable": False,
                      "reason": "graph is not a connected regular graph"}
        else:
            check = ramanujan_check(g)
            if not check.ramanujan:
                answer = {"d": d, "n": g.n, "applicable": False,
                          "reason": f"not Ramanujan: nontrivial |lambda| = {fmt(check.worst)}"
                                    f" > 2 sqrt(d-1) = {fmt(check.threshold)}"}
            else:
                answer = _ramanujan_answer(d, g.n)
    if answer["applicable"]:
        text = (f"d = {answer['d']}: a(G) >= {fmt(answer['gap'])}; "
                f"orientable genus >= {answer['genus_lower_bound']}")
    else:
        text = f"inapplicable: {answer['reason']}"
    emit(args, answer, text)
    return EXIT_OK


def cmd_family(args: argparse.Namespace) -> int:
    try:
        g = parse_family_spec(args.spec)
    except GraphError as exc:
        raise CliError(str(exc)) from None
    code = graph6.encode(g) if g.n <= graph6.MAX_N else None
    payload = {"family": args.spec, "n": g.n, "e": g.e, "graph6": code,
               "edges": [list(edge) for edge in g.sorted_edges()]}
    text = code if args.format == "graph6" else to_edge_list(g).rstrip("\n")
    if args.format == "graph6" and code is None:
        raise CliError(f"graph6 output supports n <= {graph6.MAX_N}")
    emit(args, payload, text)
    return EXIT_OK


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="heawood", description=__doc__.splitlines()[0])
    parser.add_argument("--output", choices=("text", "json"), default="text")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="evaluate every bound on one graph")
    p.add_argument("graph", help="edge-list/graph6 file, graph6 string, or family spec like cycle:5")
    p.add_argument("--surface", default="auto", help="orientable:h, nonorientable:k or auto")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("surface", help="Heawood/Cook table over a range of surfaces")
    p.add_argument("--chi-range", help="Euler characteristics a..b")
    p.add_argument("--genus-range", help="genera a..b")
    p.add_argument("--orientable", type=parse_bool, default=None)
    p.set_defaults(func=cmd_surface)

    p = sub.add_parser("sweep", help="check a predicate on all small connected graphs")
    p.add_argument("--predicate", required=True, choices=sorted(enumeration.PREDICATES))
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--filters", nargs="*", default=[], help="planar, bipartite, regular, cubic, dmax<=k")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("trend", help="a(G) along a family, with its closed form")
    p.add_argument("--family", required=True)
    p.add_argument("--n", required=True, help="size range a..b")
    p.set_defaults(func=cmd_trend)

    p = sub.add_parser("ramanujan", help="genus lower bound for Ramanujan graphs")
    p.add_argument("graph", nargs="?", help="regular graph to verify")
    p.add_argument("--d", type=int, help="degree, without a concrete graph")
    p.set_defaults(func=cmd_ramanujan)

    p = sub.add_parser("family", help="print a named graph")
    p.add_argument("spec", help="family name with optional parameters, e.g. complete_bipartite:3,3")
    p.add_argument("--format", choices=("edges", "graph6"), default="edges")
    p.set_defaults(func=cmd_family)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"heawood: {exc}", file=sys.stderr)
        return exc.code
    except PreconditionError as exc:
        print(f"heawood: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ResourceLimitError as exc:
        print(f"heawood: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (GraphError, SurfaceError) as exc:
        print(f"heawood: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
