"""Command-line front end: file I/O and report aggregation.

One tool with subcommands; every report is JSON with sorted keys, so a
given (input, flags, seed) always produces byte-identical output.  Exit
codes: 0 success, 1 validation or computation failure on the input data,
2 usage error.  The environment variable KAKIMIZU_SEED overrides --seed
wherever a seed is accepted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .diagram import (
    Diagram,
    black_region_graph,
    is_fibred,
    parse_diagram,
    seifert,
    validate,
    white_region_graph,
)
from .generate import random_theta_family
from .kcomplex import (
    base_vertex,
    build_complex,
    cyclic_order_simplices,
    distance,
)
from .structure import ball_report, component_product, esd, verify_iso
from .surfaces import realize_vertex
from .theta import (
    ThetaGraph,
    augment_flype_arcs,
    extract_theta,
    parse_theta,
    reduce_bigons,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2


def theta_pipeline(d: Diagram) -> ThetaGraph:
    """Diagram to theta graph: black regions, bigon reduction, arc
    augmentation, theta extraction."""
    return extract_theta(augment_flype_arcs(reduce_bigons(black_region_graph(d))))


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _sniff(text: str) -> tuple[Diagram | None, ThetaGraph]:
    """Accept either a diagram document or a theta document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed document: {exc}") from exc
    if isinstance(doc, dict) and "components" in doc:
        return None, parse_theta(text)
    d = parse_diagram(text)
    return d, theta_pipeline(d)


def _resolve_seed(cli_seed: int) -> int:
    env = os.environ.get("KAKIMIZU_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"KAKIMIZU_SEED must be an integer: {env!r}") from exc
    return cli_seed


# -- subcommand handlers ----------------------------------------------------


def cmd_validate(args) -> tuple[int, dict]:
    d = parse_diagram(_read_input(args.input))
    report = validate(d)
    return (EXIT_OK if report.all_ok() else EXIT_INVALID), report.to_json()


def cmd_seifert(args) -> tuple[int, dict]:
    d = parse_diagram(_read_input(args.input))
    return EXIT_OK, seifert(d).to_json()


def cmd_theta(args) -> tuple[int, dict]:
    d = parse_diagram(_read_input(args.input))
    return EXIT_OK, theta_pipeline(d).to_json()


def cmd_complex(args) -> tuple[int, dict]:
    _, t = _sniff(_read_input(args.input))
    return EXIT_OK, build_complex(t).to_json()


def cmd_analyze(args) -> tuple[int, dict]:
    _, t = _sniff(_read_input(args.input))
    c = build_complex(t)
    doc: dict = {
        "vertex_count": len(c.vertices),
        "maximal_simplex_count": len(c.maximal_simplices),
        "dimension": c.dim,
        "pure": c.is_pure(),
    }
    code = EXIT_OK
    if args.homology or args.ball:
        report = ball_report(t, c)
        if args.homology:
            doc["homology"] = report.homology.to_json()
        if args.ball:
            doc["ball"] = report.to_json()
            if not report.ok():
                code = EXIT_INVALID
    if args.flag_check:
        cliques = {
            frozenset(c.vertices[i] for i in s) for s in c.maximal_simplices
        }
        doc["flag_check"] = cliques == cyclic_order_simplices(t)
        if not doc["flag_check"]:
            code = EXIT_INVALID
    if args.metric is not None:
        iu, iv = args.metric
        for idx in (iu, iv):
            if not 0 <= idx < len(c.vertices):
                raise ValueError(f"vertex index {idx} out of range")
        doc["metric"] = {
            "u": iu,
            "v": iv,
            "distance": distance(c, c.vertices[iu], c.vertices[iv]),
        }
    return code, doc


def cmd_esd(args) -> tuple[int, dict]:
    return EXIT_OK, esd(args.n, args.m).to_json()


def cmd_product(args) -> tuple[int, dict]:
    _, t = _sniff(_read_input(args.input))
    prod, _ = component_product(t)
    return EXIT_OK, prod.to_json()


def cmd_verify_esd(args) -> tuple[int, dict]:
    from .structure import theta_to_esd_map
    from .theta import SPHERE, Placement, ThetaComponent, ThetaEdge

    checked = []
    all_ok = True
    for n in range(1, args.max_n + 1):
        for m in range(1, args.max_m + 1):
            edges = [ThetaEdge(i, m if i == 0 else 0) for i in range(n + 1)]
            t = ThetaGraph([ThetaComponent(0, edges, Placement(SPHERE, 0, 0))])
            ok = verify_iso(build_complex(t), esd(n, m), theta_to_esd_map(t))
            checked.append({"n": n, "m": m, "isomorphic": ok})
            all_ok = all_ok and ok
    return (EXIT_OK if all_ok else EXIT_INVALID), {
        "checked": checked,
        "all_ok": all_ok,
    }


def cmd_verify_product(args) -> tuple[int, dict]:
    _, t = _sniff(_read_input(args.input))
    c = build_complex(t)
    prod, f = component_product(t)
    ok = verify_iso(c, prod, f)
    report = ball_report(t, c)
    code = EXIT_OK if ok and report.ok() else EXIT_INVALID
    return code, {"isomorphic": ok, "ball": report.to_json()}


def cmd_fibred(args) -> tuple[int, dict]:
    d = parse_diagram(_read_input(args.input))
    g = white_region_graph(d)
    return EXIT_OK, {
        "fibred": is_fibred(g),
        "graph_vertices": len(g.rotation),
        "graph_edges": len(g.edges),
    }


def cmd_surface(args) -> tuple[int, dict]:
    d = parse_diagram(_read_input(args.input))
    t = theta_pipeline(d)
    c = build_complex(t)
    if not 0 <= args.vertex < len(c.vertices):
        raise ValueError(f"vertex index {args.vertex} out of range")
    doc = realize_vertex(d, t, c.vertices[args.vertex], convention=args.convention)
    doc["vertex_index"] = args.vertex
    return EXIT_OK, doc


def cmd_selftest(args) -> tuple[int, dict]:
    seed = _resolve_seed(args.seed)
    failures = []
    family = random_theta_family(seed, args.count)
    for i, t in enumerate(family):
        c = build_complex(t)
        prod, f = component_product(t)
        if not verify_iso(c, prod, f):
            failures.append({"instance": i, "check": "product"})
        if not ball_report(t, c).ok():
            failures.append({"instance": i, "check": "ball"})
        cliques = {
            frozenset(c.vertices[j] for j in s) for s in c.maximal_simplices
        }
        if cliques != cyclic_order_simplices(t):
            failures.append({"instance": i, "check": "flag"})
    doc = {
        "seed": seed,
        "instances": len(family),
        "failures": failures,
        "all_ok": not failures,
    }
    return (EXIT_OK if not failures else EXIT_INVALID), doc


# -- parser and dispatch ----------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kakimizu",
        description=(
            "Seifert-surface complexes of special alternating diagrams"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("input", help="input file, or - for stdin")
        p.add_argument("--format", choices=["json"], default="json")
        p.add_argument("-o", "--output", default=None, help="write to file")

    p = sub.add_parser("validate", help="check a diagram document")
    common(p)
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("seifert", help="Seifert circles and counts")
    common(p)
    p.set_defaults(handler=cmd_seifert)

    p = sub.add_parser("theta", help="diagram to theta graph")
    common(p)
    p.set_defaults(handler=cmd_theta)

    p = sub.add_parser("complex", help="surface complex of a diagram or theta")
    common(p)
    p.set_defaults(handler=cmd_complex)

    p = sub.add_parser("analyze", help="reports on the surface complex")
    common(p)
    p.add_argument("--homology", action="store_true")
    p.add_argument("--flag-check", action="store_true")
    p.add_argument("--ball", action="store_true")
    p.add_argument("--metric", nargs=2, type=int, metavar=("U", "V"))
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("esd", help="edgewise subdivision of a simplex")
    common(p, with_input=False)
    p.add_argument("--n", type=int, required=True, help="simplex dimension")
    p.add_argument("--m", type=int, required=True, help="subdivision degree")
    p.set_defaults(handler=cmd_esd)

    p = sub.add_parser("product", help="product complex over the components")
    common(p)
    p.set_defaults(handler=cmd_product)

    p = sub.add_parser("verify-esd", help="subdivision theorem sweep")
    common(p, with_input=False)
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--max-m", type=int, default=4)
    p.set_defaults(handler=cmd_verify_esd)

    p = sub.add_parser("verify-product", help="product theorem on one input")
    common(p)
    p.set_defaults(handler=cmd_verify_product)

    p = sub.add_parser("fibred", help="fibredness from the white-region graph")
    common(p)
    p.set_defaults(handler=cmd_fibred)

    p = sub.add_parser("surface", help="surface realization at a vertex")
    common(p)
    p.add_argument("--vertex", type=int, required=True, help="vertex index")
    p.add_argument(
        "--convention", choices=["positive", "negative"], default="positive"
    )
    p.set_defaults(handler=cmd_surface)

    p = sub.add_parser("selftest", help="randomized property suites")
    common(p, with_input=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=20)
    p.set_defaults(handler=cmd_selftest)

    return parser


def _emit(doc: dict, args) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        code, doc = args.handler(args)
    except FileNotFoundError as exc:
        sys.stderr.write(f"kakimizu: {exc}\n")
        return EXIT_USAGE
    except ValueError as exc:
        _emit({"error": str(exc)}, args)
        return EXIT_INVALID
    _emit(doc, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
