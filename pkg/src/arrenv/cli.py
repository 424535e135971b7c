"""Command line entry point: ``arrenv gen|analyze|audit|search|render``.

Exit status: 0 ok, 1 usage or input error, 2 audit failure, 3 guardrail.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from .errors import ArrangementError, AuditError, GuardrailError
from .exact import format_rational, parse_rational

log = logging.getLogger("arrenv")

EXIT_OK, EXIT_USAGE, EXIT_AUDIT, EXIT_GUARDRAIL = 0, 1, 2, 3

FAMILY_NOTES = {
    "paper2d": "last line meets the x2-axis at (0, 2+eps)",
    "cyclic3d": "first n planes of the spatial family with n+1 planes",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def cmd_gen(args) -> int:
    from . import generators as g
    from .fileio import write_arrangement

    fam = args.family
    if fam == "paper2d":
        arr = g.paper_line_arrangement(args.n, args.epsilon)
    elif fam == "paper3d":
        arr = g.paper_plane_arrangement(args.n, args.epsilon)
    elif fam == "cyclic3d":
        arr = g.cyclic_plane_arrangement(args.n, args.epsilon)
    else:
        arr = g.random_simple_arrangement(args.d, args.n, args.seed, args.coord_bound)
    comments = [f"family={fam} n={args.n}"]
    if fam == "random":
        comments.append(f"d={args.d} seed={args.seed} coord_bound={args.coord_bound} prng=splitmix64")
    else:
        eps = args.epsilon
        if eps is None:
            eps = Fraction(1, 2 * (args.n - (4 if fam == "paper3d" else 3)))
        comments.append(f"epsilon={format_rational(eps)}")
    if fam in FAMILY_NOTES:
        comments.append(f"reading: {FAMILY_NOTES[fam]}")
    write_arrangement(args.output, arr, comments)
    return EXIT_OK


def cmd_analyze(args) -> int:
    from .fileio import analysis_report, dump_report, read_arrangement

    arr, _ = read_arrangement(args.file)
    doc = analysis_report(arr)
    text = dump_report(doc)
    if args.report:
        report = Path(args.report)
        report.write_text(text, encoding="utf-8")
        if doc["simple"] and not args.no_figure:
            from .render import plot_arrangement

            plot_arrangement(arr, report.with_suffix(".png"))
    else:
        sys.stdout.write(text)
    return EXIT_OK if doc["simple"] else EXIT_USAGE


def _audit_document(rep, comments) -> dict:
    doc = {
        "d": rep.d,
        "n": rep.n,
        "ok": rep.ok,
        "errors": rep.errors,
        "definitions_agree": rep.definitions_agree,
        "facets": rep.bounds.facets,
        "verdicts": rep.bounds.verdicts,
        "hypothesis_bound": rep.bounds.hypothesis_bound,
        "provenance": comments,
    }
    if rep.census is not None:
        doc["vertex_types"] = {
            f"v{t}": sum(1 for x in rep.census.vertex_types.values() if x == t) for t in (2, 3, 4)
        }
        doc["line_weights"] = {str(i): format_rational(w) for i, w in rep.census.line_weights.items()}
        doc["total_weight"] = format_rational(rep.census.total_weight)
    if rep.lines is not None and rep.lines.applicable:
        doc["line_types"] = {str(i): "h%d%d" % t for i, t in rep.lines.line_types.items()}
        doc["h22_count"] = rep.lines.h22_count
        doc["light_lines"] = rep.lines.light_lines
    if rep.triple is not None and rep.triple.applicable:
        doc["restriction_external_vertices"] = rep.triple.restriction_counts
        doc["restriction_total"] = rep.triple.restriction_total
        doc["external_vertices"] = rep.triple.external_vertices
    if rep.last_plane_cells is not None:
        cells = rep.last_plane_cells
        doc["last_plane_bounded_cells"] = dict(cells)
        doc["last_plane_bounded_cells"]["matches_C(n,2)"] = cells["added"] == cells["alternative_C(n,2)"]
    return doc


def cmd_audit(args) -> int:
    from .audit import audit
    from .fileio import read_arrangement

    arr, comments = read_arrangement(args.file)
    rep = audit(arr, Path(args.dump_dir) if args.dump_dir else None)
    sys.stdout.write(json.dumps(_audit_document(rep, comments), sort_keys=True, indent=2) + "\n")
    return EXIT_OK if rep.ok else EXIT_AUDIT


def cmd_search(args) -> int:
    from .fileio import read_arrangement, write_arrangement
    from .render import plot_search_trace
    from .search import _floor, minimize_external_facets

    start = read_arrangement(args.start)[0] if args.start else None
    best_path = Path(args.output)
    snap_dir = best_path.with_name(best_path.name + ".trace")
    snap_dir.mkdir(parents=True, exist_ok=True)
    trace_path = best_path.with_name(best_path.name + ".trace.tsv")
    rows = ["iteration\tcount\tarrangement"]

    def on_improvement(it, count, arr):
        snap = snap_dir / f"it{it:06d}_f{count}.arr"
        write_arrangement(snap, arr, [f"search seed={args.seed} iteration={it} count={count}"])
        rows.append(f"{it}\t{count}\t{snap}")

    res = minimize_external_facets(
        args.d, args.n, args.seed, args.iters, start=start,
        coord_bound=args.coord_bound, dump_dir=best_path.parent, on_improvement=on_improvement,
    )
    write_arrangement(best_path, res.best, [
        f"search d={args.d} n={args.n} seed={args.seed} iters={args.iters}",
        f"external_facets={res.best_count}",
    ])
    trace_path.write_text("\n".join(rows) + "\n", encoding="utf-8")
    if not args.no_figure:
        plot_search_trace(res.trace, best_path.with_name(best_path.name + ".trace.png"), _floor(args.d, args.n))
    print(f"best {res.best_count} external facets after {args.iters} iterations "
          f"({res.restarts} restarts); trace in {trace_path}")
    for p in res.flagged:
        print(f"FLAGGED: arrangement below 22 external facets written to {p}")
    return EXIT_OK


def cmd_render(args) -> int:
    from .fileio import read_arrangement
    from .render import plot_arrangement, render_envelope_off, render_svg

    arr, _ = read_arrangement(args.file)
    out = Path(args.output)
    suffix = out.suffix.lower()
    if suffix == ".svg":
        out.write_text(render_svg(arr), encoding="utf-8")
    elif suffix == ".off":
        out.write_text(render_envelope_off(arr), encoding="utf-8")
    elif suffix in (".png", ".pdf"):
        plot_arrangement(arr, out)
    else:
        raise ValueError(f"unsupported output type {suffix!r} (use .svg, .off, .png or .pdf)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="arrenv", description="Envelopes of simple line and plane arrangements.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="write an arrangement file")
    g.add_argument("--family", required=True, choices=["paper2d", "paper3d", "cyclic3d", "random"])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--d", type=int, default=2, choices=[2, 3])
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--coord-bound", type=int, default=100)
    g.add_argument("--epsilon", type=_rational)
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("analyze", help="external face counts and bounds")
    a.add_argument("file")
    a.add_argument("--report", help="write the report here (figure goes next to it)")
    a.add_argument("--no-figure", action="store_true")
    a.set_defaults(func=cmd_analyze)

    u = sub.add_parser("audit", help="check the lower-bound arguments on an arrangement")
    u.add_argument("file")
    u.add_argument("--dump-dir", help="directory for hypothesis counterexamples")
    u.set_defaults(func=cmd_audit)

    s = sub.add_parser("search", help="randomized search for few external facets")
    s.add_argument("--d", type=int, required=True, choices=[2, 3])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--iters", type=int, default=5000)
    s.add_argument("--coord-bound", type=int, default=100)
    s.add_argument("--start")
    s.add_argument("--no-figure", action="store_true")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_search)

    r = sub.add_parser("render", help="draw an arrangement (.svg/.png for d=2, .off/.png for d=3)")
    r.add_argument("file")
    r.add_argument("-o", "--output", required=True)
    r.set_defaults(func=cmd_render)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except GuardrailError as e:
        print(f"arrenv: guardrail: {e}", file=sys.stderr)
        return EXIT_GUARDRAIL
    except AuditError as e:
        print(f"arrenv: audit failure: {e}", file=sys.stderr)
        return EXIT_AUDIT
    except (ArrangementError, ValueError, OSError) as e:
        print(f"arrenv: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
