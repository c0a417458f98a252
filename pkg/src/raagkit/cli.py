"""Command-line front end.

Every subcommand reads a graph file in the line format of
:func:`raagkit.graphs.parse_graph` (except ``gauss-bonnet``, which reads a
complex JSON file) and words as single quoted arguments in the word syntax.
Exit codes: 0 success, 1 a verified property actually failed (a violated
bound, axiom, or nonzero residual), 2 usage or input errors.

The environment variable ``RAAG_KIT_CAPS`` (for example
``reps=500000,hull=200000``) overrides the default enumeration caps;
explicit flags take precedence over it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, TextIO

from . import cube
from .bounds import reference_bounds, scl_lower_bound
from .complexes import (
    curvature_face,
    curvature_vertex,
    euler_characteristic,
    gauss_bonnet_residual,
    parse_complex,
)
from .errors import RaagError
from .graphs import DefiningGraph, chromatic_number, parse_graph
from .overlap import DEFAULT_REPS_CAP, verify_key_lemma
from .words import Word, cyclically_reduce, equal, normal_form

DEFAULT_SEED = 0x5C1


def _read_caps_env() -> dict[str, int]:
    raw = os.environ.get("RAAG_KIT_CAPS", "")
    caps: dict[str, int] = {}
    for part in raw.split(","):
        part = part.strip()
        if not part:
            continue
        key, _, value = part.partition("=")
        try:
            caps[key.strip()] = int(value)
        except ValueError:
            raise RaagError(f"RAAG_KIT_CAPS entry {part!r} is not name=integer")
    return caps


def _load_graph(path: str) -> DefiningGraph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise RaagError(f"cannot read graph file {path}: {exc.strerror}")


def _rat(q) -> str:
    if q is None:
        return "inf"
    return str(q)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="raagkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", help="normal form of a word")
    p.add_argument("graph")
    p.add_argument("word")

    p = sub.add_parser("cyc", help="cyclic reduction of a word")
    p.add_argument("graph")
    p.add_argument("word")

    p = sub.add_parser("eq", help="decide equality of two words")
    p.add_argument("graph")
    p.add_argument("word1")
    p.add_argument("word2")

    p = sub.add_parser("chromatic", help="chromatic number with a coloring")
    p.add_argument("graph")
    p.add_argument("--heuristic", action="store_true")

    p = sub.add_parser("scl-bound", help="certified scl lower bound")
    p.add_argument("graph")
    p.add_argument("word")
    p.add_argument("--heuristic", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify-overlap", help="overlap bound over closure representatives")
    p.add_argument("graph")
    p.add_argument("word")
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--reps-cap", type=int, default=None)
    p.add_argument("--mode", choices=("disjoint", "any"), default="disjoint")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("cube", help="half-space calculus helpers")
    cube_sub = p.add_subparsers(dest="cube_command", required=True)

    q = cube_sub.add_parser("interval", help="half-spaces separating two vertices")
    q.add_argument("graph")
    q.add_argument("x")
    q.add_argument("y")

    q = cube_sub.add_parser("median", help="median of three vertices")
    q.add_argument("graph")
    q.add_argument("x")
    q.add_argument("y")
    q.add_argument("z")

    q = cube_sub.add_parser("axioms", help="randomized search for forbidden configurations")
    q.add_argument("graph")
    q.add_argument("--radius", type=int, default=3)
    q.add_argument("--samples", type=int, default=1000)
    q.add_argument("--seed", type=int, default=DEFAULT_SEED)

    q = cube_sub.add_parser("chains", help="longest-chain midpoint property over samples")
    q.add_argument("graph")
    q.add_argument("--radius", type=int, default=3)
    q.add_argument("--samples", type=int, default=200)
    q.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = sub.add_parser("gauss-bonnet", help="curvature residual of an angled complex")
    p.add_argument("complex", metavar="complex.json")

    return parser


def _cmd_nf(args, out: TextIO) -> int:
    graph = _load_graph(args.graph)
    print(normal_form(Word.parse(graph, args.word)).display(), file=out)
    return 0


def _cmd_cyc(args, out: TextIO) -> int:
    graph = _load_graph(args.graph)
    reduction = cyclically_reduce(Word.parse(graph, args.word))
    print(f"core: {reduction.core.display()}", file=out)
    print(f"conjugator: {reduction.conjugator.display()}", file=out)
    return 0


def _cmd_eq(args, out: TextIO) -> int:
    graph = _load_graph(args.graph)
    same = equal(Word.parse(graph, args.word1), Word.parse(graph, args.word2))
    print("equal" if same else "not equal", file=out)
    return 0


def _cmd_chromatic(args, out: TextIO) -> int:
    graph = _load_graph(args.graph)
    k, coloring, exact = chromatic_number(
        graph, mode="heuristic" if args.heuristic else "exact"
    )
    print(f"chromatic number: {k} ({'exact' if exact else 'heuristic'})", file=out)
    assignment = " ".join(f"{v}={coloring.assignment[v]}" for v in graph.vertices)
    print(f"coloring: {assignment}", file=out)
    return 0


def _cmd_scl_bound(args, out: TextIO) -> int:
    graph = _load_graph(args.graph)
    word = Word.parse(graph, args.word)
    cert = scl_lower_bound(graph, word, mode="heuristic" if args.heuristic else "exact")
    if args.json:
        print(json.dumps(cert.to_json_dict()), file=out)
        return 0
    print(f"bound: {_rat(cert.bound)}", file=out)
    print(f"route: {cert.route}", file=out)
    print(f"finite: {'true' if cert.finite else 'false'}", file=out)
    if cert.coloring is not None:
        kind = "exact" if cert.exactness else "heuristic"
        print(f"colors: {cert.coloring.num_colors} ({kind})", file=out)
    print(f"triangle-free: {'true' if cert.triangle_free_witness else 'false'}", file=out)
    refs = " ".join(f"{k}={v}" for k, v in sorted(reference_bounds().items()))
    print(f"references: {refs}", file=out)
    return 0


def _cmd_verify_overlap(args, out: TextIO, caps: dict[str, int]) -> int:
    graph = _load_graph(args.graph)
    word = Word.parse(graph, args.word)
    reps_cap = args.reps_cap
    if reps_cap is None:
        reps_cap = caps.get("reps", DEFAULT_REPS_CAP)
    reports = verify_key_lemma(word, n_max=args.n_max, reps_cap=reps_cap, mode=args.mode)
    if args.json:
        print(json.dumps([r.to_json_dict() for r in reports]), file=out)
    else:
        for r in reports:
            line = (
                f"n={r.n} reps={r.representatives_checked} "
                f"max={r.max_overlap_length} bound={_rat(r.bound)} "
                f"violated={'true' if r.violated else 'false'}"
            )
            if r.cap_exceeded:
                line += " (cap exceeded)"
            print(line, file=out)
            if r.witness is not None:
                w = r.witness
                print(
                    f"  witness: u={w.u.display()} pos={w.pos_u} "
                    f"inv_pos={w.pos_u_inv} rep={w.representative.display()}",
                    file=out,
                )
    return 1 if any(r.violated for r in reports) else 0


def _cmd_cube(args, out: TextIO, caps: dict[str, int]) -> int:
    graph = _load_graph(args.graph)
    if args.cube_command == "interval":
        ctx = cube.interval(Word.parse(graph, args.x), Word.parse(graph, args.y))
        print(f"distance: {len(ctx)}", file=out)
        for hs in ctx.halfspaces:
            print(hs.display(), file=out)
        return 0
    if args.cube_command == "median":
        m = cube.median(
            Word.parse(graph, args.x),
            Word.parse(graph, args.y),
            Word.parse(graph, args.z),
        )
        print(m.display(), file=out)
        return 0
    if args.cube_command == "axioms":
        report = cube.check_special_axioms(
            graph, samples=args.samples, radius=args.radius, seed=args.seed
        )
        print(
            f"radius: {report.radius} samples: {report.samples} seed: {report.seed}",
            file=out,
        )
        counts = " ".join(f"{k}={v}" for k, v in sorted(report.checked.items()))
        print(f"checked: {counts}", file=out)
        for violation in report.violations:
            print(f"violation: {violation}", file=out)
        print("ok" if report.ok else "FAIL", file=out)
        return 0 if report.ok else 1
    if args.cube_command == "chains":
        report = cube.check_max_chains(
            graph, samples=args.samples, radius=args.radius, seed=args.seed
        )
        print(
            f"radius: {report.radius} samples: {report.samples} seed: {report.seed}",
            file=out,
        )
        print(
            f"intervals: {report.intervals_checked} nested pairs: {report.nested_pairs} "
            f"chains: {report.chains_enumerated} midpoint pairs: {report.midpoint_pairs}",
            file=out,
        )
        for violation in report.violations:
            print(f"violation: {violation}", file=out)
        print("ok" if report.ok else "FAIL", file=out)
        return 0 if report.ok else 1
    raise AssertionError(f"unhandled cube subcommand {args.cube_command!r}")


def _cmd_gauss_bonnet(args, out: TextIO) -> int:
    try:
        with open(args.complex, "r", encoding="utf-8") as fh:
            complex_ = parse_complex(fh.read())
    except OSError as exc:
        raise RaagError(f"cannot read complex file {args.complex}: {exc.strerror}")
    chi = euler_characteristic(complex_)
    curvature = sum(
        (curvature_vertex(complex_, v) for v in complex_.vertices), start=0
    ) + sum((curvature_face(complex_, f) for f in complex_.face_order), start=0)
    residual = gauss_bonnet_residual(complex_)
    print(
        f"vertices: {len(complex_.vertices)} edges: {len(complex_.edges)} "
        f"faces: {len(complex_.faces)} euler characteristic: {chi}",
        file=out,
    )
    print(f"curvature sum: {_rat(curvature)} (in units of pi)", file=out)
    print(f"residual: {_rat(residual)}", file=out)
    print("ok" if residual == 0 else "FAIL", file=out)
    return 0 if residual == 0 else 1


_SYNOPSES = {
    "nf": "raagkit nf <graph> <word>",
    "cyc": "raagkit cyc <graph> <word>",
    "eq": "raagkit eq <graph> <word1> <word2>",
    "chromatic": "raagkit chromatic <graph> [--heuristic]",
    "scl-bound": "raagkit scl-bound <graph> <word> [--heuristic] [--json]",
    "verify-overlap": (
        "raagkit verify-overlap <graph> <word> [--n-max K] [--reps-cap N] "
        "[--mode disjoint|any] [--json]"
    ),
    "cube": (
        "raagkit cube interval|median|axioms|chains <graph> <args...> "
        "[--radius R] [--samples S] [--seed X]"
    ),
    "gauss-bonnet": "raagkit gauss-bonnet <complex.json>",
}


def run(argv: list[str], out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        caps = _read_caps_env()
        if "hull" in caps:
            # module-level default so every internally built interval sees it
            cube.DEFAULT_HULL_CAP = caps["hull"]
        if args.command == "nf":
            return _cmd_nf(args, out)
        if args.command == "cyc":
            return _cmd_cyc(args, out)
        if args.command == "eq":
            return _cmd_eq(args, out)
        if args.command == "chromatic":
            return _cmd_chromatic(args, out)
        if args.command == "scl-bound":
            return _cmd_scl_bound(args, out)
        if args.command == "verify-overlap":
            return _cmd_verify_overlap(args, out, caps)
        if args.command == "cube":
            return _cmd_cube(args, out, caps)
        if args.command == "gauss-bonnet":
            return _cmd_gauss_bonnet(args, out)
        raise AssertionError(f"unhandled command {args.command!r}")
    except RaagError as exc:
        print(f"error: {exc}", file=err)
        synopsis = _SYNOPSES.get(getattr(args, "command", ""), "")
        if synopsis:
            print(f"usage: {synopsis}", file=err)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
