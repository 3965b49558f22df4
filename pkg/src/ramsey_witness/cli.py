"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 precondition failure (or a
witness that does not verify), 3 internal soundness failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .extraction import SoundnessError, verify_witness
from .families import KINDS, FamilySpec, Witness, generate
from .graph import Graph6Error, PreconditionError, parse_graph6, read_graph6, to_dot, write_graph6
from .harness import (
    THEOREMS,
    InputError,
    ScanConfig,
    check_record,
    dump_report,
    empirical_threshold,
    graph_invariants,
    iter_graph6,
    run_extraction,
    scan_invariants,
)

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_SOUNDNESS = 0, 1, 2, 3

_ALIASES = {k.lower(): k for k in KINDS}
_ALIASES.update({"hairy": "HairyClique", "triangle": "TriangleClique", "triangles": "TriangleClique"})


def _kind(text: str) -> str:
    try:
        return _ALIASES[text.lower()]
    except KeyError:
        raise argparse.ArgumentTypeError(f"unknown family {text!r}; choose from {', '.join(KINDS)}") from None


def _attach(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError("attachment set must be comma-separated integers") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ramsey-witness", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a family member as graph6 or DOT")
    gen.add_argument("--family", type=_kind, required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--m", type=int, help="second side of a biclique (default n)")
    gen.add_argument("--l", type=int, help="length parameter")
    gen.add_argument("--pattern", help="graph6 of H for the General* kinds")
    gen.add_argument("--attach", type=_attach, help="attachment set X, e.g. 0,2")
    gen.add_argument("--format", choices=("graph6", "dot"), default="graph6")

    inv = sub.add_parser("invariants", help="exact parameters of every graph in a file")
    inv.add_argument("--input", required=True)

    ext = sub.add_parser("extract", help="run a theorem pipeline on every graph in a file")
    ext.add_argument("--theorem", choices=THEOREMS, required=True)
    ext.add_argument("--n", type=int, required=True)
    ext.add_argument("--r", type=int, help="matching pipeline: monochromatic set size is 2r (default n)")
    ext.add_argument("--input", required=True)

    ver = sub.add_parser("verify", help="check a witness against the first graph of a file")
    ver.add_argument("--input", required=True)
    ver.add_argument("--witness", required=True, help="JSON file from `extract` or a bare witness object")

    scan = sub.add_parser("scan", help="threshold or invariant scan over graph6 files")
    scan.add_argument("--theorem", choices=THEOREMS, help="omit with --mode invariants")
    scan.add_argument("--n", type=int, default=2)
    scan.add_argument("--input", nargs="+", required=True)
    scan.add_argument("--jobs", type=int, default=1)
    scan.add_argument("--output", help="report path (default stdout)")
    scan.add_argument("--mode", choices=("threshold", "invariants"), default="threshold")
    scan.add_argument("--records", action="store_true", help="include per-graph records")
    return p


def _cmd_generate(args) -> int:
    pattern = parse_graph6(args.pattern) if args.pattern else None
    spec = FamilySpec(args.family, args.n, m=args.m, l=args.l, pattern=pattern, attach=args.attach)
    g = generate(spec)
    if args.format == "dot":
        sys.stdout.write(to_dot(g, name=spec.kind))
    else:
        sys.stdout.write(write_graph6(g) + "\n")
    return EXIT_OK


def _cmd_invariants(args) -> int:
    for _, _, g6 in iter_graph6([args.input]):
        rec = graph_invariants(g6)
        rec["violations"] = check_record(rec)
        print(json.dumps(rec, sort_keys=True))
    return EXIT_OK


def _cmd_extract(args) -> int:
    if args.n < 1:
        raise PreconditionError("n must be positive")
    for _, _, g6 in iter_graph6([args.input]):
        print(json.dumps(run_extraction(g6, args.theorem, args.n, args.r), sort_keys=True))
    return EXIT_OK


def _load_witness(path: str) -> Witness:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if "witness" in data:
        data = data["witness"]
    return Witness.from_json(data)


def _cmd_verify(args) -> int:
    graphs = read_graph6(args.input)
    first = next(graphs, None)
    if first is None:
        raise PreconditionError(f"{args.input} contains no graph")
    g = first[1]
    try:
        w = _load_witness(args.witness)
    except (KeyError, TypeError, ValueError) as err:
        print(f"error: malformed witness: {err}", file=sys.stderr)
        return EXIT_USAGE
    ok = verify_witness(g, w)
    print(json.dumps({"graph6": write_graph6(g), "family": w.spec.label(), "valid": ok}, sort_keys=True))
    return EXIT_OK if ok else EXIT_PRECONDITION


def _cmd_scan(args) -> int:
    theorem = args.theorem if args.mode == "threshold" else None
    if args.mode == "threshold" and theorem is None:
        print("error: --theorem is required for a threshold scan", file=sys.stderr)
        return EXIT_USAGE
    try:
        config = ScanConfig(tuple(args.input), theorem, args.n, args.jobs, args.output, args.records)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    if args.mode == "threshold":
        report = empirical_threshold(config).to_json()
    else:
        report = scan_invariants(config)
    text = dump_report(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


COMMANDS = {
    "generate": _cmd_generate,
    "invariants": _cmd_invariants,
    "extract": _cmd_extract,
    "verify": _cmd_verify,
    "scan": _cmd_scan,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except SoundnessError as err:
        print(f"internal error: {err}", file=sys.stderr)
        return EXIT_SOUNDNESS
    except (InputError, Graph6Error, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as err:
        print(f"precondition failed: {err}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as err:
        # bad family parameters and similar argument errors
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
