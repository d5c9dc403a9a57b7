"""Command-line interface: ``pvtopo {model,states,pathcat,execspace,export,check} FILE``.

Exit codes: 0 success, 1 unreadable or malformed input (positioned), 2
semantic errors such as cyclic vertex orders or unknown vertices, 3 when
``check`` finds a violated invariant.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import report
from .analysis import reachability
from .errors import ParseError, PVTopoError, ProgramSemanticError, SemanticError
from .homology import HomologyGroup, boundary_matrices, components, homology
from .io import LoadedInput, load_file
from .necklace import mapping_space
from .pathcat import hom_classes
from .pv import lint_program


def threads_from_env() -> int:
    """Parallelism cap from PVTOPO_THREADS (0 = auto).

    Every computation currently runs on one thread, so the value is only
    validated.
    """
    raw = os.environ.get("PVTOPO_THREADS", "0")
    try:
        value = int(raw)
    except ValueError:
        raise SemanticError(f"PVTOPO_THREADS must be a non-negative integer, got {raw!r}") from None
    if value < 0:
        raise SemanticError(f"PVTOPO_THREADS must be a non-negative integer, got {raw!r}")
    return value


def _endpoints(inp: LoadedInput, args) -> tuple:
    a = inp.vertex(args.source) if args.source is not None else inp.initial
    b = inp.vertex(args.target) if args.target is not None else inp.final
    for v, flag in ((a, "--from"), (b, "--to")):
        if not inp.X.has_vertex(v):
            raise SemanticError(f"{flag} state {inp.name(v)} is not a valid state of the model")
    return a, b


def _counts_line(counts: list[int]) -> str:
    return ", ".join(f"dim {d}: {c}" for d, c in enumerate(counts))


def _emit(args, doc: dict, text: str) -> None:
    sys.stdout.write(report.dumps(doc) if args.json else text)


def cmd_model(inp: LoadedInput, args) -> int:
    doc = report.model_section(inp)
    lines = [_counts_line(doc["counts"]), f"initial: {doc['initial']}", f"final: {doc['final']}"]
    if inp.info is not None and not inp.info.final_is_valid:
        lines.append("note: final state exceeds the semaphore capacities")
    _emit(args, doc, "\n".join(lines) + "\n")
    return 0


def cmd_states(inp: LoadedInput, args) -> int:
    doc = report.states_section(inp)
    lines = [
        f"valid states: {doc['valid']}",
        f"reachable: {len(doc['reachable'])}",
        f"co-reachable: {len(doc['coreachable'])}",
    ]
    for key in ("deadlocks", "unreachable", "doomed"):
        lines.append(f"{key}: " + " ".join(f"({v})" for v in doc[key]))
    _emit(args, doc, "\n".join(lines) + "\n")
    return 0


def cmd_pathcat(inp: LoadedInput, args) -> int:
    a, b = _endpoints(inp, args)
    doc = report.pathcat_section(inp, a, b)
    word = "class" if doc["classes"] == 1 else "classes"
    lines = [f"{doc['classes']} {word}"]
    for rep, size in zip(doc["representatives"], doc["sizes"]):
        lines.append("  " + " -> ".join(f"({v})" for v in rep) + f"  [{size} paths]")
    _emit(args, doc, "\n".join(lines) + "\n")
    return 0


def cmd_execspace(inp: LoadedInput, args) -> int:
    a, b = _endpoints(inp, args)
    doc = report.execspace_section(inp, a, b, args.max_dim, args.list)
    lines = [
        "f-vector: (" + ", ".join(map(str, doc["fvector"])) + ")",
        f"pi0: {doc['pi0']}",
        f"path classes: {doc['pathClasses']}",
    ]
    for g in doc["homology"]:
        lines.append(f"H{g['dim']} = {HomologyGroup(g['dim'], g['betti'], tuple(g['torsion']))}")
    if args.list:
        for d, layer in enumerate(doc["simplices"]):
            lines.append(f"dim {d}:")
            lines.extend("  " + s for s in layer)
    _emit(args, doc, "\n".join(lines) + "\n")
    return 0


def cmd_export(inp: LoadedInput, args) -> int:
    if args.format == "dot":
        text = report.to_dot(inp)
    else:
        text = report.dumps(report.full_report(inp, max_dim=args.max_dim))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_check(inp: LoadedInput, args) -> int:
    """Lint warnings plus the structural invariants on the model and its initial-to-final mapping space."""
    X = inp.X
    results = []
    if inp.spec is not None:
        for w in lint_program(inp.spec):
            print(f"warning: {w}")
    results.append(("downward closure", X.is_downward_closed()))
    results.append(("simplicial identities (model)", X.check_simplicial_identities()))
    mats = boundary_matrices(X)
    results.append(("boundary squares to zero (model)", all((p @ q).is_zero() for p, q in zip(mats, mats[1:]))))
    results.append(("betti0 = components (model)", homology(X).betti(0) == components(X)[0]))
    r = reachability(X, inp.initial, inp.final)
    if X.has_vertex(inp.final):
        P = mapping_space(X, inp.initial, inp.final)
        pmats = boundary_matrices(P)
        pi0 = components(P)[0] if P.simplices else 0
        results.append(("simplicial identities (mapping space)", P.check_simplicial_identities()))
        results.append(("boundary squares to zero (mapping space)", all((p @ q).is_zero() for p, q in zip(pmats, pmats[1:]))))
        results.append(("path classes = pi0", len(hom_classes(X, inp.initial, inp.final)) == pi0))
    results.append(("deadlocks are valid", r.deadlocks <= set(X.vertices)))
    ok = True
    for label, passed in results:
        ok &= passed
        print(f"{'PASS' if passed else 'FAIL'} {label}")
    return 0 if ok else 3


COMMANDS = {
    "model": cmd_model,
    "states": cmd_states,
    "pathcat": cmd_pathcat,
    "execspace": cmd_execspace,
    "export": cmd_export,
    "check": cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pvtopo", description="Simplicial models of PV programs and their execution spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help: str, endpoints: bool = False, json_flag: bool = True):
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help="PV program or JSON complex file")
        if endpoints:
            p.add_argument("--from", dest="source", help="start state (e.g. 0,0 or a vertex name); default initial")
            p.add_argument("--to", dest="target", help="end state; default final")
        if json_flag:
            p.add_argument("--json", action="store_true", help="print JSON instead of text")
        return p

    add("model", "per-dimension simplex counts of the model")
    add("states", "deadlocks, unreachable and doomed states")
    add("pathcat", "path-category classes between two states", endpoints=True)
    p = add("execspace", "mapping space between two states", endpoints=True)
    p.add_argument("--max-dim", type=int, default=None)
    p.add_argument("--list", action="store_true", help="list every simplex")
    p = add("export", "write DOT or the full JSON report", json_flag=False)
    p.add_argument("--format", choices=("dot", "json"), default="json")
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--max-dim", type=int, default=None)
    add("check", "lint and verify invariants", json_flag=False)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        threads_from_env()
        inp = load_file(args.file)
        return COMMANDS[args.command](inp, args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except UnicodeDecodeError as exc:
        print(f"error: {args.file}: not UTF-8 text ({exc.reason} at byte {exc.start})", file=sys.stderr)
        return 1
    except ProgramSemanticError as exc:
        print(f"error: {args.file}:{exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"error: {args.file}:{exc}", file=sys.stderr)
        return 1
    except (SemanticError, PVTopoError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
