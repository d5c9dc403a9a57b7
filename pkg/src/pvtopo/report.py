"""JSON report and DOT export."""

from __future__ import annotations

import json

from .analysis import StateReport, reachability
from .homology import components, homology
from .io import LoadedInput
from .necklace import format_simplex, mapping_space
from .pathcat import hom_classes


def _names(inp: LoadedInput, vs) -> list[str]:
    return [inp.name(v) for v in sorted(vs, key=inp.X.rank)]


def model_section(inp: LoadedInput) -> dict:
    out = {
        "kind": inp.kind,
        "counts": inp.counts(),
        "initial": inp.name(inp.initial),
        "final": inp.name(inp.final),
    }
    if inp.info is not None:
        out["processes"] = list(inp.info.process_names)
        out["semaphores"] = list(inp.info.semaphore_names)
        out["capacities"] = list(inp.info.capacities)
        out["degrees"] = {inp.name(v): list(d) for v, d in inp.info.degrees.items()}
        out["finalValid"] = inp.info.final_is_valid
    return out


def states_section(inp: LoadedInput, report: StateReport | None = None) -> dict:
    r = report or reachability(inp.X, inp.initial, inp.final)
    return {
        "initial": inp.name(r.initial),
        "final": inp.name(r.final),
        "valid": len(r.valid),
        "reachable": _names(inp, r.reachable),
        "coreachable": _names(inp, r.coreachable),
        "deadlocks": _names(inp, r.deadlocks),
        "unreachable": _names(inp, r.unreachable),
        "doomed": _names(inp, r.doomed),
    }


def execspace_section(inp: LoadedInput, a, b, max_dim: int | None = None, listing: bool = False) -> dict:
    X = inp.X
    P = mapping_space(X, a, b, max_dim)
    out = {
        "from": inp.name(a),
        "to": inp.name(b),
        "fvector": P.fvector(),
        "pi0": components(P)[0] if P.simplices else 0,
        "homology": [
            {"dim": g.dim, "betti": g.betti, "torsion": list(g.torsion)} for g in homology(P).groups
        ],
        "pathClasses": len(hom_classes(X, a, b)),
    }
    if listing:
        out["simplices"] = [
            [format_simplex(X, s, inp.name) for s in layer] for layer in P.simplices
        ]
    return out


def pathcat_section(inp: LoadedInput, a, b) -> dict:
    classes = hom_classes(inp.X, a, b)
    return {
        "from": inp.name(a),
        "to": inp.name(b),
        "classes": len(classes),
        "sizes": [len(c) for c in classes.classes],
        "representatives": [[inp.name(v) for v in rep] for rep in classes.representatives],
    }


def full_report(inp: LoadedInput, queries=None, max_dim: int | None = None) -> dict:
    """The whole report; also a valid complex file (``vertices``/``simplices``)."""
    X = inp.X
    if queries is None:
        queries = [(inp.initial, inp.final)] if X.has_vertex(inp.final) else []
    doc = {
        "input": {"kind": inp.kind, "digest": inp.digest},
        "model": model_section(inp),
        "states": states_section(inp),
        "execspace": [execspace_section(inp, a, b, max_dim) for a, b in queries],
        "vertices": [inp.name(v) for v in X.vertices],
        "simplices": [[inp.name(v) for v in c] for c in X.maximal_simplices() if len(c) > 1],
    }
    if inp.ambient_dimension is not None:
        doc["dimension"] = inp.ambient_dimension
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(inp: LoadedInput, report: StateReport | None = None) -> str:
    """Directed valid 1-skeleton; deadlocks double-circled, doomed dashed, unreachable gray."""
    X = inp.X
    r = report or reachability(X, inp.initial, inp.final)
    lines = ["digraph model {", "  rankdir=LR;", "  node [shape=circle];"]
    for v in X.vertices:
        attrs = [f"label={_quote(inp.name(v))}"]
        styles = []
        if v in r.deadlocks:
            attrs.append("shape=doublecircle")
        if v in r.doomed:
            styles.append("dashed")
        if v in r.unreachable:
            attrs.append("color=gray")
            attrs.append("fontcolor=gray")
        if styles:
            attrs.append(f'style="{",".join(styles)}"')
        lines.append(f"  {_quote(inp.name(v))} [{', '.join(attrs)}];")
    for u, w in X.edges():
        lines.append(f"  {_quote(inp.name(u))} -> {_quote(inp.name(w))};")
    lines.append("}")
    return "\n".join(lines) + "\n"
