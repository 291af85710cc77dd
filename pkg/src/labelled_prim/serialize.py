"""Deterministic JSON-ready views and DOT rendering."""

from __future__ import annotations

import json
from typing import Iterable

from .family import LabelledSpace, SpaceReport
from .graph import LabelledGraph, ValidationReport, canonical
from .lattice import HSLattice, QuotientSpace, Verdict
from .tails import Tail
from .topology import TailSpace, members, specialization_order


def _flat(obj) -> bool:
    # scalars and lists of scalars / lists of scalar lists stay on one line
    if isinstance(obj, list):
        return all(not isinstance(x, (dict, list)) or (isinstance(x, list) and _flat_row(x)) for x in obj)
    if isinstance(obj, dict):
        return all(not isinstance(x, dict) and (not isinstance(x, list) or _flat(x)) for x in obj.values())
    return True


def _flat_row(obj) -> bool:
    return all(not isinstance(x, (dict, list)) for x in obj)


def _render(obj, depth: int) -> str:
    if _flat(obj):
        return json.dumps(obj, ensure_ascii=False)
    pad = "  " * (depth + 1)
    if isinstance(obj, dict):
        items = [f"{pad}{json.dumps(k)}: {_render(v, depth + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * depth + "}"
    items = [pad + _render(v, depth + 1) for v in obj]
    return "[\n" + ",\n".join(items) + "\n" + "  " * depth + "]"


def dumps(obj) -> str:
    """Indented JSON with short lists kept inline; stable for equal inputs."""
    return _render(obj, 0) + "\n"


def set_json(g: LabelledGraph, A: int) -> list[str]:
    return g.names(A)


def family_json(g: LabelledGraph, F: Iterable[int]) -> list[list[str]]:
    return [g.names(A) for A in canonical(F)]


def _witness_json(g, witness):
    if witness is None:
        return None
    return [g.names(x) if isinstance(x, int) else x for x in witness]


def verdict_json(g: LabelledGraph, v: Verdict) -> dict:
    return {"passed": v.ok, "condition": v.condition, "witness": _witness_json(g, v.witness)}


def validation_json(r: ValidationReport) -> dict:
    return {
        "has_no_sinks": r.has_no_sinks,
        "is_left_resolving": r.is_left_resolving,
        "is_row_finite": r.is_row_finite,
        "sinks": list(r.sinks),
        "left_resolving_violations": [
            {"vertex": v, "label": a, "edges": [[e.src, e.dst, e.label] for e in es]}
            for v, a, es in r.left_resolving_violations
        ],
    }


def report_json(r: SpaceReport) -> dict:
    out = {
        "is_accommodating": r.is_accommodating,
        "is_non_degenerate": r.is_non_degenerate,
        "is_weakly_left_resolving": r.is_weakly_left_resolving,
        "is_set_finite": r.is_set_finite,
        "is_receiver_set_finite": r.is_receiver_set_finite,
        "has_no_sinks": r.has_no_sinks,
        "counterexamples": {},
    }
    for name, cex in r.counterexamples.items():
        if name == "is_weakly_left_resolving":
            A, B, a = cex
            out["counterexamples"][name] = {"A": A, "B": B, "letter": a}
        else:
            out["counterexamples"][name] = list(cex)
    return out


def lattice_json(lattice: HSLattice) -> dict:
    g = lattice.space.graph
    return {
        "families": [{"id": i, "sets": family_json(g, H)} for i, H in enumerate(lattice.members)],
        "hasse_edges": [list(e) for e in lattice.hasse_edges],
    }


def tail_json(g: LabelledGraph, tail: Tail, tail_id=None) -> dict:
    out = {}
    if tail_id is not None:
        out["id"] = tail_id
    if tail.complement_id is not None:
        out["complement_id"] = tail.complement_id
    out["sets"] = family_json(g, tail.sets)
    out["verified"] = tail.verified
    out["axioms"] = {name: verdict_json(g, v) for name, v in tail.axioms.items()}
    return out


def quotient_json(g: LabelledGraph, q: QuotientSpace) -> dict:
    return {
        "union": g.names(q.union),
        "class_count": len(q.classes),
        "classes": [
            {"representative": g.names(r), "members": [g.names(A) for A in cls]}
            for r, cls in zip(q.representatives, q.classes)
        ],
        "is_congruence": q.is_congruence,
        "is_weakly_left_resolving": q.is_weakly_left_resolving,
    }


# -- DOT ------------------------------------------------------------------------------


def _family_label(g: LabelledGraph, F) -> str:
    return "{" + ", ".join("{" + ",".join(g.names(A)) + "}" for A in canonical(F)) + "}"


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def lattice_dot(lattice: HSLattice) -> str:
    """Hasse diagram, edges pointing from smaller to larger family."""
    g = lattice.space.graph
    lines = ["digraph lattice {"]
    for i, H in enumerate(lattice.members):
        lines.append(f"  H{i} [label={_quote(f'H{i} ' + _family_label(g, H))}];")
    for i, j in lattice.hasse_edges:
        lines.append(f"  H{i} -> H{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def specialization_dot(chi: TailSpace) -> str:
    """Specialization order of the tail space, reflexive pairs omitted."""
    g = chi.space.graph
    order = specialization_order(chi)
    lines = ["digraph prim {"]
    for d, tail in enumerate(chi.tails):
        lines.append(f"  D{d} [label={_quote(f'D{d} ' + _family_label(g, tail.sets))}];")
    for d, e in order.edges:
        if d != e:
            lines.append(f"  D{d} -> D{e};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(result, kind: str) -> str:
    if kind == "lattice" and isinstance(result, HSLattice):
        return lattice_dot(result)
    if kind == "prim-order" and isinstance(result, TailSpace):
        return specialization_dot(result)
    raise ValueError(f"cannot render {type(result).__name__} as {kind!r}")


def closed_sets_json(masks: Iterable[int]) -> list[list[int]]:
    return [members(m) for m in masks]


def space_summary(space: LabelledSpace) -> dict:
    return {"family_size": len(space.family), "report": report_json(space.report)}
