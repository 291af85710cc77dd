"""Finite labelled directed graphs and word-level range/source maps.

Vertex sets are plain ``int`` bitmasks: bit ``i`` is set iff the ``i``-th
vertex (in declaration order) is a member.  Every set-valued function in
this package takes and returns masks; :meth:`LabelledGraph.vset` and
:meth:`LabelledGraph.names` convert to and from vertex identifiers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

VertexSet = int
Word = tuple[str, ...]


class InputError(ValueError):
    """Malformed graph description, unknown vertex, unknown letter."""


@dataclass(frozen=True)
class Edge:
    src: str
    dst: str
    label: str


@dataclass(frozen=True)
class UltimatelyPeriodicWord:
    """The infinite word ``prefix + cycle + cycle + ...``."""

    prefix: Word
    cycle: Word

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "cycle", tuple(self.cycle))
        if not self.cycle:
            raise InputError("cycle of an ultimately periodic word must be nonempty")

    def letter(self, k: int) -> str:
        """Return the ``k``-th letter (0-based)."""
        if k < len(self.prefix):
            return self.prefix[k]
        return self.cycle[(k - len(self.prefix)) % len(self.cycle)]

    def __str__(self):
        return "".join(self.prefix) + "(" + "".join(self.cycle) + ")^w"


@dataclass(frozen=True, eq=False)
class LabelledGraph:
    """A finite directed graph with edges labelled by letters.

    Vertex and label order is input order; it fixes the bit layout of
    vertex masks and the canonical order of all emitted sets.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    alphabet: tuple[str, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        if not self.vertices:
            raise InputError("empty vertex set")
        index = {}
        for v in self.vertices:
            if v in index:
                raise InputError(f"duplicate vertex {v!r}")
            index[v] = len(index)
        labels = {}
        for e in self.edges:
            for end in (e.src, e.dst):
                if end not in index:
                    raise InputError(f"unknown vertex {end!r} in edge {e.src}->{e.dst}:{e.label}")
            labels.setdefault(e.label, len(labels))
        object.__setattr__(self, "alphabet", tuple(labels))
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_letter_index", labels)

        # succ[letter][i]: mask of targets of letter-edges leaving vertex i
        succ = {a: [0] * len(self.vertices) for a in labels}
        pred = {a: [0] * len(self.vertices) for a in labels}
        for e in self.edges:
            s, t = index[e.src], index[e.dst]
            succ[e.label][s] |= 1 << t
            pred[e.label][t] |= 1 << s
        object.__setattr__(self, "_succ", succ)
        object.__setattr__(self, "_pred", pred)

    def __eq__(self, other):
        if not isinstance(other, LabelledGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    @property
    def full(self) -> VertexSet:
        """Mask of all vertices."""
        return (1 << len(self.vertices)) - 1

    def vset(self, names: Iterable[str]) -> VertexSet:
        mask = 0
        for name in names:
            try:
                mask |= 1 << self._index[name]
            except KeyError:
                raise InputError(f"unknown vertex {name!r}") from None
        return mask

    def names(self, mask: VertexSet) -> list[str]:
        return [v for i, v in enumerate(self.vertices) if mask >> i & 1]

    def word(self, letters: Iterable[str]) -> Word:
        w = tuple(letters)
        if not w:
            raise InputError("words must be nonempty")
        for a in w:
            self.check_letter(a)
        return w

    def check_letter(self, a: str) -> None:
        if a not in self._letter_index:
            raise InputError(f"letter {a!r} not in alphabet {list(self.alphabet)}")

    def step(self, A: VertexSet, a: str) -> VertexSet:
        """Single-letter relative range; ``a`` is assumed valid."""
        out = 0
        succ = self._succ[a]
        i = 0
        while A:
            if A & 1:
                out |= succ[i]
            A >>= 1
            i += 1
        return out

    def back(self, A: VertexSet, a: str) -> VertexSet:
        """Sources of ``a``-edges ending in ``A``."""
        out = 0
        pred = self._pred[a]
        i = 0
        while A:
            if A & 1:
                out |= pred[i]
            A >>= 1
            i += 1
        return out


def set_key(mask: VertexSet) -> tuple:
    """Canonical sort key: by size, then by member positions."""
    members = tuple(i for i in range(mask.bit_length()) if mask >> i & 1)
    return (len(members), members)


def family_key(family: Iterable[VertexSet]) -> tuple:
    keys = sorted(set_key(m) for m in family)
    return (len(keys), keys)


def canonical(family: Iterable[VertexSet]) -> tuple[VertexSet, ...]:
    return tuple(sorted(set(family), key=set_key))


def is_subset(A: VertexSet, B: VertexSet) -> bool:
    return A & ~B == 0


# -- construction and I/O ---------------------------------------------------

_GRAPH_KEYS = {"vertices", "edges"}
_EDGE_KEYS = {"src", "dst", "label"}


def build_graph(data: dict) -> LabelledGraph:
    """Build a graph from ``{"vertices": [...], "edges": [{"src", "dst", "label"}...]}``.

    Unknown keys, missing keys and non-string identifiers are rejected with
    :class:`InputError`.
    """
    if not isinstance(data, dict):
        raise InputError("graph description must be a JSON object")
    extra = set(data) - _GRAPH_KEYS
    if extra:
        raise InputError(f"unknown keys {sorted(extra)}")
    missing = _GRAPH_KEYS - set(data)
    if missing:
        raise InputError(f"missing keys {sorted(missing)}")
    vertices = data["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise InputError("'vertices' must be a list of strings")
    edges = []
    if not isinstance(data["edges"], list):
        raise InputError("'edges' must be a list")
    for e in data["edges"]:
        if not isinstance(e, dict) or set(e) != _EDGE_KEYS:
            raise InputError(f"edge must have exactly the keys src, dst, label: {e!r}")
        if not all(isinstance(e[k], str) for k in _EDGE_KEYS):
            raise InputError(f"edge fields must be strings: {e!r}")
        edges.append(Edge(e["src"], e["dst"], e["label"]))
    return LabelledGraph(tuple(vertices), tuple(edges))


def graph_to_dict(g: LabelledGraph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [{"src": e.src, "dst": e.dst, "label": e.label} for e in g.edges],
    }


def load_graph(path) -> LabelledGraph:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read input {path}: {exc}") from exc
    return build_graph(data)


def from_edges(vertices: Sequence[str], edges: Iterable[tuple[str, str, str]]) -> LabelledGraph:
    """Shorthand: ``from_edges("uvw", [("u", "u", "a"), ...])``."""
    return LabelledGraph(tuple(vertices), tuple(Edge(*e) for e in edges))


# -- validation ---------------------------------------------------------------


@dataclass(frozen=True)
class ValidationReport:
    has_no_sinks: bool
    is_left_resolving: bool
    is_row_finite: bool
    sinks: tuple[str, ...]
    # (vertex, label, offending edges) for every repeated incoming label
    left_resolving_violations: tuple[tuple[str, str, tuple[Edge, ...]], ...]


def validate_graph(g: LabelledGraph) -> ValidationReport:
    emitters = {e.src for e in g.edges}
    sinks = tuple(v for v in g.vertices if v not in emitters)
    incoming: dict[tuple[str, str], list[Edge]] = {}
    for e in g.edges:
        incoming.setdefault((e.dst, e.label), []).append(e)
    violations = tuple(
        (v, a, tuple(incoming[v, a]))
        for v in g.vertices
        for a in g.alphabet
        if len(incoming.get((v, a), ())) > 1
    )
    return ValidationReport(
        has_no_sinks=not sinks,
        is_left_resolving=not violations,
        is_row_finite=True,
        sinks=sinks,
        left_resolving_violations=violations,
    )


# -- ranges and sources ---------------------------------------------------------


def relative_range(g: LabelledGraph, A: VertexSet, w: Iterable[str]) -> VertexSet:
    """Endpoints of paths labelled ``w`` that start in ``A``.

    Evaluated letter by letter, using ``r(A, a + rest) = r(r(A, a), rest)``.
    """
    w = g.word(w)
    for a in w:
        A = g.step(A, a)
    return A


def word_range(g: LabelledGraph, w: Iterable[str]) -> VertexSet:
    return relative_range(g, g.full, w)


def word_source(g: LabelledGraph, w: Iterable[str]) -> VertexSet:
    """Start vertices of paths labelled ``w``; a backward sweep from ``E^0``."""
    w = g.word(w)
    A = g.full
    for a in reversed(w):
        A = g.back(A, a)
    return A


def outgoing_labels(g: LabelledGraph, A: VertexSet) -> tuple[str, ...]:
    """Labels of edges leaving ``A``, in alphabet order."""
    return tuple(a for a in g.alphabet if g.step(A, a))
