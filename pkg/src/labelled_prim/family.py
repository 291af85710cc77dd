"""The accommodating set family B and verified labelled spaces (E, L, B)."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .graph import (
    InputError,
    LabelledGraph,
    VertexSet,
    canonical,
    set_key,
    validate_graph,
)

DEFAULT_MAX_FAMILY_SIZE = 4096

SetFamily = frozenset  # frozenset[VertexSet]


FLAG_LABELS = {
    "has_no_sinks": "no sinks",
    "is_accommodating": "accommodating",
    "is_non_degenerate": "non-degenerate",
    "is_weakly_left_resolving": "weakly left-resolving",
    "is_set_finite": "set-finite",
    "is_receiver_set_finite": "receiver set-finite",
}


class FamilyTooLarge(RuntimeError):
    pass


class AssumptionViolated(RuntimeError):
    """The labelled space fails one of the standing assumptions."""

    def __init__(self, failed: list[str], report: "SpaceReport"):
        self.failed = failed
        self.report = report
        detail = "; ".join(
            f"{FLAG_LABELS[name]} {report.counterexamples[name]}"
            if name in report.counterexamples
            else FLAG_LABELS[name]
            for name in failed
        )
        super().__init__(f"assumption violated: {detail}")


class SpaceUnverified(RuntimeError):
    pass


def generate_family(g: LabelledGraph, max_family_size: int = DEFAULT_MAX_FAMILY_SIZE) -> tuple[VertexSet, ...]:
    """Smallest family holding every ``r(a)`` and ``{}`` that is closed under
    single-letter relative ranges, union, intersection and relative complement.

    Single letters are enough: ``r(A, ab) = r(r(A, a), b)``.
    """
    seen: set[VertexSet] = {0}
    frontier = [0]
    for a in g.alphabet:
        r = g.step(g.full, a)
        if r not in seen:
            seen.add(r)
            frontier.append(r)

    def add(x):
        if x not in seen:
            seen.add(x)
            frontier.append(x)
            if len(seen) > max_family_size:
                raise FamilyTooLarge(f"family too large: more than {max_family_size} sets")

    # pairs are only formed between a fresh set and everything seen so far
    members = []
    while frontier:
        x = frontier.pop()
        members.append(x)
        for a in g.alphabet:
            add(g.step(x, a))
        for y in list(members):
            add(x | y)
            add(x & y)
            add(x & ~y)
            add(y & ~x)
    return canonical(seen)


@dataclass(frozen=True)
class SpaceReport:
    is_accommodating: bool
    is_non_degenerate: bool
    is_weakly_left_resolving: bool
    is_set_finite: bool
    is_receiver_set_finite: bool
    has_no_sinks: bool
    # keyed by flag name; present iff that flag is False
    counterexamples: dict = field(default_factory=dict)

    @property
    def failed(self) -> list[str]:
        return [attr for attr in FLAG_LABELS if not getattr(self, attr)]

    @property
    def ok(self) -> bool:
        return not self.failed


def _check_family_input(g: LabelledGraph, F: Iterable[VertexSet]) -> tuple[VertexSet, ...]:
    F = canonical(F)
    for A in F:
        if A < 0 or A > g.full:
            raise InputError(f"set {A:#b} is not a subset of the vertex set")
    return F


def verify_space(g: LabelledGraph, F: Iterable[VertexSet]) -> SpaceReport:
    """Check every standing assumption on ``(g, F)``; never raises on failure.

    Weak left-resolvedness is tested on all pairs and all single letters,
    which covers every word once ``F`` is closed under relative ranges.
    """
    F = _check_family_input(g, F)
    members = set(F)
    cex: dict[str, tuple] = {}

    def accommodating():
        if not any(F):
            return ("family has no nonempty member",)
        for a in g.alphabet:
            if g.step(g.full, a) not in members:
                return ("r(a) missing", a)
        for A in F:
            for a in g.alphabet:
                if g.step(A, a) not in members:
                    return ("relative range missing", g.names(A), a)
        for i, A in enumerate(F):
            for B in F[i + 1:]:
                if A | B not in members:
                    return ("union missing", g.names(A), g.names(B))
                if A & B not in members:
                    return ("intersection missing", g.names(A), g.names(B))
        return None

    def non_degenerate():
        for A in F:
            for B in F:
                if A & ~B not in members:
                    return ("relative complement missing", g.names(A), g.names(B))
        return None

    def weakly_left_resolving():
        for i, A in enumerate(F):
            for B in F[i + 1:]:
                for a in g.alphabet:
                    if g.step(A & B, a) != g.step(A, a) & g.step(B, a):
                        return (g.names(A), g.names(B), a)
        return None

    checks = {
        "is_accommodating": accommodating(),
        "is_non_degenerate": non_degenerate(),
        "is_weakly_left_resolving": weakly_left_resolving(),
    }
    for name, witness in checks.items():
        if witness is not None:
            cex[name] = witness
    vr = validate_graph(g)
    if not vr.has_no_sinks:
        cex["has_no_sinks"] = vr.sinks
    return SpaceReport(
        is_accommodating="is_accommodating" not in cex,
        is_non_degenerate="is_non_degenerate" not in cex,
        is_weakly_left_resolving="is_weakly_left_resolving" not in cex,
        # finite graphs: s^-1(A) and r^-1(A) are always finite
        is_set_finite=True,
        is_receiver_set_finite=True,
        has_no_sinks=vr.has_no_sinks,
        counterexamples=cex,
    )


@dataclass(frozen=True, eq=False)
class LabelledSpace:
    graph: LabelledGraph
    family: tuple[VertexSet, ...]
    report: SpaceReport

    @property
    def verified(self) -> bool:
        return self.report.ok

    def require_verified(self) -> None:
        if not self.verified:
            raise SpaceUnverified(
                "space unverified: " + ", ".join(FLAG_LABELS[f] for f in self.report.failed)
            )

    @cached_property
    def index(self) -> dict[VertexSet, int]:
        return {A: i for i, A in enumerate(self.family)}

    @cached_property
    def members(self) -> frozenset:
        return frozenset(self.family)

    @cached_property
    def steps(self) -> tuple[tuple[int, ...], ...]:
        """``steps[i][k]``: index of ``r(family[i], alphabet[k])``, or -1 if outside B."""
        g = self.graph
        return tuple(
            tuple(self.index.get(g.step(A, a), -1) for a in g.alphabet) for A in self.family
        )

    def check_member(self, A: VertexSet) -> None:
        if A not in self.index:
            raise InputError(f"set {self.graph.names(A)} is not in the family")

    def check_subfamily(self, S: Iterable[VertexSet]) -> frozenset:
        S = frozenset(S)
        for A in S:
            self.check_member(A)
        return S

    def vset(self, names: Iterable[str]) -> VertexSet:
        return self.graph.vset(names)

    def family_of(self, *sets: Iterable[str]) -> frozenset:
        """``space.family_of("u", "uv", [])`` -> frozenset of masks."""
        return frozenset(self.graph.vset(s) for s in sets)

    def sorted(self, S: Iterable[VertexSet]) -> list[VertexSet]:
        return sorted(S, key=set_key)


def make_space(
    g: LabelledGraph,
    F: Optional[Iterable[VertexSet]] = None,
    allow_unverified: bool = False,
    max_family_size: int = DEFAULT_MAX_FAMILY_SIZE,
) -> LabelledSpace:
    """Package ``(g, F)`` as a labelled space, generating ``F`` if omitted.

    Raises :class:`AssumptionViolated` unless every standing assumption holds
    or ``allow_unverified`` is set; in the latter case the returned space
    carries its report and downstream enumeration refuses it.
    """
    if F is None:
        F = generate_family(g, max_family_size)
    else:
        F = _check_family_input(g, F)
        if len(F) > max_family_size:
            raise FamilyTooLarge(f"family too large: more than {max_family_size} sets")
    report = verify_space(g, F)
    if not report.ok and not allow_unverified:
        raise AssumptionViolated(report.failed, report)
    return LabelledSpace(g, tuple(F), report)
