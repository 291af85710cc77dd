"""Hereditary and saturated subfamilies of B and the lattice they form.

A family is a ``frozenset`` of vertex masks drawn from ``space.family``.
Every hereditary-and-saturated family returned here contains the empty
set; the literally empty family and ``{{}}`` both stand for the zero ideal
and are identified.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .family import LabelledSpace
from .graph import VertexSet, canonical, family_key, is_subset

Family = frozenset


class NotHereditarySaturated(ValueError):
    pass


@dataclass(frozen=True)
class Verdict:
    """Outcome of a predicate, with the violated condition and a witness on failure."""

    ok: bool
    condition: Optional[str] = None
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.ok


_PASS = Verdict(True)


def is_hereditary(space: LabelledSpace, H: Iterable[VertexSet]) -> Verdict:
    """Closed under relative ranges (1), unions (2), and subsets lying in B (3)."""
    H = space.check_subfamily(H)
    g = space.graph
    order = space.sorted(H)
    for A in order:
        for a in g.alphabet:
            if g.step(A, a) not in H:
                return Verdict(False, "relative range", (A, a))
    for i, A in enumerate(order):
        for B in order[i + 1:]:
            if A | B not in H:
                return Verdict(False, "union", (A, B))
    for A in order:
        for X in space.family:
            if X not in H and is_subset(X, A):
                return Verdict(False, "subset", (A, X))
    return _PASS


def feeds_into(space: LabelledSpace, A: VertexSet, H: Iterable[VertexSet]) -> bool:
    """True iff every single-letter relative range of ``A`` lies in ``H``."""
    space.check_member(A)
    g = space.graph
    return all(g.step(A, a) in H for a in g.alphabet)


def is_saturated(space: LabelledSpace, H: Iterable[VertexSet]) -> Verdict:
    H = space.check_subfamily(H)
    for A in space.family:
        if A not in H and feeds_into(space, A, H):
            return Verdict(False, "saturation", (A,))
    return _PASS


def is_hs(space: LabelledSpace, H: Iterable[VertexSet]) -> bool:
    return bool(is_hereditary(space, H)) and bool(is_saturated(space, H))


def _require_hs(space, H, what="input"):
    H = space.check_subfamily(H)
    for verdict in (is_hereditary(space, H), is_saturated(space, H)):
        if not verdict:
            raise NotHereditarySaturated(
                f"{what} not hereditary and saturated: {verdict.condition} {verdict.witness}"
            )
    return H | {0}


def saturation_sequence(space: LabelledSpace, H: Iterable[VertexSet]) -> list[Family]:
    """The iterates ``H_0 = H``, ``H_{k+1} = {A in B : A feeds into H_k}`` up to the fixpoint."""
    H = space.check_subfamily(H)
    verdict = is_hereditary(space, H)
    if not verdict:
        raise NotHereditarySaturated(
            f"input not hereditary: {verdict.condition} {verdict.witness}"
        )
    cur = frozenset(H | {0})
    seq = [cur]
    while True:
        nxt = frozenset(A for A in space.family if feeds_into(space, A, cur))
        if nxt == cur:
            return seq
        seq.append(nxt)
        cur = nxt


def saturate(space: LabelledSpace, H: Iterable[VertexSet]) -> Family:
    """Saturation of a hereditary family: the union of its saturation sequence."""
    K = frozenset()
    for Hk in saturation_sequence(space, H):
        K |= Hk
    return K


def hereditary_closure(space: LabelledSpace, S: Iterable[VertexSet]) -> Family:
    S = space.check_subfamily(S)
    g = space.graph
    H = set(S) | {0}
    while True:
        size = len(H)
        for A in list(H):
            for a in g.alphabet:
                H.add(g.step(A, a))
        items = list(H)
        for i, A in enumerate(items):
            for B in items[i + 1:]:
                H.add(A | B)
        for X in space.family:
            if X not in H and any(is_subset(X, A) for A in items):
                H.add(X)
        if len(H) == size:
            return frozenset(H)


def hs_closure(space: LabelledSpace, S: Iterable[VertexSet]) -> Family:
    """Smallest hereditary and saturated family containing ``S``."""
    H = space.check_subfamily(S)
    while True:
        H = hereditary_closure(space, H)
        fed = frozenset(A for A in space.family if A not in H and feeds_into(space, A, H))
        if not fed:
            return H
        H = H | fed


def meet(space: LabelledSpace, H1: Iterable[VertexSet], H2: Iterable[VertexSet]) -> Family:
    H1 = _require_hs(space, H1, "first argument")
    H2 = _require_hs(space, H2, "second argument")
    out = H1 & H2
    if not is_hs(space, out):
        raise AssertionError("intersection of hereditary saturated families is not hereditary saturated")
    return out


def join(space: LabelledSpace, H1: Iterable[VertexSet], H2: Iterable[VertexSet]) -> Family:
    H1 = _require_hs(space, H1, "first argument")
    H2 = _require_hs(space, H2, "second argument")
    return hs_closure(space, H1 | H2)


@dataclass(frozen=True, eq=False)
class HSLattice:
    """All hereditary saturated families of a space, smallest first.

    Member ids are positions in ``members``; bottom is ``{{}}`` (id 0) and
    top is B itself (last id).
    """

    space: LabelledSpace
    members: tuple[Family, ...]

    @cached_property
    def index(self) -> dict[Family, int]:
        return {H: i for i, H in enumerate(self.members)}

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.members) - 1

    def id_of(self, H: Iterable[VertexSet]) -> int:
        return self.index[frozenset(H) | {0}]

    @cached_property
    def meet_table(self) -> tuple[tuple[int, ...], ...]:
        n = len(self.members)
        return tuple(
            tuple(self.index[self.members[i] & self.members[j]] for j in range(n)) for i in range(n)
        )

    @cached_property
    def join_table(self) -> tuple[tuple[int, ...], ...]:
        n = len(self.members)
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                k = self.index[hs_closure(self.space, self.members[i] | self.members[j])]
                rows[i][j] = rows[j][i] = k
        return tuple(map(tuple, rows))

    def leq(self, i: int, j: int) -> bool:
        return self.members[i] <= self.members[j]

    @cached_property
    def hasse_edges(self) -> tuple[tuple[int, int], ...]:
        """Covering pairs ``(i, j)``: ``members[i]`` is a maximal proper subfamily of ``members[j]`` in the lattice."""
        n = len(self.members)
        edges = []
        for i in range(n):
            for j in range(n):
                if i != j and self.members[i] < self.members[j]:
                    if not any(
                        self.members[i] < self.members[k] < self.members[j] for k in range(n)
                    ):
                        edges.append((i, j))
        return tuple(edges)


def enumerate_hs(space: LabelledSpace) -> HSLattice:
    """Enumerate every hereditary saturated family of a verified space.

    Starts from the principal closures ``hs_closure({A})`` and closes under
    join and meet.  Every hereditary saturated family is the join of the
    principal closures of its members, so nothing is missed.
    """
    space.require_verified()
    found = {frozenset({0})}
    for A in space.family:
        found.add(hs_closure(space, {A}))
    pending = list(found)
    done: list[Family] = []
    while pending:
        H = pending.pop()
        for K in done + [H]:
            for cand in (H & K, hs_closure(space, H | K)):
                if cand not in found:
                    found.add(cand)
                    pending.append(cand)
        done.append(H)
    members = tuple(sorted(found, key=family_key))
    return HSLattice(space, members)


# -- quotient by a hereditary saturated family ------------------------------------


def _union(H: Iterable[VertexSet]) -> VertexSet:
    U = 0
    for A in H:
        U |= A
    return U


def sim_equiv(space: LabelledSpace, H: Iterable[VertexSet], A: VertexSet, B: VertexSet) -> bool:
    """``A ~ B`` modulo ``H``, i.e. ``A | W == B | W`` for some ``W`` in ``H``.

    ``H`` is finite and union-closed, so its union ``U`` is a member and is
    the only witness worth trying.
    """
    H = _require_hs(space, H)
    space.check_member(A)
    space.check_member(B)
    U = _union(H)
    return A | U == B | U


@dataclass(frozen=True)
class QuotientSpace:
    union: VertexSet
    classes: tuple[tuple[VertexSet, ...], ...]
    representatives: tuple[VertexSet, ...]
    is_congruence: bool
    is_weakly_left_resolving: bool

    def __len__(self):
        return len(self.classes)


def quotient(space: LabelledSpace, H: Iterable[VertexSet]) -> QuotientSpace:
    """Partition B into classes ``[A]`` with representative ``A | U_H``."""
    H = _require_hs(space, H)
    g = space.graph
    U = _union(H)
    groups: dict[VertexSet, list[VertexSet]] = {}
    for A in space.family:
        groups.setdefault(A | U, []).append(A)
    reps = canonical(groups)
    classes = tuple(tuple(canonical(groups[r])) for r in reps)

    congruent = all(
        g.step(A, a) | U == g.step(r, a) | U
        for r in reps
        for A in groups[r]
        for a in g.alphabet
    )
    wlr = all(
        g.step(R1 & R2, a) | U == (g.step(R1, a) & g.step(R2, a)) | U
        for R1 in reps
        for R2 in reps
        for a in g.alphabet
    )
    return QuotientSpace(U, classes, reps, congruent, wlr)
