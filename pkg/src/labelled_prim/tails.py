"""The "sees" preorder, maximal tails, and primeness of hereditary saturated families."""

from __future__ import annotations

import weakref
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .family import LabelledSpace
from .graph import InputError, UltimatelyPeriodicWord, VertexSet, is_subset
from .lattice import (
    Family,
    HSLattice,
    NotHereditarySaturated,
    Verdict,
    enumerate_hs,
    hs_closure,
    is_hereditary,
    is_saturated,
)


class NotRealizable(ValueError):
    pass


# -- reachability -------------------------------------------------------------


@dataclass(frozen=True)
class ReachabilityIndex:
    """For each member of B, the sets reachable from it by nonempty words.

    ``reach[i]`` holds masks; ``seen[i]`` holds the indices ``j`` with
    ``family[i] >= family[j]``.
    """

    reach: tuple[frozenset, ...]
    seen: tuple[frozenset, ...]


_INDEX_CACHE: "weakref.WeakKeyDictionary[LabelledSpace, ReachabilityIndex]" = weakref.WeakKeyDictionary()


def reachability(space: LabelledSpace) -> ReachabilityIndex:
    cached = _INDEX_CACHE.get(space)
    if cached is not None:
        return cached
    g = space.graph
    reach = []
    for A in space.family:
        start = {g.step(A, a) for a in g.alphabet}
        found = set(start)
        queue = deque(start)
        while queue:
            X = queue.popleft()
            for a in g.alphabet:
                Y = g.step(X, a)
                if Y not in found:
                    found.add(Y)
                    queue.append(Y)
        reach.append(frozenset(found))
    seen = tuple(
        frozenset(j for j, B in enumerate(space.family) if any(is_subset(B, X) for X in R))
        for R in reach
    )
    index = ReachabilityIndex(tuple(reach), seen)
    _INDEX_CACHE[space] = index
    return index


def sees(space: LabelledSpace, A: VertexSet, B: VertexSet) -> bool:
    """``A >= B``: some nonempty word ``w`` has ``B <= r(A, w)``."""
    space.check_member(A)
    space.check_member(B)
    return space.index[B] in reachability(space).seen[space.index[A]]


def family_sees(space: LabelledSpace, S: Iterable[VertexSet], T: Iterable[VertexSet]) -> bool:
    """``S >> T``: every member of ``S`` sees some member of ``T``."""
    S = space.check_subfamily(S)
    T = space.check_subfamily(T)
    seen = reachability(space).seen
    targets = {space.index[B] for B in T}
    return all(seen[space.index[A]] & targets for A in S)


# -- maximal tails ------------------------------------------------------------------


@dataclass(frozen=True)
class Tail:
    sets: Family
    verified: bool
    axioms: dict = field(default_factory=dict)  # name -> Verdict
    complement_id: Optional[int] = None

    def failures(self) -> dict:
        return {k: v for k, v in self.axioms.items() if not v}


def is_maximal_tail(space: LabelledSpace, D: Iterable[VertexSet]) -> Tail:
    """Check cofinality (a), non-termination (b) and upward closure (c).

    Also demands ``D`` nonempty and free of the empty set, since every set
    sees the empty set.
    """
    D = space.check_subfamily(D)
    g = space.graph
    idx = space.index
    seen = reachability(space).seen
    order = space.sorted(D)
    ids = {idx[A] for A in D}
    axioms = {}

    axioms["nonempty"] = Verdict(True) if D else Verdict(False, "nonempty", ())
    axioms["no_empty_set"] = Verdict(False, "no_empty_set", (0,)) if 0 in D else Verdict(True)

    verdict = Verdict(True)
    for i, A in enumerate(order):
        common = seen[idx[A]] & ids
        for B in order[i:]:
            if not common & seen[idx[B]]:
                verdict = Verdict(False, "a", (A, B))
                break
        if not verdict:
            break
    axioms["a"] = verdict

    verdict = Verdict(True)
    for A in order:
        if not any(g.step(A, a) in D for a in g.alphabet):
            verdict = Verdict(False, "b", (A,))
            break
    axioms["b"] = verdict

    verdict = Verdict(True)
    for X in space.family:
        if X in D:
            continue
        hit = seen[idx[X]] & ids
        if hit:
            verdict = Verdict(False, "c", (X, space.family[min(hit)]))
            break
    axioms["c"] = verdict

    return Tail(D, all(axioms.values()), axioms)


def enumerate_tails(space: LabelledSpace, lattice: Optional[HSLattice] = None) -> list[Tail]:
    """Maximal tails whose complement is a lattice member.

    These are exactly the tails that correspond to prime families.  A
    subfamily can satisfy (a), (b) and (c) while its complement misses a
    union of two of its members; such tails are not returned here (see
    ``oracle.oracle_enumerate_tails`` for the unrestricted search).
    """
    space.require_verified()
    if lattice is None:
        lattice = enumerate_hs(space)
    out = []
    for i, H in enumerate(lattice.members):
        tail = is_maximal_tail(space, space.members - H)
        if tail.verified:
            out.append(Tail(tail.sets, True, tail.axioms, complement_id=i))
    return out


def is_prime_hs(space: LabelledSpace, H: Iterable[VertexSet], lattice: HSLattice) -> bool:
    """``H1 & H2 <= H`` implies ``H1 <= H`` or ``H2 <= H`` over all lattice members."""
    H = frozenset(H) | {0}
    if H not in lattice.index:
        raise NotHereditarySaturated("family is not a lattice member")
    if lattice.index[H] == lattice.top:
        raise ValueError("the top family is improper and never prime")
    members = lattice.members
    for i, H1 in enumerate(members):
        if H1 <= H:
            continue
        for H2 in members[i:]:
            if not H2 <= H and H1 & H2 <= H:
                return False
    return True


@dataclass(frozen=True)
class PrimCorrespondence:
    # (lattice id, prime?, complement is a maximal tail?) for each non-top member
    rows: tuple[tuple[int, bool, bool], ...]
    holds: bool
    # (tail position, lattice id) pairs of the bijection
    bijection: tuple[tuple[int, int], ...]


def verify_prim_correspondence(space: LabelledSpace, lattice: Optional[HSLattice] = None) -> PrimCorrespondence:
    space.require_verified()
    if lattice is None:
        lattice = enumerate_hs(space)
    rows = []
    pairs = []
    for i, H in enumerate(lattice.members):
        if i == lattice.top:
            continue
        prime = is_prime_hs(space, H, lattice)
        tail = is_maximal_tail(space, space.members - H).verified
        rows.append((i, prime, tail))
        if prime and tail:
            pairs.append((len(pairs), i))
    return PrimCorrespondence(
        tuple(rows), all(p == t for _, p, t in rows), tuple(pairs)
    )


# -- building a tail from an infinite word ------------------------------------------


def prefix_ranges(space: LabelledSpace, A: VertexSet, w: UltimatelyPeriodicWord) -> list[VertexSet]:
    """``[A, r(A, a1), r(A, a1 a2), ...]`` until the (range, cycle phase) state repeats."""
    g = space.graph
    for a in w.prefix + w.cycle:
        g.check_letter(a)
    out = [A]
    states = set()
    X = A
    k = 0
    while True:
        X = g.step(X, w.letter(k))
        k += 1
        if not X:
            dead = "".join(w.letter(i) for i in range(k))
            raise NotRealizable(f"word not realizable from A: r(A, {dead}) is empty")
        if k >= len(w.prefix):
            state = (X, (k - len(w.prefix)) % len(w.cycle))
            if state in states:
                return out
            states.add(state)
        out.append(X)


def tail_from_word(
    space: LabelledSpace, A: VertexSet, w: UltimatelyPeriodicWord
) -> tuple[Tail, dict]:
    """Grow a candidate tail from the ranges along ``w``, then verify it.

    ``D_0`` collects ``A`` and its prefix ranges; each round adds every ``X``
    in B with ``r(X, a)`` already collected for some letter ``a``.  The
    result is checked axiom by axiom rather than trusted.

    The log holds ``initial`` (``D_0``), ``rounds`` (sets added per round) and
    the hereditary / saturated verdicts for the complement, which can fail
    even when every tail axiom holds.
    """
    space.check_member(A)
    if not A:
        raise InputError("starting set must be nonempty")
    g = space.graph
    D0 = frozenset(prefix_ranges(space, A, w))
    for X in D0:
        # prefix ranges of a member stay in B for accommodating families
        space.check_member(X)
    D = set(D0)
    rounds = []
    while True:
        added = [
            X
            for X in space.family
            if X not in D and any(g.step(X, a) in D for a in g.alphabet)
        ]
        if not added:
            break
        rounds.append(added)
        D.update(added)
    complement = space.members - D
    log = {
        "initial": space.sorted(D0),
        "rounds": rounds,
        "complement_hereditary": is_hereditary(space, complement),
        "complement_saturated": is_saturated(space, complement),
    }
    return is_maximal_tail(space, D), log


# -- the cofinality lemma ---------------------------------------------------------------


@dataclass(frozen=True)
class LemmaReport:
    K: Family
    closure: Family
    # (Y, Z) with Y >= Z and Z in K, for each checked Y
    witnesses: tuple[tuple[VertexSet, VertexSet], ...]
    failures: tuple[VertexSet, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


READINGS = ("quotient", "literal")


def lemma_br62_check(
    space: LabelledSpace, H: Iterable[VertexSet], A: VertexSet, reading: str = "quotient"
) -> LemmaReport:
    """For ``A`` outside ``H`` let ``K = {X not in H : A >= X}``; every checked
    ``Y`` must see some ``Z`` in ``K``.

    Parameters
    ----------
    reading : {"quotient", "literal"}
        ``"quotient"`` closes ``K | H`` and checks every ``Y`` outside ``H``,
        i.e. the nonzero classes of the quotient by ``H``.  ``"literal"``
        closes ``K`` alone and checks every nonempty ``Y``; this form fails
        whenever the closure picks up a range lying in ``H``.
    """
    if reading not in READINGS:
        raise ValueError(f"reading must be one of {READINGS}")
    H = space.check_subfamily(H) | {0}
    for verdict in (is_hereditary(space, H), is_saturated(space, H)):
        if not verdict:
            raise NotHereditarySaturated(f"H not hereditary and saturated: {verdict.condition}")
    space.check_member(A)
    if A in H:
        raise ValueError("A must lie outside H")
    idx = space.index
    seen = reachability(space).seen
    K = frozenset(X for X in space.family if X not in H and idx[X] in seen[idx[A]])
    K_ids = {idx[X] for X in K}
    if reading == "quotient":
        closure = hs_closure(space, K | H)
        checked = closure - H
    else:
        closure = hs_closure(space, K)
        checked = closure - {0}
    witnesses = []
    failures = []
    for Y in space.sorted(checked):
        hit = seen[idx[Y]] & K_ids
        if hit:
            witnesses.append((Y, space.family[min(hit)]))
        else:
            failures.append(Y)
    return LemmaReport(K, closure, tuple(witnesses), tuple(failures))
