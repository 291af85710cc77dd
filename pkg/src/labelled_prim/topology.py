"""The closure-operator topology on the set of maximal tails.

Subsets of the tail space are ``int`` bitmasks over tail positions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .family import LabelledSpace
from .lattice import Family, HSLattice, enumerate_hs
from .tails import Tail, enumerate_tails, family_sees, reachability

EXHAUSTIVE_LIMIT = 20
PAIRWISE_LIMIT = 8
DEFAULT_SAMPLES = 100_000


class TooManyTails(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class TailSpace:
    space: LabelledSpace
    lattice: HSLattice
    tails: tuple[Tail, ...]

    @property
    def complements(self) -> tuple[Family, ...]:
        return tuple(self.lattice.members[t.complement_id] for t in self.tails)

    def __len__(self):
        return len(self.tails)

    @property
    def full(self) -> int:
        return (1 << len(self.tails)) - 1

    @cached_property
    def _hits(self) -> tuple[tuple[int, ...], ...]:
        # _hits[d][k]: tails containing a set seen by the k-th member of tail d
        space = self.space
        seen = reachability(space).seen
        owner_masks = []
        for A in space.family:
            m = 0
            for t, tail in enumerate(self.tails):
                if A in tail.sets:
                    m |= 1 << t
            owner_masks.append(m)
        out = []
        for tail in self.tails:
            row = []
            for A in space.sorted(tail.sets):
                m = 0
                for j in seen[space.index[A]]:
                    m |= owner_masks[j]
                row.append(m)
            out.append(tuple(row))
        return tuple(out)


def tail_space(space: LabelledSpace, lattice: Optional[HSLattice] = None) -> TailSpace:
    if lattice is None:
        lattice = enumerate_hs(space)
    return TailSpace(space, lattice, tuple(enumerate_tails(space, lattice)))


def _as_mask(xi) -> int:
    if isinstance(xi, int):
        return xi
    m = 0
    for t in xi:
        m |= 1 << t
    return m


def tail_closure(chi: TailSpace, xi) -> int:
    """Tails ``D`` with ``D >> union(xi)``; ``xi`` is a mask or an iterable of positions."""
    xi = _as_mask(xi)
    if not xi:
        return 0
    out = 0
    for d, row in enumerate(chi._hits):
        if all(m & xi for m in row):
            out |= 1 << d
    return out


def tail_closure_direct(chi: TailSpace, xi) -> int:
    """Same as :func:`tail_closure`, evaluated through :func:`family_sees` on the union."""
    xi = _as_mask(xi)
    if not xi:
        return 0
    union = frozenset().union(*(t.sets for i, t in enumerate(chi.tails) if xi >> i & 1))
    out = 0
    for d, tail in enumerate(chi.tails):
        if family_sees(chi.space, tail.sets, union):
            out |= 1 << d
    return out


def hull_kernel_closure(chi: TailSpace, xi) -> int:
    """Tails whose complement contains the intersection of the complements in ``xi``."""
    xi = _as_mask(xi)
    if not xi:
        return 0
    comps = chi.complements
    inter = None
    for i, H in enumerate(comps):
        if xi >> i & 1:
            inter = H if inter is None else inter & H
    out = 0
    for d, H in enumerate(comps):
        if inter <= H:
            out |= 1 << d
    return out


def members(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


@dataclass(frozen=True)
class AxiomCheck:
    mode: str  # "exhaustive" or "sampled"
    checked: int
    # axiom name -> witness (tuple of subset masks) for the first violation
    violations: dict

    @property
    def passed(self) -> bool:
        return not self.violations


def verify_kuratowski(
    chi: TailSpace,
    sampled: Optional[bool] = None,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
) -> AxiomCheck:
    """Check the four closure axioms on ``tail_closure``.

    Exhaustive mode covers every subset; union-additivity is checked on every
    pair when there are at most ``PAIRWISE_LIMIT`` tails and otherwise in the
    equivalent form ``cl(xi) == union of cl({x})`` for each ``x`` in ``xi``.
    """
    n = len(chi)
    if sampled is None:
        sampled = n > EXHAUSTIVE_LIMIT
    elif not sampled and n > EXHAUSTIVE_LIMIT:
        raise TooManyTails(f"{n} tails; use sampled mode")
    violations: dict = {}

    def note(name, *witness):
        violations.setdefault(name, witness)

    if tail_closure(chi, 0) != 0:
        note("empty", 0)

    if not sampled:
        cl = [tail_closure(chi, xi) for xi in range(1 << n)]
        point = [cl[1 << i] for i in range(n)]
        for xi in range(1 << n):
            c = cl[xi]
            if xi & ~c:
                note("extensive", xi)
            if cl[c] != c:
                note("idempotent", xi)
            if n > PAIRWISE_LIMIT:
                u = 0
                for i in members(xi):
                    u |= point[i]
                if u != c:
                    note("additive", xi)
        if n <= PAIRWISE_LIMIT:
            for xi in range(1 << n):
                for zeta in range(xi, 1 << n):
                    if cl[xi | zeta] != cl[xi] | cl[zeta]:
                        note("additive", xi, zeta)
        return AxiomCheck("exhaustive", 1 << n, violations)

    rng = random.Random(seed)
    for _ in range(samples):
        xi = rng.getrandbits(n)
        zeta = rng.getrandbits(n)
        c = tail_closure(chi, xi)
        if xi & ~c:
            note("extensive", xi)
        if tail_closure(chi, c) != c:
            note("idempotent", xi)
        if tail_closure(chi, xi | zeta) != c | tail_closure(chi, zeta):
            note("additive", xi, zeta)
    return AxiomCheck("sampled", samples, violations)


@dataclass(frozen=True)
class HomeomorphismCheck:
    mode: str
    checked: int
    witness: Optional[int]  # first subset where the two closures differ

    @property
    def passed(self) -> bool:
        return self.witness is None


def verify_homeomorphism(
    chi: TailSpace,
    sampled: Optional[bool] = None,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
) -> HomeomorphismCheck:
    """``tail_closure(xi) == hull_kernel_closure(xi)`` for every ``xi``."""
    n = len(chi)
    if sampled is None:
        sampled = n > EXHAUSTIVE_LIMIT
    elif not sampled and n > EXHAUSTIVE_LIMIT:
        raise TooManyTails(f"{n} tails; use sampled mode")
    if sampled:
        rng = random.Random(seed)
        subsets: Iterable[int] = (rng.getrandbits(n) for _ in range(samples))
        mode, count = "sampled", samples
    else:
        subsets = range(1 << n)
        mode, count = "exhaustive", 1 << n
    for xi in subsets:
        if tail_closure(chi, xi) != hull_kernel_closure(chi, xi):
            return HomeomorphismCheck(mode, count, xi)
    return HomeomorphismCheck(mode, count, None)


def closed_sets(chi: TailSpace) -> list[int]:
    """All closed subsets of the tail space, as masks sorted by (size, members)."""
    n = len(chi)
    if n > EXHAUSTIVE_LIMIT:
        raise TooManyTails(f"{n} tails; closed sets are enumerated exhaustively")
    found = {tail_closure(chi, xi) for xi in range(1 << n)}
    return sorted(found, key=lambda m: (bin(m).count("1"), members(m)))


@dataclass(frozen=True)
class SpecializationOrder:
    # (d, e): e lies in the closure of {d}; reflexive pairs included
    edges: tuple[tuple[int, int], ...]
    is_t0: bool


def specialization_order(chi: TailSpace) -> SpecializationOrder:
    n = len(chi)
    point = [tail_closure(chi, 1 << d) for d in range(n)]
    edges = tuple((d, e) for d in range(n) for e in range(n) if point[d] >> e & 1)
    return SpecializationOrder(edges, len(set(point)) == n)
