"""Brute-force reference computations and the seeded random corpus.

Nothing here calls into :mod:`lattice` or :mod:`tails`; the only shared
code is the single-letter step of :class:`~labelled_prim.graph.LabelledGraph`.
Subfamilies of B are enumerated as bit-vectors with numpy, so one vectorised
pass tests all ``2**|B|`` candidates against each defining condition.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

import numpy as np

from .family import LabelledSpace, make_space, AssumptionViolated
from .graph import Edge, LabelledGraph, VertexSet, Word, canonical, family_key, is_subset


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleBudget:
    max_family_size: int = 16
    max_word_length: Optional[int] = None  # None: |B|
    max_subfamily_bits: int = 20

    def check(self, space: LabelledSpace) -> None:
        n = len(space.family)
        if n > self.max_family_size or n > self.max_subfamily_bits:
            raise BudgetExceeded(
                f"|B| = {n} exceeds oracle budget "
                f"(max_family_size={self.max_family_size}, max_subfamily_bits={self.max_subfamily_bits})"
            )

    def word_length(self, space: LabelledSpace) -> int:
        return len(space.family) if self.max_word_length is None else self.max_word_length


DEFAULT_BUDGET = OracleBudget()


def _subfamily_masks(space, budget):
    """Return ``(bits, fam_index)``; ``bits[i]`` marks subfamilies containing ``family[i]``."""
    budget.check(space)
    n = len(space.family)
    codes = np.arange(1 << n, dtype=np.uint32)
    bits = [((codes >> i) & 1).astype(bool) for i in range(n)]
    return codes, bits


def _range_index(space):
    g = space.graph
    pos = {A: i for i, A in enumerate(space.family)}
    table = []
    for A in space.family:
        row = []
        for a in g.alphabet:
            r = g.step(A, a)
            if r not in pos:
                raise BudgetExceeded("family not closed under relative ranges; oracle refuses")
            row.append(pos[r])
        table.append(row)
    return pos, table


def _flags(space, budget):
    """Boolean vectors (hereditary, saturated) over all subfamily codes."""
    F = space.family
    n = len(F)
    codes, bits = _subfamily_masks(space, budget)
    pos, ranges = _range_index(space)
    her = np.ones(len(codes), dtype=bool)
    for i in range(n):
        for j in ranges[i]:
            her &= ~bits[i] | bits[j]
    for i in range(n):
        for k in range(i + 1, n):
            u = pos.get(F[i] | F[k])
            if u is None:
                # a union outside B can never be in a subfamily
                her &= ~(bits[i] & bits[k])
            else:
                her &= ~(bits[i] & bits[k]) | bits[u]
    for i in range(n):
        for k in range(n):
            if k != i and is_subset(F[k], F[i]):
                her &= ~bits[i] | bits[k]
    sat = np.ones(len(codes), dtype=bool)
    for i in range(n):
        fed = np.ones(len(codes), dtype=bool)
        for j in ranges[i]:
            fed &= bits[j]
        sat &= ~fed | bits[i]
    return codes, her, sat


def _decode(space, code) -> frozenset:
    return frozenset(A for i, A in enumerate(space.family) if int(code) >> i & 1)


def _normalise(families: Iterable[frozenset]) -> list[frozenset]:
    return sorted({H | {0} for H in families}, key=family_key)


def oracle_enumerate_hs(space: LabelledSpace, budget: OracleBudget = DEFAULT_BUDGET) -> list[frozenset]:
    """Every subfamily of B that is hereditary and saturated, by exhaustion."""
    codes, her, sat = _flags(space, budget)
    return _normalise(_decode(space, c) for c in codes[her & sat])


def oracle_hereditary(space: LabelledSpace, budget: OracleBudget = DEFAULT_BUDGET) -> list[frozenset]:
    codes, her, _ = _flags(space, budget)
    return _normalise(_decode(space, c) for c in codes[her])


def oracle_saturate(
    space: LabelledSpace, H: Iterable[VertexSet], budget: OracleBudget = DEFAULT_BUDGET,
    _hs: Optional[list[frozenset]] = None,
) -> frozenset:
    """Intersection of all hereditary saturated families containing ``H``."""
    H = frozenset(H)
    hs = oracle_enumerate_hs(space, budget) if _hs is None else _hs
    out = frozenset(space.family)
    for K in hs:
        if H <= K:
            out &= K
    return out


def oracle_ranges(space: LabelledSpace, A: VertexSet, budget: OracleBudget = DEFAULT_BUDGET) -> dict[VertexSet, Word]:
    """Every range ``r(A, w)`` over words of length 1..bound, each with its
    shortlex-first word.

    Words are generated length by length; words with equal ranges behave
    identically from then on, so one representative per range is kept.
    """
    budget.check(space)
    g = space.graph
    layer: dict[VertexSet, Word] = {A: ()}
    out: dict[VertexSet, Word] = {}
    for _ in range(budget.word_length(space)):
        nxt: dict[VertexSet, Word] = {}
        for X, w in sorted(layer.items(), key=lambda item: item[1]):
            for a in g.alphabet:
                Y = g.step(X, a)
                if Y not in nxt:
                    nxt[Y] = w + (a,)
        for Y, w in nxt.items():
            out.setdefault(Y, w)
        layer = nxt
    return out


def oracle_sees_witness(space, A, B, budget: OracleBudget = DEFAULT_BUDGET) -> Optional[Word]:
    best = None
    for X, w in oracle_ranges(space, A, budget).items():
        if is_subset(B, X) and (best is None or (len(w), w) < (len(best), best)):
            best = w
    return best


def oracle_sees(space: LabelledSpace, A: VertexSet, B: VertexSet, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    return oracle_sees_witness(space, A, B, budget) is not None


def oracle_sees_table(space: LabelledSpace, budget: OracleBudget = DEFAULT_BUDGET) -> list[list[bool]]:
    """``table[i][j]``: ``family[i] >= family[j]``, from :func:`oracle_ranges`."""
    F = space.family
    table = []
    for A in F:
        ranges = oracle_ranges(space, A, budget)
        table.append([any(is_subset(B, X) for X in ranges) for B in F])
    return table


def oracle_enumerate_tails(space: LabelledSpace, budget: OracleBudget = DEFAULT_BUDGET) -> list[frozenset]:
    """Every subfamily satisfying tail axioms (a), (b), (c), nonempty and without
    the empty set, found by testing all ``2**|B|`` subfamilies at once."""
    F = space.family
    n = len(F)
    codes, bits = _subfamily_masks(space, budget)
    _, ranges = _range_index(space)
    sees = oracle_sees_table(space, budget)
    ok = codes != 0
    if 0 in F:
        ok &= ~bits[F.index(0)]
    for i in range(n):
        for j in range(i, n):
            common = 0
            for k in range(n):
                if sees[i][k] and sees[j][k]:
                    common |= 1 << k
            ok &= ~(bits[i] & bits[j]) | ((codes & np.uint32(common)) != 0)
    for i in range(n):
        step = np.zeros(len(codes), dtype=bool)
        for j in ranges[i]:
            step |= bits[j]
        ok &= ~bits[i] | step
    for i in range(n):
        for j in range(n):
            if sees[i][j]:
                ok &= ~bits[j] | bits[i]
    return sorted((_decode(space, c) for c in codes[ok]), key=family_key)


def oracle_generate_family(g: LabelledGraph, max_vertices: int = 3) -> tuple[VertexSet, ...]:
    """Intersection of all subfamilies of the power set that hold the seeds and
    are closed under ranges, union, intersection and relative complement."""
    n = len(g.vertices)
    if n > max_vertices:
        raise BudgetExceeded(f"{n} vertices exceeds {max_vertices}")
    universe = list(range(1 << n))
    seeds = {0} | {g.step(g.full, a) for a in g.alphabet}
    best = set(universe)
    for code in range(1 << len(universe)):
        fam = {X for X in universe if code >> X & 1}
        if not seeds <= fam:
            continue
        if all(g.step(X, a) in fam for X in fam for a in g.alphabet) and all(
            X | Y in fam and X & Y in fam and X & ~Y in fam for X in fam for Y in fam
        ):
            best &= fam
    return canonical(best)


# -- random corpus ----------------------------------------------------------------------


def random_graph(rng: random.Random, max_vertices: int = 4, max_labels: int = 3) -> LabelledGraph:
    """A random sink-free labelled graph on 1..max_vertices vertices.

    About half the draws are left-resolving by construction (no two edges
    into one vertex share a label); unrestricted draws are mostly rejected
    later as not weakly left-resolving.
    """
    n = rng.choice([k for k in range(1, max_vertices + 1) for _ in range(k)])
    k = rng.randint(1, max_labels)
    vertices = [f"v{i}" for i in range(n)]
    letters = "abcdefgh"[:k]
    resolving = rng.random() < 0.5
    edges = set()
    used = set()

    def add(src):
        dst = rng.choice(vertices)
        free = [a for a in letters if (dst, a) not in used] if resolving else letters
        if free:
            a = rng.choice(free)
            used.add((dst, a))
            edges.add((src, dst, a))

    for v in vertices:
        while not any(e[0] == v for e in edges):
            add(v)
    # sparse on purpose: dense graphs collapse B to {{}, E^0}
    for _ in range(rng.randint(0, n)):
        add(rng.choice(vertices))
    return LabelledGraph(tuple(vertices), tuple(Edge(*e) for e in sorted(edges)))


def corpus(seed: int = 0, instances: int = 200, max_vertices: int = 4, max_labels: int = 3) -> Iterator[LabelledSpace]:
    """Seeded stream of verified labelled spaces; rejected draws are skipped."""
    rng = random.Random(seed)
    produced = 0
    while produced < instances:
        g = random_graph(rng, max_vertices, max_labels)
        try:
            space = make_space(g)
        except AssumptionViolated:
            continue
        produced += 1
        yield space


# -- comparison harness --------------------------------------------------------------


@dataclass
class OracleCheck:
    seed: int
    instances: int
    compared: dict
    divergence: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.divergence is None


def compare_instance(space: LabelledSpace, budget: OracleBudget = DEFAULT_BUDGET) -> tuple[dict, Optional[dict]]:
    """Compare the fast path with the oracles on one space.

    Returns ``(counts, divergence)``; ``divergence`` is None when all agree.
    """
    from .lattice import enumerate_hs, saturate
    from .tails import sees

    g = space.graph
    counts = {"lattices": 0, "sees_pairs": 0, "saturations": 0}
    hs = oracle_enumerate_hs(space, budget)
    fast = list(enumerate_hs(space).members)
    counts["lattices"] += 1
    if fast != hs:
        return counts, {"check": "enumerate_hs", "fast": _fam_json(g, fast), "oracle": _fam_json(g, hs)}
    for A in space.family:
        ranges = oracle_ranges(space, A, budget)
        for B in space.family:
            want = any(is_subset(B, X) for X in ranges)
            counts["sees_pairs"] += 1
            if sees(space, A, B) != want:
                return counts, {"check": "sees", "A": g.names(A), "B": g.names(B), "oracle": want}
    for H in oracle_hereditary(space, budget):
        counts["saturations"] += 1
        want = oracle_saturate(space, H, budget, _hs=hs)
        got = saturate(space, H)
        if got != want:
            return counts, {
                "check": "saturate",
                "H": [g.names(A) for A in canonical(H)],
                "fast": [g.names(A) for A in canonical(got)],
                "oracle": [g.names(A) for A in canonical(want)],
            }
    return counts, None


def _fam_json(g, families):
    return [[g.names(A) for A in canonical(H)] for H in families]


def check_oracle(seed: int = 0, instances: int = 200, budget: OracleBudget = DEFAULT_BUDGET) -> OracleCheck:
    from .graph import graph_to_dict

    totals = {"lattices": 0, "sees_pairs": 0, "saturations": 0}
    for space in corpus(seed, instances):
        counts, divergence = compare_instance(space, budget)
        for key, value in counts.items():
            totals[key] += value
        if divergence is not None:
            divergence["graph"] = graph_to_dict(space.graph)
            return OracleCheck(seed, instances, totals, divergence)
    return OracleCheck(seed, instances, totals)
