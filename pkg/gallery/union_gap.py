"""
A maximal tail with a non-hereditary complement
===============================================

On this four-vertex graph the family ``{{v1, v3}, {v0, v1, v3}}`` passes
every tail axiom, yet its complement holds ``{v1}`` and ``{v3}`` without
their union.  Tail enumeration through the lattice skips it; the brute-force
search finds it.
"""

from labelled_prim import enumerate_tails, is_hereditary, make_space
from labelled_prim.fixtures import union_gap
from labelled_prim.oracle import oracle_enumerate_tails

g = union_gap()
space = make_space(g)
print("B:", [g.names(A) for A in space.family])

via_lattice = {t.sets for t in enumerate_tails(space)}
for D in oracle_enumerate_tails(space):
    verdict = is_hereditary(space, space.members - D)
    print(
        [g.names(A) for A in space.sorted(D)],
        "| in lattice tails:", D in via_lattice,
        "| complement hereditary:", bool(verdict),
        "" if verdict else f"({verdict.condition}: {[g.names(x) for x in verdict.witness]})",
    )
