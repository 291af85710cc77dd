"""
From a labelled graph to its tail space
=======================================

Three vertices: ``u`` loops on ``a`` and feeds ``v`` on ``b``, ``v`` feeds
``w`` on ``c``, and ``w`` loops on ``d``.
"""

from labelled_prim import enumerate_hs, make_space, tail_space
from labelled_prim.fixtures import g2
from labelled_prim.topology import closed_sets, members, specialization_order

g = g2()
space = make_space(g)
print("B has", len(space.family), "sets:", [g.names(A) for A in space.family])

###############################################################################
# Hereditary saturated families form a chain of three here.

lattice = enumerate_hs(space)
for i, H in enumerate(lattice.members):
    print(f"H{i}", [g.names(A) for A in space.sorted(H)])
print("Hasse edges:", lattice.hasse_edges)

###############################################################################
# Maximal tails are the complements of the two non-top members.  The
# closed sets of the tail space, and the specialization order, follow.

chi = tail_space(space, lattice)
for d, t in enumerate(chi.tails):
    print(f"D{d} (complement of H{t.complement_id})", [g.names(A) for A in space.sorted(t.sets)])
print("closed sets:", [members(m) for m in closed_sets(chi)])
print("specialization:", [e for e in specialization_order(chi).edges if e[0] != e[1]])
