"""
Growing tails from infinite words
=================================

Start from a set, walk an ultimately periodic word, collect the ranges, then
add every set with a one-letter step into the collection.  The result is
checked against the tail axioms instead of being taken on faith.
"""

from labelled_prim import UltimatelyPeriodicWord, make_space, tail_from_word
from labelled_prim.fixtures import g2

g = g2()
space = make_space(g)

for start, prefix, cycle in [("v", "c", "d"), ("u", "", "a"), ("u", "b", "cd")]:
    word = UltimatelyPeriodicWord(tuple(prefix), tuple(cycle))
    try:
        tail, log = tail_from_word(space, g.vset(start), word)
    except ValueError as exc:
        # the cycle needs r({w}, c), which is empty
        print(f"{{{start}}}, {word}: {exc}")
        continue
    print(f"{{{start}}}, {word}")
    print("  D0    ", [g.names(A) for A in log["initial"]])
    print("  rounds", [[g.names(A) for A in r] for r in log["rounds"]])
    print("  tail  ", [g.names(A) for A in space.sorted(tail.sets)], "verified" if tail.verified else tail.failures())
