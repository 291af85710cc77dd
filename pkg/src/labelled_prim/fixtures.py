"""Small named graphs used throughout the tests and the gallery."""

from .graph import LabelledGraph, from_edges


def g1() -> LabelledGraph:
    """Two vertices; vertex 2 receives two ``b``-edges (not weakly left-resolving)."""
    return from_edges(["1", "2"], [("1", "1", "a"), ("1", "2", "b"), ("2", "2", "b")])


def g2() -> LabelledGraph:
    """``u`` loops on ``a``, then ``u -b-> v -c-> w`` and ``w`` loops on ``d``."""
    return from_edges(
        ["u", "v", "w"], [("u", "u", "a"), ("u", "v", "b"), ("v", "w", "c"), ("w", "w", "d")]
    )


def g3() -> LabelledGraph:
    """A single vertex with one loop."""
    return from_edges(["v"], [("v", "v", "a")])


def two_loops() -> LabelledGraph:
    """Two disjoint loops with different labels."""
    return from_edges(["v", "w"], [("v", "v", "a"), ("w", "w", "b")])


def union_gap() -> LabelledGraph:
    """A space with a maximal tail whose complement is not closed under unions.

    ``{v1, v3}`` and ``{v0, v1, v3}`` satisfy the tail axioms, yet ``{v1}`` and
    ``{v3}`` both lie outside while their union does not.
    """
    return from_edges(
        ["v0", "v1", "v2", "v3"],
        [("v0", "v1", "b"), ("v1", "v1", "a"), ("v2", "v0", "b"), ("v3", "v3", "a")],
    )


FIXTURES = {"G1": g1, "G2": g2, "G3": g3, "two_loops": two_loops, "union_gap": union_gap}
