import itertools

import pytest
from hypothesis import strategies as st

from labelled_prim.family import make_space
from labelled_prim.fixtures import g1, g2, g3, two_loops
from labelled_prim.graph import Edge, LabelledGraph


@pytest.fixture
def G1():
    return g1()


@pytest.fixture
def G2():
    return g2()


@pytest.fixture
def S2():
    return make_space(g2())


@pytest.fixture
def S3():
    return make_space(g3())


@pytest.fixture
def SL():
    return make_space(two_loops())


@st.composite
def graphs(draw, max_vertices=4, max_labels=3, sink_free=True):
    n = draw(st.integers(1, max_vertices))
    k = draw(st.integers(1, max_labels))
    vertices = [f"v{i}" for i in range(n)]
    letters = "abc"[:k]
    edge = st.tuples(st.sampled_from(vertices), st.sampled_from(vertices), st.sampled_from(letters))
    edges = set(draw(st.lists(edge, min_size=1, max_size=3 * n)))
    if sink_free:
        for v in vertices:
            if not any(e[0] == v for e in edges):
                edges.add((v, draw(st.sampled_from(vertices)), draw(st.sampled_from(letters))))
    return LabelledGraph(tuple(vertices), tuple(Edge(*e) for e in sorted(edges)))


def paths(g, n):
    """All edge sequences of length n that form paths."""
    for seq in itertools.product(g.edges, repeat=n):
        if all(seq[i].dst == seq[i + 1].src for i in range(n - 1)):
            yield seq


def brute_range(g, A_names, word):
    """r(A, word) straight from the definition, by enumerating paths."""
    return {
        p[-1].dst
        for p in paths(g, len(word))
        if p[0].src in A_names and tuple(e.label for e in p) == tuple(word)
    }


def brute_source(g, word):
    return {p[0].src for p in paths(g, len(word)) if tuple(e.label for e in p) == tuple(word)}


# -- acceptance report ----------------------------------------------------------------

_ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE_KEY] = []


@pytest.fixture
def criterion(request):
    """``criterion(n, title, passed, detail)`` records one acceptance line."""
    lines = request.config.stash[_ACCEPTANCE_KEY]

    def record(number, title, passed, detail=""):
        line = f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {title}" + (f" -- {detail}" if detail else "")
        lines.append((number, line))
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
