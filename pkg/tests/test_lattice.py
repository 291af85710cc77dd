import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from labelled_prim.family import make_space
from labelled_prim.fixtures import g2
from labelled_prim.graph import InputError
from labelled_prim.lattice import (
    NotHereditarySaturated,
    enumerate_hs,
    feeds_into,
    hs_closure,
    is_hereditary,
    is_saturated,
    join,
    meet,
    quotient,
    saturate,
    saturation_sequence,
    sim_equiv,
)
from labelled_prim.oracle import corpus, oracle_enumerate_hs, oracle_saturate


def fam(space, *sets):
    return space.family_of(*sets)


@pytest.fixture
def H1(S2):
    return fam(S2, "", "v", "w", "vw")


def test_hereditary_examples(S2, S3):
    assert is_hereditary(S2, fam(S2, "", "w"))
    v = is_hereditary(S2, fam(S2, "", "v"))
    assert not v
    assert v.condition == "relative range"
    assert v.witness == (S2.vset("v"), "c")
    assert is_hereditary(S2, {0}) and is_hereditary(S3, {0})


def test_hereditary_union_and_subset_conditions(S2):
    v = is_hereditary(S2, fam(S2, "", "v", "w"))
    assert not v and v.condition == "union"
    assert v.witness == (S2.vset("v"), S2.vset("w"))
    v = is_hereditary(S2, fam(S2, "", "w", "vw"))
    assert not v and v.condition == "subset"
    assert v.witness == (S2.vset("vw"), S2.vset("v"))


def test_hereditary_rejects_outside(S2):
    with pytest.raises(InputError):
        is_hereditary(S2, {S2.vset("u"), 1 << 5})


def test_saturated_examples(S2, H1):
    v = is_saturated(S2, fam(S2, "", "w"))
    assert not v and v.witness == (S2.vset("v"),)
    assert is_saturated(S2, H1)
    assert is_saturated(S2, S2.members)


def test_feeds_into(S2):
    assert feeds_into(S2, S2.vset("v"), fam(S2, "", "w"))
    assert not feeds_into(S2, S2.vset("u"), fam(S2, "", "w"))
    assert feeds_into(S2, 0, {0})


def test_saturate_examples(S2, H1):
    seq = saturation_sequence(S2, fam(S2, "", "w"))
    assert seq == [fam(S2, "", "w"), H1]
    assert saturate(S2, fam(S2, "", "w")) == H1
    assert oracle_saturate(S2, fam(S2, "", "w")) == H1
    assert saturate(S2, {0}) == {0}
    assert saturate(S2, S2.members) == S2.members


def test_saturate_rejects_non_hereditary(S2):
    with pytest.raises(NotHereditarySaturated, match="input not hereditary"):
        saturate(S2, fam(S2, "", "v"))


def test_hs_closure_examples(S2, H1):
    assert hs_closure(S2, fam(S2, "v")) == H1
    assert hs_closure(S2, fam(S2, "u")) == S2.members
    assert hs_closure(S2, set()) == {0}


def test_enumerate_g2(S2, H1):
    lat = enumerate_hs(S2)
    assert list(lat.members) == [frozenset({0}), H1, S2.members]
    assert list(lat.members) == oracle_enumerate_hs(S2)
    assert lat.hasse_edges == ((0, 1), (1, 2))
    assert lat.meet_table[1][2] == 1
    assert lat.join_table[0][1] == 1


def test_enumerate_g3(S3):
    lat = enumerate_hs(S3)
    assert [sorted(H) for H in lat.members] == [[0], [0, 1]]


def test_enumerate_two_loops(SL):
    lat = enumerate_hs(SL)
    assert len(lat.members) == 4
    assert list(lat.members) == oracle_enumerate_hs(SL)


def test_meet_join(S2, H1):
    top = S2.members
    assert meet(S2, H1, top) == H1
    assert meet(S2, {0}, H1) == {0}
    assert join(S2, H1, hs_closure(S2, fam(S2, "u"))) == top
    with pytest.raises(NotHereditarySaturated):
        meet(S2, fam(S2, "", "w"), top)


def test_sim_equiv(S2, H1):
    u, v, uv = S2.vset("u"), S2.vset("v"), S2.vset("uv")
    assert sim_equiv(S2, H1, u, uv)
    assert not sim_equiv(S2, H1, u, v)
    for A in S2.family:
        for B in S2.family:
            assert sim_equiv(S2, {0}, A, B) == (A == B)


def test_quotient(S2, H1):
    q = quotient(S2, H1)
    assert len(q) == 2
    assert q.classes == (
        tuple(S2.sorted(fam(S2, "", "v", "w", "vw"))),
        tuple(S2.sorted(fam(S2, "u", "uv", "uw", "uvw"))),
    )
    assert q.representatives == (S2.vset("vw"), S2.vset("uvw"))
    assert q.is_congruence and q.is_weakly_left_resolving
    assert len(quotient(S2, {0})) == 8
    assert len(quotient(S2, S2.members)) == 1


SPACES = list(corpus(seed=11, instances=60))


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(SPACES), st.data())
def test_closure_operator_laws(space, data):
    subfamily = st.frozensets(st.sampled_from(space.family))
    S = data.draw(subfamily)
    T = data.draw(subfamily)
    cS = hs_closure(space, S)
    assert S <= cS
    assert hs_closure(space, cS) == cS
    assert hs_closure(space, S | T) >= cS
    assert is_hereditary(space, cS) and is_saturated(space, cS)
    assert cS == oracle_saturate(space, S)


@pytest.mark.parametrize("space", SPACES[:40])
def test_lattice_laws(space):
    lat = enumerate_hs(space)
    n = len(lat.members)
    for i in range(n):
        for j in range(n):
            m, J = lat.meet_table[i][j], lat.join_table[i][j]
            assert lat.members[m] == lat.members[i] & lat.members[j]
            assert lat.meet_table[i][lat.join_table[i][j]] == i
            assert lat.join_table[i][lat.meet_table[i][j]] == i
            assert lat.leq(i, J) and lat.leq(m, j)
    for H in lat.members:
        if is_hereditary(space, H):
            seq = saturation_sequence(space, H)
            assert all(a <= b for a, b in zip(seq, seq[1:]))


@pytest.mark.parametrize("space", SPACES[:40])
def test_sim_equiv_congruence(space):
    g = space.graph
    for H in enumerate_hs(space).members:
        q = quotient(space, H)
        assert q.is_congruence
        assert sum(len(c) for c in q.classes) == len(space.family)
        for cls in q.classes:
            for A in cls:
                for B in cls:
                    assert sim_equiv(space, H, A, B)
                    for a in g.alphabet:
                        assert sim_equiv(space, H, g.step(A, a), g.step(B, a))
