import pytest

from labelled_prim.family import SpaceUnverified, make_space
from labelled_prim.fixtures import g1, union_gap
from labelled_prim.graph import InputError, UltimatelyPeriodicWord
from labelled_prim.lattice import NotHereditarySaturated, enumerate_hs, is_hereditary, is_saturated
from labelled_prim.oracle import corpus, oracle_enumerate_tails, oracle_sees
from labelled_prim.tails import (
    NotRealizable,
    enumerate_tails,
    family_sees,
    is_maximal_tail,
    is_prime_hs,
    lemma_br62_check,
    prefix_ranges,
    reachability,
    sees,
    tail_from_word,
    verify_prim_correspondence,
)

SPACES = list(corpus(seed=11, instances=60))


def word(prefix, cycle):
    return UltimatelyPeriodicWord(tuple(prefix), tuple(cycle))


@pytest.fixture
def H1(S2):
    return S2.family_of("", "v", "w", "vw")


@pytest.fixture
def D_full(S2):
    return S2.members - {0}


@pytest.fixture
def D_u(S2):
    return S2.family_of("u", "uv", "uw", "uvw")


# -- sees ---------------------------------------------------------------------------


def test_sees_examples(S2):
    u, v, w = (S2.vset(x) for x in "uvw")
    assert sees(S2, u, w)
    assert not sees(S2, w, u)
    assert sees(S2, v, w)
    assert sees(S2, w, 0) and sees(S2, u, 0)


def test_sees_matches_oracle_on_fixtures(S2, S3, SL):
    for space in (S2, S3, SL):
        for A in space.family:
            for B in space.family:
                assert sees(space, A, B) == oracle_sees(space, A, B)


def test_sees_rejects_non_members(S2):
    with pytest.raises(InputError):
        sees(S2, S2.vset("u"), 1 << 7)


def test_family_sees(S2):
    assert family_sees(S2, S2.family_of("u"), S2.family_of("w"))
    assert not family_sees(S2, S2.family_of("w"), S2.family_of("u"))
    assert family_sees(S2, [], S2.family_of("u"))
    assert not family_sees(S2, S2.family_of("u"), [])


@pytest.mark.parametrize("space", SPACES[:30])
def test_sees_is_transitive(space):
    seen = reachability(space).seen
    for i, s in enumerate(seen):
        for j in s:
            assert seen[j] <= s, (i, j)


# -- maximal tails ------------------------------------------------------------------------


def test_tail_examples(S2, D_full, D_u):
    assert is_maximal_tail(S2, D_full).verified
    assert is_maximal_tail(S2, D_u).verified
    t = is_maximal_tail(S2, S2.family_of("v", "w"))
    assert not t.verified
    assert set(t.failures()) == {"c"}
    X, Y = t.axioms["c"].witness
    assert X not in t.sets and Y in t.sets and sees(S2, X, Y)


def test_tail_rejects_empty_and_empty_set(S2, D_full):
    t = is_maximal_tail(S2, [])
    assert not t.verified and "nonempty" in t.failures()
    t = is_maximal_tail(S2, D_full | {0})
    assert not t.verified and t.failures()["no_empty_set"].witness == (0,)


def test_tail_axiom_a_and_b_witnesses(SL):
    v, w = SL.vset("v"), SL.vset("w")
    t = is_maximal_tail(SL, SL.members - {0})
    assert t.failures().keys() == {"a"}
    A, B = t.axioms["a"].witness
    assert not any(sees(SL, A, C) and sees(SL, B, C) for C in t.sets)
    # {v, w} alone: no single letter keeps it inside
    t = is_maximal_tail(SL, {v | w})
    assert "b" in t.failures()


def test_enumerate_tails_examples(S2, S3, D_full, D_u):
    tails = enumerate_tails(S2)
    assert [t.sets for t in tails] == [D_full, D_u]
    assert [t.complement_id for t in tails] == [0, 1]
    assert [t.sets for t in enumerate_tails(S3)] == [S3.family_of("v")]


def test_enumerate_tails_needs_verified_space():
    space = make_space(g1(), allow_unverified=True)
    with pytest.raises(SpaceUnverified, match="space unverified"):
        enumerate_tails(space)


def test_prime_examples(S2, H1, SL):
    lat = enumerate_hs(S2)
    assert is_prime_hs(S2, {0}, lat)
    assert is_prime_hs(S2, H1, lat)
    with pytest.raises(ValueError):
        is_prime_hs(S2, S2.members, lat)
    with pytest.raises(NotHereditarySaturated):
        is_prime_hs(S2, S2.family_of("v"), lat)
    lat = enumerate_hs(SL)
    assert len(lat.members) == 4
    assert not is_prime_hs(SL, {0}, lat)


def test_prim_correspondence_examples(S2, S3, SL):
    c = verify_prim_correspondence(S2)
    assert c.holds and len(c.bijection) == 2 and len(c.rows) == 2
    assert len(verify_prim_correspondence(S3).bijection) == 1
    c = verify_prim_correspondence(SL)
    assert c.holds
    assert (0, False, False) in c.rows
    assert len(c.bijection) == 2


@pytest.mark.parametrize("space", SPACES)
def test_tail_invariants_on_corpus(space):
    lat = enumerate_hs(space)
    tails = enumerate_tails(space, lat)
    for t in tails:
        H = space.members - t.sets
        assert is_hereditary(space, H) and is_saturated(space, H)
        assert family_sees(space, t.sets, t.sets)
    assert verify_prim_correspondence(space, lat).holds


@pytest.mark.parametrize("space", SPACES)
def test_enumerate_tails_equals_oracle_tails_with_hs_complement(space):
    found = {t.sets for t in enumerate_tails(space)}
    brute = oracle_enumerate_tails(space)
    for D in brute:
        assert is_maximal_tail(space, D).verified
    hs = {D for D in brute if is_hereditary(space, space.members - D) and is_saturated(space, space.members - D)}
    assert found == hs


def test_tail_with_non_hereditary_complement():
    space = make_space(union_gap())
    D = space.family_of(["v1", "v3"], ["v0", "v1", "v3"])
    assert is_maximal_tail(space, D).verified
    verdict = is_hereditary(space, space.members - D)
    assert not verdict and verdict.condition == "union"
    assert verdict.witness == (space.vset(["v1"]), space.vset(["v3"]))
    assert D in oracle_enumerate_tails(space)
    assert D not in {t.sets for t in enumerate_tails(space)}


# -- tails from words ---------------------------------------------------------------------


def test_tail_from_word_examples(S2, D_full, D_u):
    t, log = tail_from_word(S2, S2.vset("v"), word("c", "d"))
    assert log["initial"] == S2.sorted(S2.family_of("v", "w"))
    assert t.verified and t.sets == D_full
    assert log["complement_hereditary"] and log["complement_saturated"]
    t, log = tail_from_word(S2, S2.vset("u"), word("", "a"))
    assert log["initial"] == [S2.vset("u")]
    assert t.verified and t.sets == D_u


def test_tail_from_word_errors(S2):
    with pytest.raises(NotRealizable, match="word not realizable"):
        tail_from_word(S2, S2.vset("w"), word("", "a"))
    with pytest.raises(InputError):
        tail_from_word(S2, 0, word("", "a"))
    with pytest.raises(InputError):
        tail_from_word(S2, S2.vset("u"), word("", "z"))


def test_prefix_ranges_stop_at_repeat(S2):
    out = prefix_ranges(S2, S2.vset("u"), word("abc", "d"))
    assert out == [S2.vset(x) for x in ("u", "u", "v", "w")]


def test_tail_from_word_reports_complement():
    space = make_space(union_gap())
    t, log = tail_from_word(space, space.vset(["v1", "v3"]), word("", "a"))
    assert t.verified
    assert not log["complement_hereditary"]
    assert log["complement_hereditary"].condition == "union"


@pytest.mark.parametrize("space", SPACES[:30])
def test_tail_from_word_never_silent(space):
    g = space.graph
    for A in space.family:
        if not A:
            continue
        for a in g.alphabet:
            try:
                t, _ = tail_from_word(space, A, word("", a))
            except NotRealizable:
                continue
            assert t.verified == all(t.axioms.values())
            for name, v in t.failures().items():
                assert v.condition == name and v.witness is not None


# -- the cofinality lemma -----------------------------------------------------------------


def test_lemma_examples(S2, H1):
    rep = lemma_br62_check(S2, H1, S2.vset("u"))
    assert rep.K == S2.family_of("u")
    assert rep.passed
    assert all(Z == S2.vset("u") for _, Z in rep.witnesses)
    rep = lemma_br62_check(S2, {0}, S2.vset("w"))
    assert rep.K == S2.family_of("w")
    assert rep.closure == H1
    assert (S2.vset("v"), S2.vset("w")) in rep.witnesses
    assert rep.passed


def test_lemma_literal_reading_counterexample(S2, H1):
    # closing K alone pulls in {v}, which sees nothing in K
    rep = lemma_br62_check(S2, H1, S2.vset("u"), reading="literal")
    assert not rep.passed
    assert S2.vset("v") in rep.failures


def test_lemma_loop_case(S3):
    v = S3.vset("v")
    rep = lemma_br62_check(S3, {0}, v)
    assert rep.passed and rep.witnesses == ((v, v),)


def test_lemma_errors(S2, H1):
    with pytest.raises(ValueError):
        lemma_br62_check(S2, H1, S2.vset("v"))
    with pytest.raises(NotHereditarySaturated):
        lemma_br62_check(S2, S2.family_of("v"), S2.vset("u"))
    with pytest.raises(ValueError):
        lemma_br62_check(S2, H1, S2.vset("u"), reading="other")


@pytest.mark.parametrize("space", SPACES)
def test_lemma_on_corpus(space):
    for H in enumerate_hs(space).members:
        for A in space.family:
            if A not in H:
                rep = lemma_br62_check(space, H, A)
                assert rep.passed, (space.graph.names(A), rep.failures)
