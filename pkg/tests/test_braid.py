import pytest
from hypothesis import given, settings, strategies as st

from braidcover.braid import BraidWord, braid_relators, delta, evaluate_braid, reduce_braid
from braidcover.covering import build_cover_groupoid, twist_assignment
from braidcover.errors import DomainError, SchemaError
from braidcover.groupoid import compose_functors, functor_equal, identity_functor


def bw(n, *ints):
    return BraidWord.from_ints(n, ints)


@pytest.mark.parametrize(
    "word, reduced",
    [
        ((1, -1), ()),
        ((1, 2, -2, 1), (1, 1)),
        ((1, 2, 1), (1, 2, 1)),
        ((-2, 1, -1, 2, 1), (1,)),
    ],
)
def test_reduce_braid(word, reduced):
    assert reduce_braid(bw(3, *word)).to_ints() == list(reduced)


def test_relators_counts():
    assert braid_relators(2) == []
    assert [r.to_ints() for r in braid_relators(3)] == [[1, 2, 1, -2, -1, -2]]
    rels = braid_relators(4)
    assert sum(len(r) == 6 for r in rels) == 2
    assert [r.to_ints() for r in rels if len(r) == 4] == [[1, 3, -1, -3]]
    # n=8: 6 braid relators and C(7,2) - 6 = 15 commutators
    assert len(braid_relators(8)) == 21


def test_relators_domain():
    with pytest.raises(DomainError):
        braid_relators(1)
    with pytest.raises(DomainError):
        delta(1)


def test_delta():
    assert delta(2).to_ints() == [1]
    assert delta(3).to_ints() == [1, 2]
    assert delta(5).to_ints() == [1, 2, 3, 4]


def test_index_range():
    with pytest.raises(DomainError):
        bw(3, 3)


E = build_cover_groupoid(3, 2)
FWD, BWD = twist_assignment(E)


def test_evaluate_empty_and_single():
    assert functor_equal(evaluate_braid(BraidWord(3), FWD, BWD), identity_functor(E))
    assert functor_equal(evaluate_braid(bw(3, 1), FWD, BWD), FWD[1])


def test_evaluate_relator_is_identity():
    rel = braid_relators(3)[0]
    assert functor_equal(evaluate_braid(rel, FWD, BWD), identity_functor(E))


def test_evaluate_missing_assignment():
    with pytest.raises(SchemaError):
        evaluate_braid(bw(3, 2), {1: FWD[1]})


def test_inverse_letter_needs_inverse_for_twists():
    from braidcover.errors import PreconditionError

    with pytest.raises(PreconditionError):
        evaluate_braid(bw(3, -1), FWD)


words = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=6)


@settings(max_examples=50, deadline=None)
@given(words, words)
def test_evaluation_is_homomorphism(u, v):
    fu = evaluate_braid(BraidWord.from_ints(3, u), FWD, BWD, domain=E)
    fv = evaluate_braid(BraidWord.from_ints(3, v), FWD, BWD, domain=E)
    fuv = evaluate_braid(BraidWord.from_ints(3, u + v), FWD, BWD, domain=E)
    assert functor_equal(fuv, compose_functors(fv, fu))


@settings(max_examples=50, deadline=None)
@given(words)
def test_evaluation_ignores_free_cancellation(u):
    w = BraidWord.from_ints(3, u)
    assert functor_equal(evaluate_braid(w, FWD, BWD, domain=E), evaluate_braid(reduce_braid(w), FWD, BWD, domain=E))


@pytest.mark.parametrize("n, d", [(4, 2), (5, 3), (6, 2)])
def test_delta_conjugation(n, d):
    E = build_cover_groupoid(n, d)
    fwd, bwd = twist_assignment(E)
    dl = evaluate_braid(delta(n), fwd, bwd)
    dl_inv = evaluate_braid(delta(n).inverse(), fwd, bwd)
    for i in range(2, n):
        assert functor_equal(compose_functors(dl_inv, compose_functors(fwd[i - 1], dl)), fwd[i])
