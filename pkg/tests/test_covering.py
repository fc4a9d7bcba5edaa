import pytest

from braidcover.braid import BraidWord
from braidcover.covering import (
    build_cover_groupoid,
    build_disk_groupoid,
    deck_transformation,
    evaluate_on_cover,
    half_twist_functor,
    lifted_twist_functor,
    projection_functor,
    verify_cube_failure,
    verify_relations,
)
from braidcover.errors import DomainError
from braidcover.groupoid import compose_functors, functor_equal, identity_functor

import oracles


def images(f):
    return {e: str(w) for e, w in f.edge_map.items()}


@pytest.mark.parametrize("n, objects, edges", [(2, 4, 3), (3, 5, 4), (6, 8, 7)])
def test_disk_groupoid_counts(n, objects, edges):
    D = build_disk_groupoid(n)
    assert (len(D.objects), len(D.edges)) == (objects, edges)


def test_disk_groupoid_labels():
    D = build_disk_groupoid(2)
    assert D.objects == ("p[0]", "p[1]", "p[2]", "p[3]")
    assert D.edges == ("e[0]", "e[1]", "e[2]")
    with pytest.raises(DomainError):
        build_disk_groupoid(1)


def test_half_twist_formulas():
    D = build_disk_groupoid(2)
    b1 = half_twist_functor(D, 1)
    assert images(b1) == {"e[0]": "e[0]·e[1]", "e[1]": "e[1]^-1", "e[2]": "e[1]·e[2]"}
    assert (b1.edge_map["e[1]"].source, b1.edge_map["e[1]"].target) == ("p[2]", "p[1]")
    b2 = half_twist_functor(build_disk_groupoid(3), 2)
    assert str(b2.edge_map["e[0]"]) == "e[0]"
    with pytest.raises(DomainError):
        half_twist_functor(D, 2)


@pytest.mark.parametrize("n, d, objects, edges", [(3, 2, 7, 8), (2, 5, 12, 15)])
def test_cover_counts(n, d, objects, edges):
    E = build_cover_groupoid(n, d)
    assert (len(E.objects), len(E.edges)) == (objects, edges)


def test_trivial_cover_matches_disk():
    for n in (2, 3, 5):
        E = build_cover_groupoid(n, 1)
        D = build_disk_groupoid(n)
        assert len(E.objects) == len(D.objects) and len(E.edges) == len(D.edges)
        for i in range(1, n):
            lifted = {k[: -len("[1]")]: v.replace("][1]", "]") for k, v in images(lifted_twist_functor(E, i)).items()}
            assert lifted == images(half_twist_functor(D, i))


def test_lifted_formulas():
    E = build_cover_groupoid(3, 2)
    b1 = images(lifted_twist_functor(E, 1))
    assert b1["e[2][1]"] == "e[1][1]·e[2][1]"
    assert b1["e[2][2]"] == "e[1][2]·e[2][2]"
    assert b1["e[3][1]"] == "e[3][1]"
    E = build_cover_groupoid(2, 3)
    b1 = images(lifted_twist_functor(E, 1))
    assert b1["e[1][1]"] == "e[1][2]^-1"
    assert b1["e[1][3]"] == "e[1][1]^-1"


@pytest.mark.parametrize("n, d, i", [(3, 2, 1), (4, 3, 2), (5, 4, 4), (2, 5, 1)])
def test_lift_agrees_with_oracle(n, d, i):
    E = build_cover_groupoid(n, d)
    ref = oracles.lift(n, d, i)
    got = lifted_twist_functor(E, i)
    for e in E.edges:
        assert str(got.edge_map[e]) == oracles.show(ref.get(e, [(e, 1)]))


def test_fiber_objects_fixed():
    E = build_cover_groupoid(3, 3)
    f = lifted_twist_functor(E, 1)
    assert all(f.object_map[o] == o for o in E.objects if o.startswith("q"))


def test_projection_examples():
    for n, d in [(2, 3), (4, 2)]:
        E = build_cover_groupoid(n, d)
        p = projection_functor(E)
        assert str(p.edge_map["e[1][2]"]) == "e[1]"
    E = build_cover_groupoid(2, 3)
    p = projection_functor(E)
    b = lifted_twist_functor(E, 1)
    for j in (1, 2, 3):
        assert str(p(b.edge_map[f"e[1][{j}]"])) == "e[1]^-1"
    pid = compose_functors(p, identity_functor(E))
    assert functor_equal(pid, p)


def test_deck_group_law():
    E = build_cover_groupoid(3, 4)
    assert functor_equal(deck_transformation(E, 0), identity_functor(E))
    assert functor_equal(compose_functors(deck_transformation(E, 3), deck_transformation(E, 3)), deck_transformation(E, 2))
    with pytest.raises(DomainError):
        deck_transformation(E, 4)


def test_deck_commutes_with_lift():
    E = build_cover_groupoid(3, 3)
    rho, b = deck_transformation(E, 1), lifted_twist_functor(E, 1)
    assert functor_equal(compose_functors(rho, b), compose_functors(b, rho))


def test_relations_n3_d2():
    r = verify_relations(3, 2)
    assert r.passed
    names = {c.name for c in r.checks}
    assert "relator/braid(1,2)" in names
    E = build_cover_groupoid(3, 2)
    lhs = evaluate_on_cover(E, BraidWord.from_ints(3, [1, 2, 1]))
    assert str(lhs.edge_map["e[1][1]"]) == "e[2][1]^-1"
    assert str(lhs.edge_map["e[2][1]"]) == "e[1][2]^-1"
    assert str(lhs.edge_map["e[2][2]"]) == "e[1][1]^-1"


def test_commutation_relator_n4_d3():
    r = verify_relations(4, 3)
    (c,) = [c for c in r.checks if c.name == "relator/commute(1,3)"]
    assert c.status == "pass"


def test_square_witness_n3_d2():
    E = build_cover_groupoid(3, 2)
    sq = evaluate_on_cover(E, BraidWord.from_ints(3, [1, 1]))
    assert str(sq.edge_map["e[0][1]"]) == "e[0][1]·e[1][2]·e[1][1]^-1"
    assert not functor_equal(sq, identity_functor(E))


def test_relations_trivial_cover_skips_nontriviality():
    r = verify_relations(3, 1)
    assert r.passed
    assert any(c.status == "skip" for c in r.checks)


def test_relations_n2_vacuous():
    r = verify_relations(2, 3)
    assert r.passed
    assert not any(c.name.startswith("relator/") for c in r.checks)


@pytest.mark.parametrize("d", [2, 3])
def test_cube_failure(d):
    r = verify_cube_failure(d)
    assert r.passed
    cube = [c for c in r.checks if c.name == "cube_relation_fails"][0]
    assert "edge" in cube.witness or "object" in cube.witness
    lhs = oracles.evaluate(3, d, [1, 1, 1, 2, 2, 2, 1, 1, 1])
    rhs = oracles.evaluate(3, d, [2, 2, 2, 1, 1, 1, 2, 2, 2])
    assert lhs != rhs
    assert oracles.evaluate(3, d, [1, 2, 1]) == oracles.evaluate(3, d, [2, 1, 2])
