import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from braidcover.errors import DomainError, SchemaError
from braidcover.invariants import genus_dm
from braidcover.operad import (
    Configuration,
    FramedDisksElement,
    act_on_configurations,
    act_on_surfaces,
    algebra_map_square,
    disks,
    identity_element,
    max_distance,
    operad_compose,
    random_element,
    row_element,
    surface,
    validate_element,
)

QUARTERS = FramedDisksElement((0.25, 0.25), (-0.5, 0.5))


def test_validate_examples():
    assert validate_element(identity_element()) == (True, None)
    assert validate_element(QUARTERS)[0]
    ok, why = validate_element(FramedDisksElement((0.5, 0.5), (-0.5, 0.5)))
    assert not ok and "overlap" in why
    ok, why = validate_element(FramedDisksElement((0.5,), (0.6,)))
    assert not ok and "leaves" in why


def test_compose_examples():
    f = FramedDisksElement((0.5,), (0,))
    g = FramedDisksElement((0.5,), (0.25,))
    h = operad_compose(f, [g])
    assert h.scales == (0.25,) and h.offsets == (0.125,)
    assert operad_compose(QUARTERS, [identity_element()] * 2) == QUARTERS
    with pytest.raises(SchemaError):
        operad_compose(QUARTERS, [g])


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_associativity_and_validity(seed):
    rng = np.random.default_rng(seed)
    f = random_element(rng, 2)
    gs = [random_element(rng, int(rng.integers(0, 3))) for _ in range(2)]
    hs = [[random_element(rng, 2) for _ in range(g.arity)] for g in gs]
    left = operad_compose(operad_compose(f, gs), [h for block in hs for h in block])
    right = operad_compose(f, [operad_compose(g, block) for g, block in zip(gs, hs)])
    assert max_distance(left, right) <= 1e-9
    assert validate_element(left)[0]


def test_serialization_round_trip():
    f = random_element(np.random.default_rng(3), 3)
    assert FramedDisksElement.from_list(f.to_list()) == f


def test_configuration_action():
    c = Configuration((0.1, 0.2j))
    assert act_on_configurations(identity_element(), [c]) == c
    out = act_on_configurations(QUARTERS, [Configuration((0,)), Configuration((0,))])
    assert out.points == (-0.5, 0.5)
    f = row_element(2)
    rng = np.random.default_rng(0)
    from braidcover.operad import random_configuration

    out = act_on_configurations(f, [random_configuration(rng, 3), random_configuration(rng, 6)])
    assert len(out) == 9


def test_configuration_validation():
    with pytest.raises(DomainError):
        Configuration((0.1, 0.1))
    with pytest.raises(DomainError):
        Configuration((1.0,))


def test_surface_action_examples():
    assert act_on_surfaces(QUARTERS, [surface(1, 3), surface(4, 3)]) == surface(7, 3)
    assert act_on_surfaces(1, [surface(5, 4)]) == surface(5, 4)
    assert act_on_surfaces(3, [disks(4)] * 3) == disks(4)
    assert act_on_surfaces(2, [disks(3), surface(1, 3)]) == surface(1, 3)
    with pytest.raises(SchemaError):
        act_on_surfaces(2, [surface(1, 3), surface(1, 2)])


@given(st.integers(2, 8), st.lists(st.integers(1, 5), min_size=1, max_size=5))
def test_surface_action_closed_form(d, ms):
    glued = act_on_surfaces(len(ms), [surface(genus_dm(d, m), d) for m in ms])
    assert glued.genus == sum(genus_dm(d, m) for m in ms) + (len(ms) - 1) * (d - 1) == genus_dm(d, sum(ms))


@given(st.integers(2, 6), st.lists(st.integers(0, 4), min_size=1, max_size=4))
def test_algebra_map_square(d, ms):
    assert algebra_map_square(d, ms)
