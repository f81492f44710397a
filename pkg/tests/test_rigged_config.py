import pytest
from hypothesis import given, settings, strategies as st

from conftest import five_factor_rc
from rcbij.bijection import phi_inv
from rcbij.crystal_tableaux import column, path, path_elements, is_path_highest
from rcbij.rigged_config import (
    RiggedConfiguration,
    convexity_violations,
    coriggings,
    empty_rc,
    enumerate_all,
    enumerate_highest,
    is_admissible,
    is_highest,
    p_infinity,
    rc_eps,
    rc_op,
    rc_phi,
    rc_weight,
    vacancy,
)
from rcbij.root_data import DynkinSpec, coroot_pairing

D4 = DynkinSpec("D", 4)
A2 = DynkinSpec("A", 2)
A3 = DynkinSpec("A", 3)


def test_rows_are_canonical():
    rc = RiggedConfiguration(A2, ((1, 1),) * 3, (((1, 0), (2, -1), (1, 1)), ()))
    assert rc.rows(1) == ((2, -1), (1, 1), (1, 0))
    with pytest.raises(ValueError):
        RiggedConfiguration(A2, ((1, 1),), ((),))


def test_vacancy_numbers_of_highest_example(rc_a):
    vac = {(a, l): vacancy(rc_a, a, l) for a in rc_a.spec.nodes for l, _ in rc_a.rows(a)}
    assert vac == {
        (1, 2): 0, (2, 3): 1, (2, 2): 2, (2, 1): 1,
        (3, 3): 0, (3, 2): 1, (3, 1): 0, (4, 2): 0, (4, 1): 0, (5, 2): 2,
    }
    assert is_highest(rc_a)


def test_empty_configuration():
    rc = empty_rc(D4, ((2, 1), (1, 1)))
    assert is_highest(rc)
    assert p_infinity(rc, 1) == 1 and p_infinity(rc, 2) == 1
    assert rc_weight(rc) == (2, 1, 0, 0)
    assert rc_op(rc, 3, "f") is None
    assert rc_op(rc, 1, "e") is None


def test_f_chain_on_eight_letters():
    b = path(A2, *[column(x) for x in [1, 2, 3, 1, 1, 2, 1, 1]])
    rc = phi_inv(b)
    assert rc.nu == (((2, 2), (1, 1)), ((1, 0),))
    assert p_infinity(rc, 1) == 3 and rc_eps(rc, 1) == 0 and rc_phi(rc, 1) == 3
    chain = [
        (((2, 0), (1, -1), (1, -1)), ((1, 1),)),
        (((2, -2), (2, -2), (1, -1)), ((1, 1),)),
        (((3, -3), (2, -2), (1, -1)), ((1, 1),)),
    ]
    for nu in chain:
        rc = rc_op(rc, 1, "f")
        assert rc.nu == nu
    assert rc_op(rc, 1, "f") is None


def test_f_keeps_coriggings_at_neighbors():
    # f_2 on the configuration of letter 2 gives that of letter 3 (type D, one box)
    rc = RiggedConfiguration(D4, ((1, 1),), (((1, -1),), (), (), ()))
    out = rc_op(rc, 2, "f")
    assert out.nu == (((1, 0),), ((1, -1),), (), ())
    assert [c for c in coriggings(out)[0]] == [c for c in coriggings(rc)[0]]


def test_admissible_but_unreachable():
    rc = RiggedConfiguration(D4, ((1, 1),), (((1, -2),), (), (), ()))
    assert is_admissible(rc)
    assert rc not in set(enumerate_all(D4, ((1, 1),)))


COUNTS = [
    (D4, ((1, 1),) * 3, 512), (D4, ((1, 2), (1, 1)), 280), (D4, ((2, 1), (1, 1)), 232),
    (D4, ((2, 2),), 329), (D4, ((3, 1),), 8), (D4, ((4, 2),), 35), (D4, ((3, 1), (1, 1)), 64),
    (A3, ((1, 1),) * 4, 256), (A3, ((2, 2), (1, 1)), 80), (A3, ((2, 1), (1, 2)), 60),
]


@pytest.mark.parametrize("spec,shape,size", COUNTS)
def test_enumeration_sizes(spec, shape, size):
    every = enumerate_all(spec, shape)
    assert len(every) == len(set(every)) == size
    assert all(is_admissible(rc) for rc in every)
    highest = enumerate_highest(spec, shape)
    assert set(highest) == {rc for rc in every if is_highest(rc)}
    assert len(highest) == sum(1 for p in path_elements(spec, shape) if is_path_highest(p))


def test_highest_with_weight_filter():
    shape = ((1, 1),) * 3
    top = enumerate_highest(D4, shape, weight=(3, 0, 0, 0))
    assert [rc.nu for rc in top] == [((),) * 4]


def test_convexity_on_examples(rc_a):
    assert convexity_violations(rc_a) == []
    assert convexity_violations(empty_rc(D4, ((2, 2),))) == []


def test_rejects_bad_direction():
    with pytest.raises(ValueError):
        rc_op(empty_rc(D4, ((1, 1),)), 1, "x")


# properties over a full enumeration

ELEMENTS = enumerate_all(D4, ((2, 1), (1, 1)))


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(ELEMENTS), st.sampled_from(D4.nodes))
def test_operator_properties(rc, i):
    w = rc_weight(rc)
    assert rc_phi(rc, i) - rc_eps(rc, i) == coroot_pairing(D4, i, w)
    up = rc_op(rc, i, "e")
    if up is not None:
        assert rc_op(up, i, "f") == rc
        assert rc_eps(up, i) == rc_eps(rc, i) - 1
    down = rc_op(rc, i, "f")
    assert (down is None) == (rc_phi(rc, i) == 0)
    if down is not None:
        assert rc_op(down, i, "e") == rc
        assert is_admissible(down)
