import pytest
from hypothesis import given

from conftest import perm_lists
from symbreak.errors import DegreeError
from symbreak.perms import (
    Labeling,
    Perm,
    PermGroup,
    compose,
    cycle_type,
    inverse,
    relabel,
)


def test_compose_right_to_left():
    # q applied first: (0 1) after (1 2) is the 3-cycle (0 1 2)
    p = Perm.from_cycles(3, [(0, 1)])
    q = Perm.from_cycles(3, [(1, 2)])
    assert compose(p, q).cycles() == ((0, 1, 2),)


def test_compose_transposition_self_inverse():
    t = Perm.from_cycles(4, [(0, 1)])
    assert compose(t, t).is_identity


def test_compose_half_swap_product():
    # (x d1)(y) followed right-to-left by (y d1)(x) gives the 3-cycle (x d1 y)
    # on symbols x,y,d1 -> 0,1,2
    a = Perm.from_cycles(3, [(0, 2)])
    b = Perm.from_cycles(3, [(1, 2)])
    assert compose(a, b).cycles() == ((0, 2, 1),)


def test_compose_degree_mismatch():
    with pytest.raises(DegreeError):
        compose(Perm.identity(3), Perm.identity(4))


def test_inverse_goldens():
    assert inverse(Perm.identity(4)).is_identity
    assert inverse(Perm.from_cycles(3, [(0, 1, 2)])) == Perm.from_cycles(3, [(0, 2, 1)])
    t = Perm.from_cycles(5, [(1, 3)])
    assert inverse(t) == t


def test_cycle_type_goldens():
    assert cycle_type(Perm.identity(5)) == (1, 1, 1, 1, 1)
    assert cycle_type(Perm.from_cycles(5, [(0, 1), (2, 3)])) == (2, 2, 1)
    assert cycle_type(Perm.from_cycles(5, [(0, 1, 2, 3, 4)])) == (5,)


def test_relabel_identity_prints_singletons():
    lab = Labeling(("1", "2", "3"))
    assert relabel(Perm.identity(3), lab) == "(1)(2)(3)"


def test_relabel_named_transposition():
    assert relabel(Perm.from_cycles(2, [(0, 1)]), Labeling(("1a", "2a"))) == "(1a,2a)"
    assert relabel(Perm.from_cycles(2, [(0, 1)]), Labeling.identity(2)) == "(0,1)"


def test_relabel_cycle_rotation_is_deterministic():
    # cycle through 2,0,1 prints rotated to least member
    p = Perm((1, 2, 0))
    assert relabel(p, Labeling.identity(3)) == "(0,1,2)"


def test_relabel_degree_mismatch():
    with pytest.raises(DegreeError):
        relabel(Perm.identity(3), Labeling.identity(4))


def test_labeling_must_be_injective():
    with pytest.raises(ValueError):
        Labeling(("a", "a"))


@given(perm_lists(count=3))
def test_compose_associative(ps):
    p, q, r = ps
    assert compose(compose(p, q), r) == compose(p, compose(q, r))


@given(perm_lists(count=1))
def test_identity_neutral_and_inverse_two_sided(ps):
    (p,) = ps
    e = Perm.identity(p.degree)
    assert compose(p, e) == p == compose(e, p)
    assert compose(p, inverse(p)).is_identity
    assert compose(inverse(p), p).is_identity


@given(perm_lists(count=2))
def test_conjugation_preserves_cycle_type(ps):
    p, s = ps
    conj = compose(s, compose(p, inverse(s)))
    assert cycle_type(conj) == cycle_type(p)


@given(perm_lists(count=1))
def test_cycles_partition_and_reproduce(ps):
    (p,) = ps
    cycles = p.cycles()
    seen = sorted(v for cyc in cycles for v in cyc)
    assert seen == list(range(p.degree))
    rebuilt = Perm.from_cycles(p.degree, cycles)
    assert rebuilt == p
    assert sum(cycle_type(p)) == p.degree


def test_relabel_injective_on_group_elements():
    group = PermGroup.symmetric(3)
    lab = Labeling(("x", "y", "z"))
    rendered = [relabel(p, lab) for p in group.elements]
    assert len(set(rendered)) == group.order


def test_permgroup_validate_accepts_symmetric_group():
    PermGroup.symmetric(3).validate()


def test_permgroup_validate_rejects_non_closed():
    bad = PermGroup(3, (Perm.identity(3), Perm((1, 2, 0))))
    with pytest.raises(ValueError):
        bad.validate()


def test_permgroup_from_elements_sorts_and_dedupes():
    g = PermGroup.from_elements(
        2, [Perm((1, 0)), Perm((0, 1)), Perm((1, 0))]
    )
    assert g.order == 2
    assert g.elements[0].is_identity
