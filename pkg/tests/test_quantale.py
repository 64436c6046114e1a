import pytest

from oplab.errors import IndexOutOfRange, InvalidLabels
from oplab.quantale import (
    LEFT,
    RIGHT,
    ModuleLattice,
    Quantale,
    boolean_downset_module,
    boolean_quantale,
    chain_lattice,
    diamond_lattice,
    join,
    left_self_module,
    lukasiewicz,
    make_builtin,
    meet,
    module_join,
    module_over_trivial,
    noncommutative_chain4,
    one_element_module,
    residual_left,
    residual_right,
    reverse_quantale,
    right_self_module,
    transpose_module,
    trivial_quantale,
    validate_module,
    validate_quantale,
)

BUILTINS = [boolean_quantale(), lukasiewicz(3), trivial_quantale(), noncommutative_chain4()]


@pytest.mark.parametrize("q", BUILTINS)
def test_builtins_validate(q):
    assert validate_quantale(q).ok


def test_make_builtin():
    assert make_builtin("boolean").size() == 2
    luk = make_builtin("lukasiewicz", 3)
    assert luk.size() == 4 and luk.elements[luk.unit] == "3"
    assert make_builtin("trivial").size() == 1
    with pytest.raises(InvalidLabels):
        make_builtin("nope")
    with pytest.raises(IndexOutOfRange):
        make_builtin("lukasiewicz")


def test_join_examples():
    b = boolean_quantale()
    assert join(b, (0, 1)) == 1
    assert join(b, ()) == 0
    luk = lukasiewicz(3)
    assert join(luk, (1, 2)) == 2
    assert meet(luk, (1, 2)) == 1
    assert meet(luk, ()) == 3


def test_lukasiewicz_residual_closed_form():
    luk = lukasiewicz(3)
    for a in range(4):
        for b in range(4):
            assert residual_right(luk, a, b) == min(3, 3 - a + b)
            assert residual_left(luk, a, b) == min(3, 3 - a + b)
        assert residual_right(luk, a, 3) == 3


def test_boolean_residual():
    b = boolean_quantale()
    assert residual_right(b, 1, 0) == 0
    assert residual_right(b, 0, 0) == 1


@pytest.mark.parametrize("q", BUILTINS)
def test_residuation_adjunction(q):
    for a in range(q.size()):
        for b in range(q.size()):
            r = residual_right(q, a, b)
            l = residual_left(q, a, b)
            for c in range(q.size()):
                assert q.le(q.mul(a, c), b) == q.le(c, r)
                assert q.le(q.mul(c, a), b) == q.le(c, l)


@pytest.mark.parametrize("q", BUILTINS)
def test_join_continuity_all_subsets(q):
    elems = range(q.size())
    subsets = [
        tuple(x for x in elems if mask >> x & 1) for mask in range(1 << q.size())
    ]
    for a in elems:
        for xs in subsets:
            j = join(q, xs)
            assert q.mul(a, j) == join(q, tuple(q.mul(a, x) for x in xs))
            assert q.mul(j, a) == join(q, tuple(q.mul(x, a) for x in xs))


def test_invalid_tensor_rejected():
    # bottom not absorbed: 0*0 = 1 on the two-chain
    q = Quantale(("0", "1"), ((True, True), (False, True)), ((1, 0), (0, 1)), 1)
    rep = validate_quantale(q)
    assert not rep.ok
    assert rep.first_failure().name in ("distributivity", "unit")
    # non-associative three-chain
    q2 = Quantale(
        ("0", "1", "2"),
        tuple(tuple(a <= b for b in range(3)) for a in range(3)),
        ((0, 0, 0), (0, 0, 1), (0, 2, 2)),
        2,
    )
    rep2 = validate_quantale(q2)
    assert not rep2.ok


def test_non_lattice_rejected():
    # two incomparable points, no top or bottom
    q = Quantale(("x", "y"), ((True, False), (False, True)), ((0, 0), (0, 1)), 1)
    rep = validate_quantale(q)
    assert not rep.ok
    assert rep.first_failure().name == "lattice"


def test_reverse_quantale():
    for q in BUILTINS[:3]:  # the commutative ones
        assert reverse_quantale(q) == q
    nc = noncommutative_chain4()
    rev = reverse_quantale(nc)
    assert rev != nc
    assert validate_quantale(rev).ok
    assert reverse_quantale(rev) == nc
    assert nc.mul(1, 2) == 0 and nc.mul(2, 1) == 1
    assert rev.mul(1, 2) == 1 and rev.mul(2, 1) == 0


@pytest.mark.parametrize("q", BUILTINS)
def test_self_modules_validate(q):
    assert validate_module(left_self_module(q)).ok
    assert validate_module(right_self_module(q)).ok
    assert validate_module(one_element_module(q, LEFT)).ok
    assert validate_module(one_element_module(q, RIGHT)).ok


def test_downset_and_trivial_modules():
    assert validate_module(boolean_downset_module(3)).ok
    assert validate_module(boolean_downset_module(4, RIGHT)).ok
    for names, leq in (chain_lattice(1), chain_lattice(4), diamond_lattice()):
        assert validate_module(module_over_trivial(names, leq)).ok


def test_module_association_violation_detected():
    q = boolean_quantale()
    # top must act as the identity for the unit law to hold
    bad = ModuleLattice(q, LEFT, ("m0", "m1"), ((True, True), (False, True)), ((0, 0), (0, 0)))
    rep = validate_module(bad)
    assert not rep.ok
    assert rep.first_failure().name == "unit-action"


def test_transpose_module_roundtrip():
    for q in BUILTINS:
        for m in (left_self_module(q), right_self_module(q)):
            t = transpose_module(m)
            assert t.side != m.side
            assert t.base == reverse_quantale(q)
            assert validate_module(t).ok
            assert transpose_module(t) == m
            # the scalar moves to the other side of the action
            for a in range(q.size()):
                for x in range(m.size()):
                    assert t.act(a, x) == m.act(a, x)


def test_module_join():
    m = boolean_downset_module(3)
    assert module_join(m, ()) == 0
    assert module_join(m, (0, 2)) == 2
