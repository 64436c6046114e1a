import pytest

from oplab.errors import InvalidLabels, NotActive, SourceTargetMismatch, ValidationError
from oplab.graphs import (
    Graph,
    GraphMorphism,
    MapClass,
    STAR,
    classify_graph_morphism,
    compose_graph_morphisms,
    empty_graph,
    labelset,
    validate_morphism,
)
from oplab.simplex import (
    DeltaClass,
    DeltaOpMorphism,
    LabeledSimplex,
    cartesian_lift,
    check_approximation,
    classify_delta,
    compose_delta,
    cut_morphism,
    cut_object,
    enumerate_delta_morphisms,
    enumerate_simplices,
    identity_delta,
    lcut,
    lcut_morphism,
    structural_inert,
)

S = labelset("a", "b")


def test_simplex_invariants():
    with pytest.raises(InvalidLabels):
        LabeledSimplex(S, ())
    with pytest.raises(InvalidLabels):
        LabeledSimplex(S, ("q",))
    with pytest.raises(ValidationError):
        DeltaOpMorphism(LabeledSimplex(S, ("a", "b")), LabeledSimplex(S, ("a",)), (1,))
    with pytest.raises(ValidationError):
        DeltaOpMorphism(LabeledSimplex(S, ("a", "b")), LabeledSimplex(S, ("a", "b")), (1, 0))


def test_cut_object():
    assert cut_object(LabeledSimplex(S, ("a", "b", "a"))).edges == (("a", "b"), ("b", "a"))
    assert cut_object(LabeledSimplex(S, ("a",))) == empty_graph(S)
    for x in enumerate_simplices(S, 4):
        assert len(cut_object(x).edges) == len(x.chain) - 1


def test_cut_morphism_contraction():
    m = DeltaOpMorphism(LabeledSimplex(S, ("a", "b", "b")), LabeledSimplex(S, ("a", "b")), (0, 2))
    cm = cut_morphism(m)
    assert cm.fibers == ((0, 1),)
    assert validate_morphism(cm).ok


def test_cut_morphism_identity_and_degeneracy():
    x = LabeledSimplex(S, ("a", "b"))
    assert cut_morphism(identity_delta(x)) == GraphMorphism(
        cut_object(x), cut_object(x), (0,), ((0,),)
    )
    deg = DeltaOpMorphism(LabeledSimplex(S, ("a",)), LabeledSimplex(S, ("a", "a")), (0, 0))
    cm = cut_morphism(deg)
    assert cm.source == empty_graph(S)
    assert cm.fibers == ((),)
    assert validate_morphism(cm).ok


def test_cut_functorial():
    simplices = enumerate_simplices(S, 4)
    for a in simplices:
        for b in simplices:
            for m in enumerate_delta_morphisms(a, b):
                for c in simplices:
                    for m2 in enumerate_delta_morphisms(b, c):
                        assert cut_morphism(compose_delta(m, m2)) == compose_graph_morphisms(
                            cut_morphism(m), cut_morphism(m2)
                        )


def test_compose_delta_mismatch():
    x = LabeledSimplex(S, ("a", "b"))
    y = LabeledSimplex(S, ("b", "b"))
    with pytest.raises(SourceTargetMismatch):
        compose_delta(identity_delta(x), identity_delta(y))


def test_classify_delta():
    big = LabeledSimplex(S, ("a", "b", "a", "b"))
    inert = DeltaOpMorphism(big, LabeledSimplex(S, ("b", "a")), (1, 2))
    assert classify_delta(inert) is DeltaClass.INERT
    totally = DeltaOpMorphism(big, LabeledSimplex(S, ("a", "b")), (2, 3))
    assert classify_delta(totally) is DeltaClass.TOTALLY_INERT
    assert classify_delta(identity_delta(big)) is DeltaClass.TOTALLY_INERT
    collapse = DeltaOpMorphism(LabeledSimplex(S, ("a", "a", "a", "a")), LabeledSimplex(S, ("a", "a")), (0, 3))
    assert classify_delta(collapse) is DeltaClass.ACTIVE_BASE
    neither = DeltaOpMorphism(LabeledSimplex(S, ("a", "a", "a")), LabeledSimplex(S, ("a", "a")), (0, 0))
    assert classify_delta(neither) is DeltaClass.OTHER


def test_lcut_levels():
    x = LabeledSimplex(S, ("a", "b"))
    assert lcut(x, 0).edges == (("a", "b"), ("b", STAR))
    assert lcut(x, 1).edges == (("a", "b"),)
    si = structural_inert(x)
    assert validate_morphism(si).ok
    assert classify_graph_morphism(si) is MapClass.INERT


def test_cut_sends_inert_to_inert():
    simplices = enumerate_simplices(S, 4)
    for a in simplices:
        for b in simplices:
            for m in enumerate_delta_morphisms(a, b):
                cls = classify_delta(m)
                if cls in (DeltaClass.INERT, DeltaClass.TOTALLY_INERT):
                    assert classify_graph_morphism(cut_morphism(m)) in (
                        MapClass.INERT,
                        MapClass.BOTH,
                    )
                if cls is DeltaClass.TOTALLY_INERT:
                    level0 = lcut_morphism(m, 0, 0)
                    assert classify_graph_morphism(level0) in (MapClass.INERT, MapClass.BOTH)


def test_cartesian_lift_examples():
    target = LabeledSimplex(S, ("a", "b"))
    src = Graph(S, (("a", "b"), ("b", "b")))
    phi = GraphMorphism(src, cut_object(target), (0, 0), ((0, 1),))
    source, lift = cartesian_lift(target, phi)
    assert source.chain == ("a", "b", "b")
    assert lift.underlying == (0, 2)
    assert cut_morphism(lift) == phi

    loop = LabeledSimplex(S, ("a", "a"))
    phi2 = GraphMorphism(empty_graph(S), cut_object(loop), (), ((),))
    s2, l2 = cartesian_lift(loop, phi2)
    assert s2.chain == ("a",)
    assert l2.underlying == (0, 0)

    ident = identity_delta(target)
    s3, l3 = cartesian_lift(target, cut_morphism(ident))
    assert (s3, l3) == (target, ident)


def test_cartesian_lift_requires_active():
    target = LabeledSimplex(S, ("a", "b"))
    phi = GraphMorphism(
        Graph(S, (("a", "b"), ("a", "a"))), cut_object(target), (0, None), ((0,),)
    )
    with pytest.raises(NotActive):
        cartesian_lift(target, phi)


def test_cartesian_lift_roundtrip_on_actives():
    simplices = enumerate_simplices(S, 4)
    for a in simplices:
        for b in simplices:
            for m in enumerate_delta_morphisms(a, b):
                cm = cut_morphism(m)
                if classify_graph_morphism(cm) in (MapClass.ACTIVE, MapClass.BOTH):
                    assert cartesian_lift(b, cm) == (a, m)


def test_lcut_marking_rules_spot():
    # a non-totally-inert inert morphism is marked only at level 1
    big = LabeledSimplex(S, ("a", "b", "a"))
    m = DeltaOpMorphism(big, LabeledSimplex(S, ("a", "b")), (0, 1))
    assert classify_delta(m) is DeltaClass.INERT
    assert classify_graph_morphism(lcut_morphism(m, 1, 1)) in (MapClass.INERT, MapClass.BOTH)
    assert classify_graph_morphism(lcut_morphism(m, 0, 1)) in (MapClass.INERT, MapClass.BOTH)
    assert classify_graph_morphism(lcut_morphism(m, 0, 0)) not in (MapClass.INERT, MapClass.BOTH)
    for i, j in ((0, 0), (0, 1), (1, 1)):
        assert validate_morphism(lcut_morphism(m, i, j)).ok


def test_check_approximation_small():
    rep = check_approximation(labelset("a"), 2)
    assert rep.ok, rep.first_failure()
