"""Labeled total orders, the path-graph functor, and approximation checks.

A morphism between labeled chains is stored through its monotone,
label-preserving index map running in the simplex direction, so the
source of the stored arrow is typically the longer chain.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .errors import (
    InvalidLabels,
    NotActive,
    NotAPath,
    SourceTargetMismatch,
    ValidationError,
)
from .graphs import (
    Graph,
    GraphMorphism,
    LabelSet,
    MapClass,
    STAR,
    classify_graph_morphism,
    compose_graph_morphisms,
    enumerate_graph_morphisms,
    path_graph,
    validate_morphism,
)
from .report import Check, ValidationReport


class DeltaClass(Enum):
    INERT = "inert"
    TOTALLY_INERT = "totally-inert"
    ACTIVE_BASE = "active-base"
    OTHER = "other"


@dataclass(frozen=True)
class LabeledSimplex:
    labels: LabelSet
    chain: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "chain", tuple(self.chain))
        if self.labels.pointed:
            raise InvalidLabels("chains are labeled in an unpointed set")
        if not self.chain:
            raise InvalidLabels("a chain must be nonempty")
        for x in self.chain:
            if x not in self.labels.labels:
                raise InvalidLabels(f"chain entry {x!r} not in {self.labels.labels}")

    def dim(self) -> int:
        return len(self.chain) - 1


@dataclass(frozen=True)
class DeltaOpMorphism:
    source: LabeledSimplex
    target: LabeledSimplex
    underlying: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "underlying", tuple(self.underlying))
        g = self.underlying
        a, b = self.source.dim(), self.target.dim()
        if len(g) != b + 1:
            raise ValidationError(f"index map has {len(g)} entries, expected {b + 1}")
        for v in g:
            if not 0 <= v <= a:
                raise ValidationError(f"index {v} outside [0,{a}]")
        if any(g[i] > g[i + 1] for i in range(b)):
            raise ValidationError(f"index map {g} is not monotone")
        for i, v in enumerate(g):
            if self.source.chain[v] != self.target.chain[i]:
                raise ValidationError(
                    f"labels differ at {i}: {self.source.chain[v]!r} vs {self.target.chain[i]!r}"
                )


def identity_delta(x: LabeledSimplex) -> DeltaOpMorphism:
    return DeltaOpMorphism(x, x, tuple(range(x.dim() + 1)))


def compose_delta(m: DeltaOpMorphism, m2: DeltaOpMorphism) -> DeltaOpMorphism:
    """m then m2; index maps compose the other way around."""
    if m.target != m2.source:
        raise SourceTargetMismatch("chain morphisms do not chain")
    return DeltaOpMorphism(
        m.source, m2.target, tuple(m.underlying[v] for v in m2.underlying)
    )


def cut_object(x: LabeledSimplex) -> Graph:
    """The path graph of consecutive pairs of the chain."""
    return path_graph(x.labels, x.chain)


def cut_morphism(m: DeltaOpMorphism) -> GraphMorphism:
    """Path-graph image of a chain morphism.

    Source edge j lands on target edge i exactly when g(i-1) < j <= g(i)
    (edges 1-based); the fiber over target edge i is the increasing run
    g(i-1)+1 .. g(i), and source edges outside every run are deleted.
    """
    g = m.underlying
    a, b = m.source.dim(), m.target.dim()
    src = cut_object(m.source)
    tgt = cut_object(m.target)
    edge_map: list[int | None] = [None] * a
    fibers = []
    for i in range(b):
        lo, hi = g[i], g[i + 1]
        fibers.append(tuple(range(lo, hi)))
        for j in range(lo, hi):
            edge_map[j] = i
    return GraphMorphism(src, tgt, tuple(edge_map), tuple(fibers))


def classify_delta(m: DeltaOpMorphism) -> DeltaClass:
    """Strongest of: totally inert, inert (convex run), active base, other."""
    g = m.underlying
    a, b = m.source.dim(), m.target.dim()
    inert = all(g[i] == g[0] + i for i in range(b + 1))
    if inert and g[b] == a:
        return DeltaClass.TOTALLY_INERT
    if inert:
        return DeltaClass.INERT
    if g[0] == 0 and g[b] == a:
        return DeltaClass.ACTIVE_BASE
    return DeltaClass.OTHER


def _pointed_view(labels: LabelSet) -> LabelSet:
    return LabelSet(labels.labels, True)


def lcut(x: LabeledSimplex, level: int) -> Graph:
    """Left-module path of a chain: level 1 is the plain path, level 0
    appends a final edge into the basepoint."""
    if level not in (0, 1):
        raise InvalidLabels("level must be 0 or 1")
    plabels = _pointed_view(x.labels)
    chain = x.chain + ((STAR,) if level == 0 else ())
    return path_graph(plabels, chain)


def structural_inert(x: LabeledSimplex) -> GraphMorphism:
    """Delete the final basepoint edge: level 0 to level 1."""
    src = lcut(x, 0)
    tgt = lcut(x, 1)
    a = x.dim()
    return GraphMorphism(
        src,
        tgt,
        tuple(range(a)) + (None,),
        tuple((j,) for j in range(a)),
    )


def lcut_morphism(m: DeltaOpMorphism, i: int, j: int) -> GraphMorphism:
    """Image of (m, i->j) on left-module paths, for i,j in {0,1}, i <= j.

    At level 0 the index map is extended by sending the added top element
    to the added top element, so the fiber over the basepoint edge is the
    tail run followed by the source basepoint edge.
    """
    if (i, j) not in ((0, 0), (0, 1), (1, 1)):
        raise InvalidLabels(f"no arrow {i}->{j} in the interval")
    g = m.underlying
    a, b = m.source.dim(), m.target.dim()
    src = lcut(m.source, i)
    tgt = lcut(m.target, j)
    base = cut_morphism(m)
    if (i, j) == (1, 1):
        return GraphMorphism(src, tgt, base.edge_map, base.fibers)
    if (i, j) == (0, 1):
        return GraphMorphism(src, tgt, base.edge_map + (None,), base.fibers)
    edge_map = list(base.edge_map) + [None] * (a + 1 - len(base.edge_map))
    tail = tuple(range(g[b], a)) + (a,)
    for e in tail:
        edge_map[e] = b
    return GraphMorphism(src, tgt, tuple(edge_map), base.fibers + (tail,))


def cartesian_lift(
    target: LabeledSimplex, phi: GraphMorphism
) -> tuple[LabeledSimplex, DeltaOpMorphism]:
    """Rebuild the chain morphism under an active morphism into a path.

    The source chain is read off by concatenating the fibers in target
    order; the index map records where each fiber ends. When the source
    edges are already in path order the returned morphism cuts back to
    phi on the nose; otherwise it cuts to phi transported along the
    path-ordering permutation of the source edges (checked internally).
    """
    if phi.target != cut_object(target):
        raise SourceTargetMismatch("morphism does not land in the path of the chain")
    if classify_graph_morphism(phi) not in (MapClass.ACTIVE, MapClass.BOTH):
        raise NotActive("cartesian lifts exist over active morphisms only")
    order = [e for fib in phi.fibers for e in fib]
    src_edges = phi.source.edges
    chain = [target.chain[0]]
    for e in order:
        s, t = src_edges[e]
        if s != chain[-1]:
            raise NotAPath(f"fiber concatenation breaks at edge {e}")
        chain.append(t)
    if chain[-1] != target.chain[-1]:
        raise NotAPath("path does not end at the final label")
    indices = [0]
    k = 0
    for fib in phi.fibers:
        k += len(fib)
        indices.append(k)
    source = LabeledSimplex(target.labels, tuple(chain))
    lift = DeltaOpMorphism(source, target, tuple(indices))
    cut = cut_morphism(lift)
    transported = GraphMorphism(
        phi.source,
        phi.target,
        tuple(cut.edge_map[order.index(e)] if e in order else None for e in range(len(src_edges))),
        tuple(tuple(order[e] for e in fib) for fib in cut.fibers),
    )
    if transported != phi:
        raise NotAPath("reconstructed morphism disagrees with the input")
    return source, lift


# ---------------------------------------------------------------------------
# Enumeration and the approximation suite.


def enumerate_simplices(labels: LabelSet, max_len: int) -> list[LabeledSimplex]:
    out = []
    for n in range(1, max_len + 1):
        for chain in itertools.product(labels.labels, repeat=n):
            out.append(LabeledSimplex(labels, chain))
    return out


def enumerate_delta_morphisms(a: LabeledSimplex, b: LabeledSimplex) -> list[DeltaOpMorphism]:
    """All chain morphisms a -> b (monotone label-preserving index maps)."""
    out = []
    for g in itertools.combinations_with_replacement(range(a.dim() + 1), b.dim() + 1):
        if all(a.chain[g[i]] == b.chain[i] for i in range(b.dim() + 1)):
            out.append(DeltaOpMorphism(a, b, g))
    return out


def _check_inert_chain_lifts(simplices) -> Check:
    for x in simplices:
        n = x.dim()
        for i in range(1, n + 1):
            sub = LabeledSimplex(x.labels, (x.chain[i - 1], x.chain[i]))
            lift = DeltaOpMorphism(x, sub, (i - 1, i))
            if classify_delta(lift) not in (DeltaClass.INERT, DeltaClass.TOTALLY_INERT):
                return Check("inert-chain-lifts", False, f"{x.chain} at {i}")
            cut = cut_morphism(lift)
            rep = validate_morphism(cut)
            if not rep.ok:
                return Check("inert-chain-lifts", False, f"{x.chain} at {i}: {rep.first_failure()}")
            want = tuple(1 if j == i else 0 for j in range(1, n + 1))
            got = tuple(0 if v is None else v + 1 for v in cut.edge_map)
            if got != want:
                return Check("inert-chain-lifts", False, f"{x.chain} at {i} lies over {got}")
    return Check("inert-chain-lifts", True, f"{len(simplices)} chains")


def _actives_into(graph_pool, y: LabeledSimplex):
    # sources smaller than the target still matter: fibers may be empty
    tgt = cut_object(y)
    for g in graph_pool:
        for phi in enumerate_graph_morphisms(g, tgt, max_total_edges=len(g.edges) + len(tgt.edges)):
            if classify_graph_morphism(phi) in (MapClass.ACTIVE, MapClass.BOTH):
                yield phi


class _HomCache:
    """Memoized hom-sets between chains and between their path images."""

    def __init__(self):
        self.delta: dict[tuple, list[DeltaOpMorphism]] = {}
        self.cuts: dict[tuple, list[GraphMorphism]] = {}

    def delta_homs(self, a: LabeledSimplex, b: LabeledSimplex):
        key = (a.chain, b.chain)
        if key not in self.delta:
            self.delta[key] = enumerate_delta_morphisms(a, b)
        return self.delta[key]

    def cut_homs(self, a: LabeledSimplex, b: LabeledSimplex):
        key = (a.chain, b.chain)
        if key not in self.cuts:
            ca, cb = cut_object(a), cut_object(b)
            self.cuts[key] = enumerate_graph_morphisms(
                ca, cb, max_total_edges=len(ca.edges) + len(cb.edges)
            )
        return self.cuts[key]


def _check_cartesian_lifts(labels: LabelSet, simplices, graph_pool) -> Check:
    lifts = 0
    cache = _HomCache()
    for y in simplices:
        for phi in _actives_into(graph_pool, y):
            source, lift = cartesian_lift(y, phi)
            order = [e for fib in phi.fibers for e in fib]
            if order == sorted(order):
                if cut_morphism(lift) != phi:
                    return Check(
                        "cartesian-lifts", False, f"{y.chain}: lift does not cut back to the input"
                    )
            universal = _check_universal(simplices, y, source, lift, cache)
            if universal is not None:
                return universal
            lifts += 1
    return Check("cartesian-lifts", True, f"{lifts} active morphisms lifted")


def _check_universal(simplices, y, xbar, lift, cache: _HomCache) -> Check | None:
    """Every factorization through the path image extends uniquely to chains."""
    cut_lift = cut_morphism(lift)
    for z in simplices:
        into_y = cache.delta_homs(z, y)
        into_x = cache.delta_homs(z, xbar)
        psis = cache.cut_homs(z, xbar)
        for h0 in into_y:
            cut_h0 = cut_morphism(h0)
            for psi in psis:
                if compose_graph_morphisms(psi, cut_lift) != cut_h0:
                    continue
                matches = [
                    h
                    for h in into_x
                    if compose_delta(h, lift) == h0 and cut_morphism(h) == psi
                ]
                if len(matches) != 1:
                    return Check(
                        "cartesian-universal",
                        False,
                        f"{z.chain} -> {y.chain}: {len(matches)} factorizations through {xbar.chain}",
                    )
    return None


def _check_strongness(labels: LabelSet, simplices) -> Check:
    points = [x for x in simplices if x.dim() == 0]
    if len(points) != len(labels.labels):
        return Check("strongness", False, f"{len(points)} one-element chains for {len(labels.labels)} labels")
    two = {cut_object(x).edges[0] for x in simplices if x.dim() == 1}
    want = {(a, b) for a in labels.labels for b in labels.labels}
    if two != want:
        return Check("strongness", False, "two-element chains do not cover the single-edge graphs")
    return Check("strongness", True, f"{len(points)} labels; {len(two)} single-edge graphs")


def _check_lcut_marking(simplices) -> Check:
    arrows = ((0, 0), (0, 1), (1, 1))
    checked = 0
    for a in simplices:
        for b in simplices:
            for m in enumerate_delta_morphisms(a, b):
                cls = classify_delta(m)
                inert = cls in (DeltaClass.INERT, DeltaClass.TOTALLY_INERT)
                square_01 = None
                for i, j in arrows:
                    lm = lcut_morphism(m, i, j)
                    rep = validate_morphism(lm)
                    if not rep.ok:
                        return Check(
                            "lcut-marking", False, f"{a.chain}->{b.chain} at {i}->{j}: {rep.first_failure()}"
                        )
                    expected = inert and (cls is DeltaClass.TOTALLY_INERT or j == 1)
                    got = classify_graph_morphism(lm) in (MapClass.INERT, MapClass.BOTH)
                    if got != expected:
                        return Check(
                            "lcut-marking",
                            False,
                            f"{a.chain}->{b.chain} at {i}->{j}: inert={got}, marking says {expected}",
                        )
                    if (i, j) == (0, 1):
                        square_01 = lm
                via_target = compose_graph_morphisms(lcut_morphism(m, 0, 0), structural_inert(m.target))
                via_source = compose_graph_morphisms(structural_inert(m.source), lcut_morphism(m, 1, 1))
                if square_01 != via_target or square_01 != via_source:
                    return Check("lcut-marking", False, f"{a.chain}->{b.chain}: naturality square broken")
                checked += 1
    return Check("lcut-marking", True, f"{checked} chain morphisms")


def check_approximation(labels: LabelSet, max_dim: int) -> ValidationReport:
    """Exhaustive approximation suite at the given chain bound.

    Verifies inert lifts of the one-edge projections, existence and
    universality of the lift over every active morphism into a path
    image, the fiber condition over single labels, and the left-module
    marking rules including the naturality square.
    """
    simplices = enumerate_simplices(labels, max_dim + 1)
    pool = []
    max_edges = max_dim
    alphabet = [(a, b) for a in labels.labels for b in labels.labels]
    for n in range(max_edges + 1):
        for edges in itertools.product(alphabet, repeat=n):
            pool.append(Graph(labels, edges))
    checks = (
        _check_inert_chain_lifts(simplices),
        _check_cartesian_lifts(labels, simplices, pool),
        _check_strongness(labels, simplices),
        _check_lcut_marking(simplices),
    )
    return ValidationReport(checks)
