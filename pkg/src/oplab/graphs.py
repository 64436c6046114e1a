"""Finite labeled directed multigraphs, their morphisms, and operad checks.

A graph is an ordered list of labeled edges; edge identity is positional.
A morphism maps edges to target edges or deletes them, and carries a total
order on each fiber. The order data is primary: two morphisms with the
same edge map but different fiber orders are different morphisms.
"""
from __future__ import annotations

import itertools
import os
from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .errors import (
    IndexOutOfRange,
    InvalidLabels,
    LabelSetMismatch,
    MissingLabelImage,
    NotInert,
    NotLeftModular,
    NotRightModular,
    SizeBoundExceeded,
    SourceTargetMismatch,
)
from .pointed import MapClass, PointedMap
from .report import Check, ValidationReport, failing, passing

STAR = "*"

DEFAULT_EDGE_BOUND = 6
ENUM_BOUND_ENV = "OPLAB_MAX_ENUM"


def edge_bound(override: int | None = None) -> int:
    """Combined-edge bound for brute-force enumeration; env-overridable."""
    if override is not None:
        return override
    raw = os.environ.get(ENUM_BOUND_ENV)
    return int(raw) if raw else DEFAULT_EDGE_BOUND


@dataclass(frozen=True)
class LabelSet:
    labels: tuple[str, ...]
    pointed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(set(self.labels)) != len(self.labels):
            raise InvalidLabels(f"duplicate labels in {self.labels}")
        for name in self.labels:
            if not name or not isinstance(name, str):
                raise InvalidLabels(f"label {name!r} must be a non-empty string")
            if name == STAR:
                raise InvalidLabels(f"{STAR!r} is reserved for the basepoint")

    def vertices(self) -> tuple[str, ...]:
        return self.labels + ((STAR,) if self.pointed else ())

    def has_vertex(self, v: str) -> bool:
        return v in self.labels or (self.pointed and v == STAR)


def labelset(*names: str, pointed: bool = False) -> LabelSet:
    return LabelSet(tuple(names), pointed)


@dataclass(frozen=True)
class Graph:
    labels: LabelSet
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        for s, t in self.edges:
            if not self.labels.has_vertex(s) or not self.labels.has_vertex(t):
                raise InvalidLabels(f"edge ({s},{t}) uses vertices outside {self.labels}")

    def n_edges(self) -> int:
        return len(self.edges)


def empty_graph(labels: LabelSet) -> Graph:
    return Graph(labels, ())


def path_graph(labels: LabelSet, chain) -> Graph:
    """The path along consecutive vertices of the chain (one vertex: no edges)."""
    chain = tuple(chain)
    if not chain:
        raise InvalidLabels("a path needs at least one vertex")
    return Graph(labels, tuple(zip(chain, chain[1:])))


def is_left_modular(g: Graph) -> bool:
    return all(s != STAR for s, _ in g.edges)


def is_right_modular(g: Graph) -> bool:
    return all(t != STAR for _, t in g.edges)


class OperadTag(Enum):
    ASSOC = "assoc"
    ASSOC_POINTED = "assoc-pointed"
    LM = "lm"
    RM = "rm"


def allowed_edges(tag: OperadTag, labels: LabelSet) -> tuple[tuple[str, str], ...]:
    """Edge alphabet of the operad over the unpointed base labels."""
    base = labels.labels
    star = (STAR,)
    if tag is OperadTag.ASSOC:
        src, tgt = base, base
    elif tag is OperadTag.ASSOC_POINTED:
        src, tgt = base + star, base + star
    elif tag is OperadTag.LM:
        src, tgt = base, base + star
    else:
        src, tgt = base + star, base
    return tuple((s, t) for s in src for t in tgt)


def tag_labels(tag: OperadTag, labels: LabelSet) -> LabelSet:
    if tag is OperadTag.ASSOC:
        return LabelSet(labels.labels, False)
    return LabelSet(labels.labels, True)


def tag_admits(tag: OperadTag, g: Graph) -> bool:
    if tag is OperadTag.ASSOC:
        return not g.labels.pointed or all(STAR not in e for e in g.edges)
    if tag is OperadTag.LM:
        return is_left_modular(g)
    if tag is OperadTag.RM:
        return is_right_modular(g)
    return True


@dataclass(frozen=True)
class GraphMorphism:
    source: Graph
    target: Graph
    edge_map: tuple[int | None, ...]
    fibers: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "edge_map", tuple(self.edge_map))
        object.__setattr__(self, "fibers", tuple(tuple(f) for f in self.fibers))
        n, m = len(self.source.edges), len(self.target.edges)
        if len(self.edge_map) != n:
            raise IndexOutOfRange(f"edge_map has {len(self.edge_map)} entries, expected {n}")
        if len(self.fibers) != m:
            raise IndexOutOfRange(f"fibers has {len(self.fibers)} entries, expected {m}")
        for v in self.edge_map:
            if v is not None and not 0 <= v < m:
                raise IndexOutOfRange(f"edge image {v} outside target")
        for fib in self.fibers:
            for e in fib:
                if not 0 <= e < n:
                    raise IndexOutOfRange(f"fiber entry {e} outside source")


def identity_morphism(g: Graph) -> GraphMorphism:
    n = len(g.edges)
    return GraphMorphism(g, g, tuple(range(n)), tuple((i,) for i in range(n)))


def morphism_from_fibers(source: Graph, target: Graph, fibers) -> GraphMorphism:
    """Build a morphism from its fiber orders; unfibered edges are deleted."""
    fibers = tuple(tuple(f) for f in fibers)
    edge_map: list[int | None] = [None] * len(source.edges)
    for i, fib in enumerate(fibers):
        for e in fib:
            if edge_map[e] is not None:
                raise IndexOutOfRange(f"source edge {e} listed in two fibers")
            edge_map[e] = i
    return GraphMorphism(source, target, tuple(edge_map), fibers)


def underlying_pointed(m: GraphMorphism) -> PointedMap:
    return PointedMap(
        len(m.source.edges),
        len(m.target.edges),
        tuple(0 if v is None else v + 1 for v in m.edge_map),
    )


def _chain_ok(src_edges, order, s: str, t: str) -> bool:
    """Does the ordered fiber form a path from s to t?"""
    if not order:
        return s == t
    if src_edges[order[0]][0] != s or src_edges[order[-1]][1] != t:
        return False
    for a, b in zip(order, order[1:]):
        if src_edges[a][1] != src_edges[b][0]:
            return False
    return True


def validate_morphism(m: GraphMorphism) -> ValidationReport:
    """Check the structural and path conditions; stop at the first violation."""
    if m.source.labels != m.target.labels:
        return failing("label-sets", f"{m.source.labels} vs {m.target.labels}")
    seen: set[int] = set()
    for i, fib in enumerate(m.fibers):
        for e in fib:
            if m.edge_map[e] != i:
                return failing("fiber-partition", f"edge {e} listed under target {i} but mapped to {m.edge_map[e]}")
            if e in seen:
                return failing("fiber-partition", f"edge {e} listed twice")
            seen.add(e)
    for e, v in enumerate(m.edge_map):
        if v is not None and e not in seen:
            return failing("fiber-partition", f"edge {e} mapped to {v} but missing from its fiber")
    for i, fib in enumerate(m.fibers):
        s, t = m.target.edges[i]
        if not fib:
            if s != t:
                return failing("condition-one", f"target edge {i} ({s},{t}) has empty fiber but is not a loop")
        elif not _chain_ok(m.source.edges, fib, s, t):
            return failing("condition-two", f"fiber {fib} of target edge {i} is not a path ({s},{t})")
    return passing("morphism")


def compose_graph_morphisms(f: GraphMorphism, g: GraphMorphism) -> GraphMorphism:
    """The composite f-then-g.

    The composite fiber over a target edge concatenates f's fibers in g's
    fiber order: outer order from g, inner order from f.
    """
    if f.target != g.source:
        raise SourceTargetMismatch("morphisms do not chain")
    edge_map = tuple(
        None if v is None else g.edge_map[v] for v in f.edge_map
    )
    fibers = tuple(
        tuple(e for mid in g.fibers[i] for e in f.fibers[mid])
        for i in range(len(g.target.edges))
    )
    return GraphMorphism(f.source, g.target, edge_map, fibers)


def tensor_graphs(a: Graph, b: Graph) -> Graph:
    if a.labels != b.labels:
        raise LabelSetMismatch(f"{a.labels} vs {b.labels}")
    return Graph(a.labels, a.edges + b.edges)


def tensor_morphisms(f: GraphMorphism, g: GraphMorphism) -> GraphMorphism:
    source = tensor_graphs(f.source, g.source)
    target = tensor_graphs(f.target, g.target)
    off_s = len(f.source.edges)
    off_t = len(f.target.edges)
    edge_map = f.edge_map + tuple(None if v is None else v + off_t for v in g.edge_map)
    fibers = f.fibers + tuple(tuple(e + off_s for e in fib) for fib in g.fibers)
    return GraphMorphism(source, target, edge_map, fibers)


def classify_graph_morphism(m: GraphMorphism) -> MapClass:
    inert = all(len(fib) == 1 for fib in m.fibers)
    active = all(v is not None for v in m.edge_map)
    if inert and active:
        return MapClass.BOTH
    if inert:
        return MapClass.INERT
    if active:
        return MapClass.ACTIVE
    return MapClass.NEITHER


def factorize_graph_morphism(m: GraphMorphism) -> tuple[GraphMorphism, GraphMorphism]:
    """Split into a deletion (inert) followed by an active morphism.

    The intermediate graph keeps the non-deleted edges in source order.
    """
    kept = [e for e, v in enumerate(m.edge_map) if v is not None]
    rank = {e: k for k, e in enumerate(kept)}
    mid = Graph(m.source.labels, tuple(m.source.edges[e] for e in kept))
    inert = GraphMorphism(
        m.source,
        mid,
        tuple(rank.get(e) for e in range(len(m.source.edges))),
        tuple((e,) for e in kept),
    )
    active = GraphMorphism(
        mid,
        m.target,
        tuple(m.edge_map[e] for e in kept),
        tuple(tuple(rank[e] for e in fib) for fib in m.fibers),
    )
    return inert, active


def delete_edge(labels: LabelSet, x: str, y: str) -> GraphMorphism:
    """Generator (x,y) -> empty."""
    g = path_graph(labels, (x, y))
    return GraphMorphism(g, empty_graph(labels), (None,), ())


def add_loop(labels: LabelSet, x: str) -> GraphMorphism:
    """Generator empty -> (x,x), with the empty fiber over the loop."""
    g = path_graph(labels, (x, x))
    return GraphMorphism(empty_graph(labels), g, (), ((),))


def contract_path(labels: LabelSet, chain) -> GraphMorphism:
    """Generator collapsing the path along the chain to a single edge."""
    chain = tuple(chain)
    if len(chain) < 2:
        raise InvalidLabels("contraction needs a chain of at least two vertices")
    src = path_graph(labels, chain)
    tgt = path_graph(labels, (chain[0], chain[-1]))
    n = len(src.edges)
    return GraphMorphism(src, tgt, (0,) * n, (tuple(range(n)),))


def reverse_graph(g: Graph) -> Graph:
    """Reverse every edge and the edge order, so tensor factors swap."""
    return Graph(g.labels, tuple((t, s) for s, t in reversed(g.edges)))


def reverse_morphism(m: GraphMorphism) -> GraphMorphism:
    n = len(m.source.edges)
    k = len(m.target.edges)
    edge_map = tuple(
        None if m.edge_map[n - 1 - e] is None else k - 1 - m.edge_map[n - 1 - e]
        for e in range(n)
    )
    fibers = tuple(
        tuple(n - 1 - e for e in reversed(m.fibers[k - 1 - i])) for i in range(k)
    )
    return GraphMorphism(reverse_graph(m.source), reverse_graph(m.target), edge_map, fibers)


def relabel_vertex(v: str, mapping: dict[str, str], target: LabelSet) -> str:
    if v in mapping:
        w = mapping[v]
    elif v == STAR and target.pointed:
        w = STAR
    else:
        raise MissingLabelImage(f"no image for {v!r}")
    if not target.has_vertex(w):
        raise MissingLabelImage(f"image {w!r} of {v!r} is not a vertex of the target")
    return w


def relabel_graph(g: Graph, mapping: dict[str, str], target: LabelSet) -> Graph:
    """Push a graph forward along a label function; edge order is unchanged."""
    return Graph(
        target,
        tuple((relabel_vertex(s, mapping, target), relabel_vertex(t, mapping, target)) for s, t in g.edges),
    )


def relabel_morphism(m: GraphMorphism, mapping: dict[str, str], target: LabelSet) -> GraphMorphism:
    return GraphMorphism(
        relabel_graph(m.source, mapping, target),
        relabel_graph(m.target, mapping, target),
        m.edge_map,
        m.fibers,
    )


def iso_graphs(a: Graph, b: Graph) -> bool:
    """Equality up to a permutation of the edge list."""
    return a.labels == b.labels and Counter(a.edges) == Counter(b.edges)


# ---------------------------------------------------------------------------
# Pairing of a left-modular and a right-modular graph.


def left_label(name: str) -> str:
    return name + ".0"


def right_label(name: str) -> str:
    return name + ".1"


def pairing_labels(s: LabelSet, t: LabelSet) -> LabelSet:
    """Disjoint union of the two base label sets, tagged left/right."""
    return LabelSet(
        tuple(left_label(x) for x in s.labels) + tuple(right_label(y) for y in t.labels),
        False,
    )


def codiagonal(s: LabelSet) -> dict[str, str]:
    """Label function merging the two tagged copies of s back onto s."""
    out = {left_label(x): x for x in s.labels}
    out.update({right_label(x): x for x in s.labels})
    return out


def _pair_edge(e0: tuple[str, str], e1: tuple[str, str]) -> tuple[str, str] | None:
    touches0 = e0[1] == STAR
    touches1 = e1[0] == STAR
    if not (touches0 or touches1):
        return None
    if touches0 and touches1:
        return (left_label(e0[0]), right_label(e1[1]))
    if touches0:
        return (right_label(e1[0]), right_label(e1[1]))
    return (left_label(e0[0]), left_label(e0[1]))


def pairing(g0: Graph, g1: Graph) -> Graph:
    """Splice a left-modular and a right-modular graph through the basepoint.

    Edges are the pairs (e0, e1) in which at least one side touches the
    basepoint; a pair keeps the endpoints of its non-basepoint side, and a
    basepoint-to-basepoint pair runs from the source of e0 to the target
    of e1. Pairs come in g0-major positional order.
    """
    if not is_left_modular(g0):
        raise NotLeftModular("left argument has an edge out of the basepoint")
    if not is_right_modular(g1):
        raise NotRightModular("right argument has an edge into the basepoint")
    labels = pairing_labels(g0.labels, g1.labels)
    edges = []
    for e0 in g0.edges:
        for e1 in g1.edges:
            pe = _pair_edge(e0, e1)
            if pe is not None:
                edges.append(pe)
    return Graph(labels, tuple(edges))


def _pair_index(g0: Graph, g1: Graph) -> dict[tuple[int, int], int]:
    idx = {}
    k = 0
    for i0, e0 in enumerate(g0.edges):
        for i1, e1 in enumerate(g1.edges):
            if _pair_edge(e0, e1) is not None:
                idx[(i0, i1)] = k
                k += 1
    return idx


def pairing_inert(m0: GraphMorphism, m1: GraphMorphism) -> GraphMorphism:
    """Pair two inert morphisms edge-pair-wise; the result is inert."""
    if classify_graph_morphism(m0) not in (MapClass.INERT, MapClass.BOTH):
        raise NotInert("left morphism is not inert")
    if classify_graph_morphism(m1) not in (MapClass.INERT, MapClass.BOTH):
        raise NotInert("right morphism is not inert")
    source = pairing(m0.source, m1.source)
    target = pairing(m0.target, m1.target)
    src_idx = _pair_index(m0.source, m1.source)
    tgt_idx = _pair_index(m0.target, m1.target)
    edge_map: list[int | None] = [None] * len(source.edges)
    for (i0, i1), k in src_idx.items():
        d0 = m0.edge_map[i0]
        d1 = m1.edge_map[i1]
        if d0 is not None and d1 is not None:
            edge_map[k] = tgt_idx[(d0, d1)]
    fibers: list[tuple[int, ...]] = [()] * len(target.edges)
    for k, v in enumerate(edge_map):
        if v is not None:
            fibers[v] = (k,)
    return GraphMorphism(source, target, tuple(edge_map), tuple(fibers))


# ---------------------------------------------------------------------------
# Brute-force enumeration.


def _order_candidates(fiber: tuple[int, ...]):
    if not fiber:
        return ((),)
    return tuple(itertools.permutations(fiber))


def enumerate_graph_morphisms(
    src: Graph, tgt: Graph, max_total_edges: int | None = None
) -> list[GraphMorphism]:
    """All valid morphisms src -> tgt, in a fixed deterministic order.

    Candidates are every edge assignment combined with every fiber
    ordering; each survivor passes validate_morphism.
    """
    n, m = len(src.edges), len(tgt.edges)
    bound = edge_bound(max_total_edges)
    if n + m > bound:
        raise SizeBoundExceeded(f"{n}+{m} edges exceeds bound {bound}")
    if src.labels != tgt.labels:
        raise LabelSetMismatch(f"{src.labels} vs {tgt.labels}")
    out = []
    choices = (None,) + tuple(range(m))
    for assignment in itertools.product(choices, repeat=n):
        fibersets: list[list[int]] = [[] for _ in range(m)]
        for e, v in enumerate(assignment):
            if v is not None:
                fibersets[v].append(e)
        pools = []
        ok = True
        for i, fib in enumerate(fibersets):
            s, t = tgt.edges[i]
            orders = [o for o in _order_candidates(tuple(fib)) if _chain_ok(src.edges, o, s, t)]
            if not orders:
                ok = False
                break
            pools.append(orders)
        if not ok:
            continue
        for combo in itertools.product(*pools):
            cand = GraphMorphism(src, tgt, assignment, combo)
            rep = validate_morphism(cand)
            if not rep.ok:
                raise AssertionError(f"enumerator produced invalid morphism: {rep.first_failure()}")
            out.append(cand)
    out.sort(key=_morphism_sort_key)
    return out


def _morphism_sort_key(m: GraphMorphism):
    return (
        tuple(-1 if v is None else v for v in m.edge_map),
        m.fibers,
    )


def enumerate_inert_from(g: Graph) -> list[GraphMorphism]:
    """All inert morphisms out of g: a kept-edge subset in any target order."""
    n = len(g.edges)
    out = []
    for mask in range(1 << n):
        kept = [e for e in range(n) if mask >> e & 1]
        for perm in itertools.permutations(kept):
            target = Graph(g.labels, tuple(g.edges[e] for e in perm))
            pos = {e: j for j, e in enumerate(perm)}
            edge_map = tuple(pos.get(e) for e in range(n))
            fibers = tuple((e,) for e in perm)
            out.append(GraphMorphism(g, target, edge_map, fibers))
    return out


def enumerate_objects(tag: OperadTag, labels: LabelSet, max_edges: int) -> list[Graph]:
    """All graphs of the operad with at most max_edges edges."""
    alphabet = allowed_edges(tag, labels)
    glabels = tag_labels(tag, labels)
    out = []
    for n in range(max_edges + 1):
        for edges in itertools.product(alphabet, repeat=n):
            out.append(Graph(glabels, edges))
    return out


# ---------------------------------------------------------------------------
# Operad axiom checking.


def _inert_base_maps(n: int):
    """All inert pointed maps out of <n>, as (m, preimage-sequence)."""
    for m in range(n + 1):
        for seq in itertools.permutations(range(n), m):
            yield m, seq


def _check_inert_lifts(objects: list[Graph]) -> Check:
    for g in objects:
        n = len(g.edges)
        for m, seq in _inert_base_maps(n):
            target = Graph(g.labels, tuple(g.edges[e] for e in seq))
            pos = {e: j for j, e in enumerate(seq)}
            lift = GraphMorphism(
                g,
                target,
                tuple(pos.get(e) for e in range(n)),
                tuple((e,) for e in seq),
            )
            rep = validate_morphism(lift)
            if not rep.ok:
                return Check("inert-lifts", False, f"{g.edges} over {seq}: {rep.first_failure()}")
            if classify_graph_morphism(lift) not in (MapClass.INERT, MapClass.BOTH):
                return Check("inert-lifts", False, f"lift of {seq} at {g.edges} is not inert")
            want = tuple(pos[e] + 1 if e in pos else 0 for e in range(n))
            if underlying_pointed(lift).images != want:
                return Check("inert-lifts", False, f"lift of {seq} at {g.edges} lies over the wrong base")
    return Check("inert-lifts", True, f"{len(objects)} objects")


def _check_segal_objects(tag: OperadTag, labels: LabelSet, max_edges: int) -> Check:
    alphabet = allowed_edges(tag, labels)
    glabels = tag_labels(tag, labels)
    for n in range(max_edges + 1):
        fiber = [Graph(glabels, edges) for edges in itertools.product(alphabet, repeat=n)]
        if len(fiber) != len(alphabet) ** n:
            return Check("segal-objects", False, f"fiber over <{n}> has {len(fiber)} objects")
        restrictions = set()
        for g in fiber:
            # restriction along each rho^i is the single-edge subgraph at i
            restrictions.add(tuple(Graph(glabels, (g.edges[i],)) for i in range(n)))
        if len(restrictions) != len(fiber):
            return Check("segal-objects", False, f"<{n}>: restrictions not injective")
    return Check("segal-objects", True, f"fibers match {len(alphabet)}^n for n<={max_edges}")


def _single_edge_counts(src: Graph, alphabet, glabels) -> dict[tuple[str, str], dict[int, int]]:
    """Morphism counts into each single-edge graph, grouped by kept-edge mask.

    Computed through the public enumerator so the whole-morphism validator
    is the authority for the per-edge factors.
    """
    n = len(src.edges)
    out: dict[tuple[str, str], dict[int, int]] = {}
    for ep in alphabet:
        tgt = Graph(glabels, (ep,))
        grouped: dict[int, int] = {}
        for m in enumerate_graph_morphisms(src, tgt, max_total_edges=n + 1):
            mask = 0
            for e, v in enumerate(m.edge_map):
                if v is not None:
                    mask |= 1 << e
            grouped[mask] = grouped.get(mask, 0) + 1
        out[ep] = grouped
    return out


def _whole_morphism_counts(src_edges, tgt_edges) -> dict[tuple[int, ...], int]:
    """Counts of valid morphisms grouped by base map, enumerated whole.

    Base maps are tuples over source edges with 0 for deletion and i for
    target edge i-1. Every candidate (assignment plus fiber orders) is
    checked as one morphism, so any cross-fiber interaction would surface.
    """
    n, m = len(src_edges), len(tgt_edges)
    counts: dict[tuple[int, ...], int] = {}
    perms = itertools.permutations
    chain_ok = _chain_ok
    for assignment in itertools.product(range(m + 1), repeat=n):
        fibersets: list[list[int]] = [[] for _ in range(m)]
        for e, v in enumerate(assignment):
            if v:
                fibersets[v - 1].append(e)
        total = 0
        for combo in itertools.product(*(perms(f) if f else ((),) for f in fibersets)):
            ok = True
            for i in range(m):
                s, t = tgt_edges[i]
                if not chain_ok(src_edges, combo[i], s, t):
                    ok = False
                    break
            if ok:
                total += 1
        if total:
            counts[assignment] = total
    return counts


def _check_segal_morphisms(tag: OperadTag, labels: LabelSet, max_edges: int) -> Check:
    alphabet = allowed_edges(tag, labels)
    glabels = tag_labels(tag, labels)
    objects = enumerate_objects(tag, labels, max_edges)
    pairs_checked = 0
    for src in objects:
        n = len(src.edges)
        per_edge = _single_edge_counts(src, alphabet, glabels)
        for tgt in objects:
            m = len(tgt.edges)
            whole = _whole_morphism_counts(src.edges, tgt.edges)
            for assignment in itertools.product(range(m + 1), repeat=n):
                masks = [0] * m
                for e, v in enumerate(assignment):
                    if v:
                        masks[v - 1] |= 1 << e
                product = 1
                for i in range(m):
                    product *= per_edge[tgt.edges[i]].get(masks[i], 0)
                    if not product:
                        break
                if whole.get(assignment, 0) != product:
                    return Check(
                        "segal-morphisms",
                        False,
                        f"{src.edges} -> {tgt.edges} over {assignment}: "
                        f"{whole.get(assignment, 0)} whole vs product {product}",
                    )
            pairs_checked += 1
    return Check("segal-morphisms", True, f"{pairs_checked} source/target pairs")


def check_operad_axioms(tag: OperadTag, labels: LabelSet, max_edges: int) -> ValidationReport:
    """Exhaustively verify the three operad conditions at the given bound.

    (1) every inert base map admits an inert lift at every object;
    (2) the fiber over <n> bijects with n-tuples of single-edge objects;
    (3) morphism counts over a fixed base map factor as the product of the
        counts into each single-edge restriction of the target.
    """
    objects = enumerate_objects(tag, labels, max_edges)
    checks = (
        _check_inert_lifts(objects),
        _check_segal_objects(tag, labels, max_edges),
        _check_segal_morphisms(tag, labels, max_edges),
    )
    return ValidationReport(checks)
