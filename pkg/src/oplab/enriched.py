"""Quantale-enriched categories on a fixed object set.

A category is a hom table of quantale elements; the unit and composition
structure are inequalities, so being a category is a property that the
validator decides.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    BaseMismatch,
    IndexOutOfRange,
    InvalidLabels,
    LabelMismatch,
    ObjectMismatch,
    SizeBoundExceeded,
    UnknownObject,
)
from .graphs import Graph, GraphMorphism, LabelSet
from .quantale import Quantale, reverse_quantale
from .report import Check, ValidationReport


@dataclass(frozen=True)
class EnrichedCategory:
    base: Quantale
    objects: LabelSet
    hom: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.objects.pointed:
            raise InvalidLabels("object sets are unpointed")
        k = len(self.objects.labels)
        object.__setattr__(self, "hom", tuple(tuple(row) for row in self.hom))
        if len(self.hom) != k or any(len(r) != k for r in self.hom):
            raise IndexOutOfRange("hom table has the wrong shape")
        for row in self.hom:
            for v in row:
                if not 0 <= v < self.base.size():
                    raise IndexOutOfRange(f"hom entry {v} out of range")

    def obj_index(self, name: str) -> int:
        try:
            return self.objects.labels.index(name)
        except ValueError:
            raise UnknownObject(f"no object named {name!r}") from None

    def hom_named(self, x: str, y: str) -> int:
        return self.hom[self.obj_index(x)][self.obj_index(y)]


def validate_category(c: EnrichedCategory) -> ValidationReport:
    """Unit and composition inequalities, exhaustively, with witnesses."""
    q = c.base
    names = c.objects.labels
    k = len(names)
    for i in range(k):
        if not q.le(q.unit, c.hom[i][i]):
            return ValidationReport(
                (Check("unit-law", False, f"unit > hom({names[i]},{names[i]})"),)
            )
    for i in range(k):
        for j in range(k):
            for l in range(k):
                if not q.le(q.mul(c.hom[i][j], c.hom[j][l]), c.hom[i][l]):
                    return ValidationReport(
                        (
                            Check(
                                "composition-law",
                                False,
                                f"hom({names[i]},{names[j]})*hom({names[j]},{names[l]}) "
                                f"> hom({names[i]},{names[l]})",
                            ),
                        )
                    )
    return ValidationReport((Check("category", True, f"{k} objects"),))


def opposite(c: EnrichedCategory) -> EnrichedCategory:
    """Transpose the hom table; the result lives over the reversed base."""
    k = len(c.objects.labels)
    return EnrichedCategory(
        reverse_quantale(c.base),
        c.objects,
        tuple(tuple(c.hom[j][i] for j in range(k)) for i in range(k)),
    )


def trivial_category(base: Quantale, objects: LabelSet) -> EnrichedCategory:
    k = len(objects.labels)
    return EnrichedCategory(base, objects, tuple((base.unit,) * k for _ in range(k)))


def _require_over_objects(c: EnrichedCategory, g: Graph):
    if g.labels != c.objects:
        raise LabelMismatch(f"graph over {g.labels}, category over {c.objects}")


def evaluate_on_graph(c: EnrichedCategory, g: Graph) -> int:
    """Tensor of the edge homs in edge order; the empty graph gives the unit."""
    _require_over_objects(c, g)
    return c.base.mul_all(c.hom_named(s, t) for s, t in g.edges)


def evaluate_morphism_inequality(c: EnrichedCategory, m: GraphMorphism) -> ValidationReport:
    """The algebra condition of a morphism, one inequality per target edge.

    A nonempty fiber must tensor below the target hom; an empty fiber asks
    the unit to sit below the hom of the (loop) target edge.
    """
    _require_over_objects(c, m.source)
    _require_over_objects(c, m.target)
    q = c.base
    for i, fib in enumerate(m.fibers):
        s, t = m.target.edges[i]
        bound = c.hom_named(s, t)
        value = q.mul_all(
            c.hom_named(*m.source.edges[e]) for e in fib
        )
        if not q.le(value, bound):
            return ValidationReport(
                (
                    Check(
                        "algebra-condition",
                        False,
                        f"target edge {i} ({s},{t}): {q.elements[value]} > {q.elements[bound]}",
                    ),
                )
            )
    return ValidationReport((Check("algebra-condition", True, f"{len(m.fibers)} target edges"),))


@dataclass(frozen=True)
class EnrichedFunctor:
    source: EnrichedCategory
    target: EnrichedCategory


def is_enriched_functor(f: EnrichedFunctor) -> ValidationReport:
    """Pointwise hom inequality for an identity-on-objects functor."""
    if f.source.base != f.target.base:
        raise BaseMismatch("functor endpoints live over different quantales")
    if f.source.objects != f.target.objects:
        raise ObjectMismatch("functor endpoints have different object sets")
    q = f.source.base
    names = f.source.objects.labels
    for i in range(len(names)):
        for j in range(len(names)):
            if not q.le(f.source.hom[i][j], f.target.hom[i][j]):
                return ValidationReport(
                    (
                        Check(
                            "functor",
                            False,
                            f"hom({names[i]},{names[j]}): "
                            f"{q.elements[f.source.hom[i][j]]} > {q.elements[f.target.hom[i][j]]}",
                        ),
                    )
                )
    return ValidationReport((Check("functor", True, None),))


def enumerate_categories(
    base: Quantale, objects: LabelSet, cap: int = 100_000
) -> list[EnrichedCategory]:
    """All valid hom tables over the base, in table order."""
    k = len(objects.labels)
    total = base.size() ** (k * k)
    if total > cap:
        raise SizeBoundExceeded(f"{total} candidate hom tables exceed cap {cap}")
    out = []
    for flat in itertools.product(range(base.size()), repeat=k * k):
        table = tuple(flat[i * k : (i + 1) * k] for i in range(k))
        c = EnrichedCategory(base, objects, table)
        if validate_category(c).ok:
            out.append(c)
    return out
