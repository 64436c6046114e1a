"""Presheaves and copresheaves valued in module lattices.

A presheaf is a value table satisfying one family of action inequalities;
everything else here (representables, free presheaves, joins, the tensor
action, duality) is computed from that table and checked exhaustively.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .enriched import EnrichedCategory, EnrichedFunctor, is_enriched_functor, opposite
from .errors import BaseMismatch, SizeBoundExceeded, UnknownObject
from .quantale import (
    LEFT,
    RIGHT,
    ModuleLattice,
    left_self_module,
    module_bottom,
    module_join,
    module_meet,
    transpose_module,
)
from .report import Check, ValidationReport


@dataclass(frozen=True)
class Presheaf:
    category: EnrichedCategory
    module: ModuleLattice
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if self.module.side != LEFT:
            raise BaseMismatch("presheaves take values in a left module")
        if self.module.base != self.category.base:
            raise BaseMismatch("module and category live over different quantales")
        if len(self.values) != len(self.category.objects.labels):
            raise UnknownObject("one value per object required")

    @property
    def is_self(self) -> bool:
        return self.module == left_self_module(self.category.base)


@dataclass(frozen=True)
class Copresheaf:
    category: EnrichedCategory
    module: ModuleLattice
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if self.module.side != RIGHT:
            raise BaseMismatch("copresheaves take values in a right module")
        if self.module.base != self.category.base:
            raise BaseMismatch("module and category live over different quantales")
        if len(self.values) != len(self.category.objects.labels):
            raise UnknownObject("one value per object required")


def validate_presheaf(f: Presheaf) -> ValidationReport:
    """Exhaustive action law: hom(X,Y).F(Y) <= F(X)."""
    c, m = f.category, f.module
    names = c.objects.labels
    for i in range(len(names)):
        for j in range(len(names)):
            if not m.le(m.act(c.hom[i][j], f.values[j]), f.values[i]):
                return ValidationReport(
                    (
                        Check(
                            "presheaf-action",
                            False,
                            f"hom({names[i]},{names[j]}).F({names[j]}) > F({names[i]})",
                        ),
                    )
                )
    return ValidationReport((Check("presheaf-action", True, None),))


def transported_presheaf(g: Copresheaf) -> Presheaf:
    """A copresheaf as a presheaf on the opposite over the reversed base.

    This transport is the definition of the copresheaf law, so the two
    conventions cannot drift apart.
    """
    return Presheaf(opposite(g.category), transpose_module(g.module), g.values)


def validate_copresheaf(g: Copresheaf) -> ValidationReport:
    return validate_presheaf(transported_presheaf(g))


def ev(f: Presheaf | Copresheaf, x: str) -> int:
    """Value table lookup by object name."""
    return f.values[f.category.obj_index(x)]


def rep(c: EnrichedCategory, x: str) -> Presheaf:
    """The representable presheaf Y -> hom(Y, x), valued in the base."""
    i = c.obj_index(x)
    return Presheaf(
        c,
        left_self_module(c.base),
        tuple(row[i] for row in c.hom),
    )


def free_presheaf(
    c: EnrichedCategory, x: str, m_elt: int, module: ModuleLattice | None = None
) -> Presheaf:
    """The presheaf Y -> hom(Y,x).m, freely generated by m at x."""
    module = module if module is not None else left_self_module(c.base)
    if module.base != c.base:
        raise BaseMismatch("module lives over a different quantale")
    i = c.obj_index(x)
    return Presheaf(c, module, tuple(module.act(row[i], m_elt) for row in c.hom))


def leq_presheaves(f: Presheaf, g: Presheaf) -> bool:
    _require_same_home(f, g)
    return all(f.module.le(a, b) for a, b in zip(f.values, g.values))


def _require_same_home(f, g):
    if f.category != g.category or f.module != g.module:
        raise BaseMismatch("presheaves live on different categories or modules")


def yoneda_check(c: EnrichedCategory, x: str, m_elt: int, f: Presheaf) -> tuple[bool, bool]:
    """Both sides of the representability biconditional, asserted equal:
    the free presheaf at (x, m) sits below f iff m sits below f(x)."""
    free = free_presheaf(c, x, m_elt, f.module)
    lhs = leq_presheaves(free, f)
    rhs = f.module.le(m_elt, ev(f, x))
    assert lhs == rhs, f"representability failed at ({x}, {m_elt}): {lhs} vs {rhs}"
    return lhs, rhs


def tensor_action(f: Presheaf, a: int) -> Presheaf:
    """Right action on self-valued presheaves: (F.a)(X) = F(X)*a."""
    assert f.is_self, "the right action lives on self-valued presheaves"
    q = f.category.base
    return Presheaf(f.category, f.module, tuple(q.mul(v, a) for v in f.values))


def join_presheaves(
    fs, category: EnrichedCategory | None = None, module: ModuleLattice | None = None
) -> Presheaf:
    """Pointwise join; the empty family gives the constant bottom."""
    fs = list(fs)
    if fs:
        category, module = fs[0].category, fs[0].module
        for f in fs[1:]:
            _require_same_home(fs[0], f)
    elif category is None or module is None:
        raise BaseMismatch("an empty join needs an explicit category and module")
    k = len(category.objects.labels)
    values = tuple(module_join(module, tuple(f.values[i] for f in fs)) for i in range(k))
    return Presheaf(category, module, values)


def meet_presheaves(
    fs, category: EnrichedCategory | None = None, module: ModuleLattice | None = None
) -> Presheaf:
    """Pointwise meet; the empty family gives the constant top."""
    fs = list(fs)
    if fs:
        category, module = fs[0].category, fs[0].module
        for f in fs[1:]:
            _require_same_home(fs[0], f)
    elif category is None or module is None:
        raise BaseMismatch("an empty meet needs an explicit category and module")
    k = len(category.objects.labels)
    values = tuple(module_meet(module, tuple(f.values[i] for f in fs)) for i in range(k))
    return Presheaf(category, module, values)


def density_decompose(f: Presheaf) -> list[Presheaf]:
    """Components of f as a join of free presheaves, one per object.

    The identity f = join of the components is asserted; a failure would
    be an engine bug, not a property of the input.
    """
    assert f.is_self, "density is stated for self-valued presheaves"
    c = f.category
    parts = [free_presheaf(c, x, f.values[i]) for i, x in enumerate(c.objects.labels)]
    assert join_presheaves(parts, c, f.module) == f, "density identity failed"
    return parts


def pullback(phi: EnrichedFunctor, g: Presheaf) -> Presheaf:
    """Restriction along an identity-on-objects functor: same value table."""
    is_enriched_functor(phi).require("pullback")
    if g.category != phi.target:
        raise BaseMismatch("presheaf does not live on the functor target")
    return Presheaf(phi.source, g.module, g.values)


def pushforward(phi: EnrichedFunctor, f: Presheaf) -> Presheaf:
    """Least extension along the functor: X -> join_Y homD(X,Y).f(Y)."""
    is_enriched_functor(phi).require("pushforward")
    if f.category != phi.source:
        raise BaseMismatch("presheaf does not live on the functor source")
    d = phi.target
    m = f.module
    k = len(d.objects.labels)
    values = tuple(
        module_join(m, tuple(m.act(d.hom[i][j], f.values[j]) for j in range(k)))
        for i in range(k)
    )
    return Presheaf(d, m, values)


# ---------------------------------------------------------------------------
# The lattice of all presheaves, its right action, and duality.


def enumerate_presheaves(
    c: EnrichedCategory, module: ModuleLattice | None = None, cap: int = 100_000
) -> list[Presheaf]:
    """All valid value tables over the module, in table order."""
    module = module if module is not None else left_self_module(c.base)
    k = len(c.objects.labels)
    total = module.size() ** k
    if total > cap:
        raise SizeBoundExceeded(f"{total} candidate tables exceed cap {cap}")
    out = []
    for values in itertools.product(range(module.size()), repeat=k):
        f = Presheaf(c, module, values)
        if validate_presheaf(f).ok:
            out.append(f)
    return out


class PresheafLattice:
    """All self-valued presheaves on a category, as a right module.

    Elements are ordered by value table; the right action is the tensor
    action, and joins are pointwise.
    """

    def __init__(self, category: EnrichedCategory, cap: int = 100_000):
        self.category = category
        self.presheaves = tuple(enumerate_presheaves(category, None, cap))
        self._index = {f.values: i for i, f in enumerate(self.presheaves)}
        q = category.base
        names = tuple(
            "(" + ",".join(q.elements[v] for v in f.values) + ")" for f in self.presheaves
        )
        n = len(self.presheaves)
        leq = tuple(
            tuple(leq_presheaves(self.presheaves[i], self.presheaves[j]) for j in range(n))
            for i in range(n)
        )
        action = tuple(
            tuple(self.index_of(tensor_action(self.presheaves[i], a)) for a in range(q.size()))
            for i in range(n)
        )
        self.module = ModuleLattice(q, RIGHT, names, leq, action)
        self.join_table = tuple(
            tuple(
                self.index_of(join_presheaves([self.presheaves[i], self.presheaves[j]]))
                for j in range(n)
            )
            for i in range(n)
        )
        self.bottom_index = self.index_of(join_presheaves([], category, left_self_module(q)))

    def index_of(self, f: Presheaf) -> int:
        try:
            return self._index[f.values]
        except KeyError:
            raise UnknownObject("presheaf is not in the lattice (invalid table?)") from None

    def size(self) -> int:
        return len(self.presheaves)


def presheaf_lattice(c: EnrichedCategory, cap: int = 100_000) -> PresheafLattice:
    return PresheafLattice(c, cap)


def yoneda_copresheaf(c: EnrichedCategory, lattice: PresheafLattice | None = None) -> Copresheaf:
    """The copresheaf X -> rep_X, valued in the presheaf lattice."""
    lattice = lattice if lattice is not None else presheaf_lattice(c)
    values = tuple(lattice.index_of(rep(c, x)) for x in c.objects.labels)
    return Copresheaf(c, lattice.module, values)


@dataclass(frozen=True)
class ModuleMap:
    """A join-preserving, right-equivariant map out of the presheaf lattice."""

    lattice: PresheafLattice
    target: ModuleLattice
    table: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        if self.target.side != RIGHT:
            raise BaseMismatch("module maps land in a right module")
        if self.target.base != self.lattice.category.base:
            raise BaseMismatch("target module lives over a different quantale")
        if len(self.table) != self.lattice.size():
            raise UnknownObject("one value per presheaf required")

    def __eq__(self, other):
        return (
            isinstance(other, ModuleMap)
            and self.lattice is other.lattice
            and self.target == other.target
            and self.table == other.table
        )

    def __hash__(self):
        return hash((id(self.lattice), self.target, self.table))


def validate_modulemap(phi: ModuleMap) -> ValidationReport:
    """Empty and binary join preservation plus right equivariance."""
    lat, n = phi.lattice, phi.target
    q = lat.category.base
    if phi.table[lat.bottom_index] != module_bottom(n):
        return ValidationReport((Check("join-preservation", False, "empty join"),))
    size = lat.size()
    for i in range(size):
        for j in range(i, size):
            want = module_join(n, (phi.table[i], phi.table[j]))
            if phi.table[lat.join_table[i][j]] != want:
                return ValidationReport(
                    (Check("join-preservation", False, f"pair ({i},{j})"),)
                )
    for i in range(size):
        for a in range(q.size()):
            if phi.table[lat.module.act(a, i)] != n.act(a, phi.table[i]):
                return ValidationReport(
                    (Check("equivariance", False, f"presheaf {i}, scalar {q.elements[a]}"),)
                )
    return ValidationReport((Check("module-map", True, None),))


def duality_to_copresheaf(phi: ModuleMap) -> Copresheaf:
    """Evaluate a module map on the representables."""
    lat = phi.lattice
    c = lat.category
    values = tuple(phi.table[lat.index_of(rep(c, x))] for x in c.objects.labels)
    out = Copresheaf(c, phi.target, values)
    validate_copresheaf(out).require("duality_to_copresheaf")
    return out


def duality_to_modulemap(g: Copresheaf, lattice: PresheafLattice) -> ModuleMap:
    """The join formula: F -> join_X g(X).F(X).

    Forced by join preservation and density; the bijection check below
    confirms it is inverse to evaluation on representables.
    """
    if g.category != lattice.category:
        raise BaseMismatch("copresheaf lives on a different category")
    n = g.module
    table = tuple(
        module_join(
            n,
            tuple(n.act(f.values[i], g.values[i]) for i in range(len(g.values))),
        )
        for f in lattice.presheaves
    )
    out = ModuleMap(lattice, n, table)
    validate_modulemap(out).require("duality_to_modulemap")
    return out


def enumerate_copresheaves(
    c: EnrichedCategory, n: ModuleLattice, cap: int = 100_000
) -> list[Copresheaf]:
    k = len(c.objects.labels)
    total = n.size() ** k
    if total > cap:
        raise SizeBoundExceeded(f"{total} candidate tables exceed cap {cap}")
    out = []
    for values in itertools.product(range(n.size()), repeat=k):
        g = Copresheaf(c, n, values)
        if validate_copresheaf(g).ok:
            out.append(g)
    return out


def enumerate_modulemaps(
    lattice: PresheafLattice, n: ModuleLattice, cap: int = 1_000_000
) -> list[ModuleMap]:
    total = n.size() ** lattice.size()
    if total > cap:
        raise SizeBoundExceeded(f"{total} candidate tables exceed cap {cap}")
    out = []
    for table in itertools.product(range(n.size()), repeat=lattice.size()):
        phi = ModuleMap(lattice, n, table)
        if validate_modulemap(phi).ok:
            out.append(phi)
    return out


def check_duality_bijection(
    c: EnrichedCategory, n: ModuleLattice, cap: int = 1_000_000
) -> ValidationReport:
    """Enumerate both sides and verify the two translations are inverse.

    Checks that the counts agree, that evaluation on representables and
    the join formula round-trip to the identity in both directions, and
    that every produced value validates.
    """
    lattice = presheaf_lattice(c)
    cops = enumerate_copresheaves(c, n, cap)
    maps = enumerate_modulemaps(lattice, n, cap)
    checks = []
    checks.append(
        Check(
            "counts-equal",
            len(cops) == len(maps),
            f"{len(cops)} copresheaves vs {len(maps)} module maps",
        )
    )
    ok = True
    witness = None
    for g in cops:
        back = duality_to_copresheaf(duality_to_modulemap(g, lattice))
        if back != g:
            ok, witness = False, f"copresheaf {g.values} returned as {back.values}"
            break
    checks.append(Check("copresheaf-roundtrip", ok, witness or f"{len(cops)} round trips"))
    ok = True
    witness = None
    for phi in maps:
        back = duality_to_modulemap(duality_to_copresheaf(phi), lattice)
        if back != phi:
            ok, witness = False, f"module map {phi.table} returned as {back.table}"
            break
    checks.append(Check("modulemap-roundtrip", ok, witness or f"{len(maps)} round trips"))
    return ValidationReport(tuple(checks))
