"""Irredundant irreducible presentation and canonical primary decomposition.

The splitting recursion is the standard one: an ideal whose minimal
generators are all pure variable powers is irreducible; otherwise the
first mixed generator factors as u = x_i^e * w with coprime supports and
the ideal splits as the intersection of I + (x_i^e) and I + (w).  The
leaves yield irreducible components; duplicates and redundant components
are pruned afterwards, which leaves the unique irredundant set, and
components sharing a radical are intersected into primary components.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

from .monomials import (
    Monomial,
    MonomialIdeal,
    VariableContext,
    _grlex_key,
    _minimal_vectors,
)

Vector = tuple[int, ...]


@dataclass(frozen=True)
class IrreducibleComponent:
    """An irreducible monomial ideal m^a = ({x_i^{a_i} : i in supp(a)})."""

    a: Vector
    context: VariableContext

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(self.a))
        if len(self.a) != self.context.n:
            raise ValueError(
                f"component vector has length {len(self.a)}, "
                f"context has {self.context.n} variables"
            )
        if not any(self.a):
            raise ValueError("component vector must be nonzero")
        if any(e < 0 for e in self.a):
            raise ValueError(f"component vector must be non-negative: {self.a!r}")

    def support(self) -> Vector:
        return tuple(i for i, e in enumerate(self.a) if e)

    @property
    def height(self) -> int:
        return len(self.support())

    @cached_property
    def ideal(self) -> MonomialIdeal:
        vecs = [_pure_vector(i, e, self.context.n) for i, e in enumerate(self.a) if e]
        return MonomialIdeal._from_vectors(vecs, self.context)

    def contains(self, u: Monomial) -> bool:
        return any(a and e >= a for a, e in zip(self.a, u.exponents))

    def __str__(self) -> str:
        return str(self.ideal)


@dataclass(frozen=True)
class PrimaryComponent:
    """All irreducible components sharing one radical, intersected."""

    radical_support: Vector
    pieces: tuple[IrreducibleComponent, ...]
    ideal: MonomialIdeal

    def is_irreducible(self) -> bool:
        return len(self.pieces) == 1


@dataclass(frozen=True)
class Decomposition:
    """Irreducible and primary presentation of a proper nonzero ideal."""

    ideal: MonomialIdeal
    irreducibles: tuple[IrreducibleComponent, ...]
    primaries: tuple[PrimaryComponent, ...] = field(default=())

    @property
    def context(self) -> VariableContext:
        return self.ideal.context

    def codimension(self) -> int:
        return min(c.height for c in self.irreducibles)

    def is_unmixed(self) -> bool:
        codim = self.codimension()
        return all(c.height == codim for c in self.irreducibles)

    def is_generically_ci(self) -> bool:
        """One irreducible piece on every minimal support.

        A support is minimal when no other component's support is strictly
        contained in it; "generically" means exactly the minimal primes.
        """
        supports = [frozenset(c.support()) for c in self.irreducibles]
        counts = Counter(supports)
        return all(
            counts[s] == 1
            for s in counts
            if not any(t < s for t in supports)
        )

    def max_exponent(self) -> int:
        return max(max(c.a) for c in self.irreducibles)

    def intersection_of_irreducibles(self) -> MonomialIdeal:
        vecs = _intersect_components([c.a for c in self.irreducibles], self.context.n)
        return MonomialIdeal._from_vectors(vecs, self.context)


def _pure_vector(i: int, e: int, n: int) -> Vector:
    vec = [0] * n
    vec[i] = e
    return tuple(vec)


def _component_gens(a: Vector, n: int) -> list[Vector]:
    return [_pure_vector(i, e, n) for i, e in enumerate(a) if e]


def _vec_in_component(v: Vector, a: Vector) -> bool:
    return any(ai and e >= ai for ai, e in zip(a, v))


def _intersect_components(comps: list[Vector], n: int) -> list[Vector]:
    acc = _component_gens(comps[0], n)
    for a in comps[1:]:
        gens = _component_gens(a, n)
        acc = _minimal_vectors(tuple(map(max, u, v)) for u in acc for v in gens)
    return acc


def _split(vecs: tuple[Vector, ...], n: int, memo: dict) -> frozenset[Vector]:
    cached = memo.get(vecs)
    if cached is not None:
        return cached
    result = None
    for v in vecs:
        supp = [i for i, e in enumerate(v) if e]
        if len(supp) > 1:
            i = supp[0]
            pure = _pure_vector(i, v[i], n)
            rest = tuple(0 if j == i else e for j, e in enumerate(v))
            out: set[Vector] = set()
            for piece in (pure, rest):
                sub = tuple(_minimal_vectors((*vecs, piece)))
                out |= _split(sub, n, memo)
            result = frozenset(out)
            break
    if result is None:
        # every generator is a pure power: the ideal itself is irreducible
        comp = [0] * n
        for v in vecs:
            for i, e in enumerate(v):
                if e:
                    comp[i] = e
        result = frozenset({tuple(comp)})
    memo[vecs] = result
    return result


def _prune_redundant(comps: set[Vector], n: int) -> list[Vector]:
    """Greedily drop components implied by the rest, in canonical order.

    Uniqueness of the irredundant presentation makes the outcome
    independent of the removal order.
    """
    ordered = sorted(comps, key=_grlex_key, reverse=True)
    i = 0
    while len(ordered) > 1 and i < len(ordered):
        rest = ordered[:i] + ordered[i + 1 :]
        inter = _intersect_components(rest, n)
        if all(_vec_in_component(g, ordered[i]) for g in inter):
            ordered.pop(i)
        else:
            i += 1
    return ordered


def irreducible_decomposition(ideal: MonomialIdeal) -> Decomposition:
    """The unique irredundant presentation as irreducible monomial ideals."""
    if ideal.is_zero():
        raise ValueError("the zero ideal has no irreducible decomposition")
    if ideal.is_unit():
        raise ValueError("the unit ideal has no irreducible decomposition")
    n = ideal.context.n
    vecs = tuple(g.exponents for g in ideal.generators)
    comps = _prune_redundant(set(_split(vecs, n, {})), n)
    irreducibles = tuple(IrreducibleComponent(a, ideal.context) for a in comps)
    return Decomposition(ideal=ideal, irreducibles=irreducibles)


def primary_grouping(dec: Decomposition) -> Decomposition:
    """Intersect components with equal radical into primary components."""
    groups: dict[Vector, list[IrreducibleComponent]] = {}
    for comp in dec.irreducibles:
        groups.setdefault(comp.support(), []).append(comp)
    primaries = []
    for supp, pieces in groups.items():
        ideal = pieces[0].ideal
        for piece in pieces[1:]:
            ideal = ideal.intersect(piece.ideal)
        primaries.append(PrimaryComponent(supp, tuple(pieces), ideal))
    return Decomposition(
        ideal=dec.ideal, irreducibles=dec.irreducibles, primaries=tuple(primaries)
    )


def decompose(ideal: MonomialIdeal) -> Decomposition:
    """Irreducible decomposition with primary components populated."""
    return primary_grouping(irreducible_decomposition(ideal))
