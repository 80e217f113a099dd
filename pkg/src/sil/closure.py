"""Polyhedral description of the integral closure of the symbolic power
algebra, its degree-k components, and the factorial degree bound.

For an ideal whose primary components are all irreducible, the closure of
the algebra is spanned by the monomials x^c t^k whose exponent vector
(c, k) lies in the rational cone cut out by one inequality per component,
sum over i in supp(a_l) of c_i / a_{l,i} >= k, together with
non-negativity.  All inequality arithmetic is integer: each row is stored
with cleared denominators, so membership is bit-exact.

Degree-k components are computed by enumerating a finite box: a minimal
member never has a coordinate above k times the largest exponent of that
variable, because decrementing such a coordinate keeps every row
satisfied.  Local minimality equals global minimality since membership is
an up-set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iter_product

from .algebra import AlgebraGenerators, DegreeResult, default_search_depth, probe_window
from .decompose import Decomposition
from .monomials import Monomial, MonomialIdeal

# Searching all the way to the certified bound is a true termination
# certificate, but only affordable when the bound itself is desk-scale.
_CERTIFICATE_CAP = 24


@dataclass(frozen=True)
class ConeDescription:
    """Integer-cleared inequality rows over (c_1, ..., c_n, k).

    Row l has coefficient L_l / a_{l,i} at position i (0 off the support)
    and -L_l at the degree coordinate, with L_l the lcm of the component's
    exponents; a point satisfies the row iff the dot product is >= 0.
    """

    dimension: int
    rows: tuple[tuple[int, ...], ...]

    def satisfied_by(self, point: tuple[int, ...]) -> bool:
        if len(point) != self.dimension:
            raise ValueError(
                f"point has length {len(point)}, cone has dimension {self.dimension}"
            )
        if any(x < 0 for x in point):
            return False
        return all(
            sum(c * x for c, x in zip(row, point)) >= 0 for row in self.rows
        )


@dataclass(frozen=True)
class ClosureBoundInput:
    """Variable count and largest component exponent feeding the bound."""

    n: int
    d: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.d < 1:
            raise ValueError(f"bound input needs n >= 1 and d >= 1, got {self!r}")

    @classmethod
    def from_decomposition(cls, dec: Decomposition) -> ClosureBoundInput:
        return cls(dec.context.n, dec.max_exponent())

    def bound(self) -> int:
        return upper_bound_formula(self.n, self.d)


def upper_bound_formula(n: int, d: int) -> int:
    """(n+1)!/2 * d^(n(n-1)), exactly, as an arbitrary-precision integer."""
    if n < 1 or d < 1:
        raise ValueError(f"the bound needs n >= 1 and d >= 1, got n={n!r}, d={d!r}")
    return math.factorial(n + 1) // 2 * d ** (n * (n - 1))


@lru_cache(maxsize=None)
def cone_of(dec: Decomposition) -> ConeDescription:
    """One cleared-denominator row per irreducible component.

    The cone description is only valid when every primary component is a
    single irreducible ideal, so that the symbolic powers are the
    intersections of the component powers.
    """
    for q in dec.primaries:
        if not q.is_irreducible():
            raise ValueError(
                "cone description needs every primary component irreducible; "
                f"support {q.radical_support} carries {len(q.pieces)} pieces"
            )
    n = dec.context.n
    rows = []
    for comp in dec.irreducibles:
        exps = [e for e in comp.a if e]
        big_l = math.lcm(*exps)
        row = [big_l // e if e else 0 for e in comp.a]
        row.append(-big_l)
        rows.append(tuple(row))
    return ConeDescription(n + 1, tuple(rows))


def closure_membership(u: Monomial, k: int, cone: ConeDescription) -> bool:
    """Does x^u t^k lie in the closure described by the cone?"""
    if k < 0:
        raise ValueError(f"membership needs k >= 0, got {k!r}")
    if len(u.exponents) != cone.dimension - 1:
        raise ValueError(
            f"monomial has {len(u.exponents)} exponents, cone expects {cone.dimension - 1}"
        )
    return cone.satisfied_by((*u.exponents, k))


def closure_component(dec: Decomposition, k: int) -> MonomialIdeal:
    """Minimal monomials of the degree-k slice of the closure cone."""
    if k < 1:
        raise ValueError(f"closure components need k >= 1, got {k!r}")
    return _closure_component(dec, k)


@lru_cache(maxsize=None)
def _closure_component(dec: Decomposition, k: int) -> MonomialIdeal:
    cone = cone_of(dec)
    n = dec.context.n
    components = [c.a for c in dec.irreducibles]
    bounds = [k * max(a[i] for a in components) for i in range(n)]
    checks = []
    for row in cone.rows:
        support = [i for i in range(n) if row[i]]
        checks.append((support, [row[i] for i in support], -row[n] * k))

    def member(vec: tuple[int, ...]) -> bool:
        for support, coeffs, need in checks:
            total = 0
            for c, i in zip(coeffs, support):
                total += c * vec[i]
            if total < need:
                return False
        return True

    members = {
        vec for vec in iter_product(*(range(b + 1) for b in bounds)) if member(vec)
    }
    minimal = [
        vec
        for vec in members
        if all(
            (*vec[:i], vec[i] - 1, *vec[i + 1 :]) not in members
            for i in range(n)
            if vec[i]
        )
    ]
    return MonomialIdeal._from_vectors(minimal, dec.context)


@lru_cache(maxsize=None)
def _closure_generated_part(dec: Decomposition, k: int) -> MonomialIdeal:
    ctx = dec.ideal.context
    if k == 1:
        return MonomialIdeal.zero(ctx)
    vectors = []
    for j in range(1, k // 2 + 1):
        product = _closure_component(dec, j) * _closure_component(dec, k - j)
        vectors.extend(g.exponents for g in product.generators)
    return MonomialIdeal._from_vectors(vectors, ctx)


def closure_algebra_generators(
    dec: Decomposition, max_degree: int | None = None
) -> AlgebraGenerators:
    """Degreewise new-generator search over the closure components.

    Same scheme as the symbolic search.  When the factorial bound is small
    enough to reach, the search is capped there and the run is conclusive
    by certificate; otherwise the trailing-window convention applies.
    """
    depth = default_search_depth(dec) if max_degree is None else max_degree
    if depth < 1:
        raise ValueError(f"the search needs max_degree >= 1, got {depth!r}")
    bound = ClosureBoundInput.from_decomposition(dec).bound()
    certified = False
    if bound <= _CERTIFICATE_CAP and depth >= bound:
        depth = bound
        certified = True
    per_degree: dict[int, tuple[Monomial, ...]] = {}
    for k in range(1, depth + 1):
        generated = _closure_generated_part(dec, k)
        per_degree[k] = tuple(
            g for g in _closure_component(dec, k).generators if g not in generated
        )
    last = max(k for k, gens in per_degree.items() if gens)
    conclusive = certified or (depth - last) >= probe_window(dec)
    return AlgebraGenerators(per_degree, depth, conclusive)


def closure_degree(dec: Decomposition, max_degree: int | None = None) -> DegreeResult:
    """Highest degree with new closure generators among k <= max_degree."""
    return closure_algebra_generators(dec, max_degree).degree_result()
