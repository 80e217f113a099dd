"""Degreewise search for minimal generators of the symbolic power algebra.

A minimal generator of the graded algebra in degree k is a minimal
generator of I^(k) that does not already lie in the ideal generated by
products of lower symbolic powers, B_k = sum over 0 < j < k of
I^(j) * I^(k-j).  Any product of lower-degree algebra elements refines
through such a split, and ring coefficients are absorbed by ideal
membership, so testing against B_k is enough.

There is no effective a-priori bound on the highest generator degree, so
the search is honest about inconclusiveness: a run is conclusive only if
it ends with a long enough window of degrees contributing nothing new
(half the largest exponent of the decomposition, rounded up), or, for the
closure variant, when the search provably passed the certified bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .decompose import Decomposition, decompose
from .monomials import Monomial, MonomialIdeal, VariableContext
from .symbolic import symbolic_power


@dataclass(frozen=True)
class DegreeResult:
    value: int
    conclusive: bool


@dataclass
class AlgebraGenerators:
    """New minimal algebra generators per degree, up to a search bound."""

    per_degree: dict[int, tuple[Monomial, ...]]
    searched_up_to: int
    conclusive: bool

    def last_new_degree(self) -> int:
        return max(k for k, gens in self.per_degree.items() if gens)

    def degree_result(self) -> DegreeResult:
        return DegreeResult(self.last_new_degree(), self.conclusive)


def probe_window(dec: Decomposition) -> int:
    """Trailing empty degrees required before a search counts as conclusive."""
    return (dec.max_exponent() + 1) // 2


def default_search_depth(dec: Decomposition) -> int:
    return dec.max_exponent()


@lru_cache(maxsize=None)
def _generated_part(dec: Decomposition, k: int) -> MonomialIdeal:
    """B_k: the part of I^(k) generated by lower algebra degrees."""
    ctx = dec.ideal.context
    if k == 1:
        return MonomialIdeal.zero(ctx)
    vectors = []
    for j in range(1, k // 2 + 1):
        product = symbolic_power(dec, j) * symbolic_power(dec, k - j)
        vectors.extend(g.exponents for g in product.generators)
    return MonomialIdeal._from_vectors(vectors, ctx)


def algebra_generators_up_to(
    dec: Decomposition, max_degree: int | None = None
) -> AlgebraGenerators:
    """New minimal algebra generators in each degree k <= max_degree.

    ``max_degree`` defaults to the largest exponent of the decomposition.
    """
    depth = default_search_depth(dec) if max_degree is None else max_degree
    if depth < 1:
        raise ValueError(f"the search needs max_degree >= 1, got {depth!r}")
    per_degree: dict[int, tuple[Monomial, ...]] = {}
    for k in range(1, depth + 1):
        generated = _generated_part(dec, k)
        per_degree[k] = tuple(
            g for g in symbolic_power(dec, k).generators if g not in generated
        )
    last = max(k for k, gens in per_degree.items() if gens)
    conclusive = (depth - last) >= probe_window(dec)
    return AlgebraGenerators(per_degree, depth, conclusive)


def degree_of_algebra(dec: Decomposition, max_degree: int | None = None) -> DegreeResult:
    """Highest degree with new generators among k <= max_degree."""
    return algebra_generators_up_to(dec, max_degree).degree_result()


_GOOD_CONTEXT = VariableContext(("a", "b", "c"))
_TWO_EDGE_CONTEXT = VariableContext(("x", "y1", "y2"))
_TRIANGLE_CONTEXT = VariableContext(("x", "y", "z"))


def fixture_goodexample(n: int, k: int) -> list[Monomial]:
    """Closed-form minimal generators of the k-th symbolic power of
    (a^n, b) meet (a, c), over the context (a, b, c)."""
    if n < 1 or k < 1:
        raise ValueError(f"fixture needs n >= 1 and k >= 1, got n={n!r}, k={k!r}")
    vectors = {(i, k - i // n, k - i) for i in range(k + 1)}
    vectors |= {(n * j, k - j, 0) for j in range(k // n + 1, k + 1)}
    return list(MonomialIdeal._from_vectors(vectors, _GOOD_CONTEXT).generators)


def fixture_two_edge(a: int, b: int, k: int) -> list[Monomial]:
    """Closed-form minimal generators of the k-th symbolic power of
    (x^a, y1) meet (x^b, y2), for coprime a > b >= 1."""
    if not (a > b >= 1):
        raise ValueError(f"fixture needs a > b >= 1, got a={a!r}, b={b!r}")
    if math.gcd(a, b) != 1:
        raise ValueError(f"fixture needs gcd(a, b) = 1, got a={a!r}, b={b!r}")
    if k < 1:
        raise ValueError(f"fixture needs k >= 1, got {k!r}")
    vectors = set()
    for i in range(k + 1):
        for j in range(k + 1):
            x = a * i if j <= (a * i) // b else b * j
            vectors.add((x, k - i, k - j))
    return list(MonomialIdeal._from_vectors(vectors, _TWO_EDGE_CONTEXT).generators)


@dataclass(frozen=True)
class ConjectureReport:
    """Observed algebra degree of a weighted triangle ideal vs the
    conjectured lower bound max{a,...,f}.  Reports, never asserts."""

    weights: tuple[int, int, int, int, int, int]
    ideal: MonomialIdeal
    conjectured_bound: int
    degree: DegreeResult

    @property
    def bound_attained(self) -> bool | None:
        """True/False once decidable, None while the search is inconclusive.

        A degree value is a certified lower bound for the algebra degree
        even when inconclusive, so meeting the bound never needs a
        conclusive run.
        """
        if self.degree.value >= self.conjectured_bound:
            return True
        return False if self.degree.conclusive else None


def conjecture_experiment(
    a: int, b: int, c: int, d: int, e: int, f: int, max_degree: int | None = None
) -> ConjectureReport:
    """Search the triangle ideal (x^a,y^b) meet (y^c,z^d) meet (x^e,z^f).

    Requires gcd(a,e) = gcd(b,c) = gcd(d,f) = 1.
    """
    weights = (a, b, c, d, e, f)
    if any(w < 1 for w in weights):
        raise ValueError(f"triangle weights must be positive: {weights!r}")
    if math.gcd(a, e) != 1 or math.gcd(b, c) != 1 or math.gcd(d, f) != 1:
        raise ValueError(
            f"triangle weights need gcd(a,e) = gcd(b,c) = gcd(d,f) = 1, got {weights!r}"
        )
    ctx = _TRIANGLE_CONTEXT
    first = MonomialIdeal._from_vectors([(a, 0, 0), (0, b, 0)], ctx)
    second = MonomialIdeal._from_vectors([(0, c, 0), (0, 0, d)], ctx)
    third = MonomialIdeal._from_vectors([(e, 0, 0), (0, 0, f)], ctx)
    ideal = first.intersect(second).intersect(third)
    dec = decompose(ideal)
    result = degree_of_algebra(dec, max_degree)
    return ConjectureReport(
        weights=weights,
        ideal=ideal,
        conjectured_bound=max(weights),
        degree=result,
    )
