"""Exact arithmetic for monomials and monomial ideals.

Everything here is integer exponent-vector combinatorics over a fixed,
ordered variable context; the coefficient field plays no computational
role.  Values are immutable and hashable, every operation is a pure
function, and generator sets are kept minimalized in a canonical order,
so structural equality coincides with ideal equality and all results are
deterministic regardless of input order.

Canonical generator order is graded lexicographic, largest first: higher
total degree wins, ties are broken by the exponent tuple with earlier
variables weighing more.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence


class ContextMismatchError(ValueError):
    """Two values built over different variable contexts were combined."""


def _grlex_key(vec: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    return (sum(vec), vec)


def _vec_divides(u: tuple[int, ...], v: tuple[int, ...]) -> bool:
    return all(a <= b for a, b in zip(u, v))


def _minimal_vectors(vectors: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """The unique antichain of componentwise-minimal vectors, ascending grlex.

    Processing in ascending graded order guarantees every potential divisor
    of a vector has already been examined, so one pass suffices.
    """
    pool = sorted(set(vectors), key=_grlex_key)
    kept: list[tuple[int, ...]] = []
    for v in pool:
        if not any(_vec_divides(u, v) for u in kept):
            kept.append(v)
    return kept


@dataclass(frozen=True)
class VariableContext:
    """Ordered, fixed collection of distinct variable names.

    The order is canonical for the lifetime of every value built over the
    context; two contexts are interchangeable exactly when their name
    tuples are equal.
    """

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "names", tuple(self.names))
        if not self.names:
            raise ValueError("a variable context needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names: {self.names!r}")

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def monomial(self, exponents: Sequence[int]) -> Monomial:
        return Monomial(tuple(exponents), self)

    def one(self) -> Monomial:
        return Monomial((0,) * self.n, self)

    def pure_power(self, i: int, exponent: int) -> Monomial:
        exps = [0] * self.n
        exps[i] = exponent
        return Monomial(tuple(exps), self)


def _require_same_context(a, b) -> None:
    if a.context != b.context:
        raise ContextMismatchError(
            f"context mismatch: {a.context.names!r} vs {b.context.names!r}"
        )


@dataclass(frozen=True)
class Monomial:
    """A monomial, stored as its non-negative integer exponent vector."""

    exponents: tuple[int, ...]
    context: VariableContext

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponents", tuple(self.exponents))
        if len(self.exponents) != self.context.n:
            raise ValueError(
                f"exponent vector has length {len(self.exponents)}, "
                f"context has {self.context.n} variables"
            )
        if any(not isinstance(e, int) or e < 0 for e in self.exponents):
            raise ValueError(f"exponents must be non-negative integers: {self.exponents!r}")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e)

    def is_one(self) -> bool:
        return not any(self.exponents)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def divides(self, other: Monomial) -> bool:
        _require_same_context(self, other)
        return _vec_divides(self.exponents, other.exponents)

    def lcm(self, other: Monomial) -> Monomial:
        _require_same_context(self, other)
        return Monomial(tuple(map(max, self.exponents, other.exponents)), self.context)

    def __mul__(self, other: Monomial) -> Monomial:
        _require_same_context(self, other)
        return Monomial(
            tuple(a + b for a, b in zip(self.exponents, other.exponents)), self.context
        )

    def __pow__(self, k: int) -> Monomial:
        if k < 0:
            raise ValueError("monomial powers need a non-negative exponent")
        return Monomial(tuple(e * k for e in self.exponents), self.context)

    def __str__(self) -> str:
        parts = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(self.context.names, self.exponents)
            if e
        ]
        return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class SubstitutionVector:
    """Positive integer scaling factors, one per variable: x_i -> x_i^c_i."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        if not self.entries or any(not isinstance(c, int) or c < 1 for c in self.entries):
            raise ValueError(f"substitution entries must be positive integers: {self.entries!r}")


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, held as its unique minimal generating set.

    The constructor trusts its input to be minimal and canonically sorted;
    build from arbitrary generator collections with :func:`minimalize`.
    The empty generator tuple is the zero ideal, the single generator 1 is
    the unit ideal.
    """

    generators: tuple[Monomial, ...]
    context: VariableContext

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if g.context != self.context:
                raise ContextMismatchError(
                    f"generator {g} lives in {g.context.names!r}, not {self.context.names!r}"
                )

    @classmethod
    def zero(cls, context: VariableContext) -> MonomialIdeal:
        return cls((), context)

    @classmethod
    def unit(cls, context: VariableContext) -> MonomialIdeal:
        return cls((context.one(),), context)

    @classmethod
    def _from_vectors(
        cls, vectors: Iterable[tuple[int, ...]], context: VariableContext
    ) -> MonomialIdeal:
        vecs = _minimal_vectors(vectors)
        vecs.sort(key=_grlex_key, reverse=True)
        return cls(tuple(Monomial(v, context) for v in vecs), context)

    def _vectors(self) -> list[tuple[int, ...]]:
        return [g.exponents for g in self.generators]

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_one()

    def __contains__(self, monomial: Monomial) -> bool:
        _require_same_context(monomial, self)
        return any(_vec_divides(g.exponents, monomial.exponents) for g in self.generators)

    def contains_ideal(self, other: MonomialIdeal) -> bool:
        _require_same_context(self, other)
        return all(g in self for g in other.generators)

    def intersect(self, other: MonomialIdeal) -> MonomialIdeal:
        _require_same_context(self, other)
        candidates = {
            tuple(map(max, u, v)) for u in self._vectors() for v in other._vectors()
        }
        return MonomialIdeal._from_vectors(candidates, self.context)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        _require_same_context(self, other)
        candidates = {
            tuple(a + b for a, b in zip(u, v))
            for u in self._vectors()
            for v in other._vectors()
        }
        return MonomialIdeal._from_vectors(candidates, self.context)

    def power(self, k: int) -> MonomialIdeal:
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"ideal powers need a non-negative integer exponent, got {k!r}")
        return _cached_power(self, k)

    def substitute(self, c: SubstitutionVector | Sequence[int]) -> MonomialIdeal:
        entries = c.entries if isinstance(c, SubstitutionVector) else SubstitutionVector(tuple(c)).entries
        if len(entries) != self.context.n:
            raise ValueError(
                f"substitution vector has length {len(entries)}, "
                f"context has {self.context.n} variables"
            )
        scaled = (
            tuple(e * m for e, m in zip(v, entries)) for v in self._vectors()
        )
        return MonomialIdeal._from_vectors(scaled, self.context)

    def localize(self, f: Monomial) -> MonomialIdeal:
        """Invert the variables in supp(f): their exponents drop to zero.

        The ambient context is kept; inverted variables simply become
        units, which is all the localization arguments need.
        """
        _require_same_context(f, self)
        if not f.is_squarefree():
            raise ValueError(f"localization requires a squarefree monomial, got {f}")
        supp = set(f.support())
        zeroed = (
            tuple(0 if i in supp else e for i, e in enumerate(v)) for v in self._vectors()
        )
        return MonomialIdeal._from_vectors(zeroed, self.context)

    def __str__(self) -> str:
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


@lru_cache(maxsize=None)
def _cached_power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    if k == 0:
        return MonomialIdeal.unit(ideal.context)
    if k == 1:
        return ideal
    return _cached_power(ideal, k - 1) * ideal


def minimalize(
    gens: Iterable[Monomial], context: VariableContext | None = None
) -> MonomialIdeal:
    """Build the ideal generated by ``gens`` as its canonical antichain.

    ``context`` is only needed for the zero ideal (no generators to infer
    it from).
    """
    gens = list(gens)
    if context is None:
        if not gens:
            raise ValueError("a context is required to build the zero ideal")
        context = gens[0].context
    for g in gens:
        if g.context != context:
            raise ContextMismatchError(
                f"generator {g} lives in {g.context.names!r}, not {context.names!r}"
            )
    return MonomialIdeal._from_vectors((g.exponents for g in gens), context)


def power_membership_floor(u: Monomial, a: Sequence[int], k: int) -> bool:
    """Membership of u in the k-th power of the irreducible ideal m^a.

    m^a = ({x_i^{a_i} : i in supp(a)}); u lies in (m^a)^k exactly when the
    floors sum high enough: sum_i floor(u_i / a_i) >= k.  Accepts either a
    raw exponent vector or anything carrying one in an ``a`` attribute.
    """
    a = tuple(getattr(a, "a", a))
    if len(a) != u.context.n:
        raise ValueError(
            f"component vector has length {len(a)}, context has {u.context.n} variables"
        )
    if not any(a):
        raise ValueError("component vector must be nonzero")
    if k < 0:
        raise ValueError("power membership needs k >= 0")
    total = 0
    for e, ai in zip(u.exponents, a):
        if ai:
            total += e // ai
    return total >= k
