"""Symbolic powers and their comparison with ordinary powers.

The k-th symbolic power is the intersection of the k-th powers of the
canonical primary components.  Membership goes through the floor-sum
criterion wherever a primary component is a single irreducible ideal and
falls back to the expanded power otherwise.
"""

from __future__ import annotations

from functools import lru_cache

from .decompose import Decomposition
from .monomials import Monomial, MonomialIdeal, power_membership_floor


def _require_primaries(dec: Decomposition) -> None:
    if not dec.primaries:
        raise ValueError("decomposition has no primary grouping; build it with decompose()")


def symbolic_power(dec: Decomposition, k: int) -> MonomialIdeal:
    """Minimal generators of the intersection of the k-th primary powers."""
    _require_primaries(dec)
    if k < 1:
        raise ValueError(f"symbolic powers need k >= 1, got {k!r}")
    return _symbolic_power(dec, k)


@lru_cache(maxsize=None)
def _symbolic_power(dec: Decomposition, k: int) -> MonomialIdeal:
    result = None
    for q in dec.primaries:
        power = q.ideal.power(k)
        result = power if result is None else result.intersect(power)
    return result


def symbolic_membership(u: Monomial, dec: Decomposition, k: int) -> bool:
    """Does u lie in the k-th symbolic power?

    Equivalent to membership in symbolic_power(dec, k) but avoids
    expanding the intersection when every primary piece is irreducible.
    """
    _require_primaries(dec)
    if k < 0:
        raise ValueError(f"membership needs k >= 0, got {k!r}")
    if k == 0:
        return True
    for q in dec.primaries:
        if q.is_irreducible():
            if not power_membership_floor(u, q.pieces[0].a, k):
                return False
        elif u not in q.ideal.power(k):
            return False
    return True


def powers_coincide(dec: Decomposition, k: int) -> bool:
    """True iff the ordinary and symbolic k-th powers are equal ideals."""
    if k < 1:
        raise ValueError(f"comparison needs k >= 1, got {k!r}")
    return dec.ideal.power(k) == symbolic_power(dec, k)


def symbolic_witness(dec: Decomposition, k: int) -> Monomial | None:
    """First minimal generator of I^(k) outside I^k, in canonical order.

    Returns None when the two powers coincide.
    """
    ordinary = dec.ideal.power(k)
    for g in symbolic_power(dec, k).generators:
        if g not in ordinary:
            return g
    return None
