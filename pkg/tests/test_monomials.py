"""Monomial and monomial-ideal arithmetic."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sil import (
    ContextMismatchError,
    Monomial,
    MonomialIdeal,
    SubstitutionVector,
    VariableContext,
    minimalize,
    power_membership_floor,
)

ABC = VariableContext(("a", "b", "c"))
XY = VariableContext(("x", "y"))
X1Y = VariableContext(("x1", "y1", "y2"))


def m(ctx, *exps):
    return ctx.monomial(exps)


def ideal(ctx, *vectors):
    return minimalize([ctx.monomial(v) for v in vectors], ctx)


class TestMonomial:
    def test_divides(self):
        assert m(ABC, 1, 0, 0).divides(m(ABC, 1, 1, 0))
        assert not m(XY, 2, 0).divides(m(XY, 1, 5))
        u = m(ABC, 2, 1, 3)
        assert u.divides(u)

    def test_lcm(self):
        assert m(XY, 2, 0).lcm(m(XY, 1, 3)) == m(XY, 2, 3)
        u = m(ABC, 1, 2, 0)
        assert u.lcm(u) == u
        assert m(ABC, 3, 3, 2).lcm(m(ABC, 1, 2, 0)) == m(ABC, 3, 3, 2)

    def test_mul(self):
        assert m(XY, 1, 0) * m(XY, 0, 1) == m(XY, 1, 1)
        u = m(ABC, 2, 0, 1)
        assert u * ABC.one() == u
        assert m(ABC, 2, 1, 0) * m(ABC, 2, 1, 1) == m(ABC, 4, 2, 1)

    def test_pow(self):
        assert m(ABC, 2, 1, 0) ** 3 == m(ABC, 6, 3, 0)
        assert m(ABC, 2, 1, 0) ** 0 == ABC.one()

    def test_context_mismatch(self):
        with pytest.raises(ContextMismatchError):
            m(ABC, 1, 0, 0).divides(m(XY, 1, 0))
        with pytest.raises(ContextMismatchError):
            m(XY, 1, 0) * m(ABC, 1, 0, 0)

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            m(XY, -1, 0)

    def test_str(self):
        assert str(m(ABC, 2, 1, 0)) == "a^2*b"
        assert str(ABC.one()) == "1"


class TestMinimalize:
    def test_divisibility_prune(self):
        assert ideal(ABC, (1, 1, 0), (2, 1, 0)) == ideal(ABC, (1, 1, 0))

    def test_five_generator_prune(self):
        # a^2*b^2 is the only reducible generator: a^2*b divides it
        result = ideal(ABC, (4, 0, 0), (2, 1, 0), (2, 2, 0), (1, 2, 1), (0, 2, 2))
        assert result == ideal(ABC, (4, 0, 0), (2, 1, 0), (1, 2, 1), (0, 2, 2))

    def test_zero_ideal(self):
        assert minimalize([], ABC).is_zero()
        with pytest.raises(ValueError):
            minimalize([])

    def test_unit_absorbs(self):
        assert ideal(ABC, (0, 0, 0), (1, 0, 0)).is_unit()

    def test_order_independence(self):
        rng = random.Random(7)
        vectors = [tuple(rng.randint(0, 4) for _ in range(3)) for _ in range(12)]
        gens = [ABC.monomial(v) for v in vectors if any(v)]
        reference = minimalize(gens, ABC)
        for _ in range(5):
            rng.shuffle(gens)
            assert minimalize(gens, ABC) == reference


class TestIdealOps:
    def test_intersect_paper_example(self):
        left = ideal(ABC, (2, 0, 0), (0, 1, 0))
        right = ideal(ABC, (1, 0, 0), (0, 0, 1))
        assert left.intersect(right) == ideal(ABC, (2, 0, 0), (1, 1, 0), (0, 1, 1))

    def test_intersect_idempotent(self):
        I = ideal(ABC, (2, 0, 0), (1, 1, 0), (0, 1, 1))
        assert I.intersect(I) == I

    def test_intersect_two_edges(self):
        left = ideal(X1Y, (2, 0, 0), (0, 1, 0))
        right = ideal(X1Y, (1, 0, 0), (0, 0, 1))
        assert left.intersect(right) == ideal(X1Y, (2, 0, 0), (1, 1, 0), (0, 1, 1))

    def test_square_of_goodexample(self):
        I = ideal(ABC, (2, 0, 0), (1, 1, 0), (0, 1, 1))
        expected = ideal(
            ABC, (4, 0, 0), (3, 1, 0), (2, 2, 0), (2, 1, 1), (1, 2, 1), (0, 2, 2)
        )
        assert I * I == expected
        assert I.power(2) == expected

    def test_power_trivial(self):
        I = ideal(ABC, (2, 0, 0), (1, 1, 0))
        assert I.power(1) == I
        assert MonomialIdeal.unit(ABC).power(5) == MonomialIdeal.unit(ABC)
        assert I.power(0) == MonomialIdeal.unit(ABC)

    def test_membership(self):
        I = ideal(ABC, (2, 0, 0), (1, 1, 0), (0, 1, 1))
        assert m(ABC, 2, 1, 0) in I
        assert m(ABC, 0, 0, 1) not in I
        assert m(ABC, 2, 1, 0) not in I.power(2)

    def test_zero_and_unit(self):
        zero = MonomialIdeal.zero(ABC)
        unit = MonomialIdeal.unit(ABC)
        assert m(ABC, 1, 1, 1) not in zero
        assert ABC.one() in unit
        assert zero.intersect(unit).is_zero()
        assert (zero * unit).is_zero()


class TestFloorMembership:
    def test_examples(self):
        assert power_membership_floor(m(ABC, 2, 2, 1), (2, 1, 0), 3)
        assert not power_membership_floor(m(ABC, 1, 0, 0), (2, 1, 0), 1)
        assert power_membership_floor(m(ABC, 0, 0, 0), (2, 1, 0), 0)

    def test_cross_check_paper_value(self):
        # a^2*b^2*c lies in (a^2, b)^3
        component = ideal(ABC, (2, 0, 0), (0, 1, 0))
        assert m(ABC, 2, 2, 1) in component.power(3)

    def test_rejects_zero_component(self):
        with pytest.raises(ValueError):
            power_membership_floor(m(ABC, 1, 1, 1), (0, 0, 0), 1)


class TestSubstitute:
    def test_examples(self):
        assert ideal(XY, (1, 0), (0, 1)).substitute((2, 3)) == ideal(XY, (2, 0), (0, 3))
        I = ideal(ABC, (2, 0, 0), (1, 1, 0), (0, 1, 1))
        assert I.substitute((1, 1, 1)) == I
        assert ideal(XY, (2, 0), (1, 1)).substitute((2, 1)) == ideal(XY, (4, 0), (2, 1))

    def test_rejects_bad_vectors(self):
        I = ideal(XY, (1, 0))
        with pytest.raises(ValueError):
            I.substitute((0, 1))
        with pytest.raises(ValueError):
            I.substitute((2,))

    def test_substitution_vector_type(self):
        with pytest.raises(ValueError):
            SubstitutionVector((1, 0))


class TestLocalize:
    def test_zeroes_and_minimalizes(self):
        I = ideal(ABC, (2, 0, 0), (1, 1, 0), (0, 1, 1))
        assert I.localize(m(ABC, 0, 0, 1)) == ideal(ABC, (2, 0, 0), (0, 1, 0))

    def test_at_one_is_identity(self):
        I = ideal(ABC, (2, 0, 0), (1, 1, 0), (0, 1, 1))
        assert I.localize(ABC.one()) == I

    def test_generator_becomes_unit(self):
        I = ideal(ABC, (0, 1, 0), (1, 0, 1))  # (b, a*c)
        assert I.localize(m(ABC, 0, 1, 0)).is_unit()

    def test_mixed_generators(self):
        I = ideal(ABC, (1, 1, 0), (0, 1, 1))  # (a*b, b*c)
        assert I.localize(m(ABC, 0, 1, 0)) == ideal(ABC, (1, 0, 0), (0, 0, 1))

    def test_requires_squarefree(self):
        I = ideal(ABC, (1, 1, 0))
        with pytest.raises(ValueError):
            I.localize(m(ABC, 2, 0, 0))


# ---------------------------------------------------------------------------
# property tests

contexts = st.sampled_from(
    [VariableContext(("a",)), XY, ABC, VariableContext(("a", "b", "c", "d"))]
)


@st.composite
def context_and_ideals(draw, count=2):
    ctx = draw(contexts)
    vectors = st.tuples(*([st.integers(0, 6)] * ctx.n))
    ideals = []
    for _ in range(count):
        gens = draw(st.lists(vectors.filter(any), min_size=1, max_size=5))
        ideals.append(MonomialIdeal._from_vectors(gens, ctx))
    monomial = ctx.monomial(draw(vectors))
    return ctx, ideals, monomial


@given(context_and_ideals())
def test_minimalize_fixpoint_and_antichain(data):
    _, (I, _), _ = data
    assert minimalize(I.generators, I.context) == I
    gens = I.generators
    for i, u in enumerate(gens):
        for j, v in enumerate(gens):
            if i != j:
                assert not u.divides(v)


@given(context_and_ideals())
def test_intersection_membership_equivalence(data):
    _, (I, J), u = data
    assert (u in I.intersect(J)) == (u in I and u in J)


@given(context_and_ideals(count=1), st.integers(0, 5))
def test_floor_criterion_matches_expanded_power(data, k):
    ctx, (I, ), u = data
    component_vec = I.generators[0].exponents
    component = minimalize(
        [ctx.pure_power(i, e) for i, e in enumerate(component_vec) if e], ctx
    )
    assert power_membership_floor(u, component_vec, k) == (u in component.power(k))


@given(context_and_ideals(), st.lists(st.integers(1, 3), min_size=4, max_size=4))
def test_substitute_commutes_with_intersection(data, scales):
    ctx, (I, J), _ = data
    c = SubstitutionVector(tuple(scales[: ctx.n]))
    assert I.intersect(J).substitute(c) == I.substitute(c).intersect(J.substitute(c))


@given(context_and_ideals())
def test_product_contains_pairwise_products(data):
    _, (I, J), _ = data
    product = I * J
    for u in I.generators:
        for v in J.generators:
            assert u * v in product


@given(context_and_ideals(count=1), st.integers(0, 3), st.integers(0, 3))
@settings(deadline=None)
def test_power_is_multiplicative(data, k, l):
    _, (I, ), _ = data
    assert I.power(k + l) == I.power(k) * I.power(l)
