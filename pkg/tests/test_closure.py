"""Cone description of the closure algebra, components, and degree bounds."""

import math
import random

import pytest

from sil import (
    ClosureBoundInput,
    closure_algebra_generators,
    closure_component,
    closure_degree,
    closure_membership,
    cone_of,
    decompose,
    ideal_from_graph,
    parse_ideal,
    parse_monomial,
    symbolic_membership,
    symbolic_power,
    upper_bound_formula,
)

import randgen

GOOD = decompose(parse_ideal("(a^2, b) & (a, c)").evaluate())
SINGLE_EDGE = decompose(parse_ideal("(x, y)").evaluate())


class TestConeDescription:
    def test_goodexample_rows(self):
        cone = cone_of(GOOD)
        assert cone.dimension == 4
        assert set(cone.rows) == {(1, 2, 0, -2), (1, 0, 1, -1)}

    def test_single_edge_row(self):
        assert cone_of(SINGLE_EDGE).rows == ((1, 1, -1),)

    def test_cleared_denominators(self):
        dec = decompose(parse_ideal("(x^3, y^2)").evaluate())
        assert cone_of(dec).rows == ((2, 3, -6),)

    def test_rejects_multi_piece_primary(self):
        dec = decompose(parse_ideal("(x^2, y) & (x, y^2)").evaluate())
        with pytest.raises(ValueError, match="irreducible"):
            cone_of(dec)


class TestClosureMembership:
    def test_examples(self):
        cone = cone_of(GOOD)
        assert closure_membership(parse_monomial("a*b", GOOD.context), 1, cone)
        assert not closure_membership(parse_monomial("a", GOOD.context), 1, cone)
        assert closure_membership(GOOD.context.one(), 0, cone)

    def test_dimension_check(self):
        with pytest.raises(ValueError):
            closure_membership(SINGLE_EDGE.context.one(), 1, cone_of(GOOD))


class TestClosureComponent:
    def test_squarefree_ci_is_closed(self):
        assert closure_component(SINGLE_EDGE, 3) == SINGLE_EDGE.ideal.power(3)

    def test_goodexample_degree_one(self):
        # a*c fails the first inequality (1/2 < 1), the ideal itself is closed here
        component = closure_component(GOOD, 1)
        assert component == GOOD.ideal
        assert parse_monomial("a*c", GOOD.context) not in component

    def test_contains_symbolic_power(self):
        rng = random.Random(70)
        for _ in range(8):
            dec = randgen.gci_decomposition(rng, 3, 3, 2)
            for k in (1, 2, 3):
                component = closure_component(dec, k)
                assert component.contains_ideal(symbolic_power(dec, k))

    def test_minimal_generators_are_locally_minimal(self):
        cone = cone_of(GOOD)
        for k in (1, 2, 3):
            for g in closure_component(GOOD, k).generators:
                assert closure_membership(g, k, cone)
                for i, e in enumerate(g.exponents):
                    if e:
                        lowered = list(g.exponents)
                        lowered[i] -= 1
                        down = GOOD.context.monomial(lowered)
                        assert not closure_membership(down, k, cone)

    def test_up_set_and_multiplicativity(self):
        rng = random.Random(71)
        dec = randgen.gci_decomposition(rng, 3, 2, 3)
        cone = cone_of(dec)
        ctx = dec.context
        for _ in range(40):
            u = ctx.monomial(tuple(rng.randint(0, 6) for _ in range(3)))
            w = u * ctx.monomial(tuple(rng.randint(0, 2) for _ in range(3)))
            j, k = rng.randint(0, 2), rng.randint(0, 2)
            if closure_membership(u, k, cone):
                assert closure_membership(w, k, cone)
                if closure_membership(w, j, cone):
                    assert closure_membership(u * w, k + j, cone)


class TestOracleEquivalence:
    """Membership in the cone versus the scaled symbolic power."""

    @pytest.mark.parametrize("seed", range(5))
    def test_equivalence_on_random_instances(self, seed):
        rng = random.Random(300 + seed)
        dec = randgen.gci_decomposition(rng, 3, 3, 4)
        cone = cone_of(dec)
        r = math.lcm(*(e for c in dec.irreducibles for e in c.a if e))
        ctx = dec.context
        for _ in range(60):
            u = ctx.monomial(tuple(rng.randint(0, 8) for _ in range(3)))
            k = rng.randint(0, 3)
            assert closure_membership(u, k, cone) == symbolic_membership(
                u ** r, dec, r * k
            )


class TestClosureSearch:
    def test_single_edge_certified_degree_one(self):
        # bound is 3!/2 = 3, small enough to search through entirely
        result = closure_degree(SINGLE_EDGE, 10)
        assert result.value == 1
        assert result.conclusive
        assert closure_algebra_generators(SINGLE_EDGE, 10).searched_up_to == 3

    def test_squarefree_bipartite_cover_degree_one(self):
        dec = decompose(parse_ideal("(x1, y1) & (x1, y2) & (x2, y2)").evaluate())
        result = closure_degree(dec, 12)
        assert result.value == 1
        assert result.conclusive

    def test_goodexample_search(self):
        found = closure_algebra_generators(GOOD, 4)
        bound = upper_bound_formula(3, 2)
        assert found.degree_result().value <= bound
        cone = cone_of(GOOD)
        for k, gens in found.per_degree.items():
            for g in gens:
                assert closure_membership(g, k, cone)

    def test_new_generators_outside_lower_products(self):
        found = closure_algebra_generators(GOOD, 3)
        for k in (2, 3):
            lower = [
                g
                for j in range(1, k)
                for g in (closure_component(GOOD, j) * closure_component(GOOD, k - j)).generators
            ]
            from sil import minimalize

            generated = minimalize(lower, GOOD.context)
            for g in found.per_degree[k]:
                assert g not in generated


class TestUpperBoundFormula:
    def test_values(self):
        assert upper_bound_formula(3, 2) == 768
        assert upper_bound_formula(2, 1) == 3
        assert upper_bound_formula(1, 7) == 1
        assert upper_bound_formula(4, 3) == 60 * 3 ** 12

    def test_input_validation(self):
        with pytest.raises(ValueError):
            upper_bound_formula(0, 1)
        with pytest.raises(ValueError):
            upper_bound_formula(1, 0)

    def test_bound_input_from_decomposition(self):
        bound_input = ClosureBoundInput.from_decomposition(GOOD)
        assert (bound_input.n, bound_input.d) == (3, 2)
        assert bound_input.bound() == 768
