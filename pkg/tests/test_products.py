"""
Tests for the hexad products, their semigroup laws and the ternary product.
"""

import numpy as np
import pytest
from pydantic import ValidationError

from src.identities import SearchParameters
from src.lattices import ChainLattice
from src.products import (
    PRINCIPAL,
    ProductSpec,
    TernarySpec,
    check_associativity,
    check_table_associativity,
    check_table_weak_band,
    check_torsor_laws,
    check_weak_band,
    eval_product,
    eval_ternary,
    hexad,
    index_table,
    opposite,
    product_bounds,
    product_function,
)
from src.quintary import HEXAD_VERTICES
from src.shared.errors import LatticeMismatchError

RESIDUES = list(range(12))
SMALL = list(range(9))


class TestProductSpec:
    """Tests for slot assignment and evaluation of hexad products."""

    @pytest.fixture
    def principal(self, arithmetic):
        """The product x . z = L(x, 3, 2, 4, z)."""
        return ProductSpec.principal(arithmetic, 3, 2, 4)

    def test_principal_values(self, principal):
        """Test the corner values and 5 . 6 of the (3, 2, 4) product."""
        assert eval_product(principal, 5, 6) == 3
        assert eval_product(principal, 0, 0) == 12
        assert eval_product(principal, 0, 1) == 4
        assert eval_product(principal, 1, 0) == 3
        assert eval_product(principal, 1, 1) == 1

    def test_associativity_instance(self, principal):
        """Test (5 . 6) . 6 = 5 . (6 . 6) = 3."""
        mul = product_function(principal)
        assert mul(mul(5, 6), 6) == mul(5, mul(6, 6)) == 3

    def test_describe(self, principal, arithmetic):
        """Test the printable form of a vertex."""
        assert principal.describe() == "e: L(u, 3, 2, 4, v)"
        spec = ProductSpec(lattice=arithmetic, vertex="(12)", triple=(8, 4, 2))
        assert spec.describe() == "(12): L(8, u, 4, 2, v)"

    def test_fixed_and_varying(self, principal, arithmetic):
        """Test which slots each vertex fixes."""
        assert principal.vertex == PRINCIPAL
        assert principal.fixed == {"a": 3, "y": 2, "b": 4}
        assert principal.varying == ("x", "z")
        by_a = ProductSpec(lattice=arithmetic, vertex="(12)", triple=(8, 4, 2))
        assert by_a.fixed == {"x": 8, "y": 4, "b": 2}
        assert by_a.varying == ("a", "z")
        by_b = ProductSpec(lattice=arithmetic, vertex="(132)", triple=(8, 4, 2))
        assert by_b.fixed == {"x": 8, "a": 2, "y": 4}
        assert by_b.varying == ("b", "z")

    def test_varying_slot_product(self, arithmetic):
        """Test a product that multiplies in the a and z slots."""
        spec = ProductSpec(lattice=arithmetic, vertex="(12)", triple=(8, 4, 2))
        assert eval_product(spec, 5, 0) == 20

    def test_function_matches_checked_evaluation(self, arithmetic):
        """Test that the unchecked product agrees with eval_product."""
        for spec in hexad(arithmetic, 8, 4, 2):
            mul = product_function(spec)
            for u in SMALL:
                for v in SMALL:
                    assert mul(u, v) == eval_product(spec, u, v)

    def test_validation(self, arithmetic, principal):
        """Test unknown vertices and foreign elements."""
        with pytest.raises(ValidationError):
            ProductSpec(lattice=arithmetic, vertex="(1234)", triple=(1, 2, 3))
        with pytest.raises(LatticeMismatchError):
            ProductSpec.principal(arithmetic, 3, -2, 4)
        with pytest.raises(LatticeMismatchError):
            eval_product(principal, 5, -6)


class TestHexad:
    """Tests for the six vertices, opposites and bounds."""

    def test_vertices(self, arithmetic):
        """Test that a hexad has the six vertices in order."""
        specs = hexad(arithmetic, 8, 4, 2)
        assert [s.vertex for s in specs] == list(HEXAD_VERTICES)
        assert len({s.describe() for s in specs}) == 6

    def test_opposite_swaps_arguments(self, arithmetic):
        """Test that opposite vertices give opposite products."""
        for spec in hexad(arithmetic, 3, 2, 4):
            other = opposite(spec)
            assert opposite(other) == spec
            for u in RESIDUES:
                for v in RESIDUES:
                    assert eval_product(other, u, v) == eval_product(spec, v, u)

    def test_principal_opposite_swaps_a_and_b(self, arithmetic):
        """Test that the opposite of (3, 2, 4) multiplies like (4, 2, 3)."""
        other = opposite(ProductSpec.principal(arithmetic, 3, 2, 4))
        swapped = ProductSpec.principal(arithmetic, 4, 2, 3)
        assert other.vertex == "(23)"
        for u in RESIDUES:
            for v in RESIDUES:
                assert eval_product(other, u, v) == eval_product(swapped, u, v)

    def test_symmetric_triple_is_commutative(self, arithmetic):
        """Test that an (a, y, a) product is commutative with a absorbing."""
        spec = ProductSpec.principal(arithmetic, 3, 2, 3)
        for u in RESIDUES:
            assert eval_product(spec, 3, u) == 3 == eval_product(spec, u, 3)
            for v in RESIDUES:
                assert eval_product(spec, u, v) == eval_product(spec, v, u)

    def test_constant_product(self, arithmetic):
        """Test that (a, a, a) multiplies everything to a."""
        spec = ProductSpec.principal(arithmetic, 6, 6, 6)
        assert {eval_product(spec, u, v) for u in RESIDUES for v in RESIDUES} == {6}

    def test_bounds(self, arithmetic):
        """Test the bounds of the principal and two fixed-x vertices."""
        principal, _, by_a, _, by_b, _ = (
            ProductSpec(lattice=arithmetic, vertex=v, triple=(8, 4, 2)) for v in HEXAD_VERTICES
        )
        assert product_bounds(ProductSpec.principal(arithmetic, 3, 2, 4)) == (12, 1)
        assert product_bounds(principal) == (8, 2)
        assert product_bounds(by_a) == (0, 2)
        assert product_bounds(by_b) == (8, 1)

    def test_every_product_lies_within_bounds(self, arithmetic, n5):
        """Test bottom <= u . v <= top at every vertex."""
        triples = [(arithmetic, (8, 4, 2), range(13)), (n5, (1, 2, 3), n5.enumerate())]
        for lattice, triple, domain in triples:
            for spec in hexad(lattice, *triple):
                low, high = product_bounds(spec)
                for u in domain:
                    for v in domain:
                        value = eval_product(spec, u, v)
                        assert lattice.leq(low, value)
                        assert lattice.leq(value, high)

    def test_unbounded_lattice_bounds(self):
        """Test that a missing lattice bound is reported as None."""
        chain = ChainLattice()
        by_a = ProductSpec(lattice=chain, vertex="(12)", triple=(1, 5, 3))
        by_b = ProductSpec(lattice=chain, vertex="(13)", triple=(1, 5, 3))
        assert product_bounds(by_a) == (None, 3)
        assert product_bounds(by_b) == (1, None)


class TestSemigroupLaws:
    """Tests for associativity and the weak-band law."""

    @pytest.mark.parametrize("triple", [(3, 2, 4), (1, 2, 1), (3, 2, 3), (2, 6, 3)])
    def test_principal_laws(self, arithmetic, params, triple):
        """Test the principal product over the residues 0..11."""
        spec = ProductSpec.principal(arithmetic, *triple)
        report = check_associativity(spec, RESIDUES, params)
        assert report.holds
        assert report.check == "associativity at e"
        assert report.evaluations == 12**3
        assert check_weak_band(spec, RESIDUES, params).holds

    @pytest.mark.parametrize("vertex", HEXAD_VERTICES)
    def test_every_vertex(self, arithmetic, params, vertex):
        """Test all six vertices of (8, 4, 2) over 0..8."""
        spec = ProductSpec(lattice=arithmetic, vertex=vertex, triple=(8, 4, 2))
        assert check_associativity(spec, SMALL, params).holds
        assert check_weak_band(spec, SMALL, params).holds

    @pytest.mark.parametrize("vertex", HEXAD_VERTICES)
    def test_finite_carriers(self, powerset3, divisors60, params, vertex):
        """Test the laws on whole finite carriers."""
        for lattice, triple in ((powerset3, (3, 5, 6)), (divisors60, (4, 6, 10))):
            spec = ProductSpec(lattice=lattice, vertex=vertex, triple=triple)
            assert check_associativity(spec, params=params).holds
            assert check_weak_band(spec, params=params).holds

    def test_sampled_on_integers(self, arithmetic, params):
        """Test that the default domain on the integers is sampled."""
        report = check_associativity(ProductSpec.principal(arithmetic, 3, 2, 5), params=params)
        assert report.holds
        assert report.mode == "sampled"


class TestTableLaws:
    """Tests for the vectorized Cayley table checks."""

    def test_associative_table(self):
        """Test max on {0, 1, 2} as an associative weak band."""
        carrier = [0, 1, 2]
        table = index_table(carrier, [[max(u, v) for v in carrier] for u in carrier])
        assert check_table_associativity("max", carrier, table).holds
        assert check_table_weak_band("max", carrier, table).holds

    def test_non_associative_table(self):
        """Test that subtraction mod 3 is reported with a counterexample."""
        carrier = [0, 1, 2]
        table = index_table(carrier, [[(u - v) % 3 for v in carrier] for u in carrier])
        report = check_table_associativity("minus", carrier, table)
        assert not report.holds
        u, v, w = report.counterexample.arguments
        assert ((u - v) - w) % 3 != (u - (v - w)) % 3

    def test_addition_is_not_a_weak_band(self):
        """Test that addition mod 2 fails the weak-band law."""
        carrier = [0, 1]
        table = index_table(carrier, [[(u + v) % 2 for v in carrier] for u in carrier])
        assert table.dtype == np.int64
        assert not check_table_weak_band("plus", carrier, table).holds

    def test_open_table(self):
        """Test that a table leaving its carrier is refused."""
        with pytest.raises(ValueError):
            index_table([0, 1], [[0, 1], [1, 2]])


class TestTernary:
    """Tests for the ternary product (xyz) = L(x, a, y, b, z)."""

    def test_values(self, arithmetic):
        """Test gcd collapse, idempotence and the N corner."""
        gcd_spec = TernarySpec(lattice=arithmetic, a=1, b=1)
        assert eval_ternary(gcd_spec, 4, 6, 10) == 2
        spec = TernarySpec(lattice=arithmetic, a=3, b=4)
        assert eval_ternary(spec, 7, 7, 7) == 7
        assert eval_ternary(spec, 0, 2, 0) == 12

    def test_fixed_middle_is_principal_product(self, arithmetic):
        """Test that fixing y gives the principal binary product."""
        spec = TernarySpec(lattice=arithmetic, a=3, b=4)
        principal = ProductSpec.principal(arithmetic, 3, 2, 4)
        for x in RESIDUES:
            for z in RESIDUES:
                assert eval_ternary(spec, x, 2, z) == eval_product(principal, x, z)

    def test_extreme_parameters(self, powerset3):
        """Test that a = b = top gives union and a = b = bottom intersection."""
        top = TernarySpec(lattice=powerset3, a=7, b=7)
        bottom = TernarySpec(lattice=powerset3, a=0, b=0)
        for x, y, z in [(1, 2, 4), (3, 6, 5), (0, 7, 2)]:
            assert eval_ternary(top, x, y, z) == x | y | z
            assert eval_ternary(bottom, x, y, z) == x & y & z

    def test_torsor_laws_powerset(self, powerset3, params):
        """Test para-associativity and middle identities exhaustively."""
        report = check_torsor_laws(TernarySpec(lattice=powerset3, a=3, b=6), params=params)
        assert report.holds
        assert report.mode == "exhaustive"
        assert report.evaluations == 8**5 + 8**3

    def test_torsor_laws_integers(self, arithmetic):
        """Test the torsor laws on seeded samples from 0..100."""
        params = SearchParameters(
            budget=10_000, seed=20110523, samples=1000, window=(0, 100), workers=1
        )
        report = check_torsor_laws(TernarySpec(lattice=arithmetic, a=3, b=4), list(range(101)), params)
        assert report.holds
        assert report.mode == "sampled"

    def test_validation(self, arithmetic):
        """Test that parameters must be lattice elements."""
        with pytest.raises(LatticeMismatchError):
            TernarySpec(lattice=arithmetic, a=-1, b=2)

