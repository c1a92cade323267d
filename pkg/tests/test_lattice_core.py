"""
Tests for the lattice backends and the spec-string registry.
"""

import json

import pytest

from src.lattices import (
    ArithmeticLattice,
    ChainLattice,
    DivisorIntervalLattice,
    FinCofLattice,
    FinCofSet,
    FiniteTableLattice,
    PowerSetLattice,
    construct_lattice,
    enumerate_lattice,
    load_lattice_document,
    product_lattice,
)
from src.lattices.fincof import intersect, unite
from src.shared.errors import (
    ArithmeticOverflowError,
    DomainError,
    EnumerationError,
    LatticeAxiomError,
    LatticeMismatchError,
    LatticeSpecError,
)


class TestRegistry:
    """Tests for building lattices from spec strings and mappings."""

    @pytest.mark.parametrize(
        "spec, name, size",
        [
            ("arithmetic", "arithmetic", None),
            ("chain", "chain", None),
            ("chain:5", "chain:5", 5),
            ("powerset:3", "powerset:3", 8),
            ("divisors:1:60", "divisors:1:60", 12),
            ("divisor-interval K=2 N=12", "divisors:2:12", 4),
            ("gf:2:2", "gf:2:2", 5),
            ("gf(3)^2", "gf:3:2", 6),
            ("M3", "M3", 5),
            ("N5", "N5", 5),
            ("fincof", "fincof", None),
        ],
    )
    def test_spec_strings(self, spec, name, size):
        """Test every supported spec string form."""
        lattice = construct_lattice(spec)
        assert lattice.name == name
        assert lattice.size() == size

    def test_mapping_spec(self):
        """Test construction from a mapping with a kind key."""
        lattice = construct_lattice({"kind": "powerset", "universe_size": 4})
        assert isinstance(lattice, PowerSetLattice)
        assert lattice.size() == 16

    def test_descriptor_passes_through(self, chain5):
        """Test that a descriptor is returned unchanged."""
        assert construct_lattice(chain5) is chain5

    def test_product_spec(self):
        """Test the direct product spec A*B."""
        lattice = construct_lattice("chain:2*chain:3")
        assert lattice.size() == 6
        assert lattice.name == "chain:2*chain:3"
        assert lattice.element_names[0] == "(0,0)"
        assert lattice.bounds() == (0, 5)

    @pytest.mark.parametrize(
        "spec",
        ["nonsense", "chain:0", "chain:a", "powerset:65", "divisors:5:12", "divisors:0:12"],
    )
    def test_malformed_specs(self, spec):
        """Test that malformed specs raise LatticeSpecError."""
        with pytest.raises(LatticeSpecError):
            construct_lattice(spec)

    def test_unknown_kind(self):
        """Test that an unknown kind is rejected."""
        with pytest.raises(LatticeSpecError):
            construct_lattice({"kind": "heap"})

    def test_table_document(self, tmp_path):
        """Test loading a finite lattice from a JSON document."""
        path = tmp_path / "two.json"
        path.write_text(
            json.dumps(
                {
                    "elements": ["bot", "top"],
                    "meet": [[0, 0], [0, 1]],
                    "join": [[0, 1], [1, 1]],
                }
            )
        )
        lattice = load_lattice_document(path)
        assert lattice.name == "two"
        assert lattice.bounds() == (0, 1)
        assert lattice.format_element(1) == "top"
        assert construct_lattice(str(path)).size() == 2

    def test_table_axiom_violation(self):
        """Test that a non-commutative meet table is refused with a witness."""
        with pytest.raises(LatticeAxiomError) as info:
            construct_lattice(
                {"elements": ["0", "1"], "meet": [[0, 0], [1, 1]], "join": [[0, 1], [1, 1]]}
            )
        assert info.value.axiom == "meet commutativity"

    def test_table_entry_out_of_range(self):
        """Test that table entries must index elements."""
        with pytest.raises(LatticeSpecError):
            construct_lattice(
                {"elements": ["0", "1"], "meet": [[0, 2], [0, 1]], "join": [[0, 1], [1, 1]]}
            )

    def test_unreadable_document(self, tmp_path):
        """Test that a missing or broken file raises LatticeSpecError."""
        with pytest.raises(LatticeSpecError):
            load_lattice_document(tmp_path / "missing.json")
        broken = tmp_path / "broken.json"
        broken.write_text("{not json")
        with pytest.raises(LatticeSpecError):
            load_lattice_document(broken)


class TestArithmeticLattice:
    """Tests for the gcd/lcm lattice of non-negative integers."""

    def test_operations(self, arithmetic):
        """Test that meet is lcm and join is gcd."""
        assert arithmetic.meet(4, 6) == 12
        assert arithmetic.join(4, 6) == 2
        assert arithmetic.meet(0, 5) == 0
        assert arithmetic.join(0, 5) == 5

    def test_order(self, arithmetic):
        """Test that u <= v iff v divides u, with 0 at the bottom."""
        assert arithmetic.leq(12, 4)
        assert not arithmetic.leq(4, 12)
        assert arithmetic.leq(0, 7)
        assert arithmetic.leq(7, 1)
        assert arithmetic.bounds() == (0, 1)

    def test_foreign_elements(self, arithmetic):
        """Test that negative numbers and non-integers are rejected."""
        with pytest.raises(LatticeMismatchError):
            arithmetic.meet(-1, 2)
        with pytest.raises(LatticeMismatchError):
            arithmetic.join(True, 2)

    def test_overflow(self, arithmetic):
        """Test that an lcm beyond 64 bits raises instead of wrapping."""
        with pytest.raises(ArithmeticOverflowError):
            arithmetic.meet(2**63, 3)

    def test_enumeration_needs_window(self, arithmetic):
        """Test that infinite lattices enumerate only over a window."""
        with pytest.raises(EnumerationError):
            enumerate_lattice(arithmetic)
        assert enumerate_lattice(arithmetic, (0, 5)) == [0, 1, 2, 3, 4, 5]

    def test_parse_element(self, arithmetic):
        """Test integer parsing and rejection of text."""
        assert arithmetic.parse_element(" 42 ") == 42
        with pytest.raises(LatticeSpecError):
            arithmetic.parse_element("forty")


class TestFiniteBackends:
    """Tests for chains, power sets, tables and divisor intervals."""

    def test_chain(self, chain5):
        """Test min/max operations and bounds of a finite chain."""
        assert chain5.meet(1, 3) == 1
        assert chain5.join(1, 3) == 3
        assert chain5.bounds() == (0, 4)
        assert chain5.enumerate() == [0, 1, 2, 3, 4]
        with pytest.raises(LatticeMismatchError):
            chain5.meet(5, 0)

    def test_unbounded_chain(self):
        """Test that the integer chain has no bounds."""
        chain = ChainLattice()
        assert chain.bounds() is None
        assert chain.meet(-7, 3) == -7

    def test_powerset_text(self, powerset3):
        """Test set notation for power set elements."""
        assert powerset3.parse_element("{0,2}") == 5
        assert powerset3.parse_element("{}") == 0
        assert powerset3.format_element(5) == "{0,2}"
        assert powerset3.complement(5) == 2
        with pytest.raises(DomainError):
            powerset3.parse_element("{3}")

    def test_diamond(self, m3):
        """Test that the atoms of M3 meet at 0 and join at 1."""
        u, v, w = m3.element("u"), m3.element("v"), m3.element("w")
        zero, one = m3.bounds()
        assert m3.meet(u, v) == zero
        assert m3.join(v, w) == one
        assert m3.format_element(one) == "1"

    def test_pentagon(self, n5):
        """Test the order 0 < u < w < 1 and 0 < v < 1 of N5."""
        u, v, w = n5.element("u"), n5.element("v"), n5.element("w")
        assert n5.leq(u, w)
        assert n5.join(u, v) == n5.element("1")
        assert n5.meet(w, v) == n5.element("0")
        with pytest.raises(LatticeSpecError):
            n5.element("x")

    def test_table_vector_ops_match_scalars(self, n5):
        """Test that the numpy tables agree with the scalar operations."""
        ops = n5.vector_ops()
        for u in n5.enumerate():
            for v in n5.enumerate():
                assert int(ops.meet(u, v)) == n5.meet(u, v)
                assert int(ops.join(u, v)) == n5.join(u, v)

    def test_divisor_interval(self, divisors60):
        """Test the interval [1, 60] with its conjugation."""
        assert divisors60.bounds() == (60, 1)
        assert divisors60.enumerate()[:4] == [1, 2, 3, 4]
        assert not divisors60.contains(7)
        assert divisors60.conjugate(4) == 15
        with pytest.raises(LatticeMismatchError):
            divisors60.conjugate(7)

    def test_divisor_interval_with_base(self):
        """Test an interval whose top is not 1."""
        lattice = DivisorIntervalLattice(K=2, N=12)
        assert lattice.enumerate() == [2, 4, 6, 12]
        assert lattice.conjugate(4) == 6

    def test_product_of_chains(self):
        """Test componentwise operations of a direct product."""
        lattice = product_lattice(ChainLattice(size=2), ChainLattice(size=2))
        assert isinstance(lattice, FiniteTableLattice)
        low_high = lattice.element("(0,1)")
        high_low = lattice.element("(1,0)")
        assert lattice.meet(low_high, high_low) == lattice.element("(0,0)")
        assert lattice.join(low_high, high_low) == lattice.element("(1,1)")


class TestFinCof:
    """Tests for finite and cofinite sets of prime powers."""

    def test_union_and_intersection(self):
        """Test the four polarity cases."""
        small = FinCofSet.finite([2, 3])
        co = FinCofSet.cofinite_of([2, 5])
        assert unite(small, co) == FinCofSet.cofinite_of([5])
        assert intersect(small, co) == FinCofSet.finite([3])
        assert unite(co, FinCofSet.cofinite_of([5, 7])) == FinCofSet.cofinite_of([5])
        assert intersect(co, FinCofSet.cofinite_of([7])) == FinCofSet.cofinite_of([2, 5, 7])

    def test_boolean_structure(self):
        """Test complement and bounds."""
        lattice = FinCofLattice()
        bottom, top = lattice.bounds()
        u = FinCofSet.finite([1, 4])
        assert lattice.meet(u, lattice.complement(u)) == bottom
        assert lattice.join(u, lattice.complement(u)) == top

    def test_membership(self):
        """Test that only prime powers may be members."""
        lattice = FinCofLattice()
        assert lattice.contains(FinCofSet.finite([1, 8, 9]))
        assert not lattice.contains(FinCofSet.finite([6]))
        assert not lattice.contains(frozenset({2}))

    def test_window_enumeration(self):
        """Test that a window of k prime powers enumerates 2 * 2**k sets."""
        lattice = FinCofLattice()
        assert len(lattice.enumerate((1, 4))) == 2 * 2**4
        with pytest.raises(EnumerationError):
            lattice.enumerate((1, 100))
