"""
Tests for the principal product on the integers: valuations, periods,
Cayley tables and conjugation.
"""

import math

import numpy as np
import pytest

from src.arithmetic import (
    build_table,
    check_arithmetic_periodicity,
    check_conjugation_iso,
    conjugate_triple,
    corners,
    degenerate_eval,
    divisor_table,
    effective_periods,
    gamma,
    lambda_embed,
    periods,
    prime_power_eval,
    principal_product,
    product_grid,
    quotient_table,
    range_check,
    table_laws,
    valuation,
)
from src.lattices import FinCofSet
from src.lattices.fincof import intersect, unite
from src.shared.errors import DomainError

QUOTIENT_TRIPLES = [
    (3, 2, 4),
    (3, 2, 3),
    (3, 2, 5),
    (2, 6, 3),
    (8, 4, 2),
    (8, 1, 16),
    (5, 1, 3),
]


class TestValuations:
    """Tests for p-adic valuations and the prime-power embedding."""

    def test_valuation(self):
        """Test finite, zero and infinite exponents."""
        assert valuation(2, 12) == 2
        assert valuation(5, 12) == 0
        assert valuation(2, 0) == math.inf

    def test_valuation_errors(self):
        """Test composite primes and negative arguments."""
        with pytest.raises(DomainError):
            valuation(4, 12)
        with pytest.raises(DomainError):
            valuation(3, -9)

    def test_embedding(self):
        """Test that 12 maps to {1, 2, 3, 4} and 0 to every prime power."""
        assert lambda_embed(12) == FinCofSet.finite([1, 2, 3, 4])
        assert lambda_embed(0) == FinCofSet.cofinite_of(())
        with pytest.raises(DomainError):
            lambda_embed(-1)

    @pytest.mark.parametrize("u, v", [(4, 6), (12, 18), (0, 5), (7, 1)])
    def test_embedding_is_a_homomorphism(self, u, v):
        """Test that lcm goes to union and gcd to intersection."""
        assert lambda_embed(math.lcm(u, v)) == unite(lambda_embed(u), lambda_embed(v))
        assert lambda_embed(math.gcd(u, v)) == intersect(lambda_embed(u), lambda_embed(v))


class TestPeriods:
    """Tests for line, column and square periods."""

    def test_periods(self):
        """Test n = lcm(y, b), m = lcm(y, a), N and K."""
        data = periods(3, 2, 4)
        assert (data.n, data.m, data.N, data.K) == (4, 6, 12, 1)
        assert not data.degenerate
        assert (periods(3, 2, 5).n, periods(3, 2, 5).m, periods(3, 2, 5).N) == (10, 6, 30)
        assert periods(6, 0, 10).degenerate
        constant = periods(7, 7, 7)
        assert (constant.n, constant.m, constant.N, constant.K) == (7, 7, 7, 7)

    @pytest.mark.parametrize(
        "triple, expected",
        [((3, 2, 4), (4, 3)), ((3, 2, 5), (10, 6)), ((2, 6, 3), (3, 2)), ((3, 2, 3), (6, 6))],
    )
    def test_effective_periods(self, triple, expected):
        """Test the least periods, which may be proper divisors of (n, m)."""
        assert effective_periods(*triple) == expected

    def test_effective_periods_degenerate(self):
        """Test that N = 0 has no finite period."""
        with pytest.raises(DomainError):
            effective_periods(6, 0, 10)

    @pytest.mark.parametrize("triple", QUOTIENT_TRIPLES)
    def test_periodicity(self, triple):
        """Test x ~ x + n and z ~ z + m over two square periods."""
        report = check_arithmetic_periodicity(*triple)
        assert report.holds
        assert report.evaluations == 2 * (2 * periods(*triple).N) ** 2

    def test_periodicity_degenerate(self):
        """Test that N = 0 is refused."""
        with pytest.raises(DomainError):
            check_arithmetic_periodicity(0, 2, 4)


class TestPrincipalProduct:
    """Tests for values, corners and ranges of x . z."""

    def test_value(self):
        """Test 5 . 6 = 3 for (3, 2, 4)."""
        assert principal_product(3, 2, 4)(5, 6) == 3

    @pytest.mark.parametrize(
        "triple, expected",
        [
            ((3, 2, 4), {"0.0": 12, "0.1": 4, "1.0": 3, "1.1": 1}),
            ((2, 6, 3), {"0.0": 6, "0.1": 3, "1.0": 2, "1.1": 1}),
        ],
    )
    def test_corners(self, triple, expected):
        """Test 0.0 = N, 0.1 = b, 1.0 = a and 1.1 = K."""
        assert corners(*triple) == expected

    def test_grid_matches_scalar_product(self):
        """Test the numpy grid against the scalar product."""
        mul = principal_product(3, 2, 4)
        grid = product_grid(3, 2, 4, range(13), range(13))
        assert grid.shape == (13, 13)
        for x in range(13):
            for z in range(13):
                assert int(grid[x, z]) == mul(x, z)

    def test_grid_with_large_arguments(self):
        """Test the exact fallback for arguments past the numpy range."""
        big = 2**40 * 3
        grid = product_grid(3, 2, 4, [big], [1, 2])
        assert grid.dtype == np.dtype(object)
        assert grid[0, 0] == principal_product(3, 2, 4)(big, 1)

    @pytest.mark.parametrize("triple", [(3, 2, 4), (2, 6, 3), (8, 1, 16)])
    def test_range(self, triple, params):
        """Test K | x . z | N at the corners and on samples."""
        report = range_check(*triple, params=params)
        assert report.holds
        assert report.mode == "sampled"

    def test_range_degenerate(self):
        """Test that N = 0 has unbounded products."""
        with pytest.raises(DomainError):
            range_check(6, 0, 10)

    def test_degenerate_eval(self):
        """Test the closed form (b ^ z) v (a ^ x) at y = 0."""
        assert degenerate_eval(6, 0, 10, 4, 15) == 6
        for triple in [(6, 0, 10), (0, 4, 6), (6, 4, 0)]:
            mul = principal_product(*triple)
            for x in range(1, 20):
                for z in range(1, 20):
                    assert degenerate_eval(*triple, x, z) == mul(x, z)

    def test_degenerate_eval_refuses_regular_triples(self):
        """Test that a triple with N > 0 is refused."""
        with pytest.raises(DomainError):
            degenerate_eval(3, 2, 4, 1, 1)

    def test_prime_power_eval(self):
        """Test that valuations alone give the product of (8, 4, 2)."""
        mul = principal_product(8, 4, 2)
        for x in range(17):
            for z in range(17):
                assert prime_power_eval(2, (3, 2, 1), x, z) == mul(x, z)


class TestCayleyTables:
    """Tests for divisor, quotient and window tables."""

    def test_divisor_tables(self):
        """Test entries of three divisor tables."""
        table = divisor_table(3, 2, 5, 30)
        assert table.entry(10, 6) == 30
        assert table.entry(5, 2) == 5
        assert table.closed
        assert divisor_table(1, 8, 1, 8).entry(2, 4) == 2
        assert divisor_table(1, 8, 1, 8).entry(4, 8) == 4
        assert divisor_table(2, 6, 3, 6).entry(3, 2) == 6

    def test_divisor_table_errors(self):
        """Test that d must be positive."""
        with pytest.raises(DomainError):
            divisor_table(3, 2, 4, 0)

    def test_quotient_table(self):
        """Test the residues mod 12 of (3, 2, 4)."""
        table = quotient_table(3, 2, 4)
        assert len(table.rows) == 12
        assert table.is_square
        assert table.entry(5, 6) == 3
        assert table.entry(0, 0) == 0
        assert table.name == "residues table of (3,2,4)"

    def test_quotient_table_degenerate(self):
        """Test that N = 0 has no quotient."""
        with pytest.raises(DomainError):
            quotient_table(3, 0, 4)

    @pytest.mark.parametrize("triple", QUOTIENT_TRIPLES)
    def test_quotient_laws(self, triple):
        """Test associativity and the weak-band law modulo N."""
        report = table_laws(quotient_table(*triple))
        assert report.holds
        assert report.mode == "exhaustive"

    def test_absorbing_element(self):
        """Test that a is absorbing for (a, y, a)."""
        table = quotient_table(3, 2, 3)
        assert all(table.entry(3, z) == 3 for z in table.cols)
        assert all(table.entry(x, 3) == 3 for x in table.rows)

    def test_divisor_table_laws(self):
        """Test the laws on the divisors of N."""
        assert table_laws(divisor_table(3, 2, 5, 30)).holds
        assert table_laws(divisor_table(2, 6, 3, 6)).holds

    def test_window_tables(self):
        """Test that open or empty windows are refused by the law check."""
        table = build_table(3, 2, 4, range(3), range(2))
        assert not table.is_square
        with pytest.raises(DomainError):
            table_laws(table)
        with pytest.raises(DomainError):
            build_table(3, 2, 4, [], [1])


class TestConjugation:
    """Tests for d -> KN/d and the conjugate product."""

    def test_gamma(self):
        """Test conjugate divisors of KN = 12."""
        assert gamma(3, 2, 4, 2) == 6
        assert gamma(3, 2, 4, 12) == 1
        with pytest.raises(DomainError):
            gamma(3, 2, 4, 5)

    @pytest.mark.parametrize(
        "triple, expected", [((3, 2, 4), (3, 6, 4)), ((2, 6, 3), (2, 1, 3))]
    )
    def test_conjugate_triple(self, triple, expected):
        """Test the conjugate parameters (b', y', a')."""
        assert conjugate_triple(*triple) == expected

    @pytest.mark.parametrize("triple", [(3, 2, 4), (2, 6, 3), (3, 2, 5), (4, 2, 6)])
    def test_isomorphism(self, triple, params):
        """Test that conjugation carries one product to the other."""
        report = check_conjugation_iso(*triple, params=params)
        assert report.holds
        assert report.mode == "exhaustive"

    def test_conjugate_products(self):
        """Test entries of the conjugate products at conjugate arguments."""
        assert principal_product(3, 2, 4)(2, 2) == 2
        assert principal_product(3, 6, 4)(6, 6) == 6 == gamma(3, 2, 4, 2)
        assert principal_product(2, 6, 3)(3, 2) == 6
        assert principal_product(2, 1, 3)(2, 3) == 1 == gamma(2, 6, 3, 6)

    def test_positive_parameters(self):
        """Test that zero parameters are refused."""
        with pytest.raises(DomainError):
            conjugate_triple(0, 2, 4)
