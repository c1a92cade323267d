"""
Tests for the command-line interface.
"""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from src.cli.main import cli, split_arguments

GOLDEN = Path(__file__).parent / "golden"


class TestCli:
    """Tests for command output and exit status."""

    @pytest.fixture
    def runner(self):
        return CliRunner()

    @pytest.fixture
    def invoke(self, runner):
        def run(*args):
            return runner.invoke(cli, list(args))

        return run

    def test_bounds_text(self, invoke):
        """Test the L-list, L, U-list and U lines."""
        result = invoke("bounds", "425", "204", "1000", "200", "402")
        assert result.exit_code == 0
        assert result.output.splitlines() == [
            "quintuple: [425, 204, 1000, 200, 402]",
            "L-list: [600, 40200, 5100, 5100]",
            "L: 300",
            "U-list: [12, 25, 6, 100]",
            "U: 300",
        ]

    def test_bounds_json(self, invoke):
        """Test the JSON document with its schema version."""
        result = invoke("bounds", "425", "200", "1000", "204", "402", "--format", "json")
        assert result.exit_code == 0
        document = json.loads(result.output)
        assert document["schemaVersion"] == 1
        assert document["command"] == "bounds"
        assert document["L-list"] == ["204", "13668", "3400", "3400"]
        assert document["L"] == document["U"] == "68"

    def test_bounds_rejects_foreign_values(self, invoke):
        """Test exit status 2 on a value outside the lattice."""
        result = invoke("bounds", "1", "2", "three", "4", "5")
        assert result.exit_code == 2
        assert "Error:" in result.output

    def test_eval_single_term(self, invoke):
        """Test one named term on a chain."""
        result = invoke("eval", "1", "2", "3", "4", "5", "--lattice", "chain:6", "--term", "L")
        assert result.exit_code == 0
        assert result.output.strip() == "L: 4"

    def test_table_golden(self, invoke):
        """Test the default window of the (3, 2, 4) table."""
        result = invoke("table", "--triple", "3,2,4")
        assert result.exit_code == 0
        assert result.output.rstrip("\n") == (GOLDEN / "table_3_2_4.txt").read_text().rstrip("\n")

    def test_table_bare_counts(self, invoke):
        """Test that --rows R --cols C means the windows 0:R and 0:C."""
        result = invoke("table", "--triple", "3,2,4", "--rows", "4", "--cols", "6")
        assert result.exit_code == 0
        assert result.output.rstrip("\n") == (GOLDEN / "table_3_2_4.txt").read_text().rstrip("\n")
        assert invoke("table", "--triple", "3,2,4", "--rows", "4:x").exit_code == 2

    def test_bad_triple(self, invoke):
        """Test that a triple needs three non-negative integers."""
        assert invoke("table", "--triple", "3,2").exit_code == 2
        assert invoke("table", "--triple", "3,-2,4").exit_code == 2

    def test_quotient_degenerate(self, invoke):
        """Test that N = 0 is reported as an error."""
        result = invoke("quotient", "--triple", "3,0,4")
        assert result.exit_code == 2
        assert "Error:" in result.output

    def test_quotient_laws(self, invoke):
        """Test the quotient table followed by its law report."""
        result = invoke("quotient", "--triple", "3,2,4", "--laws")
        assert result.exit_code == 0
        assert "verdict: holds" in result.output

    def test_divisor_table(self, invoke):
        """Test the divisor table command against its golden copy."""
        result = invoke("divisor-table", "--triple", "2,6,3", "--d", "6")
        assert result.exit_code == 0
        expected = (GOLDEN / "divisors_2_6_3_d6.txt").read_text().rstrip("\n")
        assert result.output.rstrip("\n") == expected

    def test_periods(self, invoke):
        """Test periods and least periods of (3, 2, 4)."""
        result = invoke("periods", "--triple", "3,2,4")
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert "n: 4" in lines
        assert "m: 6" in lines
        assert "N: 12" in lines
        assert "K: 1" in lines
        assert "least line period: 4" in lines
        assert "least column period: 3" in lines

    def test_periods_degenerate(self, invoke):
        """Test that degenerate triples print periods without least periods."""
        result = invoke("periods", "--triple", "6,0,10")
        assert result.exit_code == 0
        assert "N: 0" in result.output.splitlines()
        assert "least line period" not in result.output

    def test_conjugate(self, invoke):
        """Test conjugate parameters, gamma and the isomorphism check."""
        result = invoke("conjugate", "--triple", "3,2,4", "--d", "2", "--check")
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert "KN: 12" in lines
        assert "conjugate triple: [3, 6, 4]" in lines
        assert "gamma(d): 6" in lines
        assert "verdict: holds" in lines

    def test_conjugate_bad_divisor(self, invoke):
        """Test that gamma needs a divisor of KN."""
        assert invoke("conjugate", "--triple", "3,2,4", "--d", "5").exit_code == 2

    def test_hexad(self, invoke):
        """Test the six vertex lines with bounds and opposites."""
        result = invoke("hexad", "--triple", "8,4,2")
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert len(lines) == 6
        assert lines[0] == "e: L(u, 8, 4, 2, v)  bottom 8  top 2  opposite (23)"
        assert lines[2] == "(12): L(8, u, 4, 2, v)  bottom 0  top 2  opposite (123)"

    def test_hexad_json(self, invoke):
        """Test the JSON listing of vertices."""
        result = invoke("hexad", "--triple", "8,4,2", "--format", "json")
        document = json.loads(result.output)
        assert [v["vertex"] for v in document["vertices"]] == [
            "e",
            "(23)",
            "(12)",
            "(123)",
            "(13)",
            "(132)",
        ]
        assert document["vertices"][4]["varying"] == ["b", "z"]

    def test_regions(self, invoke):
        """Test one point in each region."""
        result = invoke(
            "regions", "--universe", "6", "--a", "{0,2,4}", "--y", "{0,1}", "--b", "{0,3,4}"
        )
        assert result.exit_code == 0
        assert result.output.splitlines() == [
            "0: true",
            "1: and",
            "2: left",
            "3: right",
            "4: or",
            "5: false",
        ]

    def test_truth_table_csv(self, invoke):
        """Test a header and 32 rows."""
        result = invoke("truth-table", "--format", "csv")
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert len(lines) == 33
        assert lines[0].startswith("x,a,y,b,z,L1")
        assert lines[0].endswith(",region")

    def test_truth_table_summary(self, invoke):
        """Test the summary of candidate formulas."""
        result = invoke("truth-table", "--summary")
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert "L differs from U: []" in lines
        assert "L = L2 v L3: [01110]" in lines
        assert "ternary rule violated: []" in lines

    def test_check_holds(self, invoke):
        """Test a holding exhaustive check with exit status 0."""
        result = invoke("check", "distributive", "--lattice", "chain:4")
        assert result.exit_code == 0
        assert "verdict: holds" in result.output
        assert "mode: exhaustive" in result.output

    def test_check_fails(self, invoke):
        """Test exit status 1 and a counterexample when L <= U fails on N5."""
        result = invoke("check", "inclusion", "--lattice", "N5")
        assert result.exit_code == 1
        assert "verdict: fails" in result.output
        assert "counterexample: x=" in result.output

    def test_distributive_on_m3(self, invoke):
        """Test that M3 fails L = U with L = 0 and U = 1."""
        result = invoke("check", "distributive", "--lattice", "M3")
        assert result.exit_code == 1
        lines = [line.strip() for line in result.output.splitlines()]
        assert "check: L = U" in lines
        assert "L: 0" in lines
        assert "U: 1" in lines

    def test_modular_on_n5_and_m3(self, invoke):
        """Test that N5 fails L <= U while M3 passes it."""
        n5 = invoke("check", "modular", "--lattice", "N5")
        assert n5.exit_code == 1
        assert "check: L <= U" in n5.output
        m3 = invoke("check", "modular", "--lattice", "M3")
        assert m3.exit_code == 0

    def test_plain_laws(self, invoke):
        """Test the distributive and modular laws under their own names."""
        distributive = invoke("check", "distributive-law", "--lattice", "M3")
        assert distributive.exit_code == 1
        assert "distributive lhs:" in distributive.output
        modular = invoke("check", "modular-law", "--lattice", "N5")
        assert modular.exit_code == 1
        assert "modular lhs:" in modular.output
        assert invoke("check", "modular-law", "--lattice", "M3").exit_code == 0

    def test_check_json(self, invoke):
        """Test a failing report as JSON."""
        result = invoke("check", "equality", "--lattice", "M3", "--format", "json")
        assert result.exit_code == 1
        document = json.loads(result.output)
        assert document["verdict"] == "fails"
        assert document["schemaVersion"] == 1

    def test_check_sampled(self, invoke):
        """Test the sampled mode label on the integers."""
        result = invoke(
            "check", "equality", "--lattice", "arithmetic", "--window", "0:1000", "--samples", "300"
        )
        assert result.exit_code == 0
        assert "mode: sampled(seed=20110523, count=300)" in result.output

    def test_unknown_lattice(self, invoke):
        """Test exit status 2 on a malformed lattice spec."""
        result = invoke("check", "axioms", "--lattice", "nonsense")
        assert result.exit_code == 2
        assert "Error:" in result.output

    def test_diagonal_and_cube(self, invoke):
        """Test the pointwise identity checks."""
        diagonal = invoke("check", "diagonal", "4", "6", "10", "12", "15", "--lattice", "arithmetic")
        assert diagonal.exit_code == 0
        cube = invoke("check", "cube", "4", "6", "10", "15", "--lattice", "arithmetic")
        assert cube.exit_code == 0

    def test_assoc(self, invoke):
        """Test associativity of the principal product over a residue domain."""
        result = invoke("check", "assoc", "--triple", "3,2,4", "--domain", "0:11")
        assert result.exit_code == 0
        assert "check: associativity at e" in result.output

    def test_band_at_vertex(self, invoke):
        """Test the weak-band law at a non-principal vertex."""
        result = invoke("check", "band", "--triple", "8,4,2", "--vertex", "(13)", "--domain", "0:8")
        assert result.exit_code == 0

    def test_torsor(self, invoke):
        """Test the ternary laws on a small power set."""
        result = invoke("check", "torsor", "--lattice", "powerset:2", "--ab", "{0},{1}")
        assert result.exit_code == 0
        assert "evaluations: 1088" in result.output

    def test_range(self, invoke):
        """Test the value range check."""
        result = invoke("check", "range", "--triple", "3,2,4", "--window", "0:500")
        assert result.exit_code == 0

    def test_modular_inclusion(self, invoke):
        """Test the experiment summary line on N5."""
        result = invoke("experiment", "modular-inclusion", "--lattice", "N5")
        assert result.exit_code == 0
        assert result.output.splitlines()[-1] == "modular but L <= U fails: false"


class TestSplitArguments:
    """Tests for comma splitting outside brackets."""

    @pytest.mark.parametrize(
        "text, parts",
        [
            ("3,2,4", ["3", "2", "4"]),
            ("{0,1},{2}", ["{0,1}", "{2}"]),
            ("<1,0;0,1>, <1,1>", ["<1,0;0,1>", "<1,1>"]),
        ],
    )
    def test_split(self, text, parts):
        """Test that set and subspace literals stay whole."""
        assert split_arguments(text) == parts
