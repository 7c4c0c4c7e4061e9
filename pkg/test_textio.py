from fractions import Fraction
from pathlib import Path

import pytest

from frobnil.algebra.frobenius import builtin
from frobnil.algebra.linear import Element
from frobnil.algebra.relations import Gen
from frobnil.exceptions import (
    ExprSyntaxError, IllegalSymbolForTarget, ParseError, StrandOutOfRange, UnknownSymbol,
    ValidationFailed,
)
from frobnil.textio import (
    ParseContext, Target, build_algebra, dump_config, load_config, make_target, normalize,
    parse, parse_config, parse_element, print_element,
)
from frobnil.textio.parser import Number, Product, Sum, Symbol

ALGEBRA_DIR = Path(__file__).parent / "algebras"


def normal_form(expr, name="ground", n=2, target=Target.NILHECKE):
    A = builtin(name)
    return print_element(normalize(expr, make_target(target, A, n)), A)


class TestParser:
    """Expression trees and parse errors."""

    def test_generator(self):
        """x2 is a single symbol."""
        assert parse("x2", ParseContext(2, ("1",))) == Symbol(Gen("x", 2))

    def test_parenthesized_index(self):
        """u(1) is the same as u1."""
        context = ParseContext(3, ("1",))
        assert parse("u(1)", context) == parse("u1", context)

    def test_signed_rational_product(self):
        """-1/2*c[1] keeps its sign on the term."""
        tree = parse("-1/2*c[1]", ParseContext(2, ("1", "c")))
        assert tree == Sum(((-1, Product((Number(Fraction(1, 2)), Symbol(Gen("a", 1, "c"))))),))

    @pytest.mark.parametrize("expr", ["x1 +", "1/0", "(x1", "x1 x2", "x1 $"])
    def test_syntax_errors(self, expr):
        """Malformed input raises ExprSyntaxError."""
        with pytest.raises(ExprSyntaxError):
            parse(expr, ParseContext(2, ("1",)))

    def test_error_position(self):
        """Errors report line and column."""
        with pytest.raises(ExprSyntaxError) as exc_info:
            parse("x1 +\n  $", ParseContext(2, ("1",)))
        assert (exc_info.value.line, exc_info.value.column) == (2, 3)
        assert "(line 2, column 3)" in str(exc_info.value)

    @pytest.mark.parametrize("expr", ["z1", "q[1]", "w"])
    def test_unknown_symbols(self, expr):
        """Undeclared generators and labels raise UnknownSymbol."""
        with pytest.raises(UnknownSymbol):
            parse(expr, ParseContext(2, ("1", "c")))

    @pytest.mark.parametrize("expr", ["x0", "x3", "u2", "c[3]"])
    def test_strands_out_of_range(self, expr):
        """Indices are checked against n; crossings stop at n - 1."""
        with pytest.raises(StrandOutOfRange):
            parse(expr, ParseContext(2, ("1", "c")))


class TestNormalForms:
    """Printed normal forms in each target."""

    def test_dot_slides_over_ground(self):
        """The nilHecke relations collapse to 1."""
        assert normal_form("u1*x2 - x1*u1") == "1"
        assert normal_form("x2*u1 - u1*x1") == "1"
        assert normal_form("u1*u1") == "0"

    def test_dot_slides_over_clifford(self):
        """u_1 x_2 = x_1 u_1 + tau_1"""
        assert normal_form("u1*x2", "clifford_odd") == "x1*u1 + c[1] - c[2]"

    def test_nilcoxeter_target(self):
        """Tokens slide through crossings and odd tokens anticommute."""
        target = Target.NILCOXETER
        assert normal_form("u1*c[1]", "clifford_odd", target=target) == "c[2]*u1"
        assert normal_form("c[1]*c[2]", "clifford_odd", target=target) == "-c[2]*c[1]"
        assert normal_form("u1*c[1]*c[2]", "clifford_odd", target=target) == "c[2]*c[1]*u1"

    def test_polynomial_target(self):
        """Odd dots anticommute, even dots expand binomially."""
        assert normal_form("x2*x1", "clifford_odd", target=Target.POLYNOMIAL) == "-x1*x2"
        assert normal_form("(x1 + x2)^2", target=Target.POLYNOMIAL) == "x2^2 + 2*x1*x2 + x1^2"
        assert normal_form("1/2*x1 - 3", target=Target.POLYNOMIAL) == "-3 + 1/2*x1"

    def test_polynomial_target_rejects_crossings(self):
        """u_i is not a polynomial."""
        with pytest.raises(IllegalSymbolForTarget):
            normal_form("u1", target=Target.POLYNOMIAL)

    def test_odd_nilhecke_target(self):
        """Clifford generators, odd dots and odd crossings."""
        target = Target.ODD_NILHECKE
        assert normal_form("v1*v1", "clifford_odd", target=target) == "0"
        assert normal_form("c1*c1", "clifford_odd", target=target) == "1"
        assert normal_form("c1*c2 + c2*c1", "clifford_odd", target=target) == "0"
        assert normal_form("y1*y2 + y2*y1", "clifford_odd", target=target) == "0"
        assert normal_form("v1*y2 + y1*v1", "clifford_odd", target=target) == "1"

    def test_tensor_words_print_factor_n_first(self):
        """The word (c, 1) prints as c[1]."""
        A = builtin("clifford_odd")
        assert print_element(Element({(1, 0): 1, (0, 1): -1}), A) == "c[1] - c[2]"
        assert print_element(Element(), A) == "0"

    def test_algebra_elements_print_by_label(self):
        """Elements of A itself are keyed by basis index and print as labels."""
        A = builtin("cyclic_group(2)")
        assert print_element(Element({1: Fraction(1, 2), 0: -1}), A) == "-1 + 1/2*g"
        assert parse_element(print_element(Element({1: 3, 0: 2}), A), A) == Element({1: 3, 0: 2})

    def test_nilpotent_token_on_one_strand(self):
        """y[1]*y[1] = 0 in P_1 over the dual numbers."""
        assert normal_form("y[1]*y[1]", "dual_numbers", n=1, target=Target.POLYNOMIAL) == "0"

    @pytest.mark.parametrize("name,target,expr", [
        ("clifford_odd", Target.NILHECKE, "u1*x2*c[1] + 1/2*x1^2*c[2]"),
        ("dual_numbers", Target.NILHECKE, "(u1*x1 + y[2])^2"),
        ("clifford_odd", Target.NILCOXETER, "u1*c[1]*c[2] - c[1]"),
        ("clifford_odd", Target.POLYNOMIAL, "x2*x1*c[1] - 3/4*c[2]*x1^2"),
        ("clifford_odd", Target.ODD_NILHECKE, "v1*y2*c1 - c2*y1"),
    ])
    def test_printed_forms_parse_back(self, name, target, expr):
        """Printing a normal form and evaluating the text gives it back."""
        A = builtin(name)
        algebra = make_target(target, A, 2)
        e = normalize(expr, algebra)
        assert normalize(print_element(e, A), algebra) == e


class TestAlgebraFiles:
    """Reading and writing algebra configs."""

    @pytest.mark.parametrize("name", ["ground", "clifford_odd", "clifford_even", "dual_numbers", "cyclic_group(3)"])
    def test_dump_and_load(self, name):
        """A dumped config builds a structurally equal algebra."""
        A = builtin(name)
        assert build_algebra(parse_config(dump_config(A))).structurally_equal(A)

    @pytest.mark.parametrize("filename", ["clifford_odd.alg", "cyclic_group2.alg", "odd_dual_numbers.alg"])
    def test_shipped_configs_load(self, filename):
        """Every config in algebras/ validates."""
        A = load_config(ALGEBRA_DIR / filename)
        assert A.report.passed
        assert A.symmetric

    def test_shipped_clifford_matches_builtin(self):
        """The file and the built-in describe the same algebra."""
        assert load_config(ALGEBRA_DIR / "clifford_odd.alg").structurally_equal(builtin("clifford_odd"))

    def test_missing_header(self):
        """The first line must name the format."""
        with pytest.raises(ParseError):
            parse_config("name = x\nunit = 1\n[basis]\n1 even\n")

    def test_error_carries_line_number(self):
        """An undeclared label in [mult] is reported on its line."""
        text = "frobnil-algebra v1\nname = x\nunit = 1\n\n[basis]\n1 even\n\n[mult]\n1*g = 1\n"
        with pytest.raises(ParseError) as exc_info:
            parse_config(text)
        assert exc_info.value.line == 9

    def test_non_associative_config(self):
        """Axiom failures raise ValidationFailed with the full report."""
        text = "\n".join([
            "frobnil-algebra v1", "name = broken", "unit = 1",
            "[basis]", "1 even", "a even", "b even",
            "[trace]", "1 = 1",
            "[mult]", "a*a = b", "a*b = a",
        ])
        with pytest.raises(ValidationFailed) as exc_info:
            build_algebra(parse_config(text))
        assert not exc_info.value.report.check("associativity").passed

    def test_parse_element(self):
        """Linear combinations of basis labels."""
        A = builtin("cyclic_group(2)")
        assert parse_element("1/2*g - 1", A) == Element({1: Fraction(1, 2), 0: -1})
        assert parse_element("g", A) == Element({1: 1})
