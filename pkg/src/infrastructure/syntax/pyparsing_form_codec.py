"""pyparsing grammar for the form text syntax."""
import json
import logging
import re
from dataclasses import dataclass
from fractions import Fraction

from pyparsing import (
    Forward,
    Literal,
    ParseException,
    Regex,
    Suppress,
    Word,
    ZeroOrMore,
    col,
    lineno,
    nums,
    one_of,
)

from ...application.ports.form_codec import FormCodec
from ...domain.entities.bundle import Bundle, Variable
from ...domain.entities.form import Form
from ...domain.entities.run_config import OutputFormat
from ...domain.entities.scalar_expr import ScalarExpr, mono_from_powers
from ...domain.errors.exceptions import FormSyntaxError
from ...domain.services.exterior_algebra import ExteriorAlgebra
from . import form_printer

logger = logging.getLogger(__name__)

SYMBOL = re.compile(r"(dx|du|th|x|u)(\d+)(?:_(\d+|\[\s*\d+(?:\s*,\s*\d+)*\s*\]))?")


@dataclass
class _Node:
    """Parse tree node; evaluated against a bundle after parsing."""

    op: str
    args: list
    loc: int


def _node(op):
    def action(s, loc, toks):
        return _Node(op, list(toks), loc)
    return action


def _fold(op):
    def action(s, loc, toks):
        return toks[0] if len(toks) == 1 else _Node(op, list(toks), loc)
    return action


def _build_grammar():
    """
    sum     := wedge (('+' | '-') wedge)*
    wedge   := product ('^' product)*
    product := unary ('*' unary)*
    unary   := '-' unary | power
    power   := atom ('**' integer)?
    atom    := rational | symbol | '(' sum ')'
    """
    expr = Forward().set_name("expression")
    rational = Regex(r"\d+(?:/\d+)?").set_name("number").set_parse_action(_node("num"))
    symbol = Regex(SYMBOL.pattern).set_name("symbol").set_parse_action(_node("sym"))
    atom = (rational | symbol | (Suppress("(") + expr + Suppress(")"))).set_name("operand")
    power = ((atom + Suppress("**") + Word(nums)).set_parse_action(_node("pow")) | atom).set_name("power")
    unary = Forward().set_name("factor")
    unary <<= (Suppress(Literal("-")) + unary).set_parse_action(_node("neg")) | power
    product = (unary + ZeroOrMore(Suppress("*") + unary)).set_parse_action(_fold("mul")).set_name("product")
    wedge = (product + ZeroOrMore(Suppress("^") + product)).set_parse_action(_fold("wedge")).set_name("wedge product")
    expr <<= (wedge + ZeroOrMore(one_of("+ -") + wedge)).set_parse_action(_fold("sum"))
    return expr


class PyparsingFormCodec(FormCodec):
    """Form codec: text grammar via pyparsing, JSON via the schema in form_printer."""

    def __init__(self):
        """Initialize codec with a compiled grammar."""
        self.grammar = _build_grammar()

    def parse_form(self, src: str, bundle: Bundle) -> Form:
        """
        Parse text (or a jetvar-1 JSON document) into a normalized form.

        Args:
            src: Form text such as "u1_1*dx1 + th1^dx1"
            bundle: Bundle the indices refer to

        Returns:
            Form in the contact basis

        Raises:
            FormSyntaxError: On malformed input or unsorted multi-index digits
            IndexOutOfRangeError: On indices outside the bundle
        """
        if src.lstrip().startswith("{"):
            return ExteriorAlgebra.convert_dy_to_contact(self._parse_json(src, bundle))
        try:
            tree = self.grammar.parse_string(src, parse_all=True)[0]
        except ParseException as e:
            raise FormSyntaxError(f"Cannot parse form: {e.msg}", e.lineno, e.col) from e
        form = ExteriorAlgebra.convert_dy_to_contact(self._evaluate(tree, src, bundle))
        logger.debug(f"Parsed {len(form.components)} word(s) from {len(src)} characters")
        return form

    def parse_scalar(self, src: str, bundle: Bundle) -> ScalarExpr:
        """Parse a scalar expression; generators are rejected."""
        form = self.parse_form(src, bundle)
        if not form.is_scalar():
            raise FormSyntaxError("Expected a scalar expression, found exterior generators")
        return form.scalar_part()

    def print_form(self, form: Form, fmt: OutputFormat = "text") -> str:
        if fmt == "json":
            return form_printer.form_json(form)
        return form_printer.form_text(form)

    def print_scalar(self, expr: ScalarExpr, fmt: OutputFormat = "text") -> str:
        if fmt == "json":
            return form_printer.scalar_json(expr)
        return form_printer.scalar_text(expr)

    # Evaluation

    def _error(self, message: str, src: str, loc: int) -> FormSyntaxError:
        return FormSyntaxError(message, lineno(loc, src), col(loc, src))

    def _evaluate(self, node, src: str, bundle: Bundle) -> Form:
        args = node.args
        if node.op == "num":
            _, _, den = args[0].partition("/")
            if den and int(den) == 0:
                raise self._error(f"Zero denominator in {args[0]}", src, node.loc)
            return Form.constant(bundle, Fraction(args[0]))
        if node.op == "sym":
            return self._symbol(args[0], src, node.loc, bundle)
        if node.op == "neg":
            return -self._evaluate(args[0], src, bundle)
        if node.op == "pow":
            base = self._evaluate(args[0], src, bundle)
            if not base.is_scalar():
                raise self._error("'**' applies to scalar expressions only", src, node.loc)
            return Form.scalar(base.scalar_part() ** int(args[1]))
        if node.op == "mul":
            result = self._evaluate(args[0], src, bundle)
            for arg in args[1:]:
                factor = self._evaluate(arg, src, bundle)
                if factor.is_scalar():
                    result = result * factor.scalar_part()
                elif result.is_scalar():
                    result = factor * result.scalar_part()
                else:
                    loc = getattr(arg, "loc", node.loc)
                    raise self._error("'*' needs a scalar factor; use '^' for wedge", src, loc)
            return result
        if node.op == "wedge":
            forms = [self._evaluate(arg, src, bundle) for arg in args]
            return ExteriorAlgebra.wedge_all(*forms)
        if node.op == "sum":
            result = self._evaluate(args[0], src, bundle)
            for sign, arg in zip(args[1::2], args[2::2]):
                term = self._evaluate(arg, src, bundle)
                result = result + term if sign == "+" else result - term
            return result
        raise self._error(f"Unknown node {node.op}", src, node.loc)

    def _decode(self, text: str, src: str, loc: int) -> tuple[str, int, tuple[int, ...]]:
        """Split a symbol into (kind, index, multi-index)."""
        match = SYMBOL.fullmatch(text)
        if match is None:
            raise self._error(f"Not a symbol: {text!r}", src, loc)
        kind, index, suffix = match.group(1), int(match.group(2)), match.group(3)
        if suffix is None:
            dirs = ()
        elif suffix.startswith("["):
            dirs = tuple(int(d) for d in suffix.strip("[] ").split(","))
        else:
            dirs = tuple(int(d) for d in suffix)
        if list(dirs) != sorted(dirs):
            raise self._error(f"Multi-index of {text} must be non-decreasing", src, loc)
        if kind in ("x", "dx") and suffix is not None:
            raise self._error(f"{text}: base symbols take no multi-index", src, loc)
        return kind, index, dirs

    def _symbol(self, text: str, src: str, loc: int, bundle: Bundle) -> Form:
        kind, index, dirs = self._decode(text, src, loc)
        if kind == "x":
            return Form.scalar(ScalarExpr.base(bundle, index))
        if kind == "u":
            return Form.scalar(ScalarExpr.jet(bundle, index, dirs))
        if kind == "dx":
            return Form.dx(bundle, index)
        if kind == "du":
            return Form.dy(bundle, index, dirs)
        return Form.theta(bundle, index, dirs)

    # JSON

    def _parse_json(self, src: str, bundle: Bundle) -> Form:
        try:
            data = json.loads(src)
        except json.JSONDecodeError as e:
            raise FormSyntaxError(f"Invalid JSON: {e.msg}", e.lineno, e.colno) from e
        if not isinstance(data, dict):
            raise FormSyntaxError("A jetvar-1 document must be a JSON object")
        if data.get("schema") != form_printer.SCHEMA:
            raise FormSyntaxError(f"Unsupported schema: {data.get('schema')!r}")
        if (data.get("n"), data.get("m")) != (bundle.n, bundle.m):
            raise FormSyntaxError(
                f"Document is for n={data.get('n')}, m={data.get('m')}; expected n={bundle.n}, m={bundle.m}"
            )
        try:
            if "scalar" in data:
                return Form.scalar(self._coef_from_json(data["scalar"], src, bundle))
            result = Form.zero(bundle)
            for term in data["terms"]:
                gens = [Form.theta(bundle, i, dirs) for i, dirs in term.get("thetas", [])]
                gens += [Form.dy(bundle, i, dirs) for i, dirs in term.get("dys", [])]
                gens += [Form.dx(bundle, lam) for lam in term.get("dxs", [])]
                piece = Form.scalar(self._coef_from_json(term["coef"], src, bundle))
                result = result + ExteriorAlgebra.wedge_all(piece, *gens)
            return result
        except (AttributeError, KeyError, TypeError, ValueError, ZeroDivisionError) as e:
            raise FormSyntaxError(f"Malformed jetvar-1 document: {e}") from e

    def _coef_from_json(self, entries: list, src: str, bundle: Bundle) -> ScalarExpr:
        terms = {}
        for entry in entries:
            powers = []
            for name, exp in entry["powers"]:
                var = self._variable(name, src, bundle)
                powers.append((var, int(exp)))
            mono = mono_from_powers(powers)
            terms[mono] = terms.get(mono, 0) + Fraction(entry["num"], entry["den"])
        return ScalarExpr(bundle, terms)

    def _variable(self, name: str, src: str, bundle: Bundle) -> Variable:
        kind, index, dirs = self._decode(name, src, 0)
        if kind == "x":
            var = Variable.base(index)
        elif kind == "u":
            var = Variable.jet(index, dirs)
        else:
            raise FormSyntaxError(f"Not a coordinate name: {name!r}")
        var.validate(bundle)
        return var
