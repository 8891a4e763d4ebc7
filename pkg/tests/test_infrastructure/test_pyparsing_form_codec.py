"""Test the form text grammar and JSON codec."""
import json
from fractions import Fraction

import pytest

from src.domain.entities.bundle import Bundle
from src.domain.entities.form import Form
from src.domain.errors.exceptions import BidegreeError, FormSyntaxError, IndexOutOfRangeError
from src.domain.services.exterior_algebra import ExteriorAlgebra
from tests.conftest import dx, th, u, x

wedge = ExteriorAlgebra.wedge


def test_parse_sum_of_terms(codec, b11):
    form = codec.parse_form("u1_1*dx1 + th1^dx1", b11)
    assert form == dx(b11) * u(b11, 1) + wedge(th(b11), dx(b11))


def test_repeated_generator_parses_to_zero(codec, b11):
    form = codec.parse_form("th1 ^ th1", b11)
    assert form.is_zero()
    assert codec.print_form(form) == "0"


def test_dy_is_converted(codec, b11):
    assert codec.parse_form("du1", b11) == th(b11) + dx(b11) * u(b11, 1)
    assert codec.print_form(codec.parse_form("du1", b11)) == "th1 + u1_1*dx1"


def test_unary_minus_binds_to_the_factor(codec, b11):
    form = codec.parse_form("-u1_11*th1^dx1", b11)
    assert form == wedge(th(b11), dx(b11)) * -u(b11, 1, 1)


def test_wedge_order_gives_sign(codec, b11):
    assert codec.parse_form("dx1^th1", b11) == -wedge(th(b11), dx(b11))


def test_powers_and_parentheses(codec, b11):
    expr = codec.parse_scalar("(x1 + u1)**2 - 1/2*u1_1", b11)
    expected = x(b11) ** 2 + x(b11) * u(b11) * 2 + u(b11) ** 2 - u(b11, 1) * Fraction(1, 2)
    assert expr == expected


def test_multi_index_spellings(codec, b21):
    assert codec.parse_scalar("u1_12", b21) == u(b21, 1, 2)
    assert codec.parse_scalar("u1_[1,2]", b21) == u(b21, 1, 2)


def test_print_inline_and_parenthesized_coefficients(codec, b11):
    form = wedge(th(b11), dx(b11)) * -u(b11, 1, 1)
    assert codec.print_form(form) == "-u1_11*th1^dx1"
    form = wedge(th(b11), dx(b11)) * (u(b11) + x(b11))
    assert codec.print_form(form) == "(x1 + u1)*th1^dx1"


def test_print_scalar(codec, b11):
    expr = x(b11) - u(b11, 1) ** 2 * Fraction(1, 2)
    assert codec.print_scalar(expr) == "x1 - 1/2*u1_1**2"
    assert codec.print_scalar(expr * 0) == "0"


def test_printed_text_parses_back(codec, b21):
    form = (
        Form.scalar(x(b21, 1) * Fraction(-1, 3) + u(b21, 2))
        + wedge(th(b21, 1), dx(b21, 2)) * (u(b21) ** 2 - x(b21, 1))
        + wedge(th(b21), th(b21, 1, 2)) * Fraction(1, 2)
    )
    assert codec.parse_form(codec.print_form(form), b21) == form


def test_json_schema(codec, b11):
    form = wedge(th(b11), dx(b11)) * -u(b11, 1, 1)
    data = json.loads(codec.print_form(form, "json"))
    assert data == {
        "schema": "jetvar-1",
        "n": 1,
        "m": 1,
        "terms": [
            {
                "coef": [{"num": -1, "den": 1, "powers": [["u1_11", 1]]}],
                "thetas": [[1, []]],
                "dxs": [1],
            }
        ],
    }
    assert codec.parse_form(json.dumps(data), b11) == form


def test_scalar_json(codec, b11):
    text = codec.print_scalar(u(b11) * Fraction(1, 2), "json")
    assert json.loads(text)["scalar"] == [{"num": 1, "den": 2, "powers": [["u1", 1]]}]
    assert codec.parse_scalar(text, b11) == u(b11) * Fraction(1, 2)


def test_json_for_other_bundle_is_rejected(codec, b11):
    text = codec.print_form(th(Bundle(2, 1)), "json")
    with pytest.raises(FormSyntaxError):
        codec.parse_form(text, b11)


def test_malformed_json(codec, b11):
    with pytest.raises(FormSyntaxError):
        codec.parse_form("{not json", b11)
    with pytest.raises(FormSyntaxError):
        codec.parse_form('{"schema": "jetvar-1", "n": 1, "m": 1}', b11)


@pytest.mark.parametrize("src", ["u1 +", "u1_21", "x1_1", "th1*th1", "th1**2", "y1", ""])
def test_syntax_errors(codec, b11, src):
    with pytest.raises(FormSyntaxError):
        codec.parse_form(src, b11)


def test_syntax_error_position(codec, b11):
    with pytest.raises(FormSyntaxError) as info:
        codec.parse_form("u1\n+ u1_21", b11)
    assert (info.value.line, info.value.column) == (2, 3)


def test_index_out_of_range(codec, b11):
    with pytest.raises(IndexOutOfRangeError):
        codec.parse_form("u2", b11)
    with pytest.raises(IndexOutOfRangeError):
        codec.parse_form("dx2", b11)


def test_scalar_parse_rejects_generators(codec, b11):
    with pytest.raises(FormSyntaxError):
        codec.parse_scalar("u1*th1", b11)


def test_source_form_parse(codec, b11):
    source = codec.parse_source_form("u1_11*th1^dx1", b11)
    assert source.components == (u(b11, 1, 1),)
    with pytest.raises(BidegreeError):
        codec.parse_source_form("th1_1^dx1", b11)


def test_zero_denominator(codec, b11):
    with pytest.raises(FormSyntaxError) as info:
        codec.parse_form("u1 + 1/0", b11)
    assert (info.value.line, info.value.column) == (1, 6)


def test_zero_denominator_in_json(codec, b11):
    document = {
        "schema": "jetvar-1",
        "n": 1,
        "m": 1,
        "terms": [{"coef": [{"num": 1, "den": 0, "powers": []}], "thetas": [], "dxs": [1]}],
    }
    with pytest.raises(FormSyntaxError):
        codec.parse_form(json.dumps(document), b11)


def test_json_term_must_be_an_object(codec, b11):
    with pytest.raises(FormSyntaxError):
        codec.parse_form('{"schema": "jetvar-1", "n": 1, "m": 1, "terms": [5]}', b11)


@pytest.mark.parametrize("src", ["*u1", "u1 ^", "(u1", "u1 + + u1"])
def test_syntax_error_messages_are_short(codec, b11, src):
    with pytest.raises(FormSyntaxError) as info:
        codec.parse_form(src, b11)
    assert "Forward" not in str(info.value)
    assert len(str(info.value)) < 200
