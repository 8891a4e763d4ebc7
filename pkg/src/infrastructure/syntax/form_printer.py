"""Canonical text and JSON rendering of scalars and forms."""
import json
from fractions import Fraction

from ...domain.entities.form import Form, Generator, generator_name
from ...domain.entities.scalar_expr import Monomial, ScalarExpr

SCHEMA = "jetvar-1"


def _monomial_text(mono: Monomial) -> str:
    return "*".join(var.name if exp == 1 else f"{var.name}**{exp}" for var, exp in mono)


def _term_text(coef: Fraction, tail: str) -> str:
    """coef·tail with unit coefficients elided; tail may be empty."""
    if not tail:
        return str(coef)
    if coef == 1:
        return tail
    if coef == -1:
        return f"-{tail}"
    return f"{coef}*{tail}"


def _join(parts: list[str]) -> str:
    if not parts:
        return "0"
    out = parts[0]
    for part in parts[1:]:
        out += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
    return out


def scalar_text(expr: ScalarExpr) -> str:
    """Sum of terms in monomial order, e.g. "x1 - 1/2*u1_1**2"."""
    return _join([_term_text(coef, _monomial_text(mono)) for mono, coef in expr.items()])


def form_text(form: Form) -> str:
    """
    Sum of coefficient*word terms in canonical word order.

    Single-monomial coefficients are written inline ("-u1_11*th1^dx1"); longer
    coefficients are parenthesized ("(u1 + x1)*th1^dx1").
    """
    parts = []
    for word, coef in form.items():
        names = "^".join(generator_name(g) for g in word)
        if not names:
            parts.append(scalar_text(coef))
        elif len(coef) == 1:
            (mono, value), = coef.items()
            tail = f"{_monomial_text(mono)}*{names}" if mono else names
            parts.append(_term_text(value, tail))
        else:
            parts.append(f"({scalar_text(coef)})*{names}")
    return _join(parts)


def _coef_json(expr: ScalarExpr) -> list[dict]:
    return [
        {
            "num": coef.numerator,
            "den": coef.denominator,
            "powers": [[var.name, exp] for var, exp in mono],
        }
        for mono, coef in expr.items()
    ]


def scalar_json(expr: ScalarExpr) -> str:
    bundle = expr.bundle
    return json.dumps({"schema": SCHEMA, "n": bundle.n, "m": bundle.m, "scalar": _coef_json(expr)})


def form_json(form: Form) -> str:
    """JSON rendering; dy factors, when present, go under "dys"."""
    terms = []
    for term in form.terms:
        entry = {
            "coef": _coef_json(term.coef),
            "thetas": [[g.index, list(g.dirs)] for g in term.thetas if g.kind == Generator.THETA],
            "dxs": [g.index for g in term.dxs],
        }
        dys = [[g.index, list(g.dirs)] for g in term.thetas if g.kind == Generator.DY]
        if dys:
            entry["dys"] = dys
        terms.append(entry)
    bundle = form.bundle
    return json.dumps({"schema": SCHEMA, "n": bundle.n, "m": bundle.m, "terms": terms})
