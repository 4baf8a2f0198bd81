"""Parsing and canonical printing of polynomial expressions.

Grammar (whitespace-insensitive, multiplication always explicit):

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' '-'? INTEGER)?
    atom   := INTEGER | NAME | '(' expr ')'

Negative exponents are allowed on variables only, so Laurent monomials are
written x^-2 while parameters stay polynomial in exponents.  The divisor of
'/' must be variable-free (an exact scalar), which is how printed field
coefficients such as (t + 1)/2 round-trip.  parse(print(f)) == f for every
polynomial the package produces.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .laurent import LaurentPoly
from .scalars import FieldScalar, ParamPoly


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN_RE = re.compile(r"(\d+)|([A-Za-z][A-Za-z0-9_]*)|([-+*/^()])|(\S)")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    for match in _TOKEN_RE.finditer(text):
        position = match.start() + 1
        number, name, operator, junk = match.groups()
        if number is not None:
            tokens.append(("int", number, position))
        elif name is not None:
            tokens.append(("name", name, position))
        elif operator is not None:
            tokens.append(("op", operator, position))
        else:
            raise ParseError(f"unexpected character {junk!r}", position)
    tokens.append(("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, tokens, variables, parameters):
        self.tokens = tokens
        self.pos = 0
        self.n = len(variables)
        self.k = len(parameters)
        self.var_index = {name: i for i, name in enumerate(variables)}
        self.param_index = {name: j for j, name in enumerate(parameters)}

    def _peek(self):
        return self.tokens[self.pos]

    def _next(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def _peek_op(self, *ops) -> bool:
        kind, value, _ = self._peek()
        return kind == "op" and value in ops

    def parse(self) -> LaurentPoly:
        poly = self._expr()
        kind, value, position = self._peek()
        if kind != "end":
            raise ParseError(f"unexpected {value!r}", position)
        return poly

    def _expr(self) -> LaurentPoly:
        poly = self._term()
        while self._peek_op("+", "-"):
            _, op, _ = self._next()
            right = self._term()
            poly = poly + right if op == "+" else poly - right
        return poly

    def _term(self) -> LaurentPoly:
        poly = self._unary()
        while self._peek_op("*", "/"):
            _, op, position = self._next()
            right = self._unary()
            if op == "*":
                poly = poly * right
            else:
                if any(any(exp) for exp in right.terms):
                    raise ParseError("division requires a variable-free divisor", position)
                scalar = right.constant_coefficient()
                if not scalar:
                    raise ParseError("division by zero", position)
                poly = poly.scale(FieldScalar.one(self.k) / scalar)
        return poly

    def _unary(self) -> LaurentPoly:
        if self._peek_op("+", "-"):
            _, op, _ = self._next()
            poly = self._unary()
            return -poly if op == "-" else poly
        return self._power()

    def _power(self) -> LaurentPoly:
        base, meta = self._atom()
        if not self._peek_op("^"):
            return base
        _, _, caret_pos = self._next()
        negative = False
        if self._peek_op("-"):
            self._next()
            negative = True
        kind, value, position = self._peek()
        if kind != "int":
            raise ParseError("exponent must be an integer literal", position)
        self._next()
        exponent = int(value)
        if not negative:
            return base ** exponent
        if meta is None:
            raise ParseError("negative exponents are allowed on variables only", caret_pos)
        role, index = meta
        if role == "param":
            raise ParseError("negative exponent on a parameter", caret_pos)
        exps = [0] * self.n
        exps[index] = -exponent
        return LaurentPoly.monomial(self.n, self.k, tuple(exps))

    def _atom(self):
        kind, value, position = self._next()
        if kind == "int":
            return LaurentPoly.constant(self.n, self.k, Fraction(int(value))), None
        if kind == "name":
            if value in self.var_index:
                index = self.var_index[value]
                return LaurentPoly.variable(self.n, self.k, index), ("var", index)
            if value in self.param_index:
                index = self.param_index[value]
                scalar = FieldScalar.parameter(self.k, index)
                return LaurentPoly.constant(self.n, self.k, 1).scale(scalar), ("param", index)
            raise ParseError(f"unknown name {value!r}", position)
        if kind == "op" and value == "(":
            poly = self._expr()
            kind, value, position = self._next()
            if not (kind == "op" and value == ")"):
                raise ParseError("expected ')'", position)
            return poly, None
        raise ParseError("expected a number, a name, or '('", position)


def parse_expression(text: str, variables, parameters=()) -> LaurentPoly:
    """Parse an expression over the named variables and parameters."""
    names = list(variables) + list(parameters)
    if len(set(names)) != len(names):
        raise ValueError("variable and parameter names must be disjoint")
    if not text.strip():
        raise ParseError("empty expression", 1)
    return _Parser(_tokenize(text), tuple(variables), tuple(parameters)).parse()


def _monomial_text(exponents, names) -> str:
    pieces = []
    for name, exp in zip(names, exponents):
        if exp == 0:
            continue
        pieces.append(name if exp == 1 else f"{name}^{exp}")
    return "*".join(pieces)


def _param_poly_text(poly: ParamPoly, parameters) -> str:
    if poly.is_zero():
        return "0"
    pieces = []
    for exp, coeff in poly.sorted_terms():
        negative = coeff < 0
        magnitude = -coeff if negative else coeff
        mono = _monomial_text(exp, parameters)
        if mono:
            body = mono if magnitude == 1 else f"{magnitude}*{mono}"
        else:
            body = str(magnitude)
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)


def format_scalar(value: FieldScalar, parameters=()) -> str:
    """Canonical text of a field scalar, e.g. 3/2, -t/2, (t + 1)/2."""
    if value.is_zero():
        return "0"
    numerator = _param_poly_text(value.num, parameters)
    if value.den.is_constant() and value.den.constant_value() == 1:
        return numerator
    if len(value.num.terms) > 1:
        numerator = f"({numerator})"
    if value.den.is_constant():
        denominator = str(value.den.constant_value())
    else:
        denominator = f"({_param_poly_text(value.den, parameters)})"
    return f"{numerator}/{denominator}"


def format_poly(poly: LaurentPoly, variables, parameters=()) -> str:
    """Canonical text of a Laurent polynomial: descending graded-lex terms."""
    if poly.is_zero():
        return "0"
    one = FieldScalar.one(poly.k)
    pieces = []
    for exp, coeff in poly.sorted_terms():
        negative = coeff.is_negative_leading()
        magnitude = -coeff if negative else coeff
        mono = _monomial_text(exp, variables)
        text = format_scalar(magnitude, parameters)
        # A multi-term numerator with trivial denominator needs grouping before
        # '*'; with a denominator, format_scalar has already parenthesized it.
        den_is_one = magnitude.den.is_constant() and magnitude.den.constant_value() == 1
        if len(magnitude.num.terms) > 1 and den_is_one:
            text = f"({text})"
        if mono:
            body = mono if magnitude == one else f"{text}*{mono}"
        else:
            body = text
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)
