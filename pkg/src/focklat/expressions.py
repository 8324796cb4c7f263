"""Parser for the textual state-expression grammar.

    vector := ['+'|'-'] term (('+'|'-') term)*
    term   := [coeff '*'] ket
    coeff  := rational | rational 'i'
            | '(' rational ('+'|'-') rational 'i' ')'
    ket    := '|' int (',' int)* ')'  |  '|)'

``|)`` is the vacuum ket. Whitespace is insignificant; mode indices are
decimal non-negative integers; rationals are ``p`` or ``p/q`` with an
optional leading '-'. The optional sign in front of the first term is a
convenience extension of the grammar above.

Example: ``(1/2+3i)*|1,2,2) + |3)``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ExpressionError
from .exact import ExactComplex
from .states import OccupationState, Statistics
from .vectors import FockVector


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _location(self, pos=None):
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        last_newline = self.text.rfind("\n", 0, pos)
        column = pos - last_newline
        return line, column

    def error(self, message, pos=None):
        line, column = self._location(pos)
        raise ExpressionError(message, line, column)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        if self.pos < len(self.text):
            return self.text[self.pos]
        return ""

    def take(self, char: str):
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def expect(self, char: str):
        if not self.take(char):
            found = self.peek() or "end of input"
            self.error(f"expected '{char}', found {found!r}")

    def at_end(self):
        return self.peek() == ""

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected an integer")
        return int(self.text[start : self.pos])

    def rational(self) -> Fraction:
        negative = self.take("-")
        numerator = self.integer()
        denominator = 1
        if self.take("/"):
            denominator = self.integer()
            if denominator == 0:
                self.error("zero denominator")
        value = Fraction(numerator, denominator)
        return -value if negative else value


def _parse_coefficient(scanner: _Scanner) -> ExactComplex:
    if scanner.take("("):
        real = scanner.rational()
        if scanner.take("+"):
            imag_sign = 1
        elif scanner.take("-"):
            imag_sign = -1
        else:
            scanner.error("expected '+' or '-' between real and imaginary parts")
        imag = scanner.rational()
        scanner.expect("i")
        scanner.expect(")")
        return ExactComplex(real, imag_sign * imag)
    value = scanner.rational()
    if scanner.take("i"):
        return ExactComplex(0, value)
    return ExactComplex(value)


def _parse_ket(scanner: _Scanner, statistics: Statistics) -> OccupationState:
    scanner.expect("|")
    modes = []
    if not scanner.take(")"):
        modes.append(scanner.integer())
        while scanner.take(","):
            modes.append(scanner.integer())
        scanner.expect(")")
    return OccupationState.from_raw(modes, statistics)


def _parse_term(scanner: _Scanner, statistics: Statistics):
    if scanner.peek() == "|":
        return _parse_ket(scanner, statistics), ExactComplex(1)
    coeff = _parse_coefficient(scanner)
    scanner.expect("*")
    return _parse_ket(scanner, statistics), coeff


def parse_vector(text: str, statistics: Statistics) -> FockVector:
    """Parse ``text`` into a FockVector of the given statistics."""
    scanner = _Scanner(text)
    if scanner.at_end():
        scanner.error("empty expression")
    terms = []
    if scanner.take("-"):
        sign = ExactComplex(-1)
    else:
        scanner.take("+")
        sign = ExactComplex(1)
    state, coeff = _parse_term(scanner, statistics)
    terms.append((state, coeff * sign))
    while not scanner.at_end():
        if scanner.take("+"):
            sign = ExactComplex(1)
        elif scanner.take("-"):
            sign = ExactComplex(-1)
        else:
            scanner.error(f"expected '+' or '-', found {scanner.peek()!r}")
        state, coeff = _parse_term(scanner, statistics)
        terms.append((state, coeff * sign))
    return FockVector(statistics, terms)


def render_vector(v: FockVector) -> str:
    """Deterministic textual form, parseable by :func:`parse_vector`."""
    if v.is_zero():
        return "0*|)"
    parts = []
    for state in v:
        coeff = v.terms[state]
        ket = "|" + ",".join(str(m) for m in state.modes) + ")"
        if coeff.im == 0:
            coeff_text = str(coeff.re)
        elif coeff.re == 0:
            coeff_text = f"{coeff.im}i"
        else:
            im_sign = "+" if coeff.im > 0 else "-"
            coeff_text = f"({coeff.re}{im_sign}{abs(coeff.im)}i)"
        parts.append(f"{coeff_text}*{ket}")
    return " + ".join(parts)
