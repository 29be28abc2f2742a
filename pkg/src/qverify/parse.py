"""Parser for the command-line eta-quotient notation.

    expr   := atom (('*' | '/') atom)*
    atom   := ('f' INT | 'phineg' | 'phi') ('^' ['-'] INT)?

``fK`` is the Euler product f_K, ``phi`` is phi(q) and ``phineg`` is
phi(-q). Whitespace is ignored. Positions in errors are 0-based offsets
into the original string.
"""

from __future__ import annotations

from typing import Optional

from .errors import ParseError
from .expr import SeriesExpr, f, phi, phi_neg


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, word: str) -> bool:
        self.skip()
        if self.text.startswith(word, self.pos):
            self.pos += len(word)
            return True
        return False

    def integer(self, what: str) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError(f"expected {what}", start)
        return int(self.text[start:self.pos])


def _atom(sc: _Scanner) -> SeriesExpr:
    sc.skip()
    start = sc.pos
    if sc.take("phineg"):
        base: SeriesExpr = phi_neg()
    elif sc.take("phi"):
        base = phi()
    elif sc.take("f"):
        k = sc.integer("subscript after 'f'")
        if k < 1:
            raise ParseError("subscript must be at least 1", start + 1)
        base = f(k)
    else:
        raise ParseError("expected 'fK', 'phi' or 'phineg'", start)
    if sc.take("^"):
        sign = -1 if sc.take("-") else 1
        base = base ** (sign * sc.integer("exponent"))
    return base


def parse_eta(text: str) -> SeriesExpr:
    """Parse ``text`` into a series expression."""
    sc = _Scanner(text)
    result: Optional[SeriesExpr] = _atom(sc)
    while True:
        op = sc.peek()
        if op == "":
            return result
        if op not in "*/":
            raise ParseError(f"unexpected {op!r}", sc.pos)
        sc.pos += 1
        rhs = _atom(sc)
        result = result * rhs if op == "*" else result / rhs
