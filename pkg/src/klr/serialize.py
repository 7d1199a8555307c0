"""Text form of thin elements.

    element := "0" | term (("+" | "-") term)*
    term    := ["-"] [count "*"] factor* "e(" colours ")"
    factor  := "psi[" j ("," j)* "]" | "x[" a ("," a)* "]"

Factors are read left to right from the top of the diagram down.
"""

import re
from typing import Dict, List, Optional, Tuple

from src.klr.element import TermWord, ThinElement, zero
from src.utils.errors import BoundaryMismatchError, ParseError

_TOKEN = re.compile(r"psi\[|x\[|e\(|\d+|[-+*\],)]|[^\s]")


def _format_word(word: TermWord) -> List[str]:
    pieces: List[str] = []
    crossings: List[int] = []
    for factor in word:
        if isinstance(factor, int):
            crossings.append(factor)
            continue
        if crossings:
            pieces.append("psi[" + ",".join(map(str, crossings)) + "]")
            crossings = []
        pieces.append("x[" + ",".join(map(str, factor)) + "]")
    if crossings:
        pieces.append("psi[" + ",".join(map(str, crossings)) + "]")
    return pieces


def format_element(element: ThinElement) -> str:
    """Terms in basis order, `0` for the zero element."""
    if not element.terms:
        return "0"
    colours = "e(" + " ".join(map(str, element.bottom)) + ")"
    text = ""
    for index, (word, coeff) in enumerate(element.terms.items()):
        body = " ".join(_format_word(word) + [colours])
        if abs(coeff) != 1:
            body = f"{abs(coeff)} * {body}"
        if index == 0:
            text = ("-" if coeff < 0 else "") + body
        else:
            text += (" - " if coeff < 0 else " + ") + body
    return text


class _Scanner:
    def __init__(self, text: str):
        self.tokens: List[Tuple[str, int]] = [(m.group(), m.start()) for m in _TOKEN.finditer(text)]
        self.index = 0
        self.end = len(text)

    def peek(self) -> Optional[str]:
        return self.tokens[self.index][0] if self.index < len(self.tokens) else None

    @property
    def position(self) -> int:
        return self.tokens[self.index][1] if self.index < len(self.tokens) else self.end

    def take(self) -> str:
        token = self.peek()
        if token is None:
            raise ParseError("unexpected end of input", self.end)
        self.index += 1
        return token

    def expect(self, wanted: str) -> None:
        position = self.position
        token = self.take()
        if token != wanted:
            raise ParseError(f"expected {wanted!r}, got {token!r}", position)

    def integer(self) -> int:
        position = self.position
        token = self.take()
        if not token.isdigit():
            raise ParseError(f"expected an integer, got {token!r}", position)
        return int(token)

    def integer_list(self, closing: str, separator: Optional[str]) -> List[int]:
        values = [self.integer()]
        while self.peek() != closing:
            if separator is not None and self.peek() == separator:
                self.take()
            values.append(self.integer())
        self.expect(closing)
        return values


def _parse_term(scanner: _Scanner) -> Tuple[Tuple[int, ...], TermWord, int, int]:
    start = scanner.position
    coeff = 1
    if scanner.peek() is not None and scanner.peek().isdigit():
        coeff = scanner.integer()
        scanner.expect("*")
    factors: List[Tuple[str, List[int], int]] = []
    while True:
        token = scanner.peek()
        position = scanner.position
        if token == "psi[":
            scanner.take()
            factors.append(("psi", scanner.integer_list("]", ","), position))
        elif token == "x[":
            scanner.take()
            factors.append(("x", scanner.integer_list("]", ","), position))
        elif token == "e(":
            scanner.take()
            colours = tuple(scanner.integer_list(")", ",")) if scanner.peek() != ")" else ()
            if not colours:
                scanner.expect(")")
            break
        else:
            raise ParseError(f"expected psi[, x[ or e(, got {token!r}", position)

    strands = len(colours)
    word: List = []
    for kind, values, position in factors:
        if kind == "psi":
            bad = [j for j in values if not 1 <= j < strands]
            if bad:
                raise ParseError(f"crossing position {bad[0]} outside 1..{strands - 1}", position)
            word.extend(values)
        else:
            if len(values) != strands:
                raise ParseError(f"dot vector has {len(values)} entries for {strands} strands", position)
            word.append(tuple(values))
    return colours, tuple(word), coeff, start


def parse_element(text: str) -> ThinElement:
    """Read the text form back into a (not yet reduced) ThinElement."""
    if text.strip() == "0":
        return zero(())
    scanner = _Scanner(text)
    if scanner.peek() is None:
        raise ParseError("empty element", 0)

    terms: Dict[TermWord, int] = {}
    bottom: Optional[Tuple[int, ...]] = None
    sign = 1
    if scanner.peek() == "-":
        scanner.take()
        sign = -1
    while True:
        colours, word, coeff, start = _parse_term(scanner)
        if bottom is None:
            bottom = colours
        elif colours != bottom:
            raise BoundaryMismatchError(f"term at position {start} starts on {colours}, expected {bottom}")
        terms[word] = terms.get(word, 0) + sign * coeff
        token = scanner.peek()
        if token is None:
            break
        if token not in "+-":
            raise ParseError(f"expected '+' or '-', got {token!r}", scanner.position)
        sign = 1 if scanner.take() == "+" else -1
    return ThinElement(bottom, terms)
