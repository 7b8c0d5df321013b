"""Expression DSL for regular languages.

Grammar (whitespace insignificant)::

    expr   := term ('+' term)*          # '+' is set union
    term   := factor+                   # juxtaposition is catenation
    factor := atom ('*' | '^' INT)*
    atom   := LETTER | 'eps' | '(' expr ')' | 'Fac' '(' expr ')'
            | '{' word (',' word)* '}'

``eps`` denotes the language containing only the empty word, ``{a,ab}``
a finite set of words, and ``Fac(...)`` the factor closure of its
argument.  ``eps`` and ``Fac`` are reserved keywords: a contiguous run
of those letters is always read as the keyword, never as catenated
single-letter atoms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError


# --------------------------------------------------------------------------
# AST nodes

class Node:
    """Base class of expression AST nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Letter(Node):
    symbol: str


@dataclass(frozen=True)
class Empty(Node):
    """The empty language.  Not produced by the parser; used internally."""


@dataclass(frozen=True)
class Epsilon(Node):
    """The language {empty word}."""


@dataclass(frozen=True)
class Union(Node):
    parts: tuple[Node, ...]


@dataclass(frozen=True)
class Concat(Node):
    parts: tuple[Node, ...]


@dataclass(frozen=True)
class Star(Node):
    child: Node


@dataclass(frozen=True)
class Power(Node):
    child: Node
    exponent: int


@dataclass(frozen=True)
class Fac(Node):
    child: Node


@dataclass(frozen=True)
class WordSet(Node):
    words: tuple[str, ...]


# --------------------------------------------------------------------------
# Simplifying constructors, used when synthesizing expressions from automata.

def union_node(parts: list[Node]) -> Node:
    flat: list[Node] = []
    for p in parts:
        if isinstance(p, Union):
            flat.extend(p.parts)
        elif not isinstance(p, Empty):
            flat.append(p)
    seen: dict[Node, None] = {}
    for p in flat:
        seen.setdefault(p)
    uniq = list(seen)
    if not uniq:
        return Empty()
    if len(uniq) == 1:
        return uniq[0]
    return Union(tuple(uniq))


def concat_node(parts: list[Node]) -> Node:
    flat: list[Node] = []
    for p in parts:
        if isinstance(p, Empty):
            return Empty()
        if isinstance(p, Epsilon):
            continue
        if isinstance(p, Concat):
            flat.extend(p.parts)
        else:
            flat.append(p)
    if not flat:
        return Epsilon()
    if len(flat) == 1:
        return flat[0]
    return Concat(tuple(flat))


def star_node(child: Node) -> Node:
    if isinstance(child, (Empty, Epsilon)):
        return Epsilon()
    if isinstance(child, Star):
        return child
    return Star(child)


# --------------------------------------------------------------------------
# Tokenizer

_PUNCT = {
    "+": "PLUS",
    "*": "STAR",
    "^": "CARET",
    "(": "LPAREN",
    ")": "RPAREN",
    "{": "LBRACE",
    "}": "RBRACE",
    ",": "COMMA",
}


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(src: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(src)
    while i < n:
        c = src[i]
        if c.isspace():
            i += 1
            continue
        if src.startswith("eps", i):
            tokens.append(_Token("EPS", "eps", i))
            i += 3
            continue
        if src.startswith("Fac", i):
            tokens.append(_Token("FAC", "Fac", i))
            i += 3
            continue
        if c in _PUNCT:
            tokens.append(_Token(_PUNCT[c], c, i))
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            tokens.append(_Token("INT", src[i:j], i))
            i = j
            continue
        if c.isprintable():
            tokens.append(_Token("LETTER", c, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(_Token("EOF", "", n))
    return tokens


# --------------------------------------------------------------------------
# Recursive-descent parser

class _Parser:
    def __init__(self, tokens: list[_Token], sigma: frozenset[str]):
        self.tokens = tokens
        self.sigma = sigma
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def next(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.next()
        if tok.kind != kind:
            raise ParseError(f"expected {kind}, found {tok.text or 'end of input'!r}", tok.pos)
        return tok

    def parse_expr(self) -> Node:
        parts = [self.parse_term()]
        while self.peek().kind == "PLUS":
            self.next()
            parts.append(self.parse_term())
        if len(parts) == 1:
            return parts[0]
        return Union(tuple(parts))

    def parse_term(self) -> Node:
        parts = [self.parse_factor()]
        while self.peek().kind in ("LETTER", "EPS", "FAC", "LPAREN", "LBRACE"):
            parts.append(self.parse_factor())
        if len(parts) == 1:
            return parts[0]
        return Concat(tuple(parts))

    def parse_factor(self) -> Node:
        node = self.parse_atom()
        while True:
            tok = self.peek()
            if tok.kind == "STAR":
                self.next()
                node = Star(node)
            elif tok.kind == "CARET":
                self.next()
                exp = self.expect("INT")
                node = Power(node, int(exp.text))
            else:
                return node

    def parse_atom(self) -> Node:
        tok = self.next()
        if tok.kind == "LETTER":
            self.check_letter(tok)
            return Letter(tok.text)
        if tok.kind == "EPS":
            return Epsilon()
        if tok.kind == "LPAREN":
            node = self.parse_expr()
            self.expect("RPAREN")
            return node
        if tok.kind == "FAC":
            self.expect("LPAREN")
            node = self.parse_expr()
            self.expect("RPAREN")
            return Fac(node)
        if tok.kind == "LBRACE":
            words = [self.parse_word()]
            while self.peek().kind == "COMMA":
                self.next()
                words.append(self.parse_word())
            self.expect("RBRACE")
            return WordSet(tuple(words))
        raise ParseError(f"expected an atom, found {tok.text or 'end of input'!r}", tok.pos)

    def parse_word(self) -> str:
        first = self.expect("LETTER")
        self.check_letter(first)
        chars = [first.text]
        while self.peek().kind == "LETTER":
            tok = self.next()
            self.check_letter(tok)
            chars.append(tok.text)
        return "".join(chars)

    def check_letter(self, tok: _Token) -> None:
        if tok.text not in self.sigma:
            raise ParseError(f"symbol {tok.text!r} is not in the session alphabet", tok.pos)


def parse_expression(src: str, sigma) -> Node:
    """Parse ``src`` over the session alphabet ``sigma`` into an AST.

    Raises :class:`ParseError` on malformed input or on a letter outside
    ``sigma``; the error carries the character offset.
    """
    if not src or src.isspace():
        raise ParseError("empty expression", 0)
    parser = _Parser(_tokenize(src), frozenset(sigma))
    node = parser.parse_expr()
    tok = parser.peek()
    if tok.kind != "EOF":
        raise ParseError(f"unexpected trailing input {tok.text!r}", tok.pos)
    return node


# --------------------------------------------------------------------------
# Printer

def _prec(node: Node) -> int:
    # 0 = union, 1 = catenation, 2 = postfix, 3 = atom
    if isinstance(node, Union):
        return 0
    if isinstance(node, Concat):
        return 1
    if isinstance(node, (Star, Power)):
        return 2
    return 3


def _wrap(node: Node, parent_prec: int) -> str:
    text = format_expression(node)
    if _prec(node) < parent_prec:
        return f"({text})"
    return text


def format_expression(node: Node) -> str:
    """Render an AST back to the grammar above; inverse of the parser."""
    if isinstance(node, Letter):
        return node.symbol
    if isinstance(node, Epsilon):
        return "eps"
    if isinstance(node, Empty):
        raise ValueError("the empty language has no expression form")
    if isinstance(node, Union):
        return "+".join(_wrap(p, 1) for p in node.parts)
    if isinstance(node, Concat):
        return "".join(_wrap(p, 2) for p in node.parts)
    if isinstance(node, Star):
        return f"{_wrap(node.child, 3)}*"
    if isinstance(node, Power):
        return f"{_wrap(node.child, 3)}^{node.exponent}"
    if isinstance(node, Fac):
        return f"Fac({format_expression(node.child)})"
    if isinstance(node, WordSet):
        return "{" + ",".join(node.words) + "}"
    raise TypeError(f"not an expression node: {node!r}")
