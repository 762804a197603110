"""Ring description text format.

Line comments start with '#'; whitespace is otherwise insignificant.
Grammar (one expression per file, optionally preceded by `name <word>`):

    expr := zmod N
          | gf P K [poly c0 .. cK]
          | matrix K expr
          | product expr ; expr ; ...
          | groupring expr (cyclic|dihedral|sym) M
          | fpalgebra P DIM labels L1 .. Ld consts [i j k v] ...
          | op expr
          | ( expr )

Parentheses disambiguate products nested inside other constructors.
Expressions round-trip through frobring.construct.expr_to_text.
"""

from .construct import (FpAlgebra, GaloisField, GroupRing, MatrixRing,
                        Opposite, Product, ZMod)
from .errors import ParseError


class _Token:
    __slots__ = ("text", "line", "col")

    def __init__(self, text, line, col):
        self.text = text
        self.line = line
        self.col = col


def _tokenize(text):
    tokens = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        i = 0
        while i < len(line):
            ch = line[i]
            if ch.isspace():
                i += 1
                continue
            if ch in "();":
                tokens.append(_Token(ch, lineno, i + 1))
                i += 1
                continue
            j = i
            while j < len(line) and not line[j].isspace() and line[j] not in "();":
                j += 1
            tokens.append(_Token(line[i:j], lineno, i + 1))
            i = j
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos].text if self.pos < len(self.tokens) else None

    def next(self, what="token"):
        if self.pos >= len(self.tokens):
            last = self.tokens[-1] if self.tokens else None
            raise ParseError(f"unexpected end of input, expected {what}",
                             last.line if last else 1, last.col if last else 1)
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message):
        if self.pos < len(self.tokens):
            tok = self.tokens[self.pos]
            raise ParseError(message, tok.line, tok.col)
        last = self.tokens[-1] if self.tokens else None
        raise ParseError(message, last.line if last else 1, last.col if last else 1)

    def int_(self, what="integer"):
        tok = self.next(what)
        try:
            return int(tok.text)
        except ValueError:
            raise ParseError(f"expected {what}, got {tok.text!r}", tok.line, tok.col) from None

    def next_is_int(self):
        nxt = self.peek()
        if nxt is None:
            return False
        try:
            int(nxt)
            return True
        except ValueError:
            return False

    def expr(self):
        tok = self.next("ring expression")
        head = tok.text
        if head == "(":
            inner = self.expr()
            closing = self.next("')'")
            if closing.text != ")":
                raise ParseError("expected ')'", closing.line, closing.col)
            return inner
        if head == "zmod":
            return ZMod(self.int_("modulus"))
        if head == "gf":
            p = self.int_("characteristic")
            k = self.int_("extension degree")
            poly = None
            if self.peek() == "poly":
                self.next()
                poly = tuple(self.int_("polynomial coefficient") for _ in range(k + 1))
            return GaloisField(p, k, poly)
        if head == "matrix":
            return MatrixRing(self.int_("matrix size"), self.expr())
        if head == "product":
            factors = [self.expr()]
            while self.peek() == ";":
                self.next()
                factors.append(self.expr())
            return Product(tuple(factors))
        if head == "groupring":
            base = self.expr()
            kind_tok = self.next("group kind")
            if kind_tok.text not in ("cyclic", "dihedral", "sym"):
                raise ParseError(f"unknown group kind {kind_tok.text!r}",
                                 kind_tok.line, kind_tok.col)
            return GroupRing(base, kind_tok.text, self.int_("group parameter"))
        if head == "fpalgebra":
            p = self.int_("characteristic")
            dim = self.int_("dimension")
            key = self.next("'labels'")
            if key.text != "labels":
                raise ParseError("expected 'labels'", key.line, key.col)
            labels = tuple(self.next("basis label").text for _ in range(dim))
            key = self.next("'consts'")
            if key.text != "consts":
                raise ParseError("expected 'consts'", key.line, key.col)
            consts = []
            while self.next_is_int():
                i = self.int_()
                j = self.int_("structure constant index")
                k = self.int_("structure constant index")
                v = self.int_("structure constant value")
                consts.append((i, j, k, v))
            return FpAlgebra(p, dim, labels, tuple(consts))
        if head == "op":
            return Opposite(self.expr())
        raise ParseError(f"unknown constructor {head!r}", tok.line, tok.col)


def parse_ring_spec(text):
    """Parse a ring expression; raises ParseError with position info."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty ring description", 1, 1)
    parser = _Parser(tokens)
    if parser.peek() == "name":
        parser.next()
        parser.next("ring name")
    expr = parser.expr()
    if parser.pos != len(parser.tokens):
        parser.fail("trailing input after ring expression")
    return expr


def parse_ring_file(text, default_name):
    """Parse a spec file into (name, expr); `name <word>` overrides the default."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty ring description", 1, 1)
    parser = _Parser(tokens)
    name = default_name
    if parser.peek() == "name":
        parser.next()
        name = parser.next("ring name").text
    expr = parser.expr()
    if parser.pos != len(parser.tokens):
        parser.fail("trailing input after ring expression")
    return name, expr


def format_ring_file(name, expr):
    from .construct import expr_to_text
    return f"name {name}\n{expr_to_text(expr)}\n"
