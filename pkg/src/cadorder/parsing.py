"""Parser and renderer for the ``.poly`` problem-file format.

Format: an optional first significant line ``vars: v1, v2, ...``, then one
polynomial per line in infix notation with ``+ - * ^``, parentheses,
non-negative integer literals and identifiers.  ``#`` starts a comment,
blank lines are ignored, and juxtaposition is not multiplication (an explicit
``*`` is required).  ``^`` takes a non-negative integer literal exponent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Polynomial, PolySystem, Variable


class ParseError(ValueError):
    """Syntax or semantic error with a 1-based source position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col
        self.reason = message


@dataclass(frozen=True)
class _Token:
    kind: str  # NAME, INT, one of + - * ^ ( ), or END
    text: str
    col: int  # 1-based


def _tokenize(line: str, lineno: int) -> list[_Token]:
    tokens = []
    i = 0
    n = len(line)
    while i < n:
        ch = line[i]
        if ch in " \t\r":
            i += 1
            continue
        col = i + 1
        if ch.isdigit():
            j = i
            while j < n and line[j].isdigit():
                j += 1
            tokens.append(_Token("INT", line[i:j], col))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (line[j].isalnum() or line[j] == "_"):
                j += 1
            tokens.append(_Token("NAME", line[i:j], col))
            i = j
        elif ch in "+-*^()":
            tokens.append(_Token(ch, ch, col))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", lineno, col)
    tokens.append(_Token("END", "", n + 1))
    return tokens


class _LineParser:
    """Recursive-descent parser for a single polynomial line."""

    def __init__(self, line: str, lineno: int, declared: set[str] | None):
        self.tokens = _tokenize(line, lineno)
        self.pos = 0
        self.lineno = lineno
        self.declared = declared

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str, tok: _Token | None = None):
        tok = tok or self.peek()
        raise ParseError(message, self.lineno, tok.col)

    def parse(self) -> Polynomial:
        p = self.expr()
        if self.peek().kind != "END":
            self.fail(f"unexpected token {self.peek().text!r}")
        return p

    def expr(self) -> Polynomial:
        negate = False
        if self.peek().kind in "+-":
            negate = self.advance().kind == "-"
        p = self.term()
        if negate:
            p = -p
        while self.peek().kind in "+-":
            op = self.advance().kind
            q = self.term()
            p = p - q if op == "-" else p + q
        return p

    def term(self) -> Polynomial:
        p = self.factor()
        while self.peek().kind == "*":
            self.advance()
            p = p * self.factor()
        return p

    def factor(self) -> Polynomial:
        if self.peek().kind == "-":
            self.advance()
            return -self.factor()
        p = self.atom()
        if self.peek().kind == "^":
            self.advance()
            tok = self.peek()
            if tok.kind != "INT":
                self.fail("exponent must be a non-negative integer literal", tok)
            self.advance()
            p = p ** int(tok.text)
        return p

    def atom(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "INT":
            self.advance()
            return Polynomial.constant(int(tok.text))
        if tok.kind == "NAME":
            self.advance()
            if self.declared is not None and tok.text not in self.declared:
                self.fail(f"undeclared variable {tok.text!r}", tok)
            return Polynomial.variable(Variable(tok.text))
        if tok.kind == "(":
            self.advance()
            p = self.expr()
            if self.peek().kind != ")":
                self.fail("expected ')'")
            self.advance()
            return p
        self.fail(f"expected a term, found {tok.text!r}" if tok.kind != "END"
                  else "unexpected end of line", tok)


def _strip_comment(line: str) -> str:
    cut = line.find("#")
    return line if cut < 0 else line[:cut]


def parse_system(text: str) -> PolySystem:
    """Parse a ``.poly`` document into a polynomial system.

    Raises ParseError on syntax errors, undeclared variables, zero-polynomial
    lines, duplicate declarations or an empty system.  Duplicate polynomials
    are collapsed.
    """
    declared: list[Variable] | None = None
    declared_names: set[str] | None = None
    polys: list[Polynomial] = []
    seen_significant = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        if not seen_significant and line.lstrip().startswith("vars:"):
            seen_significant = True
            body = line.lstrip()[len("vars:"):]
            col0 = len(line) - len(line.lstrip()) + len("vars:") + 1
            names = [part.strip() for part in body.split(",")]
            if names == [""]:
                raise ParseError("empty variable declaration", lineno, col0)
            declared = []
            for name in names:
                try:
                    v = Variable(name)
                except ValueError:
                    raise ParseError(f"invalid variable name {name!r}", lineno, col0)
                if v in declared:
                    raise ParseError(f"duplicate variable {name!r}", lineno, col0)
                declared.append(v)
            declared_names = {v.name for v in declared}
            continue
        seen_significant = True
        p = _LineParser(line, lineno, declared_names).parse()
        if p.is_zero():
            first = len(line) - len(line.lstrip()) + 1
            raise ParseError("polynomial simplifies to zero", lineno, first)
        if p not in polys:
            polys.append(p)
    if not polys:
        raise ParseError("empty system", 1, 1)
    return PolySystem.make(polys, variables=declared)


def render(p: Polynomial) -> str:
    """Canonical infix rendering; parse_system(render(p)) re-reads p exactly."""
    return str(p)
