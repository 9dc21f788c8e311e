"""Concrete syntax: formulas, sequents and extension axiom files."""
from __future__ import annotations

import re
from typing import List, Optional, Tuple

from .exceptions import FormulaSyntaxError
from .formula import And, Dec, Ext, Formula, Lit, Or, constant

SPACE_RE = re.compile(r"\s*")
TOKEN_RE = re.compile(
    r"(?P<turnstile>\|-)|(?P<op>[()?:|&,~])|(?P<ext>\$[\w.']+)|(?P<ident>[A-Za-z_][\w']*)|(?P<const>[01])\b"
)
AXIOM_LINE_RE = re.compile(r"\s*\$(?P<name>[\w.']+)\s*:=\s*(?P<body>.+?)\s*")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: List[Tuple[str, str, int]] = []
        pos = 0
        while True:
            pos = SPACE_RE.match(text, pos).end()
            if pos >= len(text):
                break
            match = TOKEN_RE.match(text, pos)
            if not match:
                raise FormulaSyntaxError("unexpected character", text, pos)
            kind = match.lastgroup
            self.tokens.append((kind, match.group(kind), pos))
            pos = match.end()
        self.i = 0

    def peek(self) -> Optional[str]:
        if self.i < len(self.tokens):
            return self.tokens[self.i][1]
        return None

    def position(self) -> int:
        if self.i < len(self.tokens):
            return self.tokens[self.i][2]
        return len(self.text)

    def fail(self, msg: str):
        raise FormulaSyntaxError(msg, self.text, self.position())

    def next(self) -> Tuple[str, str, int]:
        if self.i >= len(self.tokens):
            self.fail("unexpected end of input")
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, tok, _ = self.next()
        if tok != value:
            self.i -= 1
            self.fail(f"expected {value!r}")

    def literal(self) -> Lit:
        kind, tok, _ = self.next()
        if tok == "~":
            kind, tok, _ = self.next()
            if kind != "ident":
                self.i -= 1
                self.fail("expected a variable after '~'")
            return Lit(tok, False)
        if kind == "ext":
            self.i -= 1
            self.fail("extension variable in decision position")
        if kind != "ident":
            self.i -= 1
            self.fail("expected a literal")
        return Lit(tok)

    def formula(self) -> Formula:
        kind, tok, _ = self.next()
        if kind == "ext":
            return Ext(tok[1:])
        if kind == "const":
            return constant(int(tok))
        if tok == "~" or kind == "ident":
            self.i -= 1
            return self.literal()
        if tok != "(":
            self.i -= 1
            self.fail("expected a formula")
        first = self.formula()
        op = self.peek()
        if op == ")":
            self.next()
            return first
        if op == "?":
            self.next()
            decision = self.literal()
            self.expect(":")
            high = self.formula()
            self.expect(")")
            return Dec(first, decision, high)
        if op in ("|", "&"):
            parts = [first]
            while self.peek() == op:
                self.next()
                parts.append(self.formula())
            if self.peek() in ("|", "&"):
                self.fail("mixed connectives need parentheses")
            self.expect(")")
            out = parts[-1]
            for f in reversed(parts[:-1]):
                out = Or(f, out) if op == "|" else And(f, out)
            return out
        self.fail("expected '?', '|', '&' or ')'")

    def cedent(self, stop: Optional[str]) -> List[Formula]:
        out: List[Formula] = []
        if self.peek() == stop:
            return out
        out.append(self.formula())
        while self.peek() == ",":
            self.next()
            out.append(self.formula())
        return out

    def done(self):
        if self.i != len(self.tokens):
            self.fail("trailing input")


def parse_formula(text: str) -> Formula:
    parser = _Parser(text)
    f = parser.formula()
    parser.done()
    return f


def parse_cedent(text: str) -> List[Formula]:
    parser = _Parser(text)
    out = parser.cedent(None)
    parser.done()
    return out


def parse_sequent_parts(text: str) -> Tuple[List[Formula], List[Formula]]:
    parser = _Parser(text)
    left = parser.cedent("|-")
    if parser.peek() != "|-":
        parser.fail("expected '|-'")
    parser.next()
    right = parser.cedent(None)
    parser.done()
    return left, right


def parse_axiom_lines(text: str) -> List[Tuple[str, Formula]]:
    """``$e := <formula>`` lines; blank lines and ``#`` comments are skipped."""
    entries = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        if not line.strip():
            continue
        match = AXIOM_LINE_RE.fullmatch(line)
        if not match:
            raise FormulaSyntaxError(f"line {number}: expected '$name := formula'", line)
        entries.append((match.group("name"), parse_formula(match.group("body"))))
    return entries
