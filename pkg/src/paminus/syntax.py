"""Concrete, fully parenthesized ASCII syntax with prefix quantifiers.

Grammar (whitespace-insensitive between tokens)::

    term  := "0" | "1" | ident | "(" term "+" term ")" | "(" term "*" term ")"
    atom  := "(" term "=" term ")" | "(" term "<" term ")"
    fml   := atom
           | "(" "not" fml ")"
           | "(" fml "and" fml ")" | "(" fml "or" fml ")" | "(" fml "->" fml ")"
           | "(" "forall" ident fml ")" | "(" "exists" ident fml ")"
    ident := [a-z][a-z0-9_]*      (keywords are reserved)

``!=``, ``>`` and ``>=`` are accepted on input as sugar and expand to
``not`` / swapped ``<`` while parsing; the AST has no such nodes and the
printer never emits them, so parse(print(f)) is structurally f.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .logic import (
    RESERVED,
    Add,
    And,
    Eq,
    Exists,
    ForAll,
    Formula,
    Implies,
    Lt,
    Mul,
    Not,
    ONE,
    One,
    Or,
    Term,
    Var,
    Variable,
    ZERO,
    Zero,
)

_TOKEN = re.compile(r"->|>=|!=|[()+*=<>]|[a-z][a-z0-9_]*|[01]")
_BINARY_OPS = frozenset({"+", "*", "=", "<", "!=", ">", ">=", "and", "or", "->"})


class ParseError(ValueError):
    """Syntax error with the byte offset and the tokens that were expected."""

    def __init__(self, message: str, offset: int, expected=()):
        self.offset = offset
        self.expected = frozenset(expected)
        detail = f"{message} at offset {offset}"
        if self.expected:
            detail += " (expected " + ", ".join(sorted(self.expected)) + ")"
        super().__init__(detail)


def print_term(t: Term) -> str:
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, One):
        return "1"
    if isinstance(t, Var):
        return t.var.name
    if isinstance(t, Add):
        return f"({print_term(t.left)} + {print_term(t.right)})"
    if isinstance(t, Mul):
        return f"({print_term(t.left)} * {print_term(t.right)})"
    raise TypeError(f"not a term: {t!r}")


def print_formula(f: Formula) -> str:
    if isinstance(f, Eq):
        return f"({print_term(f.left)} = {print_term(f.right)})"
    if isinstance(f, Lt):
        return f"({print_term(f.left)} < {print_term(f.right)})"
    if isinstance(f, Not):
        return f"(not {print_formula(f.body)})"
    if isinstance(f, And):
        return f"({print_formula(f.left)} and {print_formula(f.right)})"
    if isinstance(f, Or):
        return f"({print_formula(f.left)} or {print_formula(f.right)})"
    if isinstance(f, Implies):
        return f"({print_formula(f.left)} -> {print_formula(f.right)})"
    if isinstance(f, ForAll):
        return f"(forall {f.var.name} {print_formula(f.body)})"
    if isinstance(f, Exists):
        return f"(exists {f.var.name} {print_formula(f.body)})"
    raise TypeError(f"not a formula: {f!r}")


@dataclass(frozen=True)
class _Token:
    text: str
    pos: int


def _tokenize(s: str) -> list[_Token]:
    toks = []
    i, n = 0, len(s)
    while i < n:
        if s[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(s, i)
        if m is None:
            raise ParseError(f"unexpected character {s[i]!r}", i)
        toks.append(_Token(m.group(0), i))
        i = m.end()
    return toks


def _is_ident(text: str) -> bool:
    return text[0].isalpha() and text not in RESERVED


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=()) -> _Token:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text), expected)
        self.i += 1
        return tok

    def expect(self, text: str) -> None:
        tok = self.take({text})
        if tok.text != text:
            raise ParseError(f"unexpected token {tok.text!r}", tok.pos, {text})

    def parse_ident(self) -> Variable:
        tok = self.take({"identifier"})
        if not _is_ident(tok.text):
            raise ParseError(
                f"unexpected token {tok.text!r}", tok.pos, {"identifier"}
            )
        return Variable(tok.text)

    def parse_formula_node(self) -> Formula:
        start = self.peek().pos if self.peek() else len(self.text)
        node = self.parse_node()
        if not isinstance(node, Formula):
            raise ParseError("expected a formula, found a term", start, {"formula"})
        return node

    def parse_node(self):
        tok = self.peek()
        if tok is None:
            raise ParseError(
                "unexpected end of input", len(self.text), {"term", "formula"}
            )
        if tok.text == "0":
            self.i += 1
            return ZERO
        if tok.text == "1":
            self.i += 1
            return ONE
        if _is_ident(tok.text):
            self.i += 1
            return Var(Variable(tok.text))
        if tok.text == "(":
            self.i += 1
            inner = self.peek()
            if inner is not None and inner.text == "not":
                self.i += 1
                body = self.parse_formula_node()
                self.expect(")")
                return Not(body)
            if inner is not None and inner.text in ("forall", "exists"):
                self.i += 1
                v = self.parse_ident()
                body = self.parse_formula_node()
                self.expect(")")
                return (ForAll if inner.text == "forall" else Exists)(v, body)
            left = self.parse_node()
            op = self.take(_BINARY_OPS)
            if op.text not in _BINARY_OPS:
                raise ParseError(
                    f"unexpected token {op.text!r}", op.pos, _BINARY_OPS
                )
            right = self.parse_node()
            self.expect(")")
            return _combine(left, op, right)
        raise ParseError(f"unexpected token {tok.text!r}", tok.pos, {"term", "formula"})


def _as_term(node, op: _Token) -> Term:
    if not isinstance(node, Term):
        raise ParseError(f"operator {op.text!r} expects term operands", op.pos)
    return node


def _as_formula(node, op: _Token) -> Formula:
    if not isinstance(node, Formula):
        raise ParseError(f"operator {op.text!r} expects formula operands", op.pos)
    return node


def _combine(left, op: _Token, right):
    text = op.text
    if text in ("+", "*"):
        lt, rt = _as_term(left, op), _as_term(right, op)
        return Add(lt, rt) if text == "+" else Mul(lt, rt)
    if text in ("=", "<", "!=", ">", ">="):
        lt, rt = _as_term(left, op), _as_term(right, op)
        if text == "=":
            return Eq(lt, rt)
        if text == "<":
            return Lt(lt, rt)
        if text == "!=":
            return Not(Eq(lt, rt))
        if text == ">":
            return Lt(rt, lt)
        return Not(Lt(lt, rt))
    lf, rf = _as_formula(left, op), _as_formula(right, op)
    return {"and": And, "or": Or, "->": Implies}[text](lf, rf)


def parse_formula(s: str) -> Formula:
    """Parse a formula; inverse of print_formula on its image."""
    p = _Parser(s)
    node = p.parse_formula_node()
    tok = p.peek()
    if tok is not None:
        raise ParseError(f"trailing input {tok.text!r}", tok.pos)
    return node


def parse_term(s: str) -> Term:
    p = _Parser(s)
    start = p.peek().pos if p.peek() else 0
    node = p.parse_node()
    tok = p.peek()
    if tok is not None:
        raise ParseError(f"trailing input {tok.text!r}", tok.pos)
    if not isinstance(node, Term):
        raise ParseError("expected a term, found a formula", start, {"term"})
    return node
