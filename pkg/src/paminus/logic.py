"""ASTs for the first-order language of ordered arithmetic {+, *, 0, 1, <, =}.

Terms and formulas are immutable trees; equality and hashing are structural.
A numeral is the left-associated sum ((..((1+1)+1)..)+1) with u ones;
``numeral(0)`` is the constant ``Zero`` so numeral construction is total.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

#: Words the concrete syntax reserves; they are not legal variable names.
RESERVED = frozenset({"not", "and", "or", "forall", "exists"})

_IDENT = re.compile(r"\A[a-z][a-z0-9_]*\Z")


class CaptureError(ValueError):
    """Substitution would capture a free variable of the replacement term."""


@dataclass(frozen=True)
class Variable:
    """A variable name; compared by exact string equality."""

    name: str

    def __post_init__(self) -> None:
        if not _IDENT.match(self.name):
            raise ValueError(f"invalid variable name {self.name!r}")
        if self.name in RESERVED:
            raise ValueError(f"{self.name!r} is a reserved word")


class Term:
    """Base class for term nodes."""


@dataclass(frozen=True)
class Zero(Term):
    pass


@dataclass(frozen=True)
class One(Term):
    pass


@dataclass(frozen=True)
class Var(Term):
    var: Variable


@dataclass(frozen=True)
class Add(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Mul(Term):
    left: Term
    right: Term


class Formula:
    """Base class for formula nodes."""


@dataclass(frozen=True)
class Eq(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class Lt(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class ForAll(Formula):
    var: Variable
    body: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: Variable
    body: Formula


ZERO = Zero()
ONE = One()


def var(name: str) -> Var:
    """Shorthand for ``Var(Variable(name))``."""
    return Var(Variable(name))


def numeral(u: int) -> Term:
    """The closed term denoting u: Zero for 0, else a left-associated sum of u ones."""
    if u < 0:
        raise ValueError("numerals denote naturals only")
    if u == 0:
        return ZERO
    t: Term = ONE
    for _ in range(u - 1):
        t = Add(t, ONE)
    return t


def term_vars(t: Term) -> frozenset[Variable]:
    out: set[Variable] = set()
    stack = [t]
    while stack:
        s = stack.pop()
        if isinstance(s, Var):
            out.add(s.var)
        elif isinstance(s, (Add, Mul)):
            stack.append(s.left)
            stack.append(s.right)
    return frozenset(out)


def free_vars(f: Formula) -> frozenset[Variable]:
    """Free variables of f; a sentence has none."""
    if isinstance(f, (Eq, Lt)):
        return term_vars(f.left) | term_vars(f.right)
    if isinstance(f, Not):
        return free_vars(f.body)
    if isinstance(f, (And, Or, Implies)):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, (ForAll, Exists)):
        return free_vars(f.body) - {f.var}
    raise TypeError(f"not a formula: {f!r}")


def is_sentence(f: Formula) -> bool:
    return not free_vars(f)


def substitute_term(t: Term, v: Variable, rep: Term) -> Term:
    if isinstance(t, Var):
        return rep if t.var == v else t
    if isinstance(t, Add):
        return Add(substitute_term(t.left, v, rep), substitute_term(t.right, v, rep))
    if isinstance(t, Mul):
        return Mul(substitute_term(t.left, v, rep), substitute_term(t.right, v, rep))
    return t


def substitute(f: Formula, v: Variable, rep: Term) -> Formula:
    """Replace every free occurrence of v in f by rep.

    Raises CaptureError when a free variable of ``rep`` would fall under a
    binder of the same name; the caller is expected to rename first.
    """
    rep_vars = term_vars(rep)

    def go(g: Formula) -> Formula:
        if isinstance(g, Eq):
            return Eq(substitute_term(g.left, v, rep), substitute_term(g.right, v, rep))
        if isinstance(g, Lt):
            return Lt(substitute_term(g.left, v, rep), substitute_term(g.right, v, rep))
        if isinstance(g, Not):
            return Not(go(g.body))
        if isinstance(g, And):
            return And(go(g.left), go(g.right))
        if isinstance(g, Or):
            return Or(go(g.left), go(g.right))
        if isinstance(g, Implies):
            return Implies(go(g.left), go(g.right))
        if isinstance(g, (ForAll, Exists)):
            if g.var == v:
                return g
            if g.var in rep_vars and v in free_vars(g.body):
                raise CaptureError(
                    f"substituting for {v.name} would capture {g.var.name}"
                )
            return type(g)(g.var, go(g.body))
        raise TypeError(f"not a formula: {g!r}")

    return go(f)


def term_size(t: Term) -> int:
    n = 0
    stack = [t]
    while stack:
        s = stack.pop()
        n += 1
        if isinstance(s, (Add, Mul)):
            stack.append(s.left)
            stack.append(s.right)
    return n


def formula_size(f: Formula) -> int:
    """Total number of term and formula nodes."""
    n = 0
    todo: list = [f]
    while todo:
        g = todo.pop()
        if isinstance(g, Term):
            n += term_size(g)
            continue
        n += 1
        if isinstance(g, (Eq, Lt)):
            todo.append(g.left)
            todo.append(g.right)
        elif isinstance(g, Not):
            todo.append(g.body)
        elif isinstance(g, (And, Or, Implies)):
            todo.append(g.left)
            todo.append(g.right)
        elif isinstance(g, (ForAll, Exists)):
            todo.append(g.body)
    return n


def strip_universals(f: Formula) -> tuple[list[Variable], Formula]:
    """Peel the outermost block of universal quantifiers."""
    vs: list[Variable] = []
    while isinstance(f, ForAll):
        vs.append(f.var)
        f = f.body
    return vs, f


def universal_closure(f: Formula) -> Formula:
    """Close f under ∀ over its free variables, in first-occurrence order."""
    for v in reversed(_occurrence_order(f)):
        f = ForAll(v, f)
    return f


def _occurrence_order(f: Formula) -> list[Variable]:
    seen: set[Variable] = set()
    out: list[Variable] = []

    def go_term(t: Term, bound: frozenset[Variable]) -> None:
        if isinstance(t, Var):
            if t.var not in bound and t.var not in seen:
                seen.add(t.var)
                out.append(t.var)
        elif isinstance(t, (Add, Mul)):
            go_term(t.left, bound)
            go_term(t.right, bound)

    def go(g: Formula, bound: frozenset[Variable]) -> None:
        if isinstance(g, (Eq, Lt)):
            go_term(g.left, bound)
            go_term(g.right, bound)
        elif isinstance(g, Not):
            go(g.body, bound)
        elif isinstance(g, (And, Or, Implies)):
            go(g.left, bound)
            go(g.right, bound)
        elif isinstance(g, (ForAll, Exists)):
            go(g.body, bound | {g.var})

    go(f, frozenset())
    return out
