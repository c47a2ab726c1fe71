"""Problem-file export for external first-order theorem provers.

One annotated formula per line::

    fof(<name>, <role>, <formula>).

with role ``axiom`` or ``conjecture``.  Formula syntax: ``![X]:`` / ``?[X]:``
for quantifiers, ``&``, ``|``, ``=>``, ``~``, ``=``, ``!=``, ``$less(a,b)``
for the order, function symbols ``plus/2`` and ``times/2``, constants
``zero`` and ``one``.  Variables are upper-cased deterministically.  Output
is byte-stable for identical input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .axioms import all_axioms
from .logic import (
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
    One,
    Or,
    Term,
    Var,
    Zero,
    free_vars,
)


class NotASentence(ValueError):
    """A problem file may only contain closed formulas."""


@dataclass(frozen=True)
class ProblemFile:
    axioms: tuple[tuple[str, Formula], ...]
    conjecture: tuple[str, Formula]


def _render_term(t: Term) -> str:
    if isinstance(t, Zero):
        return "zero"
    if isinstance(t, One):
        return "one"
    if isinstance(t, Var):
        return t.var.name.upper()
    if isinstance(t, Add):
        return f"plus({_render_term(t.left)},{_render_term(t.right)})"
    if isinstance(t, Mul):
        return f"times({_render_term(t.left)},{_render_term(t.right)})"
    raise TypeError(f"not a term: {t!r}")


def _render_formula(f: Formula) -> str:
    if isinstance(f, Not) and isinstance(f.body, Eq):
        return f"({_render_term(f.body.left)} != {_render_term(f.body.right)})"
    if isinstance(f, Eq):
        return f"({_render_term(f.left)} = {_render_term(f.right)})"
    if isinstance(f, Lt):
        return f"$less({_render_term(f.left)},{_render_term(f.right)})"
    if isinstance(f, Not):
        return f"(~ {_render_formula(f.body)})"
    if isinstance(f, And):
        return f"({_render_formula(f.left)} & {_render_formula(f.right)})"
    if isinstance(f, Or):
        return f"({_render_formula(f.left)} | {_render_formula(f.right)})"
    if isinstance(f, Implies):
        return f"({_render_formula(f.left)} => {_render_formula(f.right)})"
    if isinstance(f, ForAll):
        return f"(! [{f.var.name.upper()}] : {_render_formula(f.body)})"
    if isinstance(f, Exists):
        return f"(? [{f.var.name.upper()}] : {_render_formula(f.body)})"
    raise TypeError(f"not a formula: {f!r}")


def fof_line(name: str, role: str, f: Formula) -> str:
    if free_vars(f):
        names = ", ".join(sorted(v.name for v in free_vars(f)))
        raise NotASentence(f"formula {name!r} has free variables: {names}")
    return f"fof({name}, {role}, {_render_formula(f)})."


def export_problem(problem: ProblemFile) -> str:
    """Render a problem file, axioms first, conjecture last."""
    lines = [fof_line(name, "axiom", f) for name, f in problem.axioms]
    name, f = problem.conjecture
    lines.append(fof_line(name, "conjecture", f))
    return "\n".join(lines) + "\n"


def standard_problem(conjecture_name: str, conjecture: Formula) -> ProblemFile:
    """The fifteen base axioms plus the given conjecture."""
    axioms = tuple((f"a{i}", f) for i, f in all_axioms())
    return ProblemFile(axioms=axioms, conjecture=(conjecture_name, conjecture))
