"""Term and formula evaluation in two carriers: the standard naturals and
the positive cone of Z[x].

Quantifiers range over infinite carriers, so evaluation is three-valued:
connectives use strong Kleene logic, and each quantifier enumerates the
model's canonical witness stream up to a budget.  A found witness decides
an existential True or a universal False; exhausting the budget yields
Unknown, except for formula shapes a registered decision procedure
recognizes (linear divisibility equations and the two-variable coprimality
pattern), which are decided exactly.  Quantifier-free formulas under total
assignments never come back Unknown.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Sequence

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
    Variable,
    Zero,
    free_vars,
    strip_universals,
    term_vars,
)
from .polynomials import (
    PolyElement,
    compare_cone,
    divides_in_poly,
    sub_coeffs,
    subtract_cone,
)

Assignment = Dict[Variable, Any]


class Truth(Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"


class Ordering(Enum):
    LT = "lt"
    EQ = "eq"
    GT = "gt"


class UnboundVariable(LookupError):
    """A term mentions a variable the assignment does not cover."""


@dataclass(frozen=True)
class EvalBudget:
    """Enumeration limits: witnesses tried per quantifier, and how deep
    quantifier nesting may enumerate before giving up."""

    max_witness: int = 64
    max_depth: int = 16

    def __post_init__(self) -> None:
        if self.max_witness < 1:
            raise ValueError("max_witness must be >= 1")
        if self.max_depth < 1:
            raise ValueError("max_depth must be >= 1")


DEFAULT_BUDGET = EvalBudget()


class StandardModel:
    """The naturals with ordinary arithmetic."""

    name = "standard"

    def __init__(self, sample_bound: int = 10**6):
        self.sample_bound = sample_bound

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def from_nat(self, u: int) -> int:
        if u < 0:
            raise ValueError("naturals only")
        return u

    def add(self, a: int, b: int) -> int:
        return a + b

    def mul(self, a: int, b: int) -> int:
        return a * b

    def subtract(self, a: int, b: int) -> int:
        if a < b:
            raise ValueError("difference leaves the carrier")
        return a - b

    def compare(self, a: int, b: int) -> Ordering:
        if a < b:
            return Ordering.LT
        return Ordering.EQ if a == b else Ordering.GT

    def is_standard(self, a: int) -> Optional[int]:
        return a

    def witnesses(self):
        return itertools.count(0)

    def linear_solvable(self, coeff: int, offset: int, target: int) -> bool:
        # exists w >= 0 with target == coeff*w + offset
        d = target - offset
        return d >= 0 and d % coeff == 0

    def sample_element(self, rng: random.Random) -> int:
        return rng.randint(0, self.sample_bound)

    def parse_element(self, text: str) -> int:
        v = int(text)
        if v < 0:
            raise ValueError("naturals only")
        return v

    def format_element(self, a: int) -> str:
        return str(a)


class PolyModel:
    """The positive cone of Z[x]; x is greater than every numeral."""

    name = "poly"

    def __init__(self, sample_degree: int = 3, sample_coeff_bound: int = 10):
        self.sample_degree = sample_degree
        self.sample_coeff_bound = sample_coeff_bound

    def zero(self) -> PolyElement:
        return PolyElement(())

    def one(self) -> PolyElement:
        return PolyElement((1,))

    def from_nat(self, u: int) -> PolyElement:
        if u < 0:
            raise ValueError("naturals only")
        return PolyElement((u,))

    def add(self, a: PolyElement, b: PolyElement) -> PolyElement:
        return a + b

    def mul(self, a: PolyElement, b: PolyElement) -> PolyElement:
        return a * b

    def subtract(self, a: PolyElement, b: PolyElement) -> PolyElement:
        return subtract_cone(a, b)

    def compare(self, a: PolyElement, b: PolyElement) -> Ordering:
        c = compare_cone(a, b)
        return (Ordering.LT, Ordering.EQ, Ordering.GT)[c + 1]

    def is_standard(self, a: PolyElement) -> Optional[int]:
        return a.constant_value()

    def witnesses(self):
        """Every cone element, enumerated by increasing grade
        max(degree, max |coefficient|), ties by (degree, bound, coeffs)."""
        yield PolyElement(())
        grade = 1
        while True:
            batch = []
            for d in range(grade + 1):
                if d == 0:
                    batch.append((grade,))
                    continue
                for lead in range(1, grade + 1):
                    for lows in itertools.product(
                        range(-grade, grade + 1), repeat=d
                    ):
                        cs = (*lows, lead)
                        bound = max(abs(c) for c in cs)
                        if max(d, bound) == grade:
                            batch.append(cs)
            batch.sort(key=lambda cs: (len(cs), max(abs(c) for c in cs), cs))
            for cs in batch:
                yield PolyElement(cs)
            grade += 1

    def linear_solvable(
        self, coeff: int, offset: int, target: PolyElement
    ) -> bool:
        # exists cone element w with target == coeff*w + offset
        d = sub_coeffs(target.coeffs, (offset,))
        if d and d[-1] < 0:
            return False
        return divides_in_poly(coeff, PolyElement(d)) is not None

    def sample_element(self, rng: random.Random) -> PolyElement:
        d = rng.randint(0, self.sample_degree)
        bound = self.sample_coeff_bound
        if d == 0:
            return PolyElement((rng.randint(0, bound),))
        lows = tuple(rng.randint(-bound, bound) for _ in range(d))
        return PolyElement((*lows, rng.randint(1, bound)))

    def parse_element(self, text: str) -> PolyElement:
        return PolyElement.from_text(text)

    def format_element(self, a: PolyElement) -> str:
        return a.to_text()


def eval_term(model, asg: Assignment, t: Term):
    if isinstance(t, Zero):
        return model.zero()
    if isinstance(t, One):
        return model.one()
    if isinstance(t, Var):
        try:
            return asg[t.var]
        except KeyError:
            raise UnboundVariable(t.var.name) from None
    if isinstance(t, Add):
        return model.add(eval_term(model, asg, t.left), eval_term(model, asg, t.right))
    if isinstance(t, Mul):
        return model.mul(eval_term(model, asg, t.left), eval_term(model, asg, t.right))
    raise TypeError(f"not a term: {t!r}")


def compare(model, a, b) -> Ordering:
    return model.compare(a, b)


def _not3(a: Truth) -> Truth:
    if a is Truth.TRUE:
        return Truth.FALSE
    if a is Truth.FALSE:
        return Truth.TRUE
    return Truth.UNKNOWN


# ---------------------------------------------------------------------------
# Decision procedures: exact answers for recognized quantified shapes.


def _standard_value(model, asg: Assignment, t: Term) -> Optional[int]:
    try:
        return model.is_standard(eval_term(model, asg, t))
    except UnboundVariable:
        return None


def _linear_parts(model, asg, t: Term, v: Variable):
    """Decompose t as coeff*v + offset with standard coeff and offset."""
    if isinstance(t, Var) and t.var == v:
        return (1, 0)
    if v not in term_vars(t):
        val = _standard_value(model, asg, t)
        return None if val is None else (0, val)
    if isinstance(t, Mul):
        for factor, rest in ((t.left, t.right), (t.right, t.left)):
            if v not in term_vars(factor):
                c = _standard_value(model, asg, factor)
                inner = _linear_parts(model, asg, rest, v)
                if c is not None and inner is not None:
                    return (c * inner[0], c * inner[1])
        return None
    if isinstance(t, Add):
        left = _linear_parts(model, asg, t.left, v)
        right = _linear_parts(model, asg, t.right, v)
        if left is None or right is None:
            return None
        return (left[0] + right[0], left[1] + right[1])
    return None


def linear_equation_procedure(model, asg: Assignment, f: Formula) -> Optional[Truth]:
    """Decide ∃v (s = t) / ∀v ¬(s = t) when the equation is linear in v
    with a positive standard coefficient and the other side is any element."""
    if isinstance(f, Exists) and isinstance(f.body, Eq):
        v, eq, positive = f.var, f.body, True
    elif (
        isinstance(f, ForAll)
        and isinstance(f.body, Not)
        and isinstance(f.body.body, Eq)
    ):
        v, eq, positive = f.var, f.body.body, False
    else:
        return None
    left_has = v in term_vars(eq.left)
    right_has = v in term_vars(eq.right)
    if left_has == right_has:
        return None
    side, other = (eq.left, eq.right) if left_has else (eq.right, eq.left)
    parts = _linear_parts(model, asg, side, v)
    if parts is None or parts[0] < 1 or parts[1] < 0:
        return None
    try:
        target = eval_term(model, asg, other)
    except UnboundVariable:
        return None
    solvable = model.linear_solvable(parts[0], parts[1], target)
    value = Truth.TRUE if solvable else Truth.FALSE
    return value if positive else _not3(value)


def _match_scaled(t: Term, v: Variable) -> Optional[Term]:
    """Match t against c*v or v*c with v not occurring in c; returns c."""
    if not isinstance(t, Mul):
        return None
    if isinstance(t.left, Var) and t.left.var == v and v not in term_vars(t.right):
        return t.right
    if isinstance(t.right, Var) and t.right.var == v and v not in term_vars(t.left):
        return t.left
    return None


def bezout_procedure(model, asg: Assignment, f: Formula) -> Optional[Truth]:
    """Decide the coprimality pattern ∀a∀b ¬(m*a = c*b + 1) for standard m, c.

    Natural witnesses of m*a = c*b + 1 exist exactly when m >= 1 and
    gcd(m, c) = 1, and in the polynomial model any solution forces the same
    condition coefficientwise, so the answer is model-independent once both
    sides are standard.
    """
    if not (isinstance(f, ForAll) and isinstance(f.body, ForAll)):
        return None
    va, vb = f.var, f.body.var
    if va == vb:
        return None
    body = f.body.body
    if not (isinstance(body, Not) and isinstance(body.body, Eq)):
        return None
    eq = body.body
    for lhs, rhs in ((eq.left, eq.right), (eq.right, eq.left)):
        m_term = _match_scaled(lhs, va)
        if m_term is None or vb in term_vars(lhs):
            continue
        if not isinstance(rhs, Add):
            continue
        for scaled, unit in ((rhs.left, rhs.right), (rhs.right, rhs.left)):
            if not isinstance(unit, One):
                continue
            c_term = _match_scaled(scaled, vb)
            if c_term is None or va in term_vars(scaled):
                continue
            if va in term_vars(m_term) or vb in term_vars(m_term):
                continue
            if va in term_vars(c_term) or vb in term_vars(c_term):
                continue
            m_val = _standard_value(model, asg, m_term)
            c_val = _standard_value(model, asg, c_term)
            if m_val is None or c_val is None:
                return None
            witness_exists = m_val >= 1 and math.gcd(m_val, c_val) == 1
            return Truth.FALSE if witness_exists else Truth.TRUE
    return None


DEFAULT_PROCEDURES = (bezout_procedure, linear_equation_procedure)


# ---------------------------------------------------------------------------
# Evaluation.


def eval_formula(
    model,
    asg: Assignment,
    f: Formula,
    budget: EvalBudget | None = None,
    procedures: Sequence | None = None,
) -> Truth:
    """Three-valued evaluation of f under asg; see the module docstring."""
    budget = budget or DEFAULT_BUDGET
    procs = DEFAULT_PROCEDURES if procedures is None else tuple(procedures)
    missing = free_vars(f) - asg.keys()
    if missing:
        names = ", ".join(sorted(v.name for v in missing))
        raise UnboundVariable(names)
    return _eval(model, dict(asg), f, budget, 0, procs)


def _eval(model, asg, f, budget, depth, procs) -> Truth:
    if isinstance(f, Eq):
        c = model.compare(eval_term(model, asg, f.left), eval_term(model, asg, f.right))
        return Truth.TRUE if c is Ordering.EQ else Truth.FALSE
    if isinstance(f, Lt):
        c = model.compare(eval_term(model, asg, f.left), eval_term(model, asg, f.right))
        return Truth.TRUE if c is Ordering.LT else Truth.FALSE
    if isinstance(f, Not):
        return _not3(_eval(model, asg, f.body, budget, depth, procs))
    if isinstance(f, And):
        a = _eval(model, asg, f.left, budget, depth, procs)
        if a is Truth.FALSE:
            return Truth.FALSE
        b = _eval(model, asg, f.right, budget, depth, procs)
        if b is Truth.FALSE:
            return Truth.FALSE
        if a is Truth.TRUE and b is Truth.TRUE:
            return Truth.TRUE
        return Truth.UNKNOWN
    if isinstance(f, Or):
        a = _eval(model, asg, f.left, budget, depth, procs)
        if a is Truth.TRUE:
            return Truth.TRUE
        b = _eval(model, asg, f.right, budget, depth, procs)
        if b is Truth.TRUE:
            return Truth.TRUE
        if a is Truth.FALSE and b is Truth.FALSE:
            return Truth.FALSE
        return Truth.UNKNOWN
    if isinstance(f, Implies):
        a = _eval(model, asg, f.left, budget, depth, procs)
        if a is Truth.FALSE:
            return Truth.TRUE
        b = _eval(model, asg, f.right, budget, depth, procs)
        if b is Truth.TRUE:
            return Truth.TRUE
        if a is Truth.TRUE and b is Truth.FALSE:
            return Truth.FALSE
        return Truth.UNKNOWN
    if isinstance(f, (ForAll, Exists)):
        for proc in procs:
            r = proc(model, asg, f)
            if r is not None:
                return r
        if depth >= budget.max_depth:
            return Truth.UNKNOWN
        existential = isinstance(f, Exists)
        v, body = f.var, f.body
        sentinel = object()
        saved = asg.get(v, sentinel)
        try:
            for i, w in enumerate(model.witnesses()):
                if i >= budget.max_witness:
                    break
                asg[v] = w
                r = _eval(model, asg, body, budget, depth + 1, procs)
                if existential and r is Truth.TRUE:
                    return Truth.TRUE
                if not existential and r is Truth.FALSE:
                    return Truth.FALSE
        finally:
            if saved is sentinel:
                asg.pop(v, None)
            else:
                asg[v] = saved
        return Truth.UNKNOWN
    raise TypeError(f"not a formula: {f!r}")


def below_numeral(model, a, k: int) -> Optional[int]:
    """The standard value of a when a < k in the model, else None.

    In both carriers an element below a numeral is itself standard (in the
    polynomial model, anything of positive degree dominates every constant).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if model.compare(a, model.from_nat(k)) is not Ordering.LT:
        return None
    u = model.is_standard(a)
    if u is None:
        raise AssertionError("element below a numeral must be standard")
    return u


def is_standard(model, a) -> Optional[int]:
    """The natural a denotes, or None for a nonstandard element."""
    return model.is_standard(a)


# ---------------------------------------------------------------------------
# Randomized axiom checking.


@dataclass(frozen=True)
class AxiomCheck:
    axiom: int
    samples: int
    passed: int
    failed: int
    unknown: int

    def as_dict(self) -> dict:
        return {
            "axiom": self.axiom,
            "samples": self.samples,
            "pass": self.passed,
            "fail": self.failed,
            "unknown": self.unknown,
        }


def check_axioms(
    model,
    samples: int,
    budget: EvalBudget | None = None,
    seed: int = 0,
) -> list[AxiomCheck]:
    """Test each axiom body on pseudorandom assignments.

    Per-sample RNGs are derived from (seed, axiom, sample) so results do not
    depend on evaluation order.  The subtraction axiom's existential is
    discharged with the constructed witness z = y - x instead of enumeration.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    results = []
    for axiom_id, formula in all_axioms():
        vars_, body = strip_universals(formula)
        passed = failed = unknown = 0
        for s in range(samples):
            rng = random.Random(f"{seed}:{axiom_id}:{s}")
            asg = {v: model.sample_element(rng) for v in vars_}
            if isinstance(body, Exists):
                # A13: witness the difference directly
                x_val, y_val = asg[vars_[0]], asg[vars_[1]]
                if model.compare(x_val, y_val) is Ordering.LT:
                    witness = model.subtract(y_val, x_val)
                else:
                    witness = model.zero()
                inner = dict(asg)
                inner[body.var] = witness
                value = eval_formula(model, inner, body.body, budget, procedures=())
            else:
                value = eval_formula(model, asg, body, budget, procedures=())
            if value is Truth.TRUE:
                passed += 1
            elif value is Truth.FALSE:
                failed += 1
            else:
                unknown += 1
        results.append(AxiomCheck(axiom_id, samples, passed, failed, unknown))
    return results
