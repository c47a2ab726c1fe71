"""The fifteen axioms of PA⁻, the induction-free arithmetic of discretely
ordered semirings (the nonnegative part of a discretely ordered ring).

Each axiom is a closed sentence.  Universal axioms are stated as open
formulas and closed here over their free variables in first-occurrence
order; the only axiom with its own quantifier structure is the subtraction
axiom A13, ∀x∀y∃z (x<y -> x+z=y), which keeps the implication inside the
quantifiers.  A6 and A14 keep their two conjuncts bundled so the numbering
stays 1..15.
"""

from __future__ import annotations

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
    ONE,
    Or,
    Var,
    Variable,
    ZERO,
    universal_closure,
)

AXIOM_COUNT = 15

_x, _y, _z = Variable("x"), Variable("y"), Variable("z")
_X, _Y, _Z = Var(_x), Var(_y), Var(_z)

_OPEN_BODIES: dict[int, Formula] = {
    1: Eq(Add(Add(_X, _Y), _Z), Add(_X, Add(_Y, _Z))),
    2: Eq(Add(_X, _Y), Add(_Y, _X)),
    3: Eq(Mul(Mul(_X, _Y), _Z), Mul(_X, Mul(_Y, _Z))),
    4: Eq(Mul(_X, _Y), Mul(_Y, _X)),
    5: Eq(Mul(_X, Add(_Y, _Z)), Add(Mul(_X, _Y), Mul(_X, _Z))),
    6: And(Eq(Add(_X, ZERO), _X), Eq(Mul(_X, ZERO), ZERO)),
    7: Eq(Mul(_X, ONE), _X),
    8: Implies(And(Lt(_X, _Y), Lt(_Y, _Z)), Lt(_X, _Z)),
    9: Not(Lt(_X, _X)),
    10: Or(Or(Lt(_X, _Y), Eq(_X, _Y)), Lt(_Y, _X)),
    11: Implies(Lt(_X, _Y), Lt(Add(_X, _Z), Add(_Y, _Z))),
    12: Implies(And(Lt(ZERO, _Z), Lt(_X, _Y)), Lt(Mul(_X, _Z), Mul(_Y, _Z))),
    # 13 has explicit quantifiers, see axiom_formula
    14: And(
        Lt(ZERO, ONE),
        Implies(Lt(ZERO, _X), Or(Lt(ONE, _X), Eq(_X, ONE))),
    ),
    15: Or(Lt(ZERO, _X), Eq(_X, ZERO)),
}

_A13 = ForAll(
    _x, ForAll(_y, Exists(_z, Implies(Lt(_X, _Y), Eq(Add(_X, _Z), _Y))))
)


def axiom_formula(axiom_id: int) -> Formula:
    """The closed sentence for axiom ``axiom_id`` in [1, 15]."""
    if not 1 <= axiom_id <= AXIOM_COUNT:
        raise ValueError(f"axiom id must be in [1, {AXIOM_COUNT}], got {axiom_id}")
    if axiom_id == 13:
        return _A13
    return universal_closure(_OPEN_BODIES[axiom_id])


def all_axioms() -> list[tuple[int, Formula]]:
    """All fifteen axioms as (id, sentence), in order."""
    return [(i, axiom_formula(i)) for i in range(1, AXIOM_COUNT + 1)]
