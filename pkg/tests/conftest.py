import random

from paminus.logic import (
    Add,
    And,
    Eq,
    Exists,
    ForAll,
    Implies,
    Lt,
    Mul,
    Not,
    ONE,
    Or,
    Var,
    Variable,
    ZERO,
)
from paminus.models import PolyModel
from paminus.polynomials import PolyElement

VAR_NAMES = ("u", "v", "w", "x", "y", "z")


def random_term(rng: random.Random, depth: int):
    if depth <= 0 or rng.random() < 0.3:
        pick = rng.randrange(3)
        if pick == 0:
            return ZERO
        if pick == 1:
            return ONE
        return Var(Variable(rng.choice(VAR_NAMES)))
    node = rng.choice((Add, Mul))
    return node(random_term(rng, depth - 1), random_term(rng, depth - 1))


def random_formula(rng: random.Random, depth: int, quantifiers: bool = True):
    if depth <= 0 or rng.random() < 0.25:
        node = rng.choice((Eq, Lt))
        return node(random_term(rng, 2), random_term(rng, 2))
    kinds = ["not", "and", "or", "implies"]
    if quantifiers:
        kinds += ["forall", "exists"]
    kind = rng.choice(kinds)
    if kind == "not":
        return Not(random_formula(rng, depth - 1, quantifiers))
    if kind in ("forall", "exists"):
        v = Variable(rng.choice(VAR_NAMES))
        cls = ForAll if kind == "forall" else Exists
        return cls(v, random_formula(rng, depth - 1, quantifiers))
    cls = {"and": And, "or": Or, "implies": Implies}[kind]
    return cls(
        random_formula(rng, depth - 1, quantifiers),
        random_formula(rng, depth - 1, quantifiers),
    )


class BrokenAddPolyModel(PolyModel):
    """Test double: addition quietly bumps the result when the left argument
    has strictly larger degree, which breaks commutativity."""

    def add(self, a: PolyElement, b: PolyElement) -> PolyElement:
        total = super().add(a, b)
        if len(a.coeffs) > len(b.coeffs):
            total = super().add(total, self.one())
        return total
