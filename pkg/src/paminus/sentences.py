"""Generators for the two non-integrality sentence families.

``harmonic_sentence(k)`` says: no sum of k+1 fractions with coprime
numerators over the consecutive denominators n, n+1, ..., n+k is an
integer, stated fraction-free as a universally closed disjunction over
n, m_0..m_k, p, with one coprimality-failure disjunct and one
numerator-too-big disjunct per index, plus the cleared-denominator
disequation.

``nagell_sentence(k)`` is the analogue for denominators in arithmetic
progression m, m+n, ..., m+kn, guarded by m > 0 and n > 0.

Sums and products expand left-associated in index order; the index-0
denominator is the plain variable (no "+ 0" and no "0*n" factor).  The
inner bound variables a, b are reused in every coprimality disjunct;
scoping keeps that unambiguous, and printers must not rename them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .logic import (
    Add,
    And,
    Eq,
    ForAll,
    Formula,
    Implies,
    Lt,
    Mul,
    Not,
    ONE,
    Or,
    Term,
    Var,
    Variable,
    ZERO,
    numeral,
    term_vars,
)


class VariableClash(ValueError):
    """An argument term already uses one of the bound variable names."""


class LimitExceeded(ValueError):
    """The requested numeral would blow past the configured size cap."""


_A = Variable("a")
_B = Variable("b")


def not_coprime_formula(mt: Term, ct: Term) -> Formula:
    """∀a∀b ¬(mt*a = ct*b + 1): true exactly when mt and ct are not coprime.

    By the Bezout identity in natural form, m*a = c*b + 1 has natural
    solutions iff gcd(m, c) = 1 (for m >= 1), so this universal formula
    asserts the coprimality test fails.
    """
    used = term_vars(mt) | term_vars(ct)
    for v in (_A, _B):
        if v in used:
            raise VariableClash(f"argument terms may not mention {v.name!r}")
    return ForAll(
        _A,
        ForAll(_B, Not(Eq(Mul(mt, Var(_A)), Add(Mul(ct, Var(_B)), ONE)))),
    )


def _sum(ts: list[Term]) -> Term:
    acc = ts[0]
    for t in ts[1:]:
        acc = Add(acc, t)
    return acc


def _product(ts: list[Term]) -> Term:
    acc = ts[0]
    for t in ts[1:]:
        acc = Mul(acc, t)
    return acc


def _or_all(fs: list[Formula]) -> Formula:
    acc = fs[0]
    for f in fs[1:]:
        acc = Or(acc, f)
    return acc


def harmonic_sentence(k: int) -> Formula:
    """The consecutive-denominator non-integrality sentence for k >= 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = Variable("n")
    p = Variable("p")
    ms = [Variable(f"m_{i}") for i in range(k + 1)]
    denoms: list[Term] = [
        Var(n) if i == 0 else Add(Var(n), numeral(i)) for i in range(k + 1)
    ]
    summands = [
        Mul(Var(ms[i]), _product([denoms[j] for j in range(k + 1) if j != i]))
        for i in range(k + 1)
    ]
    disjuncts: list[Formula] = [
        not_coprime_formula(Var(ms[i]), denoms[i]) for i in range(k + 1)
    ]
    disjuncts += [Lt(denoms[i], Var(ms[i])) for i in range(k + 1)]
    disjuncts.append(Not(Eq(_sum(summands), Mul(Var(p), _product(denoms)))))
    matrix = _or_all(disjuncts)
    body = ForAll(p, matrix)
    for m in reversed(ms):
        body = ForAll(m, body)
    return ForAll(n, body)


def nagell_sentence(k: int) -> Formula:
    """The arithmetic-progression non-integrality sentence for k >= 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    m = Variable("m")
    n = Variable("n")
    p = Variable("p")
    factors: list[Term] = [
        Var(m) if j == 0 else Add(Var(m), Mul(numeral(j), Var(n)))
        for j in range(k + 1)
    ]
    summands = [
        _product([factors[j] for j in range(k + 1) if j != i])
        for i in range(k + 1)
    ]
    guard = And(Lt(ZERO, Var(m)), Lt(ZERO, Var(n)))
    matrix = Implies(
        guard, Not(Eq(_sum(summands), Mul(Var(p), _product(factors))))
    )
    return ForAll(m, ForAll(n, ForAll(p, matrix)))


@dataclass(frozen=True)
class ShiftedProductExpansion:
    """Coefficients of (n+1)(n+2)...(n+k) as a polynomial in n.

    ``coeffs[i]`` multiplies n**i; the free term coeffs[0] is k! and the
    leading coefficient is 1.
    """

    k: int
    coeffs: tuple[int, ...]


def expand_shifted_product(k: int) -> ShiftedProductExpansion:
    """Exact expansion of the product of the k shifts n+1 .. n+k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    coeffs = [1]
    for j in range(1, k + 1):
        # multiply by (n + j)
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += j * c
            nxt[i + 1] += c
        coeffs = nxt
    return ShiftedProductExpansion(k, tuple(coeffs))


def factorial_numeral(k: int, max_leaves: int = 10**6) -> Term:
    """The numeral for k!; guarded because its term size is k! leaves."""
    if k < 1:
        raise ValueError("k must be >= 1")
    f = math.factorial(k)
    if f > max_leaves:
        raise LimitExceeded(f"{k}! = {f} exceeds the numeral cap {max_leaves}")
    return numeral(f)
