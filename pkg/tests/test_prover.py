import pytest

from paminus.logic import Eq, Lt, ONE, Var, Variable, ZERO, numeral
from paminus.prover import (
    NotASentence,
    ProblemFile,
    export_problem,
    standard_problem,
)
from paminus.sentences import harmonic_sentence


def test_single_conjecture_line():
    problem = ProblemFile((), ("goal", Eq(ZERO, ZERO)))
    assert export_problem(problem) == "fof(goal, conjecture, (zero = zero)).\n"


def test_full_problem_shape():
    problem = standard_problem("phi_1", harmonic_sentence(1))
    lines = export_problem(problem).splitlines()
    assert len(lines) == 16
    assert all(line.startswith("fof(a") and ", axiom, " in line for line in lines[:15])
    assert lines[15].startswith("fof(phi_1, conjecture, ")
    assert all(line.endswith(").") for line in lines)


def test_variables_upper_cased_and_symbols():
    problem = ProblemFile((), ("goal", harmonic_sentence(1)))
    text = export_problem(problem)
    assert "! [M_0] :" in text
    assert "times(" in text and "plus(" in text
    assert "$less(" in text
    assert "!=" in text  # negated equations render as disequations


def test_order_relation_rendering():
    problem = ProblemFile((), ("goal", Lt(ZERO, ONE)))
    with pytest.raises(NotASentence):
        # free variable sneaks in
        export_problem(ProblemFile((), ("bad", Eq(Var(Variable("x")), ZERO))))
    assert (
        export_problem(problem)
        == "fof(goal, conjecture, $less(zero,one)).\n"
    )


def test_numeral_rendering():
    problem = ProblemFile((), ("goal", Eq(numeral(3), numeral(3))))
    line = export_problem(problem)
    assert line == (
        "fof(goal, conjecture, "
        "(plus(plus(one,one),one) = plus(plus(one,one),one))).\n"
    )


def test_export_is_stable():
    problem = standard_problem("nu_2", harmonic_sentence(2))
    assert export_problem(problem) == export_problem(problem)
