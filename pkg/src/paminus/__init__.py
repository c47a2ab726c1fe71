"""Workbench for PA⁻, the induction-free arithmetic of {+, *, 0, 1, <, =}.

Pieces:

- :mod:`paminus.logic` / :mod:`paminus.syntax`: formula ASTs, numerals,
  substitution, and a bit-exact concrete grammar with parser and printer.
- :mod:`paminus.axioms` / :mod:`paminus.prover`: the fifteen axioms and
  problem-file export for external first-order provers.
- :mod:`paminus.models` / :mod:`paminus.polynomials`: three-valued
  evaluation in the naturals and in the positive cone of Z[x].
- :mod:`paminus.sentences`: the two non-integrality sentence families and
  the shifted-product expansion.
- :mod:`paminus.numtheory`: exact certificates, fraction sums, bounding
  inequalities, and counterexample searches.
- :mod:`paminus.cli`: the ``paminus`` command.
"""

from .axioms import AXIOM_COUNT, all_axioms, axiom_formula
from .logic import (
    Add,
    And,
    CaptureError,
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
    free_vars,
    formula_size,
    is_sentence,
    numeral,
    substitute,
    term_vars,
    universal_closure,
)
from .models import (
    Assignment,
    EvalBudget,
    Ordering,
    PolyModel,
    StandardModel,
    Truth,
    UnboundVariable,
    below_numeral,
    check_axioms,
    compare,
    eval_formula,
    eval_term,
    is_standard,
)
from .numtheory import (
    DomainError,
    KurschakCertificate,
    PreconditionError,
    Rational,
    SearchOutcome,
    bezout_witness,
    fraction_sum,
    is_integer,
    kurschak_certificate,
    lcm_range,
    nagell_major_bound,
    nagell_small_m_bound,
    nagell_sum,
    search_harmonic_counterexample,
    search_nagell_counterexample,
    v2,
)
from .polynomials import ConeError, PolyElement, divides_in_poly
from .prover import NotASentence, ProblemFile, export_problem, standard_problem
from .sentences import (
    LimitExceeded,
    ShiftedProductExpansion,
    VariableClash,
    expand_shifted_product,
    factorial_numeral,
    harmonic_sentence,
    nagell_sentence,
    not_coprime_formula,
)
from .syntax import ParseError, parse_formula, parse_term, print_formula, print_term

__version__ = "0.1.0"
