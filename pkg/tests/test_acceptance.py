"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the verdict lines.
"""

import json
import math
import random
import time

from paminus.cli import main as cli_main
from paminus.axioms import all_axioms
from paminus.logic import Variable, numeral
from paminus.models import (
    PolyModel,
    Truth,
    below_numeral,
    check_axioms,
    eval_formula,
)
from paminus.numtheory import (
    bezout_witness,
    kurschak_certificate,
    nagell_major_sides,
    nagell_small_m_bound,
    search_harmonic_counterexample,
    search_nagell_counterexample,
    unique_valuation_violations,
)
from paminus.polynomials import PolyElement
from paminus.sentences import expand_shifted_product, harmonic_sentence, nagell_sentence
from paminus.syntax import parse_formula, print_formula

from conftest import BrokenAddPolyModel, random_formula


def _verdict(num, name, ok, note=""):
    status = "PASS" if ok else "FAIL"
    suffix = f" [{note}]" if note else ""
    print(f"ACCEPTANCE {num:02d} {name}: {status}{suffix}")
    assert ok, f"criterion {num} ({name}) failed {suffix}"


def test_criterion_01_consecutive_sum_sweep():
    start = time.perf_counter()
    exhaustive = search_harmonic_counterexample(1, 200)
    ok = exhaustive.counterexample is None and exhaustive.mode == "exhaustive"
    checked = exhaustive.instances_checked
    for k in range(1, 9):
        sampled = search_harmonic_counterexample(
            k, 200, exhaustive_m=False, samples=1000, seed=7
        )
        ok = ok and sampled.counterexample is None
        checked += sampled.instances_checked
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 60
    _verdict(1, "consecutive-denominator sweep", ok,
             f"{checked} instances, {elapsed:.1f}s")


def test_criterion_02_kurschak_certificates():
    start = time.perf_counter()
    violations = unique_valuation_violations(100000, 64)
    ok = violations == []
    for n in range(1, 2001):
        for k in range(1, 17):
            cert = kurschak_certificate(n, k)
            if cert.valuations[cert.unique_index] != 0:
                ok = False
            if any(
                q < 1 for i, q in enumerate(cert.valuations) if i != cert.unique_index
            ):
                ok = False
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 60
    _verdict(2, "unique maximal 2-adic valuation", ok, f"{elapsed:.1f}s")


def test_criterion_03_progression_sweep():
    start = time.perf_counter()
    total = 0
    ok = True
    for k in range(1, 7):
        out = search_nagell_counterexample(k, 100, 100)
        ok = ok and out.counterexample is None
        total += out.instances_checked
    elapsed = time.perf_counter() - start
    ok = ok and total == 60000 and elapsed < 120
    _verdict(3, "progression sweep", ok, f"{total} instances, {elapsed:.1f}s")


def test_criterion_04_bounding_lemmas():
    ok = True
    for k in range(1, 7):
        for m in range(1, 51):
            for n in range(1, 51):
                lhs, rhs = nagell_major_sides(m, n, k)
                if lhs > rhs or (lhs == rhs) != (k == 1):
                    ok = False
                if m > k and not nagell_small_m_bound(m, n, k):
                    ok = False
    _verdict(4, "bounding lemmas", ok)


def test_criterion_05_poly_axiom_suite():
    checks = check_axioms(PolyModel(sample_degree=3, sample_coeff_bound=10),
                          500, seed=42)
    clean = all(c.failed == 0 and c.unknown == 0 for c in checks)
    broken = check_axioms(BrokenAddPolyModel(), 500, seed=42)
    detected = any(c.axiom == 2 and c.failed > 0 for c in broken)
    _verdict(5, "polynomial-model axioms", clean and detected,
             "clean model 0 failures; mutant detected")


def test_criterion_06_nonstandard_demonstrations():
    from paminus.logic import Add, Eq, Exists, Mul, ONE, Var

    poly = PolyModel()
    generator = PolyElement.generator()
    x, y = Variable("x"), Variable("y")
    even = Exists(y, Eq(Var(x), Mul(numeral(2), Var(y))))
    odd = Exists(y, Eq(Var(x), Add(Mul(numeral(2), Var(y)), ONE)))
    ok = eval_formula(poly, {x: generator}, even) is Truth.FALSE
    ok = ok and eval_formula(poly, {x: generator}, odd) is Truth.FALSE
    for k in range(1, 10001):
        if below_numeral(poly, generator, k) is not None:
            ok = False
            break
    for k in range(1, 101):
        for c in range(k):
            if below_numeral(poly, PolyElement((c,)), k) != c:
                ok = False
    _verdict(6, "nonstandard demonstrations", ok)


def test_criterion_07_free_term_identity():
    ok = True
    for k in range(1, 21):
        if expand_shifted_product(k).coeffs[0] != math.factorial(k):
            ok = False
    for k in range(1, 9):
        coeffs = expand_shifted_product(k).coeffs
        for n in range(51):
            direct = math.prod(n + j for j in range(1, k + 1))
            if direct != sum(c * n**i for i, c in enumerate(coeffs)):
                ok = False
    _verdict(7, "free-term identity", ok)


def test_criterion_08_bezout_gcd_agreement():
    ok = True
    for m in range(1, 501):
        for c in range(1, 501):
            w = bezout_witness(m, c)
            if (w is not None) != (math.gcd(m, c) == 1):
                ok = False
            elif w is not None and m * w[0] != c * w[1] + 1:
                ok = False
    _verdict(8, "bezout pattern agrees with gcd", ok, "m, c <= 500")


def test_criterion_09_round_trip():
    ok = True
    for _, f in all_axioms():
        ok = ok and parse_formula(print_formula(f)) == f
    for k in range(1, 7):
        for f in (harmonic_sentence(k), nagell_sentence(k)):
            ok = ok and parse_formula(print_formula(f)) == f
    rng = random.Random(424242)
    for _ in range(10000):
        f = random_formula(rng, rng.randint(0, 8))
        if parse_formula(print_formula(f)) != f:
            ok = False
            break
    _verdict(9, "parse/print round trip", ok, "axioms, sentences, 10^4 random")


def test_criterion_10_cli_determinism(capsys):
    def run_json(argv):
        code = cli_main(argv)
        payload = json.loads(capsys.readouterr().out)
        payload.pop("elapsed_ms", None)
        return code, payload

    ok = True
    seeded = [
        "check", "phi-search", "--k", "2", "--n-max", "30",
        "--sampled", "--samples", "60", "--seed", "11", "--json",
    ]
    ok = ok and run_json(seeded) == run_json(seeded)

    axioms = ["model", "check-axioms", "poly", "--samples", "60", "--seed", "11",
              "--json"]
    ok = ok and run_json(axioms) == run_json(axioms)

    nagell_one = ["check", "nagell", "--k", "1", "--m-max", "30", "--n-max", "30",
                  "--json", "--threads", "1"]
    nagell_four = nagell_one[:-1] + ["4"]
    ok = ok and run_json(nagell_one) == run_json(nagell_four)

    search_one = seeded + ["--threads", "1"]
    search_four = seeded + ["--threads", "4"]
    ok = ok and run_json(search_one) == run_json(search_four)

    with capsys.disabled():
        _verdict(10, "seeded CLI determinism", ok, "threads 1 vs 4 identical")
