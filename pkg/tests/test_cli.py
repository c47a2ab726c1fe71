import json

import pytest

from paminus.cli import main
from paminus.syntax import parse_formula


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def strip_elapsed(payload):
    payload = dict(payload)
    payload.pop("elapsed_ms", None)
    return payload


def test_gen_native_round_trips(capsys):
    code, out = run(capsys, "gen", "phi", "1")
    assert code == 0
    f = parse_formula(out.strip())
    assert parse_formula(out.strip()) == f


def test_gen_prover_single_conjecture_line(capsys):
    code, out = run(capsys, "gen", "nu", "2", "--format", "prover")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 1
    assert lines[0].startswith("fof(nu_2, conjecture, ")


def test_gen_prover_with_axioms(capsys):
    code, out = run(capsys, "gen", "phi", "1", "--format", "prover", "--include-axioms")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 16
    assert lines[-1].startswith("fof(phi_1, conjecture, ")


def test_gen_rejects_zero_k(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gen", "phi", "0"])
    assert exc.value.code == 2


def test_check_harmonic(capsys):
    code, payload = run_json(capsys, "check", "harmonic", "--n", "1", "--k", "1", "--json")
    assert code == 0
    assert payload["outcome"] == "pass"
    assert payload["details"]["value"] == "3/2"


def test_check_harmonic_requires_n(capsys):
    assert main(["check", "harmonic", "--k", "1"]) == 2


def test_check_nagell(capsys):
    code, payload = run_json(
        capsys, "check", "nagell", "--k", "2", "--m-max", "50", "--n-max", "50", "--json"
    )
    assert code == 0
    assert payload["outcome"] == "pass"
    assert payload["details"]["instances_checked"] == 2500
    assert payload["details"]["counterexample"] is None


def test_check_phi_search(capsys):
    code, payload = run_json(
        capsys, "check", "phi-search", "--k", "1", "--n-max", "20", "--json"
    )
    assert code == 0
    assert payload["outcome"] == "pass"
    assert payload["details"]["mode"] == "exhaustive"


def test_kurschak_report(capsys):
    code, payload = run_json(capsys, "kurschak", "4", "3", "--json")
    assert code == 0
    assert payload["details"]["unique_index"] == 0
    assert payload["details"]["a"] == 2

    code, payload = run_json(capsys, "kurschak", "1", "1", "--json")
    assert payload["details"]["unique_index"] == 1
    assert payload["details"]["a"] == 1


def test_kurschak_rejects_zero(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["kurschak", "0", "1"])
    assert exc.value.code == 2


def test_model_check_axioms(capsys):
    code, payload = run_json(
        capsys,
        "model", "check-axioms", "poly",
        "--samples", "40", "--seed", "42", "--json",
    )
    assert code == 0
    assert payload["outcome"] == "pass"
    axioms = payload["details"]["axioms"]
    assert len(axioms) == 15
    assert all(entry["fail"] == 0 and entry["unknown"] == 0 for entry in axioms)


def test_model_parity_demo(capsys):
    code, payload = run_json(capsys, "model", "parity-demo", "--json")
    assert code == 0
    assert payload["details"] == {"even_multiple": "false", "odd_plus_one": "false"}


def test_model_below_numeral(capsys):
    code, payload = run_json(
        capsys,
        "model", "below-numeral", "poly",
        "--element", "[0,1]", "--k", "1000", "--json",
    )
    assert code == 0
    assert payload["details"]["result"] is None

    code, payload = run_json(
        capsys,
        "model", "below-numeral", "poly", "--element", "[3]", "--k", "5", "--json",
    )
    assert payload["details"]["result"] == 3


def test_parse_command(tmp_path, capsys):
    good = tmp_path / "good.fml"
    good.write_text("(forall x (0 < (x + 1)))\n")
    code, payload = run_json(capsys, "parse", str(good), "--json")
    assert code == 0
    assert payload["outcome"] == "pass"
    assert payload["details"]["round_trip"] is True

    bad = tmp_path / "bad.fml"
    bad.write_text("(0 <")
    code, payload = run_json(capsys, "parse", str(bad), "--json")
    assert code == 2
    assert payload["outcome"] == "fail"
    assert payload["details"]["offset"] == 4

    empty = tmp_path / "empty.fml"
    empty.write_text("")
    code, payload = run_json(capsys, "parse", str(empty), "--json")
    assert code == 2
    assert "end of input" in payload["details"]["error"]


def test_json_reports_are_deterministic(capsys):
    argv = [
        "check", "phi-search", "--k", "2", "--n-max", "25",
        "--sampled", "--samples", "40", "--seed", "5", "--json",
    ]
    _, first = run_json(capsys, *argv)
    _, second = run_json(capsys, *argv)
    assert strip_elapsed(first) == strip_elapsed(second)


def test_thread_count_does_not_change_output(capsys):
    base = [
        "check", "nagell", "--k", "1", "--m-max", "25", "--n-max", "25", "--json",
    ]
    _, one = run_json(capsys, *base, "--threads", "1")
    _, four = run_json(capsys, *base, "--threads", "4")
    assert strip_elapsed(one) == strip_elapsed(four)


def test_report_writes_csv_and_figures(tmp_path, capsys):
    out = tmp_path / "figs"
    code, payload = run_json(
        capsys,
        "report", "--out", str(out), "--n-max", "12", "--samples", "20", "--json",
    )
    assert code == 0
    assert payload["outcome"] == "pass"
    csv_path = out / "report.csv"
    assert csv_path.exists()
    header = csv_path.read_text().splitlines()[0]
    assert header == "check,params,outcome,instances,note"
    for name in (
        "valuations.png",
        "harmonic_denominators.png",
        "nagell_denominators.png",
        "axiom_checks.png",
    ):
        assert (out / name).stat().st_size > 0
