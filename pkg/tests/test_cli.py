"""CLI behavior: output records, exit codes, determinism across jobs."""

import json

import pytest

from pndkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def json_lines(out):
    return [json.loads(line) for line in out.splitlines() if line]


def test_compute_json(capsys):
    code, out, _ = run(capsys, "compute", "945", "--format", "json")
    assert code == 0
    (rec,) = json_lines(out)
    assert rec["n"] == 945
    assert rec["factorization"] == "3^3*5*7"
    assert rec["sigma"] == 1920
    assert rec["h"] == "128/63"
    assert rec["H"] == "35/16"
    assert rec["T"] == "71/105"
    assert rec["surplus"] == "3/16"
    assert rec["derivative"] == 1 * 945 + 189 + 135  # n(3/3 + 1/5 + 1/7)
    assert rec["radical"] == 105
    assert rec["classification"] == "abundant"
    assert rec["primitive_nondeficient"] is True


def test_compute_accepts_factorization_grammar(capsys):
    code, out, _ = run(capsys, "compute", "3^3*5*7", "--format", "json")
    assert code == 0
    assert json_lines(out)[0]["n"] == 945
    code, out, _ = run(capsys, "compute", "945")
    assert code == 0 and "primitive_nondeficient" in out


def test_enumerate(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--limit", "200", "--format", "json"
    )
    assert code == 0
    assert [r["n"] for r in json_lines(out)] == [6, 20, 28, 70, 88, 104]
    code, out, _ = run(capsys, "enumerate", "--limit", "200")
    assert out.splitlines()[-1] == "total: 6"


def test_spoof_exit_codes(capsys):
    code, out, _ = run(
        capsys, "spoof", "3^2*7^2*11^2*13^2*22021", "--format", "json"
    )
    assert code == 0
    (rec,) = json_lines(out)
    assert rec["spoof_perfect"] is True
    assert rec["sigma_tilde"] == 397171152378

    code, out, _ = run(capsys, "spoof", "945")
    assert code == 1
    assert "spoof perfect: false" in out


def test_check_candidate_descartes(capsys):
    code, out, _ = run(
        capsys,
        "check-candidate",
        "3^2*7^2*11^2*13^2*22021",
        "--format",
        "json",
    )
    assert code == 1  # refuted
    recs = json_lines(out)
    summary = recs[-1]
    assert summary["verdict"] == "Refuted"
    assert summary["refuting"] == ["largest-prime-cube"]
    assert summary["special"] == [22021, 1]
    by_id = {r["bound_id"]: r for r in recs[:-1]}
    assert by_id["spoof-perfect"]["verdict"] == "Holds"
    assert by_id["largest-prime-cube"]["verdict"] == "Fails"


def test_check_candidate_designated_special(capsys):
    code, out, _ = run(
        capsys,
        "check-candidate",
        "3^2*7^2*11^2*13^2*22021",
        "--special",
        "22021^1",
        "--format",
        "json",
    )
    assert code == 1
    summary = json_lines(out)[-1]
    assert summary["special"] == [22021, 1]


def test_check_candidate_negative_base_spoof(capsys):
    # 3^4*7^2*11^2*19^2*(-127) satisfies the formal perfection identity
    # but the odd-positive shape requirement refutes it on its own
    code, out, _ = run(
        capsys,
        "check-candidate",
        "3^4*7^2*11^2*19^2*(-127)",
        "--format",
        "json",
    )
    assert code == 1
    recs = json_lines(out)
    summary = recs[-1]
    assert summary["verdict"] == "Refuted"
    assert summary["refuting"] == ["shape-odd-positive"]
    by_id = {r["bound_id"]: r for r in recs[:-1]}
    assert by_id["spoof-perfect"]["verdict"] == "Holds"
    assert by_id["T-table-lower"]["verdict"] == "Skipped"


def test_verify_shape_small(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "--suite",
        "shape",
        "--limit",
        "100",
        "--format",
        "json",
    )
    assert code == 1  # bare primes refute the literal prelude inequality
    recs = json_lines(out)
    assert all(r["bound_id"] in ("H-prelude", "H-over-h-ratio") for r in recs)
    assert any(r["verdict"] == "Fails" for r in recs if r["bound_id"] == "H-prelude")
    assert all(r["verdict"] != "Fails" for r in recs if r["bound_id"] == "H-over-h-ratio")


def test_verify_bounds_small_clean(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "--suite",
        "bounds",
        "--limit",
        "2000",
        "--format",
        "json",
    )
    assert code == 0
    assert all(r["verdict"] != "Fails" for r in json_lines(out))
    code, out, _ = run(
        capsys, "verify", "--suite", "bounds", "--limit", "2000"
    )
    assert code == 0
    assert out.splitlines()[-1].startswith("records: ")
    assert "fails: 0" in out.splitlines()[-1]


def test_verify_tricky_specials(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "--suite",
        "tricky-specials",
        "--limit",
        "2000",
        "--format",
        "json",
    )
    assert code == 0
    (rec,) = json_lines(out)
    assert rec["clean"] is True and rec["witnesses"] == []


def test_verify_c_estimate(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "--suite",
        "c-estimate",
        "--limit",
        "1000",
        "--odd-only",
        "--format",
        "json",
    )
    assert code == 0
    (rec,) = json_lines(out)
    assert rec["value"] == "9/16" and rec["attained_at"] == 945


def test_verify_jobs_deterministic(capsys):
    _, out1, _ = run(
        capsys,
        "verify", "--suite", "bounds", "--limit", "30000",
        "--format", "json", "--jobs", "1",
    )
    _, out4, _ = run(
        capsys,
        "verify", "--suite", "bounds", "--limit", "30000",
        "--format", "json", "--jobs", "4",
    )
    assert out1 == out4 and out1


def test_search_question2_witnesses(capsys):
    code, out, _ = run(
        capsys,
        "search", "--question", "2", "--m-limit", "6", "--p-limit", "5",
        "--format", "json",
    )
    assert code == 0
    recs = json_lines(out)
    assert recs[0]["cell"] == [6, 5] and recs[0]["verdict"] == "witness"
    assert recs[-1]["question"] == "question2"
    assert recs[-1]["cells_scanned"] == 12


def test_search_anchors(capsys):
    code, out, _ = run(capsys, "search", "--question", "anchors")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("anchor (5, 5): witness")
    assert "H_lower=217/120" in lines[0]
    assert lines[1].startswith("anchor (7, 944): inconclusive")
    assert "~2.06" in lines[1]  # huge exact fraction shown as a decimal


def test_search_prop3(capsys):
    code, out, _ = run(
        capsys, "search", "--question", "prop3", "--format", "json"
    )
    assert code == 0
    (rec,) = json_lines(out)
    assert rec["question"] == "prop3"
    assert rec["reference_hypotheses"]["one-odd-exponent"] is True
    assert rec["reference_hypotheses"]["primitive-nondeficient"] is False
    assert len(rec["witnesses"]) >= 3
    assert all("^2" in w for w in rec["witnesses"])


def test_fixtures_roundtrip(tmp_path, capsys):
    path = str(tmp_path / "a000396.txt")
    code, out, _ = run(
        capsys,
        "fixtures", "generate", "--sequence", "A000396",
        "--limit", "10000", "--fixture", path,
    )
    assert code == 0 and "wrote 4 values" in out

    code, out, _ = run(
        capsys,
        "fixtures", "crosscheck", "--sequence", "A000396",
        "--limit", "10000", "--fixture", path, "--format", "json",
    )
    assert code == 0
    assert json_lines(out)[0]["matched"] is True

    # corrupt one value; the crosscheck must locate it and exit 1
    lines = open(path).read().splitlines()
    lines[lines.index("496")] = "497"
    open(path, "w").write("\n".join(lines) + "\n")
    code, out, _ = run(
        capsys,
        "fixtures", "crosscheck", "--sequence", "A000396",
        "--limit", "10000", "--fixture", path, "--format", "json",
    )
    assert code == 1
    rec = json_lines(out)[0]
    assert rec["matched"] is False
    assert rec["first_mismatch"] == [2, 497, 496]


def test_fixtures_generate_to_stdout(capsys):
    code, out, _ = run(
        capsys, "fixtures", "generate", "--sequence", "A000396", "--limit", "100"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("# generated by: pndkit fixtures generate")
    assert lines[-2:] == ["6", "28"]


def test_gcd15_table(capsys):
    code, out, _ = run(capsys, "--gcd15-table")
    assert code == 0
    assert "gcd" in out and "0.667450" in out and "2.165439" in out
    assert "Suryanarayana" in out


def test_usage_errors(capsys):
    # argparse handles unknown commands/flags with SystemExit(2)
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    capsys.readouterr()

    # bad input values surface as exit 2 without a traceback
    code, _, err = run(capsys, "compute", "0")
    assert code == 2 and "error:" in err
    code, _, err = run(capsys, "spoof", "3^^2")
    assert code == 2 and "error:" in err

    # no subcommand prints usage and exits 2
    code, _, err = run(capsys)
    assert code == 2 and "usage" in err.lower()

    # crosscheck without --fixture is a usage error
    with pytest.raises(SystemExit) as exc:
        main(["fixtures", "crosscheck", "--sequence", "A000396", "--limit", "10"])
    assert exc.value.code == 2
    capsys.readouterr()
