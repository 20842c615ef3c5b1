import json

import pytest

from coxtoric import __version__
from coxtoric.cli import main, reproduce_paper_report
from coxtoric.delpezzo import ANTICANONICAL_SUPPORTS
from coxtoric.grading import DegreeMatrix, delpezzo4


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, argv):
    code, out, err = run(capsys, argv + ["--json"])
    return code, json.loads(out), err


def test_gale_reference_match(capsys):
    code, payload, _ = run_json(
        capsys, ["gale", "--dataset", "delpezzo4", "--reference",
                 "paper-AT"])
    assert code == 0
    assert payload["numRays"] == 10
    assert payload["reference"]["match"] is True
    assert payload["reference"]["provenance"] == "PAPER"
    assert len(payload["hermite"]) == 5


def test_gale_rank_deficient_input(tmp_path, capsys):
    bad = tmp_path / "rankdef.json"
    bad.write_text(json.dumps({
        "picRank": 2, "numGens": 3,
        "columns": [[1, 1], [2, 2], [3, 3]],
        "labels": ["a", "b", "c"]}))
    code, _, err = run(capsys, ["gale", str(bad)])
    assert code == 2
    assert "grading not of full rank" in err


def test_gale_sample_file(tmp_path, capsys):
    sample = tmp_path / "p2.json"
    sample.write_text(json.dumps({
        "picRank": 1, "numGens": 3,
        "columns": [[1], [1], [1]],
        "labels": ["x", "y", "z"]}))
    code, payload, _ = run_json(capsys, ["gale", str(sample)])
    assert code == 0
    assert payload["numRays"] == 3


def test_fan_ample(capsys):
    code, payload, _ = run_json(
        capsys, ["fan", "--dataset", "delpezzo4", "--degree",
                 "11,-5,-3,-2,-1"])
    assert code == 0
    assert payload["numMaximalCones"] == 42
    assert payload["valid"] and payload["simplicial"]
    assert payload["complete"] and payload["projective"]


def test_fan_anticanonical(capsys):
    code, payload, _ = run_json(
        capsys, ["fan", "--dataset", "delpezzo4", "--degree",
                 "3,-1,-1,-1,-1"])
    assert code == 0
    assert payload["numMaximalCones"] == 22
    assert payload["valid"] and not payload["simplicial"]
    assert payload["complete"] and payload["projective"]


def test_fan_p1xp1(capsys):
    code, payload, _ = run_json(
        capsys, ["fan", "--dataset", "p1xp1", "--degree", "1,1"])
    assert code == 0
    assert payload["numMaximalCones"] == 4
    assert payload["valid"] and payload["simplicial"]
    assert payload["complete"] and payload["projective"]


def test_basis_p2(capsys):
    code, payload, _ = run_json(
        capsys, ["basis", "--dataset", "p2", "--degree", "2"])
    assert code == 0
    assert payload["count"] == 6
    assert payload["monomials"][0] == [0, 0, 2]


def test_irrelevant_anticanonical(capsys):
    code, payload, _ = run_json(
        capsys, ["irrelevant", "--dataset", "delpezzo4", "--degree",
                 "3,-1,-1,-1,-1"])
    assert code == 0
    assert payload["count"] == 22
    assert payload["stable"] is True
    expected = sorted(([*s] for s in ANTICANONICAL_SUPPORTS),
                      key=lambda s: (len(s), s))
    assert payload["supports"] == expected


def test_chamber_with_comparison(capsys):
    code, payload, _ = run_json(
        capsys, ["chamber", "--dataset", "delpezzo4", "--degree",
                 "11,-5,-3,-2,-1", "--compare", "3,-1,-1,-1,-1"])
    assert code == 0
    assert payload["fullDimensional"] is True
    assert len(payload["hRep"]) == 5
    assert payload["comparison"]["same"] is False
    assert payload["comparison"]["stable"] is True


def test_embed(capsys):
    code, payload, _ = run_json(
        capsys, ["embed", "--dataset", "delpezzo4"])
    assert code == 0
    assert payload["overall"] is True
    with pytest.raises(SystemExit) as exc:
        main(["embed", "--dataset", "p2"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_incidence_verify_paper(capsys):
    code, payload, _ = run_json(capsys, ["incidence", "verify-paper"])
    assert code == 0
    targets = payload["targets"]
    assert [t["match"] for t in targets] == [True, True, False, True]
    assert targets[2]["computedIntersection"] is None
    assert targets[2]["printedPoint"] == [1, 0, 0, 0, 0, -1]
    assert payload["generalPosition"]["ok"] is None
    assert payload["solver"]["attempts"] >= 1
    assert any("paper-data inconsistency" in n for n in payload["notes"])


def test_incidence_search_deterministic(capsys):
    code1, out1, _ = run(capsys, ["incidence", "search", "--seed", "1",
                                  "--json"])
    code2, out2, _ = run(capsys, ["incidence", "search", "--seed", "1",
                                  "--json"])
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["found"] is True
    assert 1 <= payload["attempts"] <= 100
    assert payload["generalPosition"]["ok"] is True


def test_incidence_search_exhausted(capsys):
    code, payload, _ = run_json(
        capsys, ["incidence", "search", "--max-tries", "0"])
    assert code == 1
    assert payload["found"] is False
    assert payload["attempts"] == 0


def test_reproduce_paper(capsys):
    code, payload, _ = run_json(capsys, ["reproduce-paper"])
    assert code == 0
    assert payload["overall"] is True
    assert payload["firstFailed"] is None
    assert payload["toolVersion"] == __version__
    assert payload["dataset"] == "delpezzo4"
    names = [c["name"] for c in payload["checks"]]
    assert names == [
        "gale-hermite", "ample-support-count", "ample-supports",
        "ample-fan", "anticanonical-supports", "anticanonical-fan",
        "chamber-ample-vs-double", "chamber-ample-vs-anticanonical",
        "restriction-table", "embedding-report", "incidence-sigma1",
        "incidence-sigma2", "incidence-sigma3-empty", "incidence-sigma4",
        "transversal-plane"]
    for check in payload["checks"]:
        assert check["verdict"] is True
        assert check["expected"]["provenance"] in ("PAPER", "TRIVIAL",
                                                   "DERIVED")
    inconsistency = [n for n in payload["notes"]
                     if "paper-data inconsistency" in n]
    assert len(inconsistency) == 1


def test_reproduce_paper_text_output(capsys):
    code, out, _ = run(capsys, ["reproduce-paper"])
    assert code == 0
    assert "overall: PASS (15 checks)" in out
    assert out.count("PASS") == 16
    assert "FAIL" not in out


def test_reproduce_paper_byte_stable(capsys):
    _, out1, _ = run(capsys, ["reproduce-paper", "--json"])
    _, out2, _ = run(capsys, ["reproduce-paper", "--json"])
    assert out1 == out2


def test_reproduce_corrupted_dataset_names_first_failure():
    dp = delpezzo4()
    cols = list(dp.degrees.columns)
    cols[0], cols[1] = cols[1], cols[0]
    report = reproduce_paper_report(degrees=DegreeMatrix.make(cols))
    assert report["overall"] is False
    assert report["firstFailed"] == "gale-hermite"
    failed = [c for c in report["checks"] if not c["verdict"]]
    assert failed and failed[0]["name"] == "gale-hermite"


def test_usage_errors(capsys):
    code, _, err = run(capsys, ["fan", "--degree", "1,1"])
    assert code == 2 and "required" in err
    code, _, err = run(capsys, ["fan", "--dataset", "p2", "--degree",
                                "1,x"])
    assert code == 2
    code, _, err = run(capsys, ["fan", "--dataset", "p2"])
    assert code == 2 and "--degree" in err
    code, _, err = run(capsys, ["irrelevant", "--dataset", "p2",
                                "--degree", "1,1"])
    assert code == 2 and "degree length" in err


def test_both_sources_rejected(tmp_path, capsys):
    sample = tmp_path / "p2.json"
    sample.write_text(json.dumps({
        "picRank": 1, "numGens": 3,
        "columns": [[1], [1], [1]],
        "labels": ["x", "y", "z"]}))
    code, _, err = run(capsys, ["gale", str(sample), "--dataset", "p2"])
    assert code == 2 and "not both" in err


def test_guard_exceeded_exit_code(tmp_path, capsys):
    wide = tmp_path / "wide.json"
    n = 17
    wide.write_text(json.dumps({
        "picRank": 1, "numGens": n,
        "columns": [[1]] * n,
        "labels": [f"x{i}" for i in range(n)]}))
    code, _, err = run(capsys, ["chamber", str(wide), "--degree", "1"])
    assert code == 3
    assert "too large" in err
