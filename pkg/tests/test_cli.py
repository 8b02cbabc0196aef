"""Command-line interface."""

import json

import pytest

from gsrs.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_orbit(capsys):
    code, data = run_json(capsys, "orbit", "--r", "1/2,1/2", "--a", "1,0")
    assert code == 0
    assert data["outcome"] == "zero"
    assert data["steps"] == 1


def test_orbit_cycle(capsys):
    code, data = run_json(capsys, "orbit", "--r", "2/3,2/3", "--a=-2,0")
    assert code == 0
    assert data["outcome"] == "cycle"
    assert [-2, 0] in data["cycle"]


def test_decide(capsys):
    code, data = run_json(capsys, "decide", "--r", "1/2,1/2")
    assert code == 0
    assert data == {"finite": True, "verdict": "finite"}


def test_decide_infinite_reports_cycle(capsys):
    code, data = run_json(capsys, "decide", "--r", "2/3,2/3")
    assert code == 0
    assert data["finite"] is False
    assert data["cycle"]


def test_witnesses(capsys):
    code, data = run_json(capsys, "witnesses", "--r", "1/3,1/4")
    assert code == 0
    assert [1, 0] in data["vertices"]
    assert data["cell"]["vertices"]


def test_cutout_closed_point(capsys):
    code, data = run_json(capsys, "cutout", "--family", "0", "--n", "1")
    assert code == 0
    assert data["polygon"]["vertices"] == [["2/3", "2/3"]]
    assert data["polygon"]["vertex_member"] == [True]


def test_family_check(capsys):
    code, data = run_json(capsys, "family-check", "--family", "17", "--n-max", "12")
    assert code == 0
    assert data["mismatches"] == []
    assert data["checked"] > 0


def test_region_contains(capsys):
    code, data = run_json(capsys, "region-contains", "--p", "1/2,1/2")
    assert code == 0 and data["contains"] is True
    code, data = run_json(capsys, "region-contains", "--p", "1,0")
    assert code == 0 and data["contains"] is False


def test_boundary_svg_stdout_and_file(capsys, tmp_path):
    code, out = run(capsys, "boundary-svg", "--pikes", "9", "--width", "300")
    assert code == 0 and out.startswith("<svg")
    target = tmp_path / "chain.svg"
    code, out = run(capsys, "boundary-svg", "--pikes", "9", "--out", str(target))
    assert code == 0
    assert target.read_text().startswith("<svg")


def test_measure(capsys):
    code, data = run_json(capsys, "measure", "--pikes", "50", "--bits", "64")
    assert code == 0
    assert set(data) == {"n_pikes", "perimeter", "area"}


def test_verify_tiles(capsys):
    code, data = run_json(capsys, "verify-tiles", "--radius", "1/8")
    assert code == 0
    assert data["verdict"] == "covered"


def test_critical_check(capsys):
    code, data = run_json(
        capsys, "critical-check", "--n", "2", "--r", "1/2,0", "--rotate", "1,2"
    )
    assert code == 0
    assert all(entry["ok"] for entry in data["orbit"] + data["rotation"])


def test_critical_check_circle_sweep(capsys):
    code, data = run_json(capsys, "critical-check", "--n", "5", "--r", "40/41,9/41")
    assert code == 0
    assert data["steps"] and all(entry["ok"] for entry in data["steps"])


def test_byte_identical_output(capsys):
    _, out1 = run(capsys, "witnesses", "--r", "2/5,1/5")
    _, out2 = run(capsys, "witnesses", "--r", "2/5,1/5")
    assert out1 == out2


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["orbit", "--r", "bogus", "--a", "1,0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_domain_error_exits_2(capsys):
    code = main(["verify-sector", "--n-lo", "6", "--n-hi", "6"])
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_verification_failure_exits_1(capsys):
    code, data = run_json(
        capsys, "verify-sector", "--n-lo", "12", "--n-hi", "12", "--families", "1"
    )
    assert code == 1
    assert data["reports"][0]["verdict"] == "failed"
