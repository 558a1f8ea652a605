import json

import pytest

from fillcurve.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_singular(capsys):
    code, out, _ = run(
        capsys, "check", "--q", "3", "--f", "1,0,2,0,1", "--g", "1,0,2,0,1"
    )
    assert code == 0
    d = json.loads(out)
    assert d["smooth"] is False
    assert d["space_filling"] is True
    assert d["method"] == "factor_gcd"
    assert d["witness"]["compositum_degree"] == 2


def test_check_smooth(capsys):
    code, out, _ = run(
        capsys, "check", "--q", "3", "--f", "1,0,0,0,1", "--g", "1,0,2,0,1"
    )
    assert code == 0
    assert json.loads(out)["smooth"] is True


def test_check_oracle_agrees(capsys):
    code, out, _ = run(
        capsys, "check", "--q", "3", "--oracle",
        "--f", "1,0,2,0,1", "--g", "1,0,2,0,1",
    )
    assert code == 0
    d = json.loads(out)
    assert d["smooth"] is False and d["method"] == "scan_oracle"


def test_check_precondition_exit(capsys):
    code, _, err = run(
        capsys, "check", "--q", "3", "--f", "1,0,0,0,0", "--g", "1,0,2,0,1"
    )
    assert code == 2
    assert "V(f)" in err and "(0:1)" in err


def test_parse_error_exit(capsys):
    code, _, _ = run(capsys, "check", "--q", "3", "--f", "1,0,2,0,1")
    assert code == 1
    code, _, _ = run(capsys, "check", "--q", "3", "--f", "bogus", "--g", "1,0,2,0,1")
    assert code == 1


def test_guard_exit(capsys):
    code, _, err = run(capsys, "census", "--q", "7")
    assert code == 3
    assert "refused" in err


def test_guard_env_override(monkeypatch):
    from fillcurve.cli import _guards_lifted, make_parser

    args = make_parser().parse_args(["census", "--q", "3"])
    monkeypatch.setenv("FILLCURVE_GUARD_OVERRIDE", "0")
    assert not _guards_lifted(args)
    monkeypatch.setenv("FILLCURVE_GUARD_OVERRIDE", "1")
    assert _guards_lifted(args)
    args2 = make_parser().parse_args(["census", "--q", "3", "--allow-large"])
    monkeypatch.delenv("FILLCURVE_GUARD_OVERRIDE", raising=False)
    assert _guards_lifted(args2)


def test_symmetric_output(capsys):
    code, out, _ = run(capsys, "symmetric", "--q", "3", "--variant", "0", "--index", "0")
    assert code == 0
    assert json.loads(out)["f"] == "1,0,0,1,2"


def test_construct_roundtrip(capsys):
    # f = Y0^8 + Y0 Y1^7 + 3 Y1^8, a diagonal-family member of G_7
    code, out, _ = run(capsys, "construct", "--q", "7", "--f", "1,0,0,0,0,0,0,1,3")
    assert code == 0
    d = json.loads(out)
    code2, out2, _ = run(capsys, "check", "--q", "7", "--f", d["f"], "--g", d["g"])
    assert code2 == 0 and json.loads(out2)["smooth"] is True


def test_sample_deterministic(capsys):
    code, out1, _ = run(capsys, "sample", "--q", "3", "--n", "40", "--seed", "11")
    assert code == 0
    _, out2, _ = run(capsys, "sample", "--q", "3", "--n", "40", "--seed", "11")
    assert out1 == out2
    _, out3, _ = run(
        capsys, "sample", "--q", "3", "--n", "40", "--seed", "11", "--jobs", "2"
    )
    assert out1 == out3


def test_census_command_files(tmp_path, capsys):
    out_json = tmp_path / "c2.json"
    code, out, _ = run(capsys, "census", "--q", "2", "--out", str(out_json))
    assert code == 0
    d = json.loads(out_json.read_text())
    assert d["total_smooth_pairs"] == 0
    # stdout carries the same document
    assert json.loads(out) == d
    out_csv = tmp_path / "c2.csv"
    code, _, _ = run(
        capsys, "census", "--q", "2", "--format", "csv", "--out", str(out_csv)
    )
    assert code == 0
    assert out_csv.read_text().startswith("f_orbit\\g_orbit")


def test_orbits_command(capsys):
    code, out, _ = run(capsys, "orbits", "--q", "3")
    assert code == 0
    d = json.loads(out)
    assert d["gq_size"] == 48 and d["orbit_count"] == 7


def test_byte_identical_reruns(capsys):
    args = ("check", "--q", "3", "--f", "1,0,0,1,2", "--g", "1,0,0,1,2")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_json_roundtrip(capsys, tmp_path):
    out = tmp_path / "r.json"
    run(capsys, "census", "--q", "3", "--out", str(out))
    d = json.loads(out.read_text())
    assert json.dumps(d, sort_keys=True, indent=1) + "\n" == out.read_text()
