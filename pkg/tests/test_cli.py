import json
import subprocess
import sys

import pytest

from hyperspec import family, parse, serialize, spectral_radius
from hyperspec.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_rho_family(capsys):
    code, out, _ = run(capsys, "rho", "--family", "P:3,2")
    assert code == 0
    d = json.loads(out)
    assert abs(d["rho"] - 2 ** (1 / 3)) < 1e-10
    assert set(d) == {"rho", "lower", "upper", "iterations", "residual", "eigenvector", "k", "n", "m"}
    assert (d["k"], d["n"], d["m"]) == (3, 5, 2)
    assert f"{d['rho']:.6f}" == "1.259921"


def test_rho_two_edge_overlap(capsys):
    code, out, _ = run(capsys, "rho", "--family", "TE:3,2")
    assert code == 0 and f"{json.loads(out)['rho']:.6f}" == "1.587401"


def test_rho_prints_17_significant_digits(capsys):
    _, out, _ = run(capsys, "rho", "--family", "TE:3,2")
    r = spectral_radius(family("TE:3,2"))
    assert f'"rho": {r.rho:.17g}' in out


def test_rho_text_format(capsys):
    code, out, _ = run(capsys, "rho", "--family", "P:2,3", "--format", "text")
    assert code == 0 and out.startswith("rho = ")


def test_rho_disconnected_file(tmp_path, capsys):
    f = tmp_path / "two.hg"
    f.write_text("3 6 2\n0 1 2\n3 4 5\n")
    code, _, err = run(capsys, "rho", str(f))
    assert code == 4 and "connected" in err


def test_rho_parse_failure(tmp_path, capsys):
    f = tmp_path / "bad.hg"
    f.write_text("3 5 2\n0 1 2\n0 1 2\n")
    assert run(capsys, "rho", str(f))[0] == 2
    assert run(capsys, "rho", str(tmp_path / "missing.hg"))[0] == 2


def test_rho_non_convergence(capsys):
    code, out, _ = run(capsys, "rho", "--family", "D:3,8", "--max-iter", "3")
    d = json.loads(out)
    assert code == 3 and d["iterations"] == 3 and d["lower"] < d["upper"]


def test_gen_exact_bytes(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "P:3,2")
    assert code == 0 and out == "3 5 2\n0 1 2\n2 3 4\n"
    target = tmp_path / "dp.hg"
    assert run(capsys, "gen", "Dp:3,4", "--out", str(target))[0] == 0
    assert parse(target.read_text()) == family("Dp:3,4")
    assert run(capsys, "gen", "H4:5")[0] == 2


@pytest.mark.parametrize("spec", ["P:4,3", "C:3,4", "D:2,6", "Dp:3,5", "E3:1,2,2", "F3:2,3,3", "G3:1,1,0,1,3", "H4:2", "TE:5,2"])
def test_gen_then_rho_matches_family(spec, tmp_path, capsys):
    f = tmp_path / "g.hg"
    run(capsys, "gen", spec, "--out", str(f))
    _, a, _ = run(capsys, "rho", str(f))
    _, b, _ = run(capsys, "rho", "--family", spec)
    assert a == b


def test_reduce(capsys, tmp_path):
    out = tmp_path / "r.hg"
    code, text, _ = run(capsys, "reduce", "--family", "P:4,5", "--out", str(out))
    assert code == 0
    assert parse(out.read_text()) == family("P:3,5")
    assert json.loads(text)["identity_residual"] < 1e-8
    assert run(capsys, "reduce", "--family", "H4:2")[0] == 5
    assert run(capsys, "reduce", "--family", "P:2,3")[0] == 5


def test_reduce_to_stdout(capsys):
    code, out, err = run(capsys, "reduce", "--family", "P:3,2")
    assert code == 0 and out == serialize(family("P:2,2"))
    assert "identity_residual" in err


def test_enum_k3_m3(capsys):
    code, out, _ = run(capsys, "enum", "--k", "3", "--m", "3")
    rows = [json.loads(line) for line in out.splitlines()]
    summary = rows[-1]
    assert code == 0 and summary["summary"] is True
    assert summary["min_family"] == "P:3,3" and summary["second_family"] == "D:3,3"
    assert summary["total_count"] == len(rows) - 1 == 9
    assert all({"canonical", "edges", "rho", "lower", "upper"} <= set(r) for r in rows[:-1])


def test_enum_k3_m2(capsys):
    code, out, _ = run(capsys, "enum", "--k", "3", "--m", "2")
    summary = json.loads(out.splitlines()[-1])
    assert summary["total_count"] == 2 and summary["second_family"] == "TE:3,2"


def test_enum_cap(capsys, monkeypatch):
    assert run(capsys, "enum", "--k", "4", "--m", "12")[0] == 6
    monkeypatch.setenv("HYPERSPEC_MAX_N", "8")
    assert run(capsys, "enum", "--k", "3", "--m", "4")[0] == 6
    assert run(capsys, "enum", "--k", "3", "--m", "4", "--max-n", "9")[0] == 0


def test_enum_deterministic(capsys):
    a = run(capsys, "enum", "--k", "2", "--m", "5")[1]
    b = run(capsys, "enum", "--k", "2", "--m", "5", "--workers", "2")[1]
    assert a == b


@pytest.mark.parametrize("suite", ["lemma4", "polys", "rayleigh"])
def test_verify_passing_suites(suite, capsys):
    code, out, _ = run(capsys, "verify", suite)
    assert code == 0
    assert out.strip().splitlines()[-1].startswith(f"{suite}: ")
    assert "FAIL" not in out


def test_verify_tables_reports_every_case(capsys):
    code, out, _ = run(capsys, "verify", "tables")
    for name in ("rho(D:2,5)", "rho(D:2,8)", "rho(D:4,8)^4", "rho(D:4,5)"):
        assert name in out
    # exit status mirrors the per-case verdicts
    assert code == (1 if "FAIL" in out else 0)


def test_verify_unknown_suite(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "lemma9"])
    assert info.value.code == 2


def test_bad_tolerance(capsys):
    assert run(capsys, "rho", "--family", "P:3,2", "--tol", "0")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hyperspec", "gen", "TE:3,2"], capture_output=True, text=True, check=True
    )
    assert proc.stdout == "3 4 2\n0 1 2\n1 2 3\n"
