import json
import subprocess
import sys


from qcweights.cli import main


def run(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_text(capsys, corpus):
    code, out, err = run(capsys, "analyze", str(corpus / "example1.qcc"))
    assert code == 0 and err == ""
    assert "s(C) = 1" in out
    assert "<shift>: formula 1, orbits 1 (tight)" in out


def test_analyze_json_round_trip(capsys, corpus):
    code, out, _ = run(capsys, "analyze", str(corpus / "theorem3_ex1.qcc"), "--json")
    assert code == 0
    report = json.loads(out)
    assert set(report) >= {
        "parameters", "cosets", "constituents", "bounds", "orbit_counts",
        "weight_distribution", "s", "tightness", "warnings",
    }
    assert report["bounds"] == {"shift": 15, "shift-scalar": 15, "full": 7}
    assert report["orbit_counts"]["full"] == 7 and report["tightness"]["full"] is True
    keys = list(report["weight_distribution"])
    assert keys == sorted(keys, key=int)
    assert json.loads(json.dumps(report)) == report
    assert report["constituents"][1]["h"] == [1, 0, 0, 1, 0, 0, 1]


def test_omega_index_invariance(capsys, corpus):
    for name in ("lemma6_ex", "theorem3_ex2", "theorem2_ex"):
        reports = []
        for k in ("1", "2"):
            code, out, _ = run(capsys, "analyze", str(corpus / f"{name}.qcc"), "--json", "--omega-index", k)
            assert code == 0
            reports.append(json.loads(out))
        for key in ("bounds", "orbit_counts", "weight_distribution", "s", "constituents"):
            assert reports[0][key] == reports[1][key]


def test_bounds_command_skips_enumeration(capsys, corpus):
    code, out, _ = run(capsys, "bounds", str(corpus / "lemma6_ex.qcc"), "--json")
    report = json.loads(out)
    assert code == 0
    assert report["bounds"] == {"shift": 93, "shift-scalar": 31, "full": 7}
    assert report["weight_distribution"] is None and report["orbit_counts"] == {}


def test_cosets_command(capsys):
    code, out, _ = run(capsys, "cosets", "--q", "2", "--m", "9", "--json")
    listing = json.loads(out)
    assert code == 0 and listing["m_prime"] == 6
    assert [c["members"] for c in listing["cosets"]] == [[0], [1, 2, 4, 5, 7, 8], [3, 6]]
    code, out, _ = run(capsys, "cosets", "--q", "2", "--m", "15")
    assert code == 0 and out.count("rep") == 5
    code, out, _ = run(capsys, "cosets", "--q", "3", "--m", "26")
    assert "{13}" in out


def test_exit_codes(capsys, tmp_path, corpus):
    bad = tmp_path / "bad.qcc"
    bad.write_text("code q=2 m=4 l=2\n")
    code, out, err = run(capsys, "analyze", str(bad))
    assert code == 1 and out == "" and "gcd(m,q) must be 1" in err

    code, _, err = run(capsys, "analyze", str(corpus / "lemma4_ex1.qcc"), "--max-enum", "100")
    assert code == 2 and "enumeration limit" in err

    code, _, err = run(capsys, "analyze", str(corpus / "example1.qcc"), "--groups", "full")
    assert code == 3 and "does not preserve" in err

    code, _, _ = run(capsys, "analyze", str(corpus / "example1.qcc"), "--groups", "nope")
    assert code == 1
    code, _, _ = run(capsys, "analyze", str(tmp_path / "missing.qcc"))
    assert code == 1
    code, _, _ = run(capsys, "cosets", "--q", "2", "--m", "4")
    assert code == 1
    code, _, _ = run(capsys, "analyze", str(corpus / "example1.qcc"), "--max-enum", "0")
    assert code == 1


def test_explicit_groups(capsys, corpus):
    code, out, _ = run(capsys, "analyze", str(corpus / "lemma4_ex2.qcc"), "--json", "--groups", "shift-scalar")
    report = json.loads(out)
    assert code == 0 and list(report["bounds"]) == ["shift-scalar"]
    assert report["tightness"]["shift-scalar"] is True


def test_zero_code_runs(capsys, tmp_path):
    f = tmp_path / "zero.qcc"
    f.write_text("code q=2 m=9 l=2\n")
    code, out, _ = run(capsys, "analyze", str(f), "--json")
    report = json.loads(out)
    assert code == 0 and report["s"] == 0 and report["weight_distribution"] == {"0": 1}
    assert any("zero code" in w for w in report["warnings"])


def test_module_entry_point(corpus):
    proc = subprocess.run(
        [sys.executable, "-m", "qcweights", "analyze", str(corpus / "example2.qcc")],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "1 + x^15 + x^30 + x^45" in proc.stdout
