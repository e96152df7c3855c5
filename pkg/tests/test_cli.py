import json
import subprocess
import sys
from fractions import Fraction

import pytest

from boolinf import bl_influence, fb_influence, gs_influence, influence, pseudo_influence, walsh_spectrum
from boolinf.cli import ReportOptions, emit_json, exact_fields, main, run_report

from conftest import AND2, AND3, BENT4, GS4


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def as_fraction(entry):
    if entry.get("den") is not None:
        return Fraction(entry["num"], entry["den"])
    return Fraction(entry["num"], 1 << entry["log2_den"])


def test_parse_examples(capsys):
    code, out, _ = run(capsys, "--tt", "0001", "--format", "json")
    assert code == 0 and json.loads(out)["weight"] == 1
    code, out, _ = run(capsys, "--anf", "x1*x2 + x3*x4", "--n", "4", "--format", "json")
    assert json.loads(out)["weight"] == 6
    code, out, _ = run(capsys, "--hex", "8", "--n", "2", "--spectrum", "walsh", "--format", "json")
    d = json.loads(out)
    assert d["weight"] == 1
    # f = 1 only at index 0: W(a) = [a = 0] - 1/2
    assert [r["float"] for r in d["spectrum"]["values"]] == [0.5, -0.5, -0.5, -0.5]


def test_and3_singleton_average(capsys):
    code, out, _ = run(capsys, "--tt", "00000001", "--t", "1", "--measure", "ac", "--format", "json")
    (entry,) = json.loads(out)["measures"]
    assert entry == {"measure": "ac", "t": 1, "num": 1, "log2_den": 2, "float": 0.25}


def test_constant_characterize(capsys):
    code, out, _ = run(capsys, "--tt", "0000", "--characterize", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["measures"] == [] and d["weight"] == 0
    c = d["characterization"]
    assert c["resiliency_order"] is None and c["pc_order"] == 0 and c["entropy"] == 0


def test_gs_function_all_measures(capsys):
    code, out, _ = run(capsys, "--tt", "0000011000000000", "--set", "3,4", "--measure", "all", "--format", "json")
    got = {e["measure"]: as_fraction(e) for e in json.loads(out)["measures"]}
    assert got["ac"] == Fraction(1, 4) and got["fb"] == Fraction(1, 8)
    assert got["gs"] == 0 and got["bl"] == Fraction(1, 4)
    assert got["pi"] == pseudo_influence(GS4, [3, 4]).value


def test_and2_pi_entry(capsys):
    code, out, _ = run(capsys, "--tt", "0001", "--set", "1,2", "--measure", "pi", "--format", "json")
    assert json.loads(out)["measures"] == [
        {"measure": "pi", "subset": [1, 2], "num": 1, "log2_den": 2, "float": 0.25}]


def test_json_schema_and_key_order(capsys):
    code, out, _ = run(capsys, "--tt", "0001", "--set", "1", "--characterize", "--format", "json")
    d = json.loads(out)
    assert list(d) == ["n", "weight", "measures", "characterization", "provenance", "version"]
    assert d["version"] == 1
    assert d["provenance"]["input"] == "tt" and d["provenance"]["value"] == "0001"
    assert list(d["measures"][0]) == ["measure", "subset", "num", "log2_den", "float"]


def test_subsets_sorted_by_mask(capsys):
    code, out, _ = run(capsys, "--tt", "00000001", "--set", "1,2", "--set", "3", "--set", "1", "--format", "json")
    assert [e["subset"] for e in json.loads(out)["measures"]] == [[1], [1, 2], [3]]


@pytest.mark.parametrize("f, subsets", [
    (AND2, [(1,), (2,), (1, 2)]),
    (AND3, [(1,), (1, 3), (1, 2, 3)]),
    (BENT4, [(1,), (2, 4), (1, 2, 3, 4)]),
    (GS4, [(3, 4), (1, 2), (1, 3, 4)]),
])
def test_cli_values_equal_library(f, subsets):
    opts = ReportOptions(subsets=list(subsets), measures=["ac", "pi", "bl", "gs", "fb"])
    rep = run_report(f, opts)
    lib = {"ac": influence, "pi": pseudo_influence, "bl": bl_influence, "gs": gs_influence, "fb": fb_influence}
    for e in rep.measures:
        v = lib[e["measure"]](f, e["subset"]).value
        assert as_fraction(e) == v
        if v:
            assert abs(e["float"] - float(v)) / float(v) < 1e-15


def test_non_dyadic_average():
    assert exact_fields(Fraction(1, 3)) == {"num": 1, "log2_den": None, "den": 3, "float": 1 / 3}
    assert exact_fields(Fraction(3, 8)) == {"num": 3, "log2_den": 3, "float": 0.375}


def test_deterministic_bytes():
    opts = ReportOptions(subsets=[(1, 2)], sizes=[1, 2], measures=["ac", "bl", "pi"], characterize=True,
                         paths=True, entropy=True, spectrum="autocorr")
    assert emit_json(run_report(BENT4, opts)) == emit_json(run_report(BENT4, opts))
    argv = [sys.executable, "-m", "boolinf", "--tt", "0110100110010110", "--t", "2", "--measure", "all",
            "--characterize", "--format", "json"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["n"] == 4


def test_text_output(capsys):
    code, out, err = run(capsys, "--anf", "x1*x2", "--n", "2", "--set", "1,2", "--measure", "ac,bl",
                         "--paths", "--entropy")
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert lines[0] == "n\t2" and "ac\tT=1,2\t3/4\t0.75" in lines and "bl\tT=1,2\t1\t1" in lines
    assert "edge_boundary\t2" in lines


@pytest.mark.parametrize("argv, code", [
    (["--tt", "0001", "--hex", "1", "--n", "2"], 2),
    (["--tt", "001"], 2),
    (["--tt", "0021"], 2),
    (["--hex", "zz", "--n", "3"], 2),
    (["--anf", "x1 +", "--n", "2"], 2),
    (["--anf", "x1"], 2),
    (["--tt", "0001", "--set", "a,b"], 2),
    (["--tt", "0001", "--measure", "xx"], 2),
    ([], 2),
    (["--tt", "0001", "--set", "3"], 3),
    (["--tt", "0001", "--t", "5"], 3),
    (["--anf", "x1", "--n", "25"], 3),
    (["--anf", "x1", "--n", "5", "--max-n", "4"], 3),
])
def test_exit_codes(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code and out == "" and err


def test_argparse_errors_exit_2():
    r = subprocess.run([sys.executable, "-m", "boolinf", "--tt", "0001", "--format", "xml"],
                       capture_output=True, text=True)
    assert r.returncode == 2 and r.stdout == "" and "error" in r.stderr


def test_spectrum_export_matches_library(capsys):
    code, out, _ = run(capsys, "--anf", "x1*x2 + x3", "--n", "3", "--spectrum", "walsh", "--format", "json")
    recs = json.loads(out)["spectrum"]["values"]
    spec = walsh_spectrum(AND2.__class__(3, [0, 1, 0, 1, 0, 1, 1, 0]))
    assert [Fraction(r["numerator"], 1 << r["log2_denominator"]) for r in recs] == spec.values
