import json
import shutil
import subprocess
import sys

import pytest

from ratab.cli import detect_kind, run

from conftest import INSERTION_EXAMPLE, MLH_EXAMPLE, PHI_SIGNED, PHI_STEPS, SPLIT_EXAMPLE, STATS_EXAMPLE_EXTENDED


def ok(argv, stdin=""):
    code, out, err = run(argv, stdin)
    assert code == 0, err
    return out


def test_convert_zeta_and_back():
    out = ok(["convert", "--via", "zeta"], STATS_EXAMPLE_EXTENDED)
    assert out == "-5 4 9 -6 1 -7 3 8 2\n"
    back = ok(["convert", "--via", "zeta", "--from", "signed", "--to", "rat"], out)
    assert back.strip() == STATS_EXAMPLE_EXTENDED.strip()


def test_convert_insertion_and_zigzag():
    assert ok(["convert", "--via", "insertion"], INSERTION_EXAMPLE) == "[9 10 5 2 6][11 8 1 4 3 7][12 13]\n"
    out = ok(["convert", "--via", "zigzag"], INSERTION_EXAMPLE)
    assert out == "(11,8,1,e1)(9,10,5,2,6,e2)(12,13,e3)(4,3)(7)\n"
    back = ok(["convert", "--via", "zigzag", "--from", "cycles"], out)
    assert back.strip() == INSERTION_EXAMPLE.strip()


def test_convert_fe_roundtrip():
    rat = ok(["convert", "--via", "fe"], "[2 7 1 6 4][3 9 5 8]")
    assert rat.startswith("shape: 120021200")
    assert ok(["convert", "--via", "fe", "--from", "rat"], rat) == "[2 7 1 6 4][3 9 5 8]\n"


def test_convert_split_roundtrip():
    parts = ok(["convert", "--via", "split"], SPLIT_EXAMPLE)
    assert parts.count("shape:") == 7
    back = ok(["convert", "--via", "split", "--from", "packed", "--to", "rat"], parts)
    assert back.strip() == SPLIT_EXAMPLE.strip()


def test_convert_paths_and_words():
    assert ok(["convert", "--via", "sp2mlh"], PHI_SIGNED) == PHI_STEPS + "\n"
    assert ok(["convert", "--via", "sp2mlh", "--from", "mlh_star"], PHI_STEPS) == PHI_SIGNED + "\n"
    assert ok(["convert", "--via", "foata"], "8 5 9 2 4 1 3 7 6 10") == "(8,5,9,2,4,1)(3)(7,6)(10)\n"
    assert ok(["convert", "--via", "rho"], "-5 4 9 -6 1 -7 3 8 2") == "-5 4 9 -6 1 -7 3 8 2 | 1 2 3\n"


def test_convert_each_line():
    out = ok(["convert", "--via", "foata", "--each"], "2 1\n1 2\n")
    assert out == "(2,1)\n(1)(2)\n"


def test_bad_input_exits_1():
    code, out, err = run(["convert", "--via", "zeta"], "shape: 2x0\narrows:")
    assert code == 1 and "error" in err and not out
    code, _, err = run(["convert", "--via", "insertion"], "shape: 10\narrows:")
    assert code == 1 and "extended" in err


def test_usage_errors_exit_2():
    assert run(["convert"], "")[0] == 2
    assert run(["convert", "--via", "zeta", "--from", "word", "--to", "cycles"], "")[0] == 2
    assert run(["nonsense"], "")[0] == 2
    assert run(["stats", "/no/such/file"], "")[0] == 2


def test_enumerate():
    assert ok(["enumerate", "assemblee", "4", "2", "--count"]) == "36\n"
    out = ok(["enumerate", "assemblee", "3", "2"])
    assert len(out.splitlines()) == 6
    out = ok(["enumerate", "rat", "2", "1", "--stats"])
    assert out.count("fcell:") == out.count("shape:") == 6
    assert run(["enumerate", "rat", "9"])[0] == 1


def test_verify_reports():
    out = ok(["verify", "--identity", "lah", "--identity", "CN", "--max-n", "4"])
    assert out and all(line.startswith("PASS") for line in out.splitlines())
    data = json.loads(ok(["verify", "--identity", "ZNR", "--max-n", "3", "--json"]))
    assert data[0]["identity"] == "ZNR" and data[0]["passed"] is True


def test_render_and_stats():
    svg = ok(["render", "--format", "svg"], STATS_EXAMPLE_EXTENDED)
    assert svg.startswith("<svg") and "19 tiles" in svg
    assert ok(["render", "--format", "ascii"], MLH_EXAMPLE).count("\n") >= 3
    assert run(["render", "--format", "ascii"], STATS_EXAMPLE_EXTENDED)[0] == 1
    out = ok(["stats"], "-5 4 9 -6 1 -7 3 8 2")
    assert "sinv: 19" in out and "cro: 11" in out
    out = ok(["stats"], STATS_EXAMPLE_EXTENDED)
    assert "fcell: 11" in out and "topup: 2" in out
    assert "weight: q^12" in ok(["stats"], MLH_EXAMPLE)


@pytest.mark.parametrize(
    "text,kind",
    [
        (STATS_EXAMPLE_EXTENDED, "rat"),
        ("[1 2][3]", "assemblee"),
        ("(1,2)(3)", "cycles"),
        ("-1 2 | 1", "pair"),
        (MLH_EXAMPLE, "mlh"),
        (PHI_STEPS, "mlh_star"),
        ("3 1 e1 2", "word"),
        ("-2 1", "signed"),
        ("2 1", "word"),
    ],
)
def test_detect_kind(text, kind):
    assert detect_kind(text) == kind


@pytest.mark.skipif(shutil.which("ratab") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(
        ["ratab", "convert", "--via", "iota"], input="[2 8 5][3 9 7 1][4][6]", capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout == "7 1 e1 4 e2 8 e3 3 9 e4 6 2 5\n"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ratab.cli", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0 and "convert" in proc.stdout
