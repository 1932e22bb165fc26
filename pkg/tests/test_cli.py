import io
import json
import math
import subprocess
import sys
from fractions import Fraction

import pytest

from adomianpoly.adomian import from_json, render
from adomianpoly.cli import parse_angle, run


def call(*argv):
    out = io.StringIO()
    status = run(list(argv), stdout=out)
    return status, out.getvalue()


def test_apoly_1():
    assert call("apoly", "1") == (0, "u1*F^(1)(u0)\n")


def test_apoly_0():
    assert call("apoly", "0") == (0, "F(u0)\n")


def test_count_7_2():
    assert call("count", "7", "2") == (0, "3\n")


def test_count_per_k():
    status, text = call("count", "7")
    assert status == 0
    assert text.splitlines() == ["k=1: 1", "k=2: 3", "k=3: 4", "k=4: 3", "k=5: 2", "k=6: 1", "k=7: 1", "total: 15"]


def test_zpoly_k_above_m(capsys):
    status, text = call("zpoly", "3", "5")
    assert status != 0 and text == ""
    assert "k <= m" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ("zpoly", "0", "1"),
        ("count", "4", "9"),
        ("apoly", "-1"),
        ("pendulum", "--a", "1", "--b", "-1"),
        ("pendulum", "--a", "1", "--components", "5", "--order", "8"),
        ("pendulum", "--a", "1", "--components", "0"),
        ("pendulum", "--a", "1", "--domain", "rational"),
    ],
)
def test_validation_failures(argv):
    assert call(*argv)[0] != 0


def test_usage_errors():
    assert call()[0] != 0
    assert call("frobnicate")[0] != 0
    assert call("zpoly", "x", "1")[0] != 0


def test_zpoly_text_and_json():
    assert call("zpoly", "4", "2") == (0, "u1*u3 + 1/2*u2^2\n")
    status, text = call("zpoly", "4", "2", "--format", "json")
    data = json.loads(text)
    assert data == {"m": 4, "k": 2, "terms": [{"coeff": "1/1", "exps": {"1": 1, "3": 1}}, {"coeff": "1/2", "exps": {"2": 2}}]}


def test_json_round_trip_bytes():
    for m in range(0, 10):
        _, text = call("apoly", str(m), "--format", "json")
        assert render(from_json(text), "json") + "\n" == text


def test_apoly_json_totals_agree_with_count():
    for m in range(1, 16):
        _, text = call("apoly", str(m), "--format", "json")
        total = sum(len(p["z"]["terms"]) for p in json.loads(text)["parts"])
        _, counted = call("count", str(m), "--format", "json")
        assert total == json.loads(counted)["total"]


def test_deterministic_output():
    for argv in [("apoly", "8"), ("pendulum", "--a", "0.7", "--eval", "0.1,0.2")]:
        assert call(*argv) == call(*argv)


def test_pendulum_rational_record():
    status, text = call("pendulum", "--a", "pi/2", "--format", "json")
    assert status == 0
    rec = json.loads(text)
    assert rec["domain"] == "rational" and rec["M"] == 10 and rec["N"] == 20
    assert rec["a"] == math.pi / 2 and rec["b"] == 1.0
    coeffs = rec["coefficients"]
    assert float(coeffs[0]) == math.pi / 2
    assert Fraction(coeffs[18]) == Fraction(-211, 16293888000)
    assert Fraction(coeffs[4]) == 0


def test_pendulum_float_record_and_samples():
    status, text = call("pendulum", "--a", "1", "--components", "3", "--format", "json", "--eval", "0,0.5")
    rec = json.loads(text)
    assert rec["domain"] == "float" and rec["N"] == 6
    assert rec["coefficients"][2] == pytest.approx(-math.sin(1) / 2, abs=1e-15)
    assert rec["samples"][0] == [0.0, 1.0]


def test_pendulum_text_plot_data(tmp_path):
    out = tmp_path / "u.txt"
    status, text = call("pendulum", "--a", "0.3", "--eval", "0,0.25,0.5", "-o", str(out))
    assert status == 0 and text == ""
    lines = out.read_text().splitlines()
    samples = lines[lines.index("# t u(t)") + 1 :]
    assert len(samples) == 3
    t, u = map(float, samples[-1].split())
    assert t == 0.5 and abs(u - 0.3 * math.cos(0.5)) < 1e-3
    assert any(l.startswith("t^2: -0.14776") for l in lines)


def test_float_digits():
    _, text = call("pendulum", "--a", "1", "--components", "1", "--domain", "float")
    c2 = next(l for l in text.splitlines() if l.startswith("t^2:")).split()[1]
    assert float(c2) == -math.sin(1.0) / 2
    assert c2 == format(-math.sin(1.0) / 2, ".17g")


@pytest.mark.parametrize("text,value", [("pi/2", math.pi / 2), ("-pi/4", -math.pi / 4), ("3pi/2", 3 * math.pi / 2), ("pi", math.pi), ("0.25", 0.25)])
def test_parse_angle(text, value):
    assert parse_angle(text) == value


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "adomianpoly", "count", "12", "6"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "11\n"
