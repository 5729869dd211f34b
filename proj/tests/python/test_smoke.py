import os
import subprocess
from fractions import Fraction

import pytest

import cardbin


def test_first_fit_small_family():
    fam = cardbin.generate("ff-small", 4, ell=1, eps=Fraction(1, 72))
    assert fam["predicted_ff"] == 16
    assert fam["certificate"]["count"] == 8
    assert len(cardbin.run("ff", 4, fam["sizes"])["bins"]) == 16
    assert cardbin.validate(4, fam["sizes"], fam["certificate"]["bins"]) == []


def test_exact_opt_and_bounds():
    sizes = [Fraction(3, 5), Fraction(1, 2), Fraction(2, 5), Fraction(3, 10)]
    result = cardbin.exact_opt(3, sizes)
    assert result["exact"] and result["count"] == 2 and result["claim"] == "optimal"
    assert cardbin.trivial_lower_bound(3, sizes) == 2
    assert "bin 0: count 3 > k=2" in cardbin.validate(2, ["1/2"] * 3, [[0, 1, 2]])


def test_duels():
    assert cardbin.duel("abs-k3", "ff")["ratio"] == Fraction(7, 4)
    for alg in ("ff", "harmonic", "tf", "alg5"):
        assert cardbin.duel("abs-k4plus", alg, k=5)["ratio"] >= 2
    batch = cardbin.batch_duel("ff", 7, 42)
    assert [s["certificate_bins"] for s in batch["stops"]] == [1, 7, 21, 42]


def test_weights_and_values():
    assert cardbin.item_weight(5, "additional", "3/10") == Fraction(7, 15)
    assert cardbin.item_weight(7, "additional", Fraction(1, 5)) == Fraction(9, 35)
    assert cardbin.lb_value(7) == Fraction(217, 143)
    rows = cardbin.ratio_table(4, 5)
    assert [r["ratio"] for r in rows] == [2, Fraction(31, 15)]


def test_errors_surface_as_value_errors():
    with pytest.raises(ValueError):
        cardbin.generate("ff-small", 9)
    with pytest.raises(cardbin.Error):
        cardbin.item_weight(3, "alpha", "1/2")


def test_instance_text_round_trip():
    text = cardbin.write_instance(2, ["1/2", "1/2", "3/6"])
    assert text == "BPCC v1\nk 2\nitem 1/2 x3\n"
    assert cardbin.read_instance(text) == (2, [Fraction(1, 2)] * 3)


def test_cli_in_process_and_binary(tmp_path):
    code, out, _ = cardbin.cli("duel", "--adversary", "abs-k3", "--alg", "ff")
    assert code == 0 and "ratio=7/4 (1.750000)" in out
    binary = os.environ.get("CARDBIN_CLI")
    if not binary:
        pytest.skip("CARDBIN_CLI not set")
    inst = tmp_path / "s.bpcc"
    subprocess.run([binary, "gen", "--family", "ff-small", "--k", "4", "--ell", "1", "--out", str(inst)], check=True)
    run = subprocess.run([binary, "run", "--alg", "ff", "--k", "4", "--in", str(inst)], capture_output=True, text=True)
    assert run.returncode == 0 and run.stdout == "bins 16\n"
