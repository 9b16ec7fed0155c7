from fractions import Fraction

import pytest

import macmahon


def test_descent_polynomials():
    assert macmahon.descent_polynomial("B", [1, 1]) == [1, 6, 1]
    assert macmahon.descent_polynomial("A", [1, 2]) == [1, 2]
    assert macmahon.descent_polynomial("coloured", [6], colours=5) == [1, 73, 1253, 5609, 6685, 1920, 84]


def test_carlitz():
    p = macmahon.carlitz_polynomial("B", [1, 2])
    assert p[(3, 3)] == 1
    assert p[(2, 2)] == 5
    assert sum(p.values()) == 24


def test_statistics_of_one_word():
    s = macmahon.statistics("A", [2, 3], "2 2 1 2 1")
    assert s["des"] == 2
    assert s["descent_set"] == [2, 4]


def test_verify_reports():
    r = macmahon.verify("theoremB", eta=[1, 2], K=6)
    assert r["verdict"] == "pass"
    assert len(set(r["routes"].values())) == 1
    r = macmahon.verify("coloured", eta=[6], colours=5, K=8)
    assert r["verdict"] == "mismatch-expected"


def test_geometry():
    assert macmahon.ehrhart("dcross:2:3") == [1, Fraction(5, 2), Fraction(9, 2)]
    assert [macmahon.count_points("dcross:2:3", k) for k in range(3)] == [1, 8, 24]
    assert macmahon.hstar("cross:3") == [1, 3, 3, 1]


def test_big_integers_are_exact():
    coeffs = macmahon.descent_polynomial("B", [1] * 9, threads=2)
    assert sum(coeffs) == 2**9 * 362880


def test_errors():
    with pytest.raises(ValueError):
        macmahon.descent_polynomial("A", [0, 2])
    with pytest.raises(ValueError):
        macmahon.ehrhart("prism:2")


def test_cli_in_process():
    code, out, _ = macmahon.run_cli(["poly", "descent", "--family", "B", "--eta", "1,1", "--format", "plain"])
    assert code == 0
    assert "6" in out
    code, _, _ = macmahon.run_cli(["verify", "nonsense"])
    assert code == 2
