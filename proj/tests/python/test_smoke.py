import pytest

import zerosum_lab as zl


def test_davenport_values():
    assert zl.davenport("Z3xZ3")["D_k"] == 5
    assert [row["D_k"] for row in zl.dk_table("Z2", 3)] == [2, 4, 6]


def test_eta_and_linearity():
    assert zl.eta("Z2xZ2") == 4
    prof = zl.linearity("Z4", 4)
    assert prof["slope"] == 4


def test_support_lemma():
    r = zl.support_lemma(5, [1, 3])
    assert r["claims_hold"]
    assert r["n_values"] == [1, 2]


def test_invariant_theory():
    assert zl.crosscheck("Z2xZ2", 1)["passed"]
    assert zl.beta("reg(Z3)", 2)["beta_k"] == 6
    assert zl.sigma_zpzd("SD(3,2,2)")["passed"]
    assert zl.sigma_az2(6, 3)["passed"]


def test_example_ring():
    r = zl.ring_beta("a:1,b:3", "b^3-a^9, a*b^2-a^7", k=2, cutoff=30)
    assert r["beta_k"] == 6


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        zl.davenport("Z0")
    with pytest.raises(ValueError):
        zl.support_lemma(6, [1])
    with pytest.raises(zl.CapacityError):
        zl.davenport("Z2xZ2xZ4xZ8")


def test_verify_all_filtered():
    rep = zl.verify_all(groups=["Z2"])
    assert rep["summary"]["failed"] == 0
    assert "timings" not in rep
