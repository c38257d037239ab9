"""Smoke tests for the python extension: a thin pass over each exposed layer."""

import json
from fractions import Fraction

import pytest

import rieszkit as rk


F = Fraction


def test_lattice_ops():
    s, i = rk.sup_inf([1, 3], [2, 2])
    assert s == [F(2), F(3)]
    assert i == [F(1), F(2)]

    pos, neg, absv = rk.sign_parts([2, -3])
    assert (pos, neg, absv) == ([F(2), F(0)], [F(0), F(3)], [F(2), F(3)])

    assert rk.multiply(["2", "3"], ["4", "5"]) == [F(8), F(15)]
    assert rk.band_mask([2, 0, -4]) == "101"
    assert rk.mask_meet("1100", "1010") == "1000"
    assert rk.mask_join("1100", "1010") == "1110"
    assert rk.mask_complement("1100") == "0011"


def test_partition():
    p = rk.Partition(4, [[0], [1], [2], [3]])
    assert len(p.members()) == 16
    assert p.refines(rk.Partition(4, [[0, 1], [2, 3]]))
    assert p.is_member("1010")


def test_expectation():
    T = rk.Expectation(4, [[0, 1], [2, 3]], [1, 1, 1, 1])
    assert T.apply([1, 2, 3, 4]) == [F(3, 2), F(3, 2), F(7, 2), F(7, 2)]
    assert T.in_range([5, 5, -1, -1])
    assert T.norm2_squared([1, -2, 3, 4]) == [F(5, 2), F(5, 2), F(25, 2), F(25, 2)]
    holds, lhs, rhs = T.holder([1, -2, 3, 4], [2, 1, 0, -1])
    assert holds and all(a <= b for a, b in zip(lhs, rhs))


def test_charge_decomposition():
    B = rk.Partition(4, [[0], [1], [2], [3]])
    G = rk.Partition(4, [[0, 1], [2, 3]])
    psi = rk.Charge(B, G, [3, -1, 2, -2])
    assert psi.evaluate("1100") == [F(2), F(2), F(0), F(0)]
    assert psi.charge_supremum("1111") == [F(3), F(3), F(2), F(2)]
    assert psi.maximal_member("1111", 2) == "1110"
    assert psi.hahn_jordan() == "1010"
    assert psi.brute_force_hahn() == ["1010"]
    assert psi.strongly_negative_witness("0111") == "0101"

    T = rk.Expectation(4, [[0, 1], [2, 3]], [1, 1, 1, 1])
    from_f = rk.Charge.from_density(T, [3, -1, 2, -2], B)
    assert from_f.hahn_jordan() == "1010"


def test_partial_inverse():
    assert rk.canonical_inverse([2, 0, -4]) == [F(1, 2), F(0), F(-1, 4)]
    lad = rk.spectral_masks([F(1, 2), 2], 1)
    assert lad["cells"] == [(0, "10"), (3, "01")]
    lo, hi = rk.dyadic_bounds([3], 1)
    assert (lo, hi) == ([F(5, 2)], [F(3)])
    assert rk.spectral_inverse([2], 3) == [F(1, 2)]


def test_functional():
    T = rk.Expectation(4, [[0, 1], [2, 3]], [1, 1, 1, 1])
    f = rk.Functional.density(T, [1, -2, 3, 4])
    assert f.exact_represent() == [F(1), F(-2), F(3), F(4)]
    assert f.positive_component() == "1011"
    assert f.dyadic_represent(10) == [F(1), F(-2), F(3), F(4)]
    err = [a - b for a, b in zip(f.exact_represent(), f.dyadic_represent(4))]
    assert max(abs(e) for e in err) <= F(2, 16)

    with pytest.raises(rk.RieszError):
        rk.Functional.matrix(T, [[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])

    report = rk.bijection_report(T, [1, -2, 3, 4])
    assert all(row["pass"] for row in report)


def test_certificates():
    instance = json.dumps(
        {
            "dimension": 4,
            "weights": ["1/1", "1/1", "1/1", "1/1"],
            "expectationPartition": [[0, 1], [2, 3]],
            "algebraAtoms": [[0], [1], [2], [3]],
            "charge": ["3/1", "-1/1", "2/1", "-2/1"],
        }
    )
    cert = json.loads(rk.run_from_json("decompose", instance, oracle=True))
    assert cert["allPassed"]
    assert cert["outputs"]["hahnComponent"] == "1010"

    a = rk.selftest(42, 10)
    b = rk.selftest(42, 10)
    assert a == b
    assert json.loads(a)["allPassed"]
