from pathlib import Path

import pytest

import frobenius_forge as ff

FIXTURES = Path(__file__).resolve().parents[2] / "fixtures"


def test_cone_matrix():
    labels, e = ff.multiplicity_matrix(FIXTURES / "quadric_cone.spec")
    assert len(labels) == 2
    assert e == [[5, 4], [4, 5]]
    assert ff.matrix_power(e, 2) == [[41, 40], [40, 41]]


def test_primitivity_and_bound():
    assert ff.primitivity([[5, 4], [4, 5]]) == 1
    assert ff.primitivity([[0, 1], [1, 0]]) is None
    assert ff.wielandt_bound(3) == 5


def test_run_reports():
    report, code = ff.run("ematrix", FIXTURES / "segre_p3.spec")
    assert code == 0
    assert report["command"] == "ematrix"
    assert report["input_digest"] == "sha256:" + ff.digest((FIXTURES / "segre_p3.spec").read_text())
    assert [row["weighted_column_sum"] for row in report["column_check"]] == [27, 27, 27]
    assert report["rank_identity"]["status"] == "verified"


def test_group_decompose():
    report, code = ff.run("decompose", FIXTURES / "cyclic3_group_p7.spec")
    assert code == 0
    assert [s["multiplicity"] for s in report["summands"]] == [17, 16, 16]


def test_witness_on_cone():
    report, code = ff.run("witness", FIXTURES / "quadric_cone.spec", q_max=9)
    assert code == 0
    assert report["found"] is True
    assert report["q"] == 9


def test_errors_carry_kind():
    with pytest.raises(ff.ForgeError) as info:
        ff.run("discriminant", FIXTURES / "quadratic_char2.spec")
    assert info.value.kind == "ZeroDiscriminant"
    assert info.value.exit_code == 1
    with pytest.raises(ff.ForgeError) as info:
        ff.run("closure", "kind = diagonal\nprime = 4\n")
    assert info.value.kind == "InputError"
