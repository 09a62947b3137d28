import pytest

import qschur

X = qschur.matrix([[0, 0], [0, 0]], [[0, 1], [0, 0]])
A = qschur.matrix([[0, 0], [0, 0]], [[0, 0], [1, 0]])
E11 = qschur.matrix([[1, 0], [0, 0]], [[0, 0], [0, 0]])


@pytest.mark.parametrize("engine", ["formula", "oracle", "auto"])
def test_spot_product(engine):
    out = qschur.product(2, 1, X, A, engine)
    assert out == [{"matrix": E11, "coeff": {"re": "-1/1", "im": "0/1"}}]


def test_basis_and_dimension():
    assert len(qschur.basis(1, 1)) == 2
    assert qschur.dimension(2, 2) == len(qschur.basis(2, 2))


def test_sergeev_clifford_square():
    c1 = [{"perm": [1, 2], "mask": [1, 0], "coeff": 1}]
    out = qschur.sergeev_multiply(2, c1, c1)
    assert out == [{"perm": [1, 2], "mask": [0, 0], "coeff": {"re": "-1/1", "im": "0/1"}}]


def test_d_matrix_identity_for_diagonal():
    assert qschur.d_matrix(qschur.matrix([[2, 0], [0, 1]], [[0, 0], [0, 0]])) == [1, 2, 3]


def test_gen_mul_and_realize():
    o = qschur.matrix([[0, 0], [0, 0]], [[0, 0], [0, 0]])
    terms = qschur.gen_mul("e", 1, o, [0, 0])
    assert len(terms) == 1 and terms[0]["matrix"]["even"] == [[0, 1], [0, 0]]
    fam = qschur.realize(o, [0, 0], 2)
    assert [lvl["r"] for lvl in fam] == [0, 1, 2]


def test_triangular_leading_sign():
    t = qschur.triangular(qschur.matrix([[0, 1], [0, 0]], [[0, 0], [0, 0]]), 2)
    assert t["leading_sign"] in (1, -1)
    assert t["ok"]


def test_verify_suite():
    res = qschur.verify("spot")
    assert res["failures"] == 0 and res["cases"] == 2
    assert "section3" not in qschur.suite_names()
    assert qschur.verify("section3", n=2, rmax=2)["failures"] == 0


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        qschur.product(2, 1, "{bad", A)
    with pytest.raises(ValueError):
        qschur.verify("nope")
