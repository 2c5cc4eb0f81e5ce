"""Smoke tests for the Python bindings."""

import json

import quatlie


def test_dimensions():
    assert quatlie.quat_type_dims(3) == (1, 3, 3, 1)
    assert quatlie.quat_type_dims(4) == (2, 4, 6, 4)
    assert quatlie.lie_algebra_dim(9, 3) == 8
    assert quatlie.lie_algebra_dim(2, 5) == 32
    assert quatlie.algebra_name(6) == "23i01"
    assert quatlie.algebra_id("2i2") == 11


def test_blade_arithmetic():
    e1 = quatlie.Multivector.blade(1, 3, [1])
    e2 = quatlie.Multivector.blade(1, 3, [2])
    assert (e1 * e1).coeff([]) == 1.0
    assert (e2 * e2).coeff([]) == -1.0
    e12 = e1 * e2
    assert e12.coeff([1, 2]) == 1.0
    assert quatlie.commutator(e1, e2).coeff([1, 2]) == 2.0

    e123 = quatlie.Multivector.blade(1, 3, [1, 2, 3])
    assert e123.reversion() == -e123
    assert e1.grade_involution() == -e1
    assert e2.hermitian_conjugation() == -e2

    ie12 = quatlie.Multivector.blade(2, 0, [1, 2], re="0", im="1")
    assert ie12.pseudo_hermitian() == ie12


def test_multivector_json_round_trip():
    u = quatlie.Multivector.blade(2, 1, [1, 3], re="1/2", im="-3/4")
    text = u.to_json()
    parsed = json.loads(text)
    assert parsed["p"] == 2
    assert parsed["terms"][0]["blade"] == [1, 3]
    assert parsed["terms"][0]["re"] == "1/2"
    assert quatlie.Multivector.from_json(text) == u


def test_subspace_and_closure():
    basis = quatlie.subspace_basis(16, 2, 0)
    assert len(basis) == 1
    report = quatlie.closure_check(16, 3, 0)
    assert report["passed"] is True
    assert report["violations"] == []
    assert quatlie.commutation_table_check(1, 3)["passed"] is True
    assert quatlie.spin_checks(2, 1)["passed"] is True


def test_representation():
    gens = quatlie.build_beta(3, 0)
    assert len(gens) == 3
    assert gens[0][0][0] == 1.0 and gens[0][1][1] == -1.0
    assert gens[2][0][1] == 1j
    info = quatlie.additional_signature(3, 0)
    assert (info["k"], info["l"]) == (2, 1)
    assert info["table_ok"] is True
    rj = quatlie.representation_json(1, 3)
    assert rj["kind"] == "beta"
    assert len(rj["matrices"]) == 4


def test_classification():
    d = quatlie.classify(6, 1, 3)
    assert d["family"] == "u"
    assert d["real_dim"] == 16
    assert d["signature"] == [2, 2]
    d11 = quatlie.classify(11, 3, 0)
    assert d11["family"] == "sp"
    assert d11["matrix_size"] == 2
    chain = quatlie.derived_iso_chain(8, 2, 1)
    assert any("G{12i03}(2,0)" in step for step in chain)


def test_verification():
    report = quatlie.verify(9, 2, 1, samples=5)
    assert report["passed"] is True
    names = {c["name"] for c in report["checks"]}
    assert {"closure", "dimensions", "rank", "matrix-conditions"} <= names

    reports = quatlie.sweep(2, ids=[6, 11], samples=5)
    assert len(reports) == 2 * 5
    assert all(r["passed"] for r in reports)
