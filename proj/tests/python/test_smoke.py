import json

import uqgh


def test_normalize_defining_relation():
    assert (
        uqgh.normalize("E F")
        == "F E + (1/(q - q^-1)) K - (1/(q - q^-1)) K^-1 g^2"
    )
    assert uqgh.normalize("K K^-1") == "1"


def test_quantum_integers():
    assert uqgh.qint(3) == "q^2 + 1 + q^-2"
    assert uqgh.qfact(2) == "q + q^-1"


def test_casimir_is_central():
    assert uqgh.is_central(uqgh.casimir())
    assert uqgh.is_central("g h^-3")
    assert not uqgh.is_central("E")


def test_central_character():
    value = uqgh.central_character("q^2", "1", "1", uqgh.casimir())
    assert value == "(q^3 + q^-3)/(q^2 - 2 + q^-2)"
    assert uqgh.characters_equal("q^2", "1", "1", "q^-4", "1", "1")


def test_clebsch_gordan():
    a = uqgh.simple_module(1, 1, "2", "3")
    b = uqgh.simple_module(1, 1, "5", "7")
    parts = uqgh.decompose(uqgh.tensor(a, b))
    assert sorted(p["n"] for p in parts) == [0, 2]
    assert all(p["alpha"] == "10" and p["beta"] == "21" for p in parts)


def test_module_relations_and_dual():
    v = uqgh.simple_module(-1, 2, "q+1", "2")
    ok, violation = uqgh.check_module(v)
    assert ok, violation
    dual = uqgh.dual(v)
    ok, violation = uqgh.check_module(dual)
    assert ok, violation
    assert json.loads(dual)["dim"] == 3


def test_verma():
    report = uqgh.verma_report("q^2", "1", "1")
    depths = [row["depth"] for row in report["maximal_vectors"]]
    assert depths == [0, 3]
    assert "not simple" in report["simplicity"]
    assert uqgh.verma_hom("q^-3", "1", "1", "q", "1", "1") == 2
    assert uqgh.verma_hom("q^-3", "1", "1", "q", "2", "1") is None


def test_hopf_and_equitable_checks():
    assert json.loads(uqgh.hopf_check(samples=5, seed=0))["pass"]
    assert json.loads(uqgh.equitable_check())["pass"]


def test_ext_dims():
    assert uqgh.ext_dims_torus("2", "3", "2", "3") == (1, 2, 1)
    assert uqgh.ext_dims_torus("2", "3", "5", "3") == (0, 0, 0)
