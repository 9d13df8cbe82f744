import json
import pathlib

import pytest

import cyclica

DATA = pathlib.Path(__file__).resolve().parents[2] / "data" / "algebras"


def test_hochschild_of_truncated_polynomials():
    assert cyclica.hochschild_dims(cyclica.Algebra.ground_field(), 4) == [1, 0, 0, 0]
    assert cyclica.hochschild_dims(cyclica.Algebra.truncated_polynomial(3), 4) == [3, 2, 2, 2]


def test_load_example_file():
    a = cyclica.Algebra.from_json((DATA / "dual_numbers.json").read_text())
    assert a.dim == 2
    again = cyclica.Algebra.from_json(a.to_json())
    assert again.to_json() == a.to_json()


def test_hp_of_ground_field():
    r = cyclica.hp(cyclica.Algebra.ground_field())
    assert r["verdict"] == "pass"
    assert r["HP"] == {"even": 1, "odd": 0}


def test_hp_too_few_levels_is_inconclusive():
    r = cyclica.hp(cyclica.Algebra.ground_field(), max_degree=3)
    assert r["verdict"] == "inconclusive"
    assert r["HP"]["even"] == "unstable"


def test_excision_and_goodwillie_for_dual_numbers():
    d = cyclica.Algebra.truncated_polynomial(2)
    x = cyclica.Ideal(d, [[0, 1]])
    exc = cyclica.verify_excision(x)
    assert exc["verdict"] == "pass"
    assert len(exc["six_term"]["checks"]) == 12
    assert cyclica.verify_goodwillie(x)["verdict"] == "pass"


def test_h_unital_verdicts():
    z = cyclica.Algebra.zero_multiplication(1)
    x = cyclica.Ideal(cyclica.Algebra.truncated_polynomial(2), [[0, 1]])
    r = cyclica.check_h_unital(z, [x])
    assert r["verdict"] == "fail" and r["consistent"]
    q = cyclica.Algebra.ground_field()
    assert cyclica.check_h_unital(q, [cyclica.Ideal.whole(q)])["verdict"] == "pass"


def test_fedosov_identities_hold():
    r = cyclica.fedosov_identities(cyclica.Algebra.truncated_polynomial(2), 1)
    assert r["coboundary_failures"] == 0 and r["cocycle_failures"] == 0


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        cyclica.Algebra.from_json(json.dumps({"dim": 2, "mult": []}))
    bad = {"dim": 2, "mult": [[["0", "1"], ["0", "0"]], [["0", "0"], ["1", "0"]]]}
    with pytest.raises(cyclica.InvariantError):
        cyclica.Algebra.from_json(json.dumps(bad))
    with pytest.raises(cyclica.DimensionCapError):
        cyclica.fedosov_identities(cyclica.Algebra.truncated_polynomial(3), 1, cap=10)
    with pytest.raises(cyclica.NonNilpotentError):
        q = cyclica.Algebra.ground_field()
        cyclica.verify_goodwillie(cyclica.Ideal.whole(q))
