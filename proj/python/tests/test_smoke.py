import json

import pytest

import wh3


def test_scalar_arithmetic_round_trips():
    a = wh3.Scalar("q/u^2")
    b = wh3.Scalar("u^2/q")
    assert a * b == wh3.Scalar(1)
    assert str(wh3.Scalar("(q^2-u^2)/(q-u)")) == str(wh3.Scalar("q+u"))
    assert wh3.Scalar(str(a)) == a


def test_scalar_parse_error():
    with pytest.raises(ValueError):
        wh3.Scalar("q+")


def test_scalar_substitution():
    assert wh3.Scalar("q*u").substitute("q=3/2,u=5/7") == wh3.Scalar("15/14")


def test_normalize_quantum_plane_relation():
    assert wh3.normalize("x", "x2*x1") == "(1/q)*x1*x2 - (s/q)*x3*x3"


def test_membership():
    assert wh3.is_member("x", "x1*x2 - q*x2*x1 - s*x3^2")
    assert not wh3.is_member("x", "x1*x2")


def test_check_ids():
    ids = wh3.check_ids()
    assert len(ids) == 12
    assert ids[0] == "ybe"


def test_verify_report_schema():
    r = wh3.verify("ybe")
    assert list(r) == ["check", "status", "mode", "prime", "seed", "details", "counterexample", "millis"]
    assert r["status"] == "pass"


def test_verify_mutation_fails():
    r = wh3.verify("ybe", mutations=["omega:11,11=1"])
    assert r["status"] == "fail"
    assert r["counterexample"].startswith("cell")


def test_verify_errata_off_rtt_fails():
    assert wh3.verify("rtt", errata="off")["status"] == "fail"


def test_omega_matrix():
    m = wh3.omega()
    assert len(m) == 9 and all(len(row) == 9 for row in m)
    assert m[0][0] == "q/u^2"


def test_export_reimport_via_cli(tmp_path):
    path = tmp_path / "R_tt.json"
    data = wh3.export("R_tt")
    assert data["name"] == "R_tt"
    assert len(data["relations"]) == 36
    path.write_text(json.dumps(data))
    code, out, err = wh3.run_cli(["verify", "--check", "rtt", "--algebra-file", str(path), "--format", "json"])
    assert code == 0, err
    assert json.loads(out)[0]["status"] == "pass"


def test_cli_usage_error():
    code, _, err = wh3.run_cli(["verify", "--check", "nope"])
    assert code == 2
    assert "unknown check" in err
