import io
import json
from pathlib import Path

import pytest
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

from enriques.cli import parse_class, run
from enriques.errors import ParseError
from enriques.lattice import E1, E2, E9, E10, E910, PicClass

SCHEMAS = Path(__file__).resolve().parents[1] / "docs" / "schemas"


def _registry():
    resources = []
    for path in SCHEMAS.glob("*.json"):
        schema = json.loads(path.read_text())
        resources.append((schema["$id"], Resource.from_contents(schema)))
    return Registry().with_resources(resources)


def validate(name, obj):
    schema = json.loads((SCHEMAS / name).read_text())
    Draft202012Validator(schema, registry=_registry()).validate(obj)


def cli(*argv, environ=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err, environ=environ or {})
    return code, out.getvalue(), err.getvalue()


def test_phi_example():
    code, out, _ = cli("phi", "--class", "[2,1,0,0,0,0,0,0,0,0]")
    assert code == 0 and json.loads(out)["phi"] == 1


def test_zero_class_is_domain_error():
    code, out, err = cli("phi", "--class", "[0,0,0,0,0,0,0,0,0,0]")
    assert code == 1 and out == ""
    data = json.loads(err)
    assert data["error"]["code"] == "NonPositiveSquare"
    validate("error.json", data)


@pytest.mark.parametrize("argv", [
    ("phi",),
    ("phi", "--class", "E1+Z"),
    ("nosuchcommand",),
    ("limit", "twist", "--L", "L0"),
    ("phi", "--class", "[1,2]"),
])
def test_usage_errors_exit_2(argv, capsys):
    code, _, err = cli(*argv)
    assert code == 2
    if err:
        validate("error.json", json.loads(err))


def test_not_cartier_exits_1():
    bad = json.dumps({"r": {"c0": 0, "f": 1}, "p": {"coords": [1] + [0] * 9}})
    code, _, err = cli("limit", "pair", "--L", bad)
    assert code == 1 and json.loads(err)["error"]["code"] == "NotCartier"


def test_parse_class_symbolic():
    assert parse_class("2*E9+2*E10+2*E910").num == (E9 + E10 + E910) * 2
    assert parse_class("2E1 + E2").num == E1 * 2 + E2
    assert parse_class("E1-E2").num == E1 - E2
    assert parse_class("E1+K") == PicClass(E1, 1)
    with pytest.raises(ParseError):
        parse_class("")


def test_census_square_4():
    code, out, _ = cli("census", "--square", "4")
    data = json.loads(out)
    validate("census.json", data)
    tuples = [(c["a"], c["epsilon"]) for c in data["components"]]
    assert ([2, 1, 0, 0, 0, 0, 0, 0, 0, 0], 0) in tuples
    assert ([0, 0, 0, 0, 0, 0, 0, 1, 0, 1], 0) in tuples
    assert all(c["genus"] == 3 for c in data["components"])


def test_census_table_and_threads():
    code, out, _ = cli("census", "--square", "8", "--table")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("#") and lines[1].split() == ["square", "genus", "tuple", "eps", "phi"]
    _, a, _ = cli("census", "--square", "16", "--threads", "1")
    _, b, _ = cli("census", "--square", "16", "--threads", "4")
    assert a == b


def test_verify_certificate_schema():
    code, out, _ = cli("verify", "--class", "2*E1+E2")
    data = json.loads(out)
    assert code == 0 and data["verdict"] == "impossible" and data["valid"]
    validate("gap_certificate.json", data)


def test_limit_commands():
    assert json.loads(cli("limit", "pair", "--L", "E10", "--M", "E20")[1]) == {"pairing": 1}
    assert json.loads(cli("limit", "pair", "--L", "L0")[1]) == {"pairing": 40}
    assert json.loads(cli("limit", "parity", "--L", "L0")[1])["obstructed"] is False
    code, out, _ = cli("limit", "obstruct", "--L", "L0", "--m", "7")
    data = json.loads(out)
    validate("obstruction_certificate.json", data)
    assert data["obstructed"]
    twisted = json.dumps(json.loads(cli("limit", "twist", "--L", "L0", "--a", "2")[1])["class"])
    assert json.loads(cli("limit", "obstruct", "--L", twisted, "--m", "7")[1])["twist"] == 2


def test_fundrep_schema():
    data = json.loads(cli("fundrep", "--class", "2*E1+E2+K")[1])
    assert data["certified"]
    validate("pic_class.json", data["target"])
    for e in data["sequence"]:
        validate("pic_class.json", e)


def test_other_commands():
    assert json.loads(cli("seshadri", "--class", "2*E9+2*E10+2*E910")[1])["epsilon"] == "6"
    assert json.loads(cli("length", "--class", "2*E1+E2")[1])["length"] == 3
    assert json.loads(cli("classify", "--class", "E9+E910")[1])["type"]["tag"] == "type_i"
    assert json.loads(cli("admissible", "--class", "2*E9+2*E10+2*E910")[1])["admissible"] is True
    sols = json.loads(cli("isotropic-enum", "--class", "E1+E2", "--c", "1")[1])["solutions"]
    assert [1, 0, 0, 0, 0, 0, 0, 0, 0, 0] in sols


def test_config_precedence(tmp_path):
    cfg = tmp_path / "enriques.conf"
    cfg.write_text("# defaults for this run\nmodel = general\nlength_cap = 20\n")
    code, out, _ = cli("seshadri", "--class", "E1+E2", "--config", str(cfg))
    assert json.loads(out)["model"] == "general"
    code, out, _ = cli("seshadri", "--class", "E1+E2", "--config", str(cfg),
                       environ={"ENRIQUES_MODEL": "arbitrary"})
    assert json.loads(out)["model"] == "arbitrary"
    code, out, _ = cli("seshadri", "--class", "E1+E2", "--config", str(cfg), "--model", "very_general",
                       environ={"ENRIQUES_MODEL": "arbitrary"})
    assert json.loads(out)["model"] == "very_general"
    code, _, err = cli("length", "--class", "2*E9+2*E10+2*E910", "--config", str(cfg))
    assert code == 1 and json.loads(err)["error"]["code"] == "LengthCapExceeded"


def test_bad_config_values():
    assert cli("phi", "--class", "E1+E2", "--length-cap", "1")[0] == 1
    assert cli("phi", "--class", "E1+E2", environ={"ENRIQUES_BOGUS": "1"})[0] == 0


def test_output_is_byte_deterministic():
    argv = ("verify", "--class", "2*E9+2*E10+2*E910")
    assert cli(*argv)[1] == cli(*argv)[1]
    argv = ("phi", "--class", "E1+E2+E3", "--oracle")
    first = cli(*argv)[1]
    assert first == cli(*argv)[1] and json.loads(first)["oracle"]["agrees"]


def test_selftest_quick():
    code, out, _ = cli("selftest", "--quick", "--table")
    assert code == 0
    assert out.splitlines()[-1] == "PASSED (quick)"
