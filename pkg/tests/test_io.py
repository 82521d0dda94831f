import json

import pytest

from homlie.errors import ParseError, ValidationError
from homlie.services import catalog
from homlie.services.maps import solve_bider_s, solve_cent
from homlie.services.representation import adjoint
from homlie.services.verify import verify_thm43
from homlie.utils import io_utils

HEIS_DOC = {
    "dim": 3,
    "basis": ["e1", "e2", "e3"],
    "brackets": [{"i": 1, "j": 2, "value": ["0", "0", "1"]}],
    "alpha": [["1", "0", "0"], ["1", "1", "0"], ["0", "0", "1"]],
}


def test_parse_algebra_data():
    L = io_utils.parse_algebra_data(HEIS_DOC)
    assert L == catalog.heisenberg(1)


def test_emit_algebra_writes_nonzero_brackets(ex314):
    doc = io_utils.emit_algebra(ex314)
    assert doc["brackets"] == [{"i": 1, "j": 2, "value": ["0", "1", "0"]}]
    assert doc["alpha"][2] == ["2", "0", "5"]
    assert io_utils.parse_algebra_data(doc) == ex314


@pytest.mark.parametrize("suffix", [".json", ".yaml", ".yml"])
def test_file_round_trip(tmp_path, sl2_inv, suffix):
    path = tmp_path / f"algebra{suffix}"
    io_utils.write_document(io_utils.emit_algebra(sl2_inv), str(path))
    assert io_utils.parse_algebra(str(path)) == sl2_inv


@pytest.mark.parametrize("change,path", [
    ({"extra": 1}, "extra"),
    ({"dim": -1}, "dim"),
    ({"basis": ["a", "a", "b"]}, "basis"),
    ({"brackets": [{"i": 2, "j": 1, "value": ["0", "0", "1"]}]}, "brackets[0]"),
    ({"brackets": [{"i": 1, "j": 2, "value": ["0", "0.5", "1"]}]}, "brackets[0].value[1]"),
    ({"alpha": [["1", "0", "0"], ["1", "1", "0"], ["0", "0", 1]]}, "alpha[2][2]"),
    ({"alpha": [["1", "0", "0"]]}, "alpha"),
])
def test_parse_errors_carry_the_field_path(change, path):
    doc = dict(HEIS_DOC, **change)
    with pytest.raises(ParseError) as info:
        io_utils.parse_algebra_data(doc, source="h.json")
    assert info.value.path == path
    assert str(info.value).startswith("h.json: ")


def test_duplicate_brackets_rejected():
    entry = {"i": 1, "j": 2, "value": ["0", "0", "1"]}
    with pytest.raises(ParseError):
        io_utils.parse_algebra_data(dict(HEIS_DOC, brackets=[entry, entry]))


def test_invalid_algebra_only_rejected_when_required():
    doc = dict(HEIS_DOC, alpha=[["2", "0", "0"], ["0", "2", "0"], ["0", "0", "2"]])
    with pytest.raises(ValidationError):
        io_utils.parse_algebra_data(doc)
    L = io_utils.parse_algebra_data(doc, require_valid=False)
    assert not L.validation.accepted


def test_missing_and_malformed_files(tmp_path):
    with pytest.raises(ParseError):
        io_utils.load_document(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(ParseError):
        io_utils.load_document(str(bad))
    listing = tmp_path / "list.yaml"
    listing.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(ParseError):
        io_utils.load_document(str(listing))


def test_module_round_trip(heis):
    V = adjoint(heis, 1)
    parsed = io_utils.parse_module_data(io_utils.emit_module(V), heis)
    assert parsed.rho == V.rho
    assert parsed.beta == V.beta


def test_module_rho_count_checked(heis):
    doc = io_utils.emit_module(adjoint(heis, 0))
    doc["rho"] = doc["rho"][:2]
    with pytest.raises(ParseError) as info:
        io_utils.parse_module_data(doc, heis)
    assert info.value.path == "rho"


def test_emit_map_space(heis):
    doc = io_utils.emit_map_space(solve_bider_s(heis, adjoint(heis, 0)))
    assert doc["kind"] == "bider_s"
    assert doc["dim"] == 2
    # δ(e1, e2) = e2 in the first basis map, read as t[a][i][j]
    assert doc["basis"][0][1][0][1] == "1"
    assert doc["basis"][0][1][1][0] == "-1"
    assert doc["basis"][0][0][0][1] == "0"
    json.loads(io_utils.dumps_json(doc))


def test_emit_map_space_linear_rows(sl2):
    doc = io_utils.emit_map_space(solve_cent(sl2, adjoint(sl2, 0)))
    assert doc["dim"] == 1
    assert doc["basis"][0] == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]


def test_emit_verdict(sl2_inv):
    doc = io_utils.emit_verdict(verify_thm43(sl2_inv, adjoint(sl2_inv, 0)))
    assert doc["status"] == "confirmed"
    assert {"name": "Cent = Com", "ok": True, "message": "dim 1"} in doc["checks"]
    assert doc["details"]["cent_dim"] == 1
