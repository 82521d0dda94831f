import io
import json

import pytest

from homlie import __main__ as entry
from homlie.commands import preparse, run
from homlie.services import catalog


@pytest.fixture
def heis_file(algebra_file):
    return algebra_file(catalog.heisenberg(1), "heis.json")


@pytest.fixture
def sl2_file(algebra_file):
    return algebra_file(catalog.sl2_involution(), "sl2.yaml")


def test_help_lists_commands(cli):
    code, out = cli("help")
    assert code == 0
    for name in ("solve", "reduce", "verify", "catalog", "loop-check", "validate", "info"):
        assert f"{name}:" in out


def test_help_for_one_command(cli):
    code, out = cli("help", "solve")
    assert code == 0
    assert "Usage:" in out
    assert "homlie solve der" in out


def test_help_unknown_command(cli):
    code, out = cli("help", "frobnicate")
    assert code == 2
    assert "Unknown command" in out


def test_missing_arguments_exit_2(cli):
    code, _ = cli("solve")
    assert code == 2


def test_catalog_list_json(cli):
    code, out = cli("catalog", "list", "--json")
    assert code == 0
    names = [entry["name"] for entry in json.loads(out)]
    assert "example314" in names


def test_catalog_list_text(cli):
    code, out = cli("catalog", "list")
    assert code == 0
    assert "example314(a=0, b=0, lambda=1, mu=1): [x,y] = y" in out
    assert "sl2(): sl2 with the identity twist\n" in out


def test_catalog_emit_then_solve(cli, tmp_path):
    path = str(tmp_path / "ex.json")
    code, _ = cli("catalog", "emit", "example314", "--params", "a=1", "b=2", "lambda=3", "mu=5", "--output", path)
    assert code == 0
    code, out = cli("solve", "bider-s", path, "--adjoint", "1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["space"]["dim"] == 2
    assert payload["module"] == "ad_1"
    assert payload["verified"] is True


def test_catalog_emit_to_stdout(cli):
    code, out = cli("catalog", "emit", "sl2")
    assert code == 0
    assert json.loads(out)["basis"] == ["e", "f", "h"]


def test_catalog_bad_param(cli):
    code, out = cli("catalog", "emit", "heisenberg", "--params", "lambda")
    assert code == 2
    assert out.startswith("Error:")


def test_solve_text_report(cli, heis_file):
    code, out = cli("solve", "bider-s", heis_file)
    assert code == 0
    assert "Bider_s(L, ad_0): dim 2" in out
    assert "δ(e1,e2) = k1·e2 + k2·e3" in out


def test_solve_central_filter(cli, heis_file):
    code, out = cli("solve", "bider-s", heis_file, "--central")
    assert code == 0
    assert "CBider_s(L, ad_0): dim 1" in out


def test_filter_on_wrong_kind(cli, heis_file):
    code, out = cli("solve", "cent", heis_file, "--central", "--json")
    assert code == 2
    assert json.loads(out)["error"] == "ParseError"


def test_solve_derivations(cli, algebra_file):
    code, out = cli("solve", "der", algebra_file(catalog.sl2()), "--power", "0", "--json")
    assert code == 0
    assert json.loads(out)["space"]["dim"] == 3


def test_solve_with_module_file(cli, tmp_path, heis_file):
    from homlie.services.representation import adjoint
    from homlie.utils import io_utils
    module = str(tmp_path / "module.json")
    io_utils.write_document(io_utils.emit_module(adjoint(catalog.heisenberg(1), 0)), module)
    code, out = cli("solve", "bider-s", heis_file, "--module-file", module, "--json")
    assert code == 0
    assert json.loads(out)["space"]["dim"] == 2


def test_validate(cli, heis_file, tmp_path):
    code, out = cli("validate", heis_file)
    assert code == 0
    assert "Overall Status: OK" in out
    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps({
        "dim": 2, "basis": ["a", "b"], "brackets": [{"i": 1, "j": 2, "value": ["1", "0"]}],
        "alpha": [["2", "0"], ["0", "2"]],
    }), encoding="utf-8")
    code, out = cli("validate", str(broken), "--json")
    assert code == 1
    assert json.loads(out)["algebra"]["multiplicativity_failures"] == ["(a,b)"]


def test_invalid_algebra_is_rejected_elsewhere(cli, tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps({
        "dim": 2, "basis": ["a", "b"], "brackets": [{"i": 1, "j": 2, "value": ["1", "0"]}],
        "alpha": [["2", "0"], ["0", "2"]],
    }), encoding="utf-8")
    code, out = cli("info", str(broken))
    assert code == 1
    assert "Overall Status: Issues Detected" in out


def test_info(cli, heis_file):
    code, out = cli("info", heis_file, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["center_sequence"] == [3, 2, 0]
    assert payload["center_dim"] == 1
    assert payload["perfect"] is False


def test_reduce_bider_s(cli, heis_file):
    code, out = cli("reduce", "bider-s", heis_file, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["matches_direct"] is True
    assert payload["sequence"] == [3, 2, 0]
    assert payload["trace"][-1]["move"] == "quotient-center"


def test_reduce_text_with_stall(cli, heis_file):
    code, out = cli("reduce", "bider-s", heis_file, "--max-levels", "0")
    assert code == 0
    assert "stalled" in out
    assert "level limit reached" in out


def test_reduce_com(cli, sl2_file):
    code, out = cli("reduce", "com", sl2_file, "--json")
    assert code == 0
    assert json.loads(out)["trace"][0]["move"] == "centroid"


@pytest.mark.parametrize("target,extra", [
    ("thm36", []), ("thm37", ["--adjoint", "1"]), ("thm43", []), ("prop47", []), ("schur", ["--s", "1"]),
    ("lemmas", []),
])
def test_verify_confirmed_on_sl2(cli, sl2_file, target, extra):
    code, out = cli("verify", target, sl2_file, *extra)
    assert code == 0
    assert out.startswith("confirmed: ")


def test_verify_thm43_json(cli, sl2_file):
    code, out = cli("verify", "thm43", sl2_file, "--json")
    assert code == 0
    checks = json.loads(out)["checks"]
    assert {"name": "Cent = Com", "ok": True, "message": "dim 1"} in checks


def test_verify_hypotheses_failed(cli, heis_file):
    code, out = cli("verify", "thm36", heis_file)
    assert code == 1
    assert out.startswith("hypotheses-failed: thm36")


def test_loop_check(cli):
    code, out = cli("loop-check", "--k", "1", "--phi", "1 + t", "--window", "3")
    assert code == 0
    assert out.startswith("confirmed: loop-centroid")


def test_loop_check_wrong_twist(cli):
    code, out = cli("loop-check", "--k", "0", "--phi", "1", "--window", "2", "--twist-power", "2", "--json")
    assert code == 1
    assert json.loads(out)["details"]["first_failure"].startswith("(e⊗t^")


def test_loop_check_window_error(cli):
    code, out = cli("loop-check", "--k", "0", "--phi", "t^5", "--window", "2")
    assert code == 2
    assert "window" in out


@pytest.mark.parametrize("argv", [
    ("reduce", "bider-s", "{heis}", "--json"),
    ("reduce", "bider-s", "{heis}"),
    ("reduce", "com", "{heis}", "--json"),
    ("verify", "schur", "{sl2}", "--adjoint", "1", "--s", "1", "--json"),
    ("verify", "lemmas", "{heis}"),
    ("loop-check", "--k", "1", "--phi", "t^-1 - 2", "--window", "6", "--json"),
    ("loop-check", "--k", "0", "--phi", "1", "--window", "3", "--twist-power", "2"),
])
def test_repeated_runs_are_byte_identical(cli, heis_file, sl2_file, argv):
    argv = [a.format(heis=heis_file, sl2=sl2_file) for a in argv]
    first = cli(*argv)
    second = cli(*argv)
    assert first == second
    assert first[1]


def test_missing_file(cli, tmp_path):
    code, out = cli("info", str(tmp_path / "absent.json"))
    assert code == 2
    assert "file not found" in out


def test_config_that_fails_to_load(tmp_path):
    out = io.StringIO()
    assert run(["--config", str(tmp_path / "nope.toml"), "help"], out=out) == 2


def test_config_defaults_apply(tmp_path, heis_file):
    config_path = tmp_path / "homlie.yaml"
    config_path.write_text("default_adjoint: 2\n", encoding="utf-8")
    out = io.StringIO()
    code = run(["--config", str(config_path), "solve", "bider-s", heis_file, "--json"], out=out)
    assert code == 0
    assert json.loads(out.getvalue())["module"] == "ad_2"


def test_preparse_reads_global_options():
    options = preparse(["solve", "bider-s", "x.json", "--log-level", "debug"])
    assert options.log_level == "debug"
    assert options.config is None


def test_main_entry_point(capsys):
    assert entry.main(["--log-level", "error", "help"]) == 0
    assert "Available commands" in capsys.readouterr().out
