import io

import pytest

from homlie.config import HomLieConfig
from homlie.commands import run
from homlie.services import catalog
from homlie.utils import io_utils


@pytest.fixture
def heis():
    return catalog.heisenberg(1)


@pytest.fixture
def sl2():
    return catalog.sl2()


@pytest.fixture
def sl2_inv():
    return catalog.sl2_involution()


@pytest.fixture
def ex314():
    return catalog.example314(1, 2, 3, 5)


CATALOG_CASES = [
    ("heisenberg", {"lambda": "1"}),
    ("heisenberg", {"lambda": "2"}),
    ("heisenberg", {"lambda": "-1/2"}),
    ("example314", {"a": "1", "b": "2", "lambda": "3", "mu": "5"}),
    ("example314", {"a": "0", "b": "0", "lambda": "3", "mu": "5"}),
    ("example314", {"a": "0", "b": "0", "lambda": "3", "mu": "1"}),
    ("example314", {"a": "0", "b": "0", "lambda": "3", "mu": "3"}),
    ("example314", {"a": "0", "b": "0", "lambda": "1", "mu": "1"}),
    ("sl2", {}),
    ("sl2_involution", {}),
    ("abelian", {"n": "1"}),
    ("abelian", {"n": "2"}),
    ("abelian", {"n": "3"}),
    ("abelian", {"n": "4"}),
]


def _case_id(case):
    name, params = case
    return name + "".join(f"-{v}" for v in params.values())


@pytest.fixture(params=CATALOG_CASES, ids=_case_id)
def catalog_algebra(request):
    """Every catalog instance the reductions and identity suites are checked on."""
    name, params = request.param
    return catalog.build(name, params)


@pytest.fixture(params=[0, 1, 2], ids=lambda k: f"ad_{k}")
def power(request):
    return request.param


@pytest.fixture
def config():
    return HomLieConfig()


@pytest.fixture
def algebra_file(tmp_path):
    """Writes an algebra to a JSON file and returns its path."""
    def write(L, name="algebra.json"):
        path = tmp_path / name
        io_utils.write_document(io_utils.emit_algebra(L), str(path))
        return str(path)
    return write


@pytest.fixture
def cli(config):
    """Runs the CLI in-process; returns (exit code, stdout text)."""
    def invoke(*argv):
        out = io.StringIO()
        code = run(list(argv), config=config, out=out)
        return code, out.getvalue()
    return invoke
