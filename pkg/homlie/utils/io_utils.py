"""Reading and writing algebra, module, map-space and trace documents.

Rationals are always strings "p" or "p/q". Matrices are lists of rows; column j of the
alpha matrix holds α(e_j). Bracket pairs are 1-based with i < j.
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence

import yaml

from ..errors import ParseError
from ..services.algebra import HomLieAlgebra, basis_pairs, require_accepted
from ..services.linalg import Matrix, Vector, format_rational, parse_rational, vec_is_zero
from ..services.maps import MapSpace
from ..services.representation import Representation, require_accepted_rep
from ..services.verify import Verdict

logger = logging.getLogger(__name__)

ALGEBRA_FIELDS = ("dim", "basis", "brackets", "alpha")
BRACKET_FIELDS = ("i", "j", "value")
MODULE_FIELDS = ("dim_v", "rho", "beta")


# --- Documents ---
def load_document(path: str) -> Dict[str, Any]:
    """Loads a JSON or YAML object, chosen by suffix (.yaml/.yml, anything else is JSON)."""
    file_path = Path(path)
    logger.info(f"Reading {file_path}")
    try:
        text = file_path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ParseError("file not found", source=str(path))
    except OSError as e:
        raise ParseError(f"cannot read file: {e}", source=str(path))
    try:
        if file_path.suffix.lower() in (".yaml", ".yml"):
            data = yaml.safe_load(text)
        else:
            data = json.loads(text)
    except yaml.YAMLError as e:
        raise ParseError(f"invalid YAML: {e}", source=str(path))
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}", source=str(path))
    if not isinstance(data, dict):
        raise ParseError("document root must be an object", source=str(path))
    return data


def dumps_json(value: Any) -> str:
    return json.dumps(value, sort_keys=True, indent=2, ensure_ascii=False)


def dumps_yaml(value: Any) -> str:
    return yaml.safe_dump(value, sort_keys=False, allow_unicode=True)


def write_document(value: Any, path: str):
    text = dumps_yaml(value) if Path(path).suffix.lower() in (".yaml", ".yml") else dumps_json(value) + "\n"
    Path(path).write_text(text, encoding="utf-8")
    logger.info(f"Wrote {path}")


# --- Field helpers ---
def _check_fields(data: Any, allowed: Sequence[str], path: str, source: Optional[str]):
    if not isinstance(data, dict):
        raise ParseError("expected an object", path or "<root>", source)
    for key in data:
        if key not in allowed:
            raise ParseError(f"unknown field '{key}'", f"{path}.{key}" if path else str(key), source)
    for key in allowed:
        if key not in data:
            raise ParseError(f"missing field '{key}'", f"{path}.{key}" if path else key, source)


def _count(value: Any, path: str, source: Optional[str]) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ParseError(f"expected a non-negative integer, got {value!r}", path, source)
    return value


def _rational(value: Any, path: str, source: Optional[str]):
    try:
        return parse_rational(value, path)
    except ParseError as e:
        raise ParseError(e.detail, e.path, source)


def _vector(value: Any, length: int, path: str, source: Optional[str]) -> Vector:
    if not isinstance(value, list):
        raise ParseError("expected a list", path, source)
    if len(value) != length:
        raise ParseError(f"expected {length} entries, got {len(value)}", path, source)
    return tuple(_rational(a, f"{path}[{t}]", source) for t, a in enumerate(value))


def _matrix(value: Any, rows: int, cols: int, path: str, source: Optional[str]) -> Matrix:
    if not isinstance(value, list) or len(value) != rows:
        got = len(value) if isinstance(value, list) else type(value).__name__
        raise ParseError(f"expected {rows} rows, got {got}", path, source)
    return Matrix.from_rows([_vector(r, cols, f"{path}[{t}]", source) for t, r in enumerate(value)], cols=cols)


def _matrix_rows(m: Matrix) -> List[List[str]]:
    return [[format_rational(a) for a in m.row(i)] for i in range(m.rows)]


def _strings(v: Sequence) -> List[str]:
    return [format_rational(a) for a in v]


# --- Algebras ---
def parse_algebra_data(data: Any, source: Optional[str] = None, require_valid: bool = True) -> HomLieAlgebra:
    _check_fields(data, ALGEBRA_FIELDS, "", source)
    n = _count(data["dim"], "dim", source)
    basis = data["basis"]
    if not isinstance(basis, list) or len(basis) != n or not all(isinstance(b, str) and b for b in basis):
        raise ParseError(f"expected {n} non-empty basis names", "basis", source)
    if len(set(basis)) != n:
        raise ParseError("basis names must be distinct", "basis", source)
    if not isinstance(data["brackets"], list):
        raise ParseError("expected a list", "brackets", source)
    brackets = {}
    for t, entry in enumerate(data["brackets"]):
        path = f"brackets[{t}]"
        _check_fields(entry, BRACKET_FIELDS, path, source)
        i = _count(entry["i"], f"{path}.i", source)
        j = _count(entry["j"], f"{path}.j", source)
        if not 1 <= i < j <= n:
            raise ParseError(f"need 1 <= i < j <= {n}, got i={i}, j={j}", path, source)
        if (i - 1, j - 1) in brackets:
            raise ParseError(f"duplicate bracket entry for ({i}, {j})", path, source)
        brackets[(i - 1, j - 1)] = _vector(entry["value"], n, f"{path}.value", source)
    alpha = _matrix(data["alpha"], n, n, "alpha", source)
    L = HomLieAlgebra.from_brackets(n, brackets, alpha, basis)
    if require_valid:
        require_accepted(L)
    return L


def parse_algebra(path: str, require_valid: bool = True) -> HomLieAlgebra:
    return parse_algebra_data(load_document(path), str(path), require_valid)


def emit_algebra(L: HomLieAlgebra) -> Dict[str, Any]:
    brackets = [
        {"i": i + 1, "j": j + 1, "value": _strings(v)}
        for (i, j), v in zip(basis_pairs(L.dim), L.structure)
        if not vec_is_zero(v)
    ]
    return {"dim": L.dim, "basis": list(L.basis_names), "brackets": brackets, "alpha": _matrix_rows(L.alpha)}


# --- Modules ---
def parse_module_data(data: Any, L: HomLieAlgebra, source: Optional[str] = None,
                      require_valid: bool = True) -> Representation:
    _check_fields(data, MODULE_FIELDS, "", source)
    d = _count(data["dim_v"], "dim_v", source)
    rho = data["rho"]
    if not isinstance(rho, list) or len(rho) != L.dim:
        raise ParseError(f"expected {L.dim} action matrices, one per basis element", "rho", source)
    matrices = tuple(_matrix(m, d, d, f"rho[{t}]", source) for t, m in enumerate(rho))
    beta = _matrix(data["beta"], d, d, "beta", source)
    V = Representation(L, d, matrices, beta)
    if require_valid:
        require_accepted_rep(V)
    return V


def parse_module(path: str, L: HomLieAlgebra, require_valid: bool = True) -> Representation:
    return parse_module_data(load_document(path), L, str(path), require_valid)


def emit_module(V: Representation) -> Dict[str, Any]:
    return {"dim_v": V.dim_v, "rho": [_matrix_rows(m) for m in V.rho], "beta": _matrix_rows(V.beta)}


# --- Results ---
def emit_map_space(space: MapSpace) -> Dict[str, Any]:
    """Basis maps as coefficient tensors: t[a][i][j] with δ(e_i, e_j) = Σ_a t[a][i][j]·v_a for
    bilinear kinds, and the d x n matrix t[a][i] for linear ones."""
    basis = []
    for m in space.basis:
        if space.kind.bilinear:
            basis.append([
                [[format_rational(m.value(i, j)[a]) for j in range(m.n)] for i in range(m.n)]
                for a in range(m.d)
            ])
        else:
            basis.append(_matrix_rows(m.matrix))
    return {
        "kind": space.kind.value,
        "dim": space.dim,
        "algebra_dim": space.algebra.dim,
        "module_dim": space.module.dim_v,
        "basis": basis,
    }


def _plain(value: Any) -> Any:
    if isinstance(value, Mapping):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    return format_rational(value)


def emit_trace(trace: Sequence[Mapping[str, Any]]) -> List[Dict[str, Any]]:
    return [_plain(step) for step in trace]


def emit_verdict(verdict: Verdict) -> Dict[str, Any]:
    return {
        "name": verdict.name,
        "status": verdict.status.value,
        "checks": [{"name": name, "ok": ok, "message": message} for name, (ok, message) in verdict.checks.items()],
        "details": _plain(verdict.details),
    }
