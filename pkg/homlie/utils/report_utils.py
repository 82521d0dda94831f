import logging
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from ..services.algebra import HomLieAlgebra, basis_pairs, center, derived, is_perfect
from ..services.linalg import Matrix, format_rational
from ..services.maps import MapSpace
from ..services.verify import Verdict

logger = logging.getLogger(__name__)

SYMBOLS = {"bider": "δ", "bider_s": "δ", "cbider_s": "δ", "sbider_s": "δ",
           "cent": "γ", "com": "f", "ccom": "f", "scom": "f", "der": "D"}


def module_names(space: MapSpace) -> Tuple[str, ...]:
    """Algebra basis names for adjoint-shaped modules, v1..vd otherwise."""
    L, V = space.algebra, space.module
    if V.dim_v == L.dim and V.beta == L.alpha:
        return L.basis_names
    return tuple(f"v{a + 1}" for a in range(V.dim_v))


def _term(coefficient: Fraction, body: str, first: bool) -> str:
    magnitude = abs(coefficient)
    text = body if magnitude == 1 else f"{format_rational(magnitude)}{body}"
    if first:
        return f"-{text}" if coefficient < 0 else text
    return f" - {text}" if coefficient < 0 else f" + {text}"


def linear_form(coefficients: Sequence[Fraction], names: Sequence[str]) -> str:
    """Σ c_t names[t] as text, "0" when every coefficient vanishes."""
    parts = [(c, n) for c, n in zip(coefficients, names) if c]
    if not parts:
        return "0"
    return "".join(_term(c, n, t == 0) for t, (c, n) in enumerate(parts))


def general_element(space: MapSpace) -> List[str]:
    """Lines such as "δ(e1,e2) = k1·e2 + k2·e3" for the element Σ k_t (basis map t)."""
    L = space.algebra
    symbol = SYMBOLS.get(space.kind.value, "φ")
    targets = module_names(space)
    parameters = [f"k{t + 1}" for t in range(space.dim)]
    basis = space.basis
    if space.kind.bilinear:
        arguments = [(f"{L.basis_names[i]},{L.basis_names[j]}", lambda m, i=i, j=j: m.value(i, j))
                     for i, j in (basis_pairs(L.dim) if space.kind.skew else
                                  [(i, j) for i in range(L.dim) for j in range(L.dim)])]
    else:
        arguments = [(L.basis_names[i], lambda m, i=i: m.value(i)) for i in range(L.dim)]
    lines = []
    for label, value in arguments:
        terms = []
        for a, target in enumerate(targets):
            form = linear_form([value(m)[a] for m in basis], parameters)
            if form == "0":
                continue
            terms.append(f"{form}·{target}" if " " not in form else f"({form})·{target}")
        if terms:
            lines.append(f"{symbol}({label}) = {' + '.join(terms)}")
    return lines


def basis_map_lines(space: MapSpace, index: int) -> List[str]:
    """Nonzero values of one basis map."""
    L = space.algebra
    symbol = SYMBOLS.get(space.kind.value, "φ")
    targets = module_names(space)
    m = space.basis[index]
    lines = []
    if space.kind.bilinear:
        pairs = basis_pairs(L.dim) if space.kind.skew else [(i, j) for i in range(L.dim) for j in range(L.dim)]
        for i, j in pairs:
            text = linear_form(m.value(i, j), targets)
            if text != "0":
                lines.append(f"{symbol}({L.basis_names[i]},{L.basis_names[j]}) = {text}")
    else:
        for i in range(L.dim):
            text = linear_form(m.value(i), targets)
            if text != "0":
                lines.append(f"{symbol}({L.basis_names[i]}) = {text}")
    return lines or ["zero map"]


def format_space_report(space: MapSpace, title: Optional[str] = None) -> str:
    body = f"{title or space.kind.value}: dim {space.dim}\n"
    if space.dim == 0:
        return body + "  only the zero map\n"
    body += "General element:\n"
    body += "".join(f"  {line}\n" for line in general_element(space) or ["0"])
    for t in range(space.dim):
        body += f"Basis map {t + 1}:\n"
        body += "".join(f"  {line}\n" for line in basis_map_lines(space, t))
    return body


def format_matrix(m: Matrix, indent: str = "  ") -> str:
    cells = [[format_rational(a) for a in m.row(i)] for i in range(m.rows)]
    width = max((len(c) for row in cells for c in row), default=1)
    return "".join(indent + "[" + " ".join(c.rjust(width) for c in row) + "]\n" for row in cells)


def format_algebra_info(L: HomLieAlgebra) -> str:
    report = L.validation
    body = f"Hom-Lie algebra of dimension {L.dim}, basis {', '.join(L.basis_names) or '(empty)'}\n"
    brackets = [
        f"  [{L.basis_names[i]}, {L.basis_names[j]}] = {linear_form(v, L.basis_names)}"
        for (i, j), v in zip(basis_pairs(L.dim), L.structure) if any(v)
    ]
    body += "Brackets:\n" + ("\n".join(brackets) if brackets else "  all zero") + "\n"
    body += "alpha (column j is the image of basis j):\n" + format_matrix(L.alpha)
    facts = [
        ("accepted", report.accepted),
        ("alpha invertible", report.alpha_invertible),
        ("dim Z(L)", center(L).dim),
        ("dim L'", derived(L).dim),
        ("perfect", is_perfect(L)),
    ]
    width = max(len(name) for name, _ in facts)
    body += "".join(f"{name.ljust(width)}  {value}\n" for name, value in facts)
    return body


# --- Status reports ---
def format_status_report(status_results: Mapping[str, Tuple[bool, str]], title: str = "Status Report") -> str:
    """One ✅/❌ line per check and an overall line."""
    plain_body = f"{title}:\n"
    overall_ok = True
    for name, (success, message) in status_results.items():
        emoji = "✅" if success else "❌"
        plain_body += f"\n{emoji} {name}: {message}"
        if not success:
            overall_ok = False
    plain_body += "\n\nOverall Status: OK" if overall_ok else "\n\nOverall Status: Issues Detected"
    return plain_body + "\n"


def format_failures(label: str, failures: Sequence[str], limit: int = 20) -> str:
    if not failures:
        return ""
    shown = "".join(f"  {f}\n" for f in failures[:limit])
    more = f"  ... and {len(failures) - limit} more\n" if len(failures) > limit else ""
    return f"{label}:\n{shown}{more}"


def format_verdict(verdict: Verdict) -> str:
    body = f"{verdict.status.value}: {verdict.name}\n"
    body += format_status_report(verdict.checks, title="Checks")
    if verdict.details:
        body += "Details:\n" + "".join(f"  {k}: {_detail(v)}\n" for k, v in sorted(verdict.details.items()))
    return body


def _detail(value: Any) -> str:
    if isinstance(value, Fraction):
        return format_rational(value)
    return str(value)


def format_trace(trace: Sequence[Dict[str, Any]]) -> str:
    header = ("level", "move", "algebra", "module", "space", "kernel", "lifted")
    rows = [header]
    for step in trace:
        dims = step.get("dims", {})
        rows.append(tuple(
            "-" if v is None else str(v)
            for v in (step["level"], step["move"], dims.get("algebra"), dims.get("module"), dims.get("space"),
                      step.get("kernel_dim"), step.get("lifted_dim"))
        ))
    widths = [max(len(r[c]) for r in rows) for c in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
    notes = [f"  level {s['level']}: {s['reason']}" for s in trace if s.get("reason")]
    notes += [f"  level {s['level']}: pushdown kernel exceeds CCom + SCom"
              for s in trace if s.get("kernel_law") is False]
    return "\n".join(lines) + "\n" + ("Notes:\n" + "\n".join(notes) + "\n" if notes else "")
