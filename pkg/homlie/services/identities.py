"""Identity suites satisfied by every skew biderivation and every commuting map.

Each *_failures function evaluates one identity exactly on basis tuples and returns the
labels of the tuples where it does not vanish.
"""
import logging
from itertools import product
from typing import Dict, List, Tuple

from ..errors import HypothesisError
from .algebra import HomLieAlgebra, basis_pairs, derived, is_perfect
from .linalg import vec_add, vec_is_zero, vec_scale, vec_sub, zero_vector
from .maps import (
    BilinearMap, LinearMapLV, basis_label, bider_s_failures, bracket_map, solve_bider_s, solve_com,
)
from .representation import Representation, adjoint, annihilated

logger = logging.getLogger(__name__)


def bracket_annihilation_failures(L: HomLieAlgebra, V: Representation, delta: BilinearMap) -> List[str]:
    """β([x, y]δ(z, w) + [z, w]δ(x, y)) = 0."""
    failed = []
    pairs = basis_pairs(L.dim)
    for (x, y), (z, w) in product(pairs, pairs):
        value = vec_add(
            V.act(L.bracket_basis(x, y), delta.value(z, w)),
            V.act(L.bracket_basis(z, w), delta.value(x, y)),
        )
        if not vec_is_zero(V.beta.apply(value)):
            failed.append(f"bracket annihilation at {basis_label(L, x, y, z, w)}")
    return failed


def cyclic_sum_failures(L: HomLieAlgebra, V: Representation, delta: BilinearMap) -> List[str]:
    """Cyclic sum of δ([x, y], α(z)) equals 2(α(z)δ(x, y) - δ(α(z), [x, y]))."""
    failed = []
    n = L.dim
    for x, y, z in product(range(n), repeat=3):
        cyclic = zero_vector(V.dim_v)
        for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
            cyclic = vec_add(cyclic, delta.evaluate(L.bracket_basis(a, b), L.alpha_image(c)))
        rhs = vec_sub(
            V.alpha_actions[z].apply(delta.value(x, y)),
            delta.evaluate(L.alpha_image(z), L.bracket_basis(x, y)),
        )
        if not vec_is_zero(vec_sub(cyclic, vec_scale(rhs, 2))):
            failed.append(f"cyclic sum at {basis_label(L, x, y, z)}")
    return failed


def annihilator_identity_failures(L: HomLieAlgebra, V: Representation, delta: BilinearMap) -> List[str]:
    """δ(α(u), [x, y]) - α(u)δ(x, y) lies in Z_V(L')."""
    if not V.beta_invertible:
        raise HypothesisError("annihilator identity needs an invertible beta", ["beta is not invertible"])
    target = annihilated(V, derived(L))
    failed = []
    for (x, y), u in product(basis_pairs(L.dim), range(L.dim)):
        r = vec_sub(
            delta.evaluate(L.alpha_image(u), L.bracket_basis(x, y)),
            V.alpha_actions[u].apply(delta.value(x, y)),
        )
        if not target.contains(r):
            failed.append(f"annihilator identity at {basis_label(L, x, y, u)}")
    return failed


def inner_action_failures(L: HomLieAlgebra, V: Representation, delta: BilinearMap) -> List[str]:
    """δ(z, [x, y]) = zδ(x, y) on perfect algebras with α surjective."""
    failed = _perfect_hypotheses(L, V)
    if failed:
        raise HypothesisError("inner-action identity hypotheses fail", failed)
    out = []
    for (x, y), z in product(basis_pairs(L.dim), range(L.dim)):
        r = vec_sub(delta.evaluate(L.basis_vector(z), L.bracket_basis(x, y)), V.rho[z].apply(delta.value(x, y)))
        if not vec_is_zero(r):
            out.append(f"inner action at {basis_label(L, x, y, z)}")
    return out


def _perfect_hypotheses(L: HomLieAlgebra, V: Representation) -> List[str]:
    failed = []
    if not V.beta_invertible:
        failed.append("beta is not invertible")
    if not is_perfect(L):
        failed.append("algebra is not perfect")
    if not L.validation.alpha_surjective:
        failed.append("alpha is not surjective")
    return failed


def bracket_in_bider_s(L: HomLieAlgebra) -> List[str]:
    """The bracket is a skew biderivation of ad_0."""
    return bider_s_failures(L, adjoint(L, 0), bracket_map(L), with_left=True)


def commuting_induced_map(f: LinearMapLV, L: HomLieAlgebra, V: Representation) -> BilinearMap:
    """δ(x, y) = β^-1(α(x)f(y)) for a commuting map f."""
    inverse = V.beta_inverse
    return BilinearMap.from_function(
        L.dim, V.dim_v, lambda i, j: inverse.apply(V.alpha_actions[i].apply(f.value(j)))
    )


def commuting_identity_failures(L: HomLieAlgebra, V: Representation, f: LinearMapLV) -> List[str]:
    """[α(v), α(w)]α²(u)(f([x, y]) - α(x)f(y)) = 0."""
    if not V.beta_invertible:
        raise HypothesisError("commuting-map identity needs an invertible beta", ["beta is not invertible"])
    n = L.dim
    alpha2 = L.alpha_power(2)
    outer = [
        V.action(L.bracket(L.alpha_image(v), L.alpha_image(w))) @ V.action(alpha2.column(u))
        for (v, w), u in product(basis_pairs(n), range(n))
    ]
    failed = []
    for x, y in product(range(n), repeat=2):
        r = vec_sub(f.apply(L.bracket_basis(x, y)), V.alpha_actions[x].apply(f.value(y)))
        if vec_is_zero(r):
            continue
        if any(not vec_is_zero(m.apply(r)) for m in outer):
            failed.append(f"commuting-map identity at {basis_label(L, x, y)}")
    return failed


def run_identity_suite(L: HomLieAlgebra, V: Representation) -> Dict[str, Tuple[bool, str]]:
    """Runs every identity on the computed Bider_s and Com bases of (L, V)."""
    results: Dict[str, Tuple[bool, str]] = {}
    bider = solve_bider_s(L, V).basis
    com = solve_com(L, V).basis

    def record(name: str, failures: List[str], count: int):
        if failures:
            logger.warning(f"{name}: {len(failures)} failure(s)")
            results[name] = (False, f"{len(failures)} failure(s), first at {failures[0].split(' at ')[-1]}")
        else:
            results[name] = (True, f"OK on {count} basis map(s)")

    def collect(check, maps) -> List[str]:
        return [failure for m in maps for failure in check(L, V, m)]

    record("bracket annihilation", collect(bracket_annihilation_failures, bider), len(bider))
    record("cyclic sum", collect(cyclic_sum_failures, bider), len(bider))
    if V.beta_invertible:
        record("annihilator identity", collect(annihilator_identity_failures, bider), len(bider))
    else:
        results["annihilator identity"] = (True, "skipped: beta is not invertible")
    skipped = _perfect_hypotheses(L, V)
    if skipped:
        results["inner action"] = (True, f"skipped: {', '.join(skipped)}")
    else:
        record("inner action", collect(inner_action_failures, bider), len(bider))
    record("bracket is a skew biderivation of ad_0", bracket_in_bider_s(L), 1)
    if V.beta_invertible:
        induced = [
            failure for f in com for failure in bider_s_failures(L, V, commuting_induced_map(f, L, V), with_left=True)
        ]
        record("commuting maps induce skew biderivations", induced, len(com))
        record("commuting-map identity", collect(commuting_identity_failures, com), len(com))
    else:
        results["commuting maps induce skew biderivations"] = (True, "skipped: beta is not invertible")
        results["commuting-map identity"] = (True, "skipped: beta is not invertible")
    return results
