import pytest

from homlie.errors import HypothesisError
from homlie.services import catalog
from homlie.services.algebra import HomLieAlgebra
from homlie.services.identities import (
    annihilator_identity_failures, bracket_annihilation_failures, bracket_in_bider_s, commuting_identity_failures,
    commuting_induced_map, cyclic_sum_failures, run_identity_suite,
)
from homlie.services.linalg import Matrix
from homlie.services.maps import bider_s_failures, solve_bider_s, solve_com
from homlie.services.representation import adjoint


def test_identity_suite_passes(catalog_algebra, power):
    results = run_identity_suite(catalog_algebra, adjoint(catalog_algebra, power))
    failed = {check: message for check, (ok, message) in results.items() if not ok}
    assert failed == {}


def test_suite_skips_inner_action_when_not_perfect(heis):
    ok, message = run_identity_suite(heis, adjoint(heis, 0))["inner action"]
    assert ok
    assert message.startswith("skipped")


@pytest.mark.parametrize("k", [0, 1])
def test_biderivation_identities_on_example314(ex314, k):
    V = adjoint(ex314, k)
    for delta in solve_bider_s(ex314, V).basis:
        assert bracket_annihilation_failures(ex314, V, delta) == []
        assert cyclic_sum_failures(ex314, V, delta) == []
        assert annihilator_identity_failures(ex314, V, delta) == []


def test_bracket_is_biderivation_everywhere():
    for name in catalog.CATALOG:
        assert bracket_in_bider_s(catalog.build(name)) == []


def test_commuting_maps_induce_biderivations(heis):
    V = adjoint(heis, 0)
    for f in solve_com(heis, V).basis:
        assert bider_s_failures(heis, V, commuting_induced_map(f, heis, V), with_left=True) == []
        assert commuting_identity_failures(heis, V, f) == []


def test_commuting_map_identity_across_catalog(catalog_algebra, power):
    V = adjoint(catalog_algebra, power)
    for f in solve_com(catalog_algebra, V).basis:
        assert commuting_identity_failures(catalog_algebra, V, f) == []


def test_suite_skips_beta_identities_when_beta_is_singular():
    L = HomLieAlgebra.from_brackets(2, {}, Matrix.from_rows([[1, 0], [0, 0]]))
    results = run_identity_suite(L, adjoint(L, 1))
    assert all(ok for ok, _ in results.values())
    for name in ("annihilator identity", "commuting maps induce skew biderivations", "commuting-map identity"):
        assert results[name] == (True, "skipped: beta is not invertible")
    assert results["inner action"][1].startswith("skipped: beta is not invertible")


def test_beta_identities_refuse_singular_beta():
    L = HomLieAlgebra.from_brackets(2, {}, Matrix.from_rows([[1, 0], [0, 0]]))
    V = adjoint(L, 0)
    with pytest.raises(HypothesisError):
        commuting_identity_failures(L, V, solve_com(L, V).basis[0])
