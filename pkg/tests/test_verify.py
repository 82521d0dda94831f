import pytest

from homlie.errors import HypothesisError
from homlie.services import catalog
from homlie.services.algebra import HomLieAlgebra
from homlie.services.linalg import Matrix
from homlie.services.maps import central_subspace, solve_cent, solve_com
from homlie.services.representation import adjoint
from homlie.services.verify import (
    VerdictStatus, decompose_commuting, schur_check, special_from_form, verify_prop47, verify_thm36, verify_thm37,
    verify_thm43,
)

OMEGA_12 = Matrix.from_rows([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])


@pytest.mark.parametrize("k", [0, 1])
def test_thm36_confirmed_on_sl2_involution(sl2_inv, k):
    verdict = verify_thm36(sl2_inv, adjoint(sl2_inv, k))
    assert verdict.status is VerdictStatus.CONFIRMED
    assert verdict.details["bider_s_dim"] == 1
    assert verdict.details["cent_dim"] == 1


def test_thm36_hypotheses_fail_on_heisenberg(heis):
    verdict = verify_thm36(heis, adjoint(heis, 0))
    assert verdict.status is VerdictStatus.HYPOTHESES_FAILED
    assert verdict.checks["perfect"][0] is False


@pytest.mark.parametrize("name", ["sl2", "sl2_involution"])
def test_thm37_confirmed(name):
    verdict = verify_thm37(catalog.build(name), 1)
    assert verdict.confirmed
    assert verdict.details["simple_form"] is True


def test_thm37_on_heisenberg(heis):
    verdict = verify_thm37(heis, 0)
    assert verdict.status is VerdictStatus.HYPOTHESES_FAILED
    assert verdict.checks["centerless"] == (False, "failed")


def test_thm37_needs_invertible_alpha():
    L = HomLieAlgebra.from_brackets(2, {}, Matrix.from_rows([[1, 0], [0, 0]]))
    with pytest.raises(HypothesisError):
        verify_thm37(L, 0)


def test_thm43_confirmed(sl2_inv):
    verdict = verify_thm43(sl2_inv, adjoint(sl2_inv, 0))
    assert verdict.confirmed
    assert verdict.checks["Cent = Com"] == (True, "dim 1")


def test_thm43_hypotheses_fail_on_heisenberg(heis):
    verdict = verify_thm43(heis, adjoint(heis, 0))
    assert verdict.status is VerdictStatus.HYPOTHESES_FAILED
    assert verdict.checks["Cent is contained in Com"][0]
    assert verdict.checks["Z_V(L') is zero"][0] is False


def test_prop47_on_sl2(sl2_inv):
    assert verify_prop47(sl2_inv, 1).confirmed


def test_decompose_commuting_on_sl2(sl2):
    V = adjoint(sl2, 0)
    for f in solve_com(sl2, V).basis:
        parts = decompose_commuting(f, sl2, 0)
        assert solve_cent(sl2, V).contains(parts.gamma)
        assert central_subspace(solve_com(sl2, V)).contains(parts.mu)
        assert parts.gamma + parts.mu == f


@pytest.mark.parametrize("k,s", [(0, 0), (0, 1), (1, 0), (1, 1), (1, 2)])
def test_schur_confirmed(sl2_inv, k, s):
    verdict = schur_check(sl2_inv, k, s)
    assert verdict.confirmed
    assert verdict.details["hom_dim"] == 1
    assert verdict.checks["kernels of module maps are ideals"] == (True, "hom space of dimension 1")


def test_schur_hypotheses_fail_on_heisenberg(heis):
    verdict = schur_check(heis, 0, 0)
    assert verdict.status is VerdictStatus.HYPOTHESES_FAILED
    assert "proper ideal" in verdict.checks["simplicity falsifier passed"][1]


@pytest.mark.parametrize("lam", [1, 2])
def test_special_from_form_on_heisenberg(lam):
    L = catalog.heisenberg(lam)
    result = special_from_form(L, OMEGA_12, (0, 0, 1))
    assert result.member
    assert result.delta.value(0, 1) == (0, 0, 1)


def test_special_from_form_non_member():
    L = HomLieAlgebra.from_brackets(3, {}, Matrix.from_rows([[1, 0, 0], [0, 2, 0], [0, 0, 3]]))
    result = special_from_form(L, OMEGA_12, (1, 0, 0))
    assert not result.member
    assert result.failures


def test_special_from_form_rejects_non_central_vector(heis):
    with pytest.raises(HypothesisError) as info:
        special_from_form(heis, OMEGA_12, (1, 0, 0))
    assert "z0 is not a nonzero central element" in info.value.failed
