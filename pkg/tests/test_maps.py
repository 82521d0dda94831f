import pytest

from homlie.errors import HypothesisError
from homlie.services import catalog
from homlie.services.linalg import SubspaceBasis
from homlie.services.maps import (
    BilinearMap, MapKind, bider_s_failures, bracket_map, central_subspace, centroid_from_biderivation,
    centroid_hypotheses, com_failures, der_failures, induced_biderivation, inner_derivation, solve_bider,
    solve_bider_s, solve_central_bider_s_direct, solve_central_com_direct, solve_cent, solve_com,
    solve_derivations, space_of_induced_biderivations, special_subspace,
)
from homlie.services.representation import adjoint
from homlie.utils.report_utils import general_element


def test_heisenberg_skew_biderivations(heis):
    space = solve_bider_s(heis, adjoint(heis, 0), debug_checks=True)
    assert space.kind is MapKind.BIDER_S
    assert space.dim == 2
    first, second = space.basis
    assert first.value(0, 1) == (0, 1, 0)
    assert first.value(0, 2) == (0, 0, 1)
    assert first.value(1, 2) == (0, 0, 0)
    assert second.value(0, 1) == (0, 0, 1)
    assert second.value(0, 2) == (0, 0, 0)


def test_heisenberg_general_element(heis):
    lines = general_element(solve_bider_s(heis, adjoint(heis, 0)))
    assert "δ(e1,e2) = k1·e2 + k2·e3" in lines
    assert "δ(e1,e3) = k1·e3" in lines


def test_heisenberg_other_lambda():
    L = catalog.heisenberg(2)
    assert solve_bider_s(L, adjoint(L, 0)).dim == 1


@pytest.mark.parametrize("k", [0, 1, 2])
def test_example314_skew_biderivations(ex314, k):
    assert solve_bider_s(ex314, adjoint(ex314, k)).dim == 2


@pytest.mark.parametrize("lam,mu,expected", [(3, 5, 2), (3, 1, 3), (3, 3, 3), (1, 1, 4)])
def test_example314_commuting_maps(lam, mu, expected):
    L = catalog.example314(0, 0, lam, mu)
    assert solve_com(L, adjoint(L, 0)).dim == expected


@pytest.mark.parametrize("name", ["sl2", "sl2_involution"])
@pytest.mark.parametrize("k", [0, 1])
def test_sl2_centroid_equals_commuting_maps(name, k):
    L = catalog.build(name)
    V = adjoint(L, k)
    cent, com = solve_cent(L, V), solve_com(L, V)
    assert cent.dim == 1
    assert cent.same_space(com)


@pytest.mark.parametrize("k", [0, 1, 2])
def test_sl2_involution_biderivations_are_twisted_brackets(sl2_inv, k):
    space = solve_bider_s(sl2_inv, adjoint(sl2_inv, k))
    assert space.dim == 1
    assert space.contains(bracket_map(sl2_inv).compose(sl2_inv.alpha_power(k)))


def test_bracket_is_a_skew_biderivation(ex314):
    assert bider_s_failures(ex314, adjoint(ex314, 0), bracket_map(ex314), with_left=True) == []


def test_skew_biderivations_are_biderivations(heis):
    V = adjoint(heis, 0)
    everything = solve_bider(heis, V)
    for delta in solve_bider_s(heis, V).basis:
        full = BilinearMap.from_function(3, 3, delta.value)
        assert everything.contains(full)


def test_every_basis_map_satisfies_its_constraints(ex314):
    V = adjoint(ex314, 1)
    for f in solve_com(ex314, V).basis:
        assert com_failures(ex314, V, f, random_checks=5, seed=3) == []


def test_centroid_round_trip_on_sl2(sl2_inv):
    V = adjoint(sl2_inv, 1)
    assert centroid_hypotheses(sl2_inv, V) == []
    for gamma in solve_cent(sl2_inv, V).basis:
        delta = induced_biderivation(gamma, sl2_inv, V)
        assert centroid_from_biderivation(delta, sl2_inv, V) == gamma
    assert space_of_induced_biderivations(sl2_inv, V).same_space(solve_bider_s(sl2_inv, V))


def test_centroid_from_biderivation_needs_perfect(heis):
    V = adjoint(heis, 0)
    delta = solve_bider_s(heis, V).basis[0]
    with pytest.raises(HypothesisError) as info:
        centroid_from_biderivation(delta, heis, V)
    assert "algebra is not perfect" in info.value.failed


def test_central_subspace_matches_direct_solver(heis):
    V = adjoint(heis, 0)
    assert central_subspace(solve_bider_s(heis, V)).same_space(solve_central_bider_s_direct(heis, V))
    ccom = central_subspace(solve_com(heis, V))
    assert ccom.kind is MapKind.CCOM
    assert ccom.is_subspace_of(solve_central_com_direct(heis, V))


def test_special_subspace_of_heisenberg_is_everything(heis):
    # L' is one-dimensional, so nothing is forced to vanish on L' x L'
    space = solve_bider_s(heis, adjoint(heis, 0))
    special = special_subspace(space)
    assert special.kind is MapKind.SBIDER_S
    assert special.same_space(space)


def test_filters_reject_other_kinds(sl2):
    with pytest.raises(HypothesisError):
        central_subspace(solve_cent(sl2, adjoint(sl2, 0)))


def test_sl2_derivations_are_inner(sl2):
    space = solve_derivations(sl2, 0)
    assert space.dim == 3
    for z in SubspaceBasis.full(3).vectors:
        D = inner_derivation(sl2, z, 0)
        assert der_failures(sl2, adjoint(sl2, 1), D) == []
        assert space.contains(D)
