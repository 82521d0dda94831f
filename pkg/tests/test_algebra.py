import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homlie.errors import DimensionMismatchError, HypothesisError, NotAnIdealError, ValidationError
from homlie.services import catalog
from homlie.services.algebra import (
    HomLieAlgebra, annihilator, center, derived, generated_ideal, is_ideal, is_perfect, quotient,
    require_accepted, simplicity_falsifier, subalgebra, validate,
)
from homlie.services.linalg import Matrix, SubspaceBasis

coefficients = st.lists(st.integers(-3, 3), min_size=3, max_size=3)


def broken_multiplicativity():
    # [e1, e2] = e1 with alpha = 2 I
    return HomLieAlgebra.from_brackets(2, {(0, 1): (1, 0)}, Matrix.from_rows([[2, 0], [0, 2]]))


def test_brackets_are_skew(heis):
    assert heis.bracket_basis(0, 1) == (0, 0, 1)
    assert heis.bracket_basis(1, 0) == (0, 0, -1)
    assert heis.bracket_basis(2, 2) == (0, 0, 0)


def test_bracket_pair_out_of_range():
    with pytest.raises(DimensionMismatchError):
        HomLieAlgebra.from_brackets(2, {(1, 0): (1, 0)}, Matrix.identity(2))


def test_alpha_shape_checked():
    with pytest.raises(DimensionMismatchError):
        HomLieAlgebra.from_brackets(2, {}, Matrix.identity(3))


@pytest.mark.parametrize("builder", [
    lambda: catalog.heisenberg(1), lambda: catalog.heisenberg(2), lambda: catalog.sl2(),
    lambda: catalog.sl2_involution(), lambda: catalog.example314(1, 2, 3, 5), lambda: catalog.abelian(3),
])
def test_catalog_algebras_are_accepted(builder):
    assert validate(builder()).accepted


def test_multiplicativity_failure_rejected():
    L = broken_multiplicativity()
    report = validate(L)
    assert not report.accepted
    assert report.multiplicativity_failures[0][0] == (0, 1)
    with pytest.raises(ValidationError) as info:
        require_accepted(L)
    assert info.value.report is report


def test_center_and_derived(heis, sl2, ex314):
    assert center(heis) == SubspaceBasis.span(3, [(0, 0, 1)])
    assert derived(heis) == SubspaceBasis.span(3, [(0, 0, 1)])
    assert center(sl2).is_zero()
    assert is_perfect(sl2)
    assert center(ex314) == SubspaceBasis.span(3, [(0, 0, 1)])
    assert derived(ex314) == SubspaceBasis.span(3, [(0, 1, 0)])


def test_annihilator_of_derived(heis):
    assert annihilator(heis, derived(heis)).is_full()


def test_quotient_by_center(heis):
    q = quotient(heis, center(heis))
    assert q.quotient.dim == 2
    assert q.quotient.is_abelian
    assert validate(q.quotient).accepted
    assert q.project((0, 0, 5)) == (0, 0)


def test_quotient_rejects_non_ideal(heis):
    with pytest.raises(NotAnIdealError):
        quotient(heis, SubspaceBasis.span(3, [(1, 0, 0)]))


def test_subalgebra_of_derived(ex314):
    sub = subalgebra(ex314, derived(ex314))
    assert sub.subalgebra.dim == 1
    assert sub.subalgebra.basis_names == ("y",)
    assert sub.include((1,)) == (0, 1, 0)


def test_subalgebra_needs_alpha_invariance(heis):
    with pytest.raises(HypothesisError):
        subalgebra(heis, SubspaceBasis.span(3, [(1, 0, 0)]))


def test_generated_ideal(ex314):
    assert generated_ideal(ex314, (0, 0, 1)) == SubspaceBasis.span(3, [(0, 0, 1)])
    assert is_ideal(ex314, generated_ideal(ex314, (1, 0, 0)))


def test_simplicity_falsifier(sl2, heis):
    assert simplicity_falsifier(heis).not_simple
    assert not simplicity_falsifier(sl2).not_simple
    assert simplicity_falsifier(catalog.abelian(2)).reason == "abelian"


def test_simplicity_falsifier_names_an_abelian_ideal():
    result = simplicity_falsifier(catalog.abelian(3))
    assert result.not_simple
    assert result.witness == SubspaceBasis.span(3, [(1, 0, 0)])
    assert is_ideal(catalog.abelian(3), result.witness)


def test_simplicity_falsifier_abelian_without_invariant_line():
    rotation = HomLieAlgebra.from_brackets(2, {}, Matrix.from_rows([[0, -1], [1, 0]]))
    result = simplicity_falsifier(rotation)
    assert result.reason == "abelian"
    assert result.witness is None


def test_negative_alpha_power_needs_invertible():
    L = HomLieAlgebra.from_brackets(2, {}, Matrix.from_rows([[1, 0], [0, 0]]))
    with pytest.raises(HypothesisError):
        L.alpha_power(-1)


@settings(max_examples=40, deadline=None)
@given(coefficients, coefficients)
def test_bracket_is_antisymmetric(x, y):
    L = catalog.sl2()
    assert L.bracket(x, y) == tuple(-a for a in L.bracket(y, x))


@settings(max_examples=40, deadline=None)
@given(coefficients, coefficients)
def test_twist_is_multiplicative(x, y):
    L = catalog.heisenberg(2)
    assert L.apply_alpha(L.bracket(x, y)) == L.bracket(L.apply_alpha(x), L.apply_alpha(y))
