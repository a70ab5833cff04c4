"""Matrix algebra: determinants, pseudo-inverses, quasi-identities, rank."""

import pytest

from supertrop import (
    CapacityError,
    DomainError,
    Matrix,
    ONE,
    Scalar,
    ZERO,
    adjoint,
    close,
    det,
    det_assignment,
    independent,
    is_closed_base,
    is_nonsingular,
    is_quasi_identity,
    mat_mul,
    matrix_from_json,
    matrix_to_json,
    parse_matrix,
    pseudo_inverse,
    quasi_identities,
    rank,
    vector,
)
from supertrop.matrices import double_pseudo

A = parse_matrix("0 1\n2 0")
T = Scalar.tangible
G = Scalar.ghost_of


# -- multiplication --------------------------------------------------------


def test_mat_mul_identity():
    assert mat_mul(Matrix.identity(2), A) == A


def test_mat_mul_all_zero_values():
    m = parse_matrix("0 0\n0 0")
    assert mat_mul(m, Matrix.identity(2)) == m


def test_mat_mul_with_ghosts():
    left = parse_matrix("0 -2g\n-1g 0")
    assert mat_mul(left, A) == parse_matrix("0g 1\n2 0g")


# -- determinants ----------------------------------------------------------


def test_det_identity():
    r = det(Matrix.identity(2))
    assert r.value == ONE
    assert r.witnesses == frozenset({(0, 1)})


def test_det_tie_goes_ghost():
    r = det(parse_matrix("0 0\n0 0"))
    assert r.value == G(0)
    assert r.witnesses == frozenset({(0, 1), (1, 0)})


def test_det_transposition_witness():
    r = det(A)
    assert r.value == T(3)
    assert r.witnesses == frozenset({(1, 0)})


def test_det_assignment_matches_expansion():
    for text in ("0 1\n2 0", "1 2\n3 4", "-inf -inf\n-inf 0"):
        m = parse_matrix(text)
        assert det_assignment(m).value == det(m).value


def test_det_assignment_frozen_values():
    assert det_assignment(A).value == T(3)
    assert det_assignment(parse_matrix("1 2\n3 4")).value == G(5)
    assert det_assignment(parse_matrix("-inf -inf\n-inf 0")).value == ZERO


def test_det_expansion_cap():
    big = Matrix.identity(9)
    with pytest.raises(CapacityError):
        det(big)


# -- adjoint and pseudo-inverse -------------------------------------------


def test_adjoint_diagonal():
    assert adjoint(parse_matrix("2 -inf\n-inf 3")) == parse_matrix("3 -inf\n-inf 2")


def test_adjoint_swap_diagonal():
    assert adjoint(A) == A
    assert adjoint(parse_matrix("0 0\n0 0")) == parse_matrix("0 0\n0 0")


def test_pseudo_inverse_identity():
    assert pseudo_inverse(Matrix.identity(2)) == Matrix.identity(2)


def test_pseudo_inverse_diagonal():
    assert pseudo_inverse(parse_matrix("2 -inf\n-inf 3")) == parse_matrix(
        "-2 -inf\n-inf -3"
    )


def test_pseudo_inverse_frozen():
    assert pseudo_inverse(A) == parse_matrix("-3 -2\n-1 -3")


def test_pseudo_inverse_singular_message():
    with pytest.raises(DomainError, match=r"singular matrix: \|A\| = 5g"):
        pseudo_inverse(parse_matrix("1 2\n3 4"))


# -- quasi-identities ------------------------------------------------------


def test_quasi_identities_identity():
    i_a, i_a_prime = quasi_identities(Matrix.identity(2))
    assert i_a == Matrix.identity(2)
    assert i_a_prime == Matrix.identity(2)


def test_quasi_identities_frozen():
    i_a, _ = quasi_identities(A)
    assert i_a == parse_matrix("0 -2g\n-1g 0")


def test_quasi_identities_diagonal():
    i_a, i_a_prime = quasi_identities(parse_matrix("2 -inf\n-inf 3"))
    assert i_a == Matrix.identity(2)
    assert i_a_prime == Matrix.identity(2)


def test_is_quasi_identity():
    assert is_quasi_identity(Matrix.identity(2))
    assert is_quasi_identity(parse_matrix("0 -2g\n-1g 0"))
    assert not is_quasi_identity(parse_matrix("0 0\n0 0"))


def test_double_pseudo():
    assert double_pseudo(Matrix.identity(2)) == Matrix.identity(2)
    assert double_pseudo(parse_matrix("2 -inf\n-inf 3")) == parse_matrix(
        "-2 -inf\n-inf -3"
    )
    pinv = pseudo_inverse(A)
    i_a, _ = quasi_identities(A)
    assert double_pseudo(A) == mat_mul(pinv, i_a)
    assert double_pseudo(A) == mat_mul(pinv, mat_mul(A, pinv))


# -- closure ---------------------------------------------------------------


def test_close_identity_and_diagonal():
    assert close(Matrix.identity(2)) == Matrix.identity(2)
    d = parse_matrix("2 -inf\n-inf 3")
    assert close(d) == d


def test_close_frozen():
    assert close(A) == parse_matrix("0g 1\n2 0g")


def test_is_closed_base():
    assert is_closed_base(Matrix.identity(2))
    assert not is_closed_base(A)
    i_a, _ = quasi_identities(A)
    assert mat_mul(i_a, close(A)) == close(A)


# -- rank and independence -------------------------------------------------


def test_rank_identity():
    assert rank(Matrix.identity(3)) == 3


def test_rank_ghost_det_drops():
    assert rank(parse_matrix("1 2\n3 4")) == 1


def test_rank_of_closed_base():
    assert rank(parse_matrix("0g 1\n2 0g")) == 2


def test_rank_cap():
    with pytest.raises(CapacityError):
        rank(Matrix.identity(11))


def test_independent_standard_base():
    assert independent(Matrix.identity(3).columns())


def test_independent_scaled_pair():
    assert not independent([vector(0, 0), vector(1, 1)])


def test_independent_ghost_pair():
    assert not independent([vector("3g", 0), vector(0, "3g")])


def test_independent_too_many():
    assert not independent([vector(0), vector(1)])


def test_nonsingular():
    assert is_nonsingular(A)
    assert not is_nonsingular(parse_matrix("1 2\n3 4"))


# -- I/O -------------------------------------------------------------------


def test_parse_matrix_comments_and_blanks():
    m = parse_matrix("# header\n0 1\n\n2 0  # trailing\n")
    assert m == A


def test_matrix_json_round_trip():
    m = parse_matrix("0g 1\n2 -inf")
    assert matrix_from_json(matrix_to_json(m)) == m


def test_matrix_text_round_trip():
    m = parse_matrix("0g 1/2\n-7/3 -inf")
    assert parse_matrix(str(m)) == m
