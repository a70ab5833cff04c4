"""Quadratic forms: evaluation, quasilinearity, companions, hyperbolic planes."""

import pytest

from supertrop import (
    BilinearForm,
    DomainError,
    Matrix,
    PreconditionError,
    QuadraticForm,
    Scalar,
    diagonal_from_form,
    form_from_q,
    hyperbolic_plane,
    is_hyperbolic_plane,
    orthogonal_sum,
    parse_matrix,
    q_eval,
    vector,
)
from supertrop.quadratic import NEITHER, STRICT, quasilinearity_check

T = Scalar.tangible
G = Scalar.ghost_of
E1, E2 = Matrix.identity(2).columns()


# -- evaluation ------------------------------------------------------------


def test_q_eval_hyperbolic_form_backed():
    q = QuadraticForm.from_form(hyperbolic_plane(T(0)))
    assert q_eval(q, vector(0, 0)) == G(0)


def test_q_eval_diagonal():
    q = QuadraticForm.from_diagonal((T(0), T(2)))
    assert q_eval(q, E2) == T(2)
    assert q_eval(q, vector(1, 1)) == T(4)


# -- quasilinearity --------------------------------------------------------


def test_diagonal_is_strict():
    q = QuadraticForm.from_diagonal((T(0), G(2), T(-3)))
    assert quasilinearity_check(q) == STRICT


def test_one_sided_gram_is_neither():
    q = QuadraticForm.from_form(BilinearForm(parse_matrix("-inf 0\n-inf -inf")))
    assert quasilinearity_check(q) == NEITHER


def test_identity_gram_is_strict():
    q = QuadraticForm.from_form(BilinearForm(Matrix.identity(2)))
    assert quasilinearity_check(q, trials=100) == STRICT


# -- companions ------------------------------------------------------------


def test_form_from_q_halved_sums():
    q = QuadraticForm.from_diagonal((T(0), T(2)))
    assert form_from_q(q).gram == parse_matrix("0 1\n1 2")


def test_form_from_q_flat():
    q = QuadraticForm.from_diagonal((T(0), T(0)))
    assert form_from_q(q).gram == parse_matrix("0 0\n0 0")


def test_form_from_q_ghost_propagates():
    q = QuadraticForm.from_diagonal((G(0), T(2)))
    assert form_from_q(q).gram == parse_matrix("0g 1g\n1g 2")


def test_form_from_q_matches_square():
    q = QuadraticForm.from_diagonal((T(1), T(3), G(-2)))
    form = form_from_q(q)
    v = vector(2, "-inf", "0g")
    w = vector(-1, 0, 4)
    b = form(v, w)
    lhs = b * b
    assert lhs == q_eval(q, v) * q_eval(q, w)


def test_diagonal_from_form_round_trip():
    q = QuadraticForm.from_diagonal((T(0), T(2)))
    back = diagonal_from_form(QuadraticForm.from_form(form_from_q(q)))
    assert back.diagonal == q.diagonal


def test_diagonal_from_form_rejects_non_strict():
    q = QuadraticForm.from_form(BilinearForm(parse_matrix("-inf 0\n-inf -inf")))
    with pytest.raises(PreconditionError):
        diagonal_from_form(q)


# -- hyperbolic planes -----------------------------------------------------


def test_hyperbolic_plane_gram():
    form = hyperbolic_plane(T(0))
    assert form.gram == parse_matrix("-inf 0\n0 -inf")
    q = QuadraticForm.from_form(form)
    assert q_eval(q, vector(0, 0)) == G(0)


def test_hyperbolic_plane_scaled():
    q = QuadraticForm.from_form(hyperbolic_plane(T(5)))
    assert q_eval(q, vector(0, 0)) == G(5)


def test_hyperbolic_plane_needs_tangible():
    with pytest.raises(DomainError):
        hyperbolic_plane(G(0))
    with pytest.raises(DomainError):
        hyperbolic_plane(Scalar(None, False))


def test_is_hyperbolic_plane():
    assert is_hyperbolic_plane(hyperbolic_plane(T(0)), E1, E2)
    assert not is_hyperbolic_plane(BilinearForm(Matrix.identity(2)), E1, E2)
    assert is_hyperbolic_plane(BilinearForm(parse_matrix("0g 5\n5 0g")), E1, E2)


def test_is_hyperbolic_plane_needs_independent_pair():
    with pytest.raises(PreconditionError):
        is_hyperbolic_plane(hyperbolic_plane(T(0)), vector(0, 0), vector(1, 1))


# -- orthogonal sums -------------------------------------------------------


def test_orthogonal_sum_diagonal():
    q = orthogonal_sum(
        QuadraticForm.from_diagonal((T(0),)), QuadraticForm.from_diagonal((T(2),))
    )
    assert q.diagonal == (T(0), T(2))


def test_orthogonal_sum_form_backed_blocks():
    h = QuadraticForm.from_form(hyperbolic_plane(T(0)))
    hh = orthogonal_sum(h, h)
    assert hh.form.gram == parse_matrix(
        "-inf 0 -inf -inf\n0 -inf -inf -inf\n-inf -inf -inf 0\n-inf -inf 0 -inf"
    )
    v = vector(0, 0, "-inf", "-inf")
    assert q_eval(hh, v) == G(0)


def test_orthogonal_sum_rejects_mixed_reps():
    with pytest.raises(DomainError):
        orthogonal_sum(
            QuadraticForm.from_diagonal((T(0),)),
            QuadraticForm.from_form(BilinearForm(Matrix.identity(2))),
        )


def test_diagonal_is_sum_of_singletons():
    q = QuadraticForm.from_diagonal((T(0), T(2), G(1)))
    acc = QuadraticForm.from_diagonal((q.diagonal[0],))
    for x in q.diagonal[1:]:
        acc = orthogonal_sum(acc, QuadraticForm.from_diagonal((x,)))
    assert acc.diagonal == q.diagonal


def test_orthogonal_sum_evaluation_identity():
    q1 = QuadraticForm.from_diagonal((T(0), T(2)))
    q2 = QuadraticForm.from_diagonal((G(1),))
    v1, v2 = vector(1, "0g"), vector(-2)
    joined = vector(1, "0g", -2)
    assert q_eval(orthogonal_sum(q1, q2), joined) == q_eval(q1, v1) + q_eval(q2, v2)
