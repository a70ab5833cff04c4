"""Quasilinear quadratic forms and their bilinear companions.

Two representations: form-backed (Q(v) = <v,v> for a stored bilinear form)
and diagonal (a sequence of self-pairing values q_i, strictly quasilinear
by construction: Q(sum a_i e_i) = sum a_i^2 q_i).  The square-root
construction turns a strictly quasilinear form back into a strict symmetric
bilinear form.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .bilinear import BilinearForm, evaluate, is_supertropically_symmetric
from .errors import DomainError, PreconditionError, ShapeError
from .matrices import Matrix, independent
from .scalars import ZERO, Scalar, Vector

STRICT = "strict"
QUASILINEAR = "quasilinear"
NEITHER = "neither"


@dataclass(frozen=True)
class QuadraticForm:
    """Tagged union: exactly one of ``form`` (form-backed) or ``diagonal``
    (strictly quasilinear diagonal values) is set."""

    form: Optional[BilinearForm] = None
    diagonal: Optional[Tuple[Scalar, ...]] = None

    def __post_init__(self) -> None:
        if (self.form is None) == (self.diagonal is None):
            raise ValueError("exactly one representation must be given")
        if self.diagonal is not None:
            object.__setattr__(self, "diagonal", tuple(self.diagonal))

    @property
    def is_diagonal(self) -> bool:
        return self.diagonal is not None

    @property
    def dim(self) -> int:
        return len(self.diagonal) if self.diagonal is not None else self.form.dim

    @staticmethod
    def from_form(form: BilinearForm) -> "QuadraticForm":
        return QuadraticForm(form=form)

    @staticmethod
    def from_diagonal(qs: Sequence[Scalar]) -> "QuadraticForm":
        return QuadraticForm(diagonal=tuple(qs))


def q_eval(q: QuadraticForm, v: Vector) -> Scalar:
    if v.dim != q.dim:
        raise ShapeError("vector dimension does not match the quadratic form")
    if q.diagonal is not None:
        acc = ZERO
        for x, qi in zip(v, q.diagonal):
            if x.is_zero:
                continue
            acc = acc + x.power(2) * qi
        return acc
    return evaluate(q.form, v, v)


def quasilinearity_check(
    q: QuadraticForm, trials: int = 200, seed: int = 0
) -> str:
    """Diagonal forms are strict analytically; form-backed ones are sampled
    for Q(v+w) = Q(v)+Q(w) (strict), the ghost-surpassing weakening
    (quasilinear), or a violation (neither)."""
    if q.diagonal is not None:
        return STRICT
    verdict = STRICT
    for i in range(trials):
        rng = random.Random(f"quasilinear:{seed}:{i}")
        v = _rand_vector(rng, q.dim)
        w = _rand_vector(rng, q.dim)
        lhs = q_eval(q, v + w)
        rhs = q_eval(q, v) + q_eval(q, w)
        if lhs == rhs:
            continue
        if lhs.ghost_surpasses(rhs):
            verdict = QUASILINEAR
        else:
            return NEITHER
    return verdict


def _rand_vector(rng: random.Random, dim: int) -> Vector:
    out = []
    for _ in range(dim):
        r = rng.random()
        if r < 0.15:
            out.append(ZERO)
        elif r < 0.35:
            out.append(Scalar.ghost_of(rng.randint(-10, 10)))
        else:
            out.append(Scalar.tangible(rng.randint(-10, 10)))
    return Vector(tuple(out))


def form_from_q(q: QuadraticForm) -> BilinearForm:
    """The canonical bilinear companion of a strictly quasilinear form:
    g_ij = sqrt(Q(e_i) Q(e_j)), built once from the base values."""
    if q.diagonal is not None:
        qs = list(q.diagonal)
    else:
        if quasilinearity_check(q) != STRICT:
            raise PreconditionError(
                "square-root companion needs a strictly quasilinear form"
            )
        if not is_supertropically_symmetric(q.form):
            raise PreconditionError(
                "square-root companion needs a symmetric backing form"
            )
        n = q.dim
        qs = [q.form.gram[i, i] for i in range(n)]
    half = Fraction(1, 2)
    rows = []
    for qi in qs:
        rows.append(
            tuple(
                (qi * qj).power(half) if not (qi.is_zero or qj.is_zero) else ZERO
                for qj in qs
            )
        )
    return BilinearForm(Matrix(tuple(rows)))


def diagonal_from_form(q: QuadraticForm) -> QuadraticForm:
    """Convert a form-backed strictly quasilinear form over a symmetric
    bilinear form to the diagonal representation on the standard base."""
    if q.diagonal is not None:
        return q
    if quasilinearity_check(q) != STRICT:
        raise PreconditionError("diagonalization needs a strict verdict")
    if not is_supertropically_symmetric(q.form):
        raise PreconditionError("diagonalization needs a symmetric backing form")
    return QuadraticForm.from_diagonal(
        tuple(q.form.gram[i, i] for i in range(q.dim))
    )


def hyperbolic_plane(a: Scalar) -> BilinearForm:
    """The rank-2 form with zero diagonal and tangible cross pairing a."""
    if not a.is_tangible:
        raise DomainError("hyperbolic plane needs a tangible cross pairing")
    return BilinearForm(Matrix(((ZERO, a), (a, ZERO))))


def is_hyperbolic_plane(form: BilinearForm, b1: Vector, b2: Vector) -> bool:
    """Both base vectors g-isotropic, with Q(b1+b2) strictly nu-above
    Q(b1) + Q(b2)."""
    if not independent([b1, b2]):
        raise PreconditionError("hyperbolic-plane test needs an independent pair")
    q1 = evaluate(form, b1, b1)
    q2 = evaluate(form, b2, b2)
    if not (q1.in_ghost_ideal and q2.in_ghost_ideal):
        return False
    s = b1 + b2
    return evaluate(form, s, s).nu_cmp(q1 + q2) > 0


def orthogonal_sum(q1: QuadraticForm, q2: QuadraticForm) -> QuadraticForm:
    """Concatenate diagonal forms, or block-stack form-backed ones with
    zero off-blocks."""
    if q1.is_diagonal != q2.is_diagonal:
        raise DomainError(
            "orthogonal sum needs matching representations; convert first"
        )
    if q1.is_diagonal:
        return QuadraticForm.from_diagonal(q1.diagonal + q2.diagonal)
    n1, n2 = q1.dim, q2.dim
    rows = []
    for i in range(n1):
        rows.append(q1.form.gram.entries[i] + (ZERO,) * n2)
    for i in range(n2):
        rows.append((ZERO,) * n1 + q2.form.gram.entries[i])
    return QuadraticForm.from_form(BilinearForm(Matrix(tuple(rows))))
