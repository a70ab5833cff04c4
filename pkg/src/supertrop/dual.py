"""Linear functionals, dual bases of closed bases, and ghost kernels.

A functional is represented concretely by its row vector; the dual base of
a closed base matrix A consists of the functionals eps_i whose rows are the
rows of A^{nabla nabla}, so that the evaluation grid on the base is the
quasi-identity A^{nabla nabla} A (diagonal one, ghost off-diagonal).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import PreconditionError, ShapeError
from .matrices import (
    Matrix,
    double_pseudo,
    is_closed_base,
    is_nonsingular,
    quasi_identities,
    rank,
)
from .scalars import Scalar, Vector


@dataclass(frozen=True)
class Functional:
    """A linear functional f(v) = sum_j row_j * v_j."""

    row: Vector

    def __call__(self, v: Vector) -> Scalar:
        return apply(self, v)


@dataclass(frozen=True)
class DualBase:
    functionals: Tuple[Functional, ...]
    source: Matrix


def apply(f: Functional, v: Vector) -> Scalar:
    if f.row.dim != v.dim:
        raise ShapeError("functional/vector dimension mismatch")
    acc = None
    for a, x in zip(f.row, v):
        term = a * x
        acc = term if acc is None else acc + term
    return acc


def project_closed(a: Matrix, v: Vector) -> Vector:
    """The idempotent projection v |-> I_A v onto the closed column space."""
    i_a, _ = quasi_identities(a)
    return i_a.apply(v)


def lower(a: Matrix, v: Vector) -> Vector:
    """v |-> A^{nabla nabla} v; the identity on the closed column space."""
    return double_pseudo(a).apply(v)


def dual_base(a: Matrix) -> DualBase:
    """The dual functionals of the closed base whose columns are the b_i:
    eps_i extracts coordinate i of the lowering map, i.e. its row vector is
    row i of A^{nabla nabla}.  The evaluation grid [eps_i(b_j)] is then the
    quasi-identity A^{nabla nabla} A = I'_A, so eps_i(b_i) is exactly one
    and the off-diagonal evaluations are ghost.  Demands closedness; pass
    close(A) first if the base is not closed."""
    if not is_nonsingular(a):
        raise PreconditionError("dual base requires a nonsingular base matrix")
    if not is_closed_base(a):
        raise PreconditionError(
            "base matrix is not closed; apply close() before taking the dual base"
        )
    grid = double_pseudo(a)
    functionals = tuple(Functional(grid.row(i)) for i in range(a.rows))
    return DualBase(functionals, a)


def dual_eval_matrix(d: DualBase) -> Matrix:
    """The grid [eps_i(b_j)]; diagonal exactly one, off-diagonal ghost."""
    n = d.source.cols
    rows = []
    for f in d.functionals:
        rows.append(tuple(apply(f, d.source.col(j)) for j in range(n)))
    return Matrix(tuple(rows))


def dual_rank(d: DualBase) -> int:
    return rank(Matrix.from_rows(tuple(f.row) for f in d.functionals))


def ghost_kernel_contains(m: Matrix, v: Vector) -> bool:
    """True iff M v lies in the standard ghost subspace."""
    return m.apply(v).is_ghost


def is_tropically_onto(m: Matrix) -> bool:
    """The matrix map is tropically onto iff its image contains a thick
    subspace, i.e. the matrix has full rank."""
    if not m.is_square:
        raise ShapeError("tropically-onto test needs a square matrix")
    return rank(m) == m.rows


PROVED = "proved"
COUNTEREXAMPLE = "counterexample"
NO_COUNTEREXAMPLE = "no-counterexample"


def _sample_tangible_vector(dim: int, seed: int, index: int) -> Vector:
    rng = random.Random(f"ghost-monic:{seed}:{index}")
    return Vector(tuple(Scalar.tangible(rng.randint(-10, 10)) for _ in range(dim)))


def ghost_monic_verdict(m: Matrix, trials: int = 100, seed: int = 0) -> str:
    """Exact for nonsingular matrices (the ghost kernel of a nonsingular
    matrix contains no tangible vector); otherwise a seeded refutation
    search over tangible vectors."""
    if not m.is_square:
        raise ShapeError("ghost-monic test needs a square matrix")
    if is_nonsingular(m):
        return PROVED
    for i in range(trials):
        v = _sample_tangible_vector(m.cols, seed, i)
        if v.is_tangible and m.apply(v).is_ghost:
            return COUNTEREXAMPLE
    return NO_COUNTEREXAMPLE


def is_ghost_monic(m: Matrix, trials: int = 100, seed: int = 0) -> bool:
    return ghost_monic_verdict(m, trials, seed) != COUNTEREXAMPLE


def double_dual_eval(v: Vector, f: Functional) -> Scalar:
    """Evaluation reversal v**(f) = f(v)."""
    return apply(f, v)


@dataclass(frozen=True)
class MapAxiomReport:
    trials: int
    passed: bool
    counterexample: Optional[str] = None


def check_map_axioms(m: Matrix, trials: int = 100, seed: int = 0) -> MapAxiomReport:
    """Sampled check that v |-> M v is a supertropical map: additivity up to
    ghost-surpassing (with equality, since matrix maps are linear), tangible
    homogeneity, and ghost homogeneity up to ghost-surpassing."""
    for i in range(trials):
        rng = random.Random(f"map-axioms:{seed}:{i}")

        def rand_vector() -> Vector:
            out = []
            for _ in range(m.cols):
                r = rng.random()
                if r < 0.15:
                    out.append(Scalar(None, False))
                elif r < 0.4:
                    out.append(Scalar.ghost_of(rng.randint(-10, 10)))
                else:
                    out.append(Scalar.tangible(rng.randint(-10, 10)))
            return Vector(tuple(out))

        v, w = rand_vector(), rand_vector()
        alpha = Scalar.tangible(rng.randint(-10, 10))
        g = Scalar.ghost_of(rng.randint(-10, 10))

        lhs = m.apply(v + w)
        rhs = m.apply(v) + m.apply(w)
        if lhs != rhs or not lhs.ghost_surpasses(rhs):
            return MapAxiomReport(i + 1, False, f"additivity at v={v}, w={w}")
        if m.apply(v.scale(alpha)) != m.apply(v).scale(alpha):
            return MapAxiomReport(i + 1, False, f"tangible homogeneity at v={v}, a={alpha}")
        gv = m.apply(v.scale(g))
        if not gv.ghost_surpasses(m.apply(v).scale(g)) or gv != m.apply(v).scale(g):
            return MapAxiomReport(i + 1, False, f"ghost homogeneity at v={v}, a={g}")
    return MapAxiomReport(trials, True)
