"""Supertropical matrix algebra.

Determinants are permanents (no signs exist in the semiring).  Two engines
are shipped: ``det`` expands over permutations and is the authority up to
8x8; ``det_assignment`` solves a maximum-weight bipartite assignment by
exact dynamic programming and detects ghostness by probing each edge of an
optimal assignment for alternatives.  The two must agree exactly on every
input, and the test suites cross-check them against a third expansion in
:mod:`supertrop.oracle`.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import CapacityError, DomainError, ParseError, ShapeError
from .scalars import ONE, ZERO, Scalar, Vector, parse_scalar

EXPANSION_CAP = 8
RANK_CAP = 10


@dataclass(frozen=True)
class Matrix:
    """A dense rectangular matrix of supertropical scalars (row-major)."""

    entries: tuple  # tuple of row tuples

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        if not rows or not rows[0]:
            raise ValueError("matrices must have positive dimensions")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: Tuple[int, int]) -> Scalar:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return Vector(self.entries[i])

    def col(self, j: int) -> Vector:
        return Vector(tuple(r[j] for r in self.entries))

    def columns(self) -> List[Vector]:
        return [self.col(j) for j in range(self.cols)]

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.entries)))

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(
            tuple(
                tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
            )
        )

    @staticmethod
    def from_rows(rows: Iterable[Iterable[Scalar]]) -> "Matrix":
        return Matrix(tuple(tuple(r) for r in rows))

    @staticmethod
    def from_columns(cols: Sequence[Vector]) -> "Matrix":
        return Matrix(tuple(zip(*(tuple(c) for c in cols))))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def apply(self, v: Vector) -> Vector:
        """Matrix-vector product."""
        if self.cols != v.dim:
            raise ShapeError("matrix/vector shape mismatch")
        out = []
        for r in self.entries:
            acc = ZERO
            for a, x in zip(r, v):
                acc = acc + a * x
            out.append(acc)
        return Vector(tuple(out))

    def ghost_surpasses(self, other: "Matrix") -> bool:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("matrix shape mismatch")
        return all(
            a.ghost_surpasses(b)
            for ra, rb in zip(self.entries, other.entries)
            for a, b in zip(ra, rb)
        )

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.entries)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bt = b.transpose().entries
    out = []
    for ra in a.entries:
        row = []
        for cb in bt:
            acc = ZERO
            for x, y in zip(ra, cb):
                acc = acc + x * y
            row.append(acc)
        out.append(tuple(row))
    return Matrix(tuple(out))


# -- determinants ----------------------------------------------------------


@dataclass(frozen=True)
class DetResult:
    """Determinant value plus the permutations attaining the maximal
    nu-value; ghostness of the value is forced by a tie (>= 2 witnesses) or
    a ghost factor on the unique witness."""

    value: Scalar
    witnesses: frozenset


def det(a: Matrix) -> DetResult:
    """Permutation-expansion determinant (permanent), n <= 8."""
    if not a.is_square:
        raise ShapeError("determinant of a non-square matrix")
    n = a.rows
    if n > EXPANSION_CAP:
        raise CapacityError(f"expansion engine capped at n = {EXPANSION_CAP}")
    best: Optional[Fraction] = None
    witnesses: List[Tuple[int, ...]] = []
    best_ghost = False
    rows = a.entries
    for perm in itertools.permutations(range(n)):
        total = Fraction(0)
        ghost = False
        ok = True
        for i, j in enumerate(perm):
            e = rows[i][j]
            if e.value is None:
                ok = False
                break
            total += e.value
            ghost = ghost or e.ghost
        if not ok:
            continue
        if best is None or total > best:
            best = total
            witnesses = [perm]
            best_ghost = ghost
        elif total == best:
            witnesses.append(perm)
    if best is None:
        return DetResult(ZERO, frozenset())
    ghosty = best_ghost or len(witnesses) > 1
    return DetResult(Scalar(best, ghosty), frozenset(witnesses))


def _assignment_dp(
    nu: Sequence[Sequence[Optional[Fraction]]],
    forbid: Optional[Tuple[int, int]] = None,
) -> List[Optional[Fraction]]:
    """Max-weight assignment over rows 0..k-1 (row index = popcount of the
    column mask); entry ``None`` means the edge is absent."""
    n = len(nu)
    full = 1 << n
    best: List[Optional[Fraction]] = [None] * full
    best[0] = Fraction(0)
    for mask in range(full):
        base = best[mask]
        if base is None:
            continue
        i = bin(mask).count("1")
        if i == n:
            continue
        row = nu[i]
        for j in range(n):
            if mask >> j & 1:
                continue
            w = row[j]
            if w is None or forbid == (i, j):
                continue
            nm = mask | (1 << j)
            cand = base + w
            if best[nm] is None or cand > best[nm]:
                best[nm] = cand
    return best


def _assignment_reconstruct(
    nu: Sequence[Sequence[Optional[Fraction]]],
    best: List[Optional[Fraction]],
    forbid: Optional[Tuple[int, int]] = None,
) -> Tuple[int, ...]:
    n = len(nu)
    mask = (1 << n) - 1
    perm = [0] * n
    for i in range(n - 1, -1, -1):
        for j in range(n):
            if not (mask >> j & 1):
                continue
            w = nu[i][j]
            if w is None or forbid == (i, j):
                continue
            prev = best[mask ^ (1 << j)]
            if prev is not None and prev + w == best[mask]:
                perm[i] = j
                mask ^= 1 << j
                break
        else:
            raise AssertionError("assignment reconstruction failed")
    return tuple(perm)


def det_assignment(a: Matrix) -> DetResult:
    """Determinant via maximum-weight bipartite assignment.

    The optimum value equals the expansion determinant's nu-value; the value
    is ghost when a ghost entry lies on the optimal assignment or when
    forbidding any of its edges re-attains the optimum (a second witness).
    """
    if not a.is_square:
        raise ShapeError("determinant of a non-square matrix")
    n = a.rows
    nu = [[e.value for e in row] for row in a.entries]
    best = _assignment_dp(nu)
    opt = best[(1 << n) - 1]
    if opt is None:
        return DetResult(ZERO, frozenset())
    perm = _assignment_reconstruct(nu, best)
    ghost = any(a.entries[i][perm[i]].ghost for i in range(n))
    witnesses = {perm}
    for i in range(n):
        probe = _assignment_dp(nu, forbid=(i, perm[i]))
        alt = probe[(1 << n) - 1]
        if alt is not None and alt == opt:
            ghost = True
            witnesses.add(_assignment_reconstruct(nu, probe, forbid=(i, perm[i])))
    return DetResult(Scalar(opt, ghost), frozenset(witnesses))


def _minor(a: Matrix, drop_row: int, drop_col: int) -> Matrix:
    rows = [
        tuple(e for j, e in enumerate(r) if j != drop_col)
        for i, r in enumerate(a.entries)
        if i != drop_row
    ]
    return Matrix(tuple(rows))


def adjoint(a: Matrix) -> Matrix:
    """Transposed grid of minor determinants; entry (i, j) is the
    determinant of the matrix with row j and column i deleted."""
    if not a.is_square:
        raise ShapeError("adjoint of a non-square matrix")
    n = a.rows
    if n == 1:
        return Matrix(((ONE,),))
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(det(_minor(a, j, i)).value)
        out.append(tuple(row))
    return Matrix(tuple(out))


def is_nonsingular(a: Matrix) -> bool:
    return a.is_square and det(a).value.is_tangible


def pseudo_inverse(a: Matrix) -> Matrix:
    """A^nabla = adj(A) / |A|; defined only for nonsingular A."""
    if not a.is_square:
        raise DomainError("pseudo-inverse of a non-square matrix")
    d = det(a).value
    if not d.is_tangible:
        raise DomainError(f"singular matrix: |A| = {d}")
    dinv = d.inv()
    adj = adjoint(a)
    return Matrix(tuple(tuple(dinv * e for e in r) for r in adj.entries))


def quasi_identities(a: Matrix) -> Tuple[Matrix, Matrix]:
    """(I_A, I'_A) = (A A^nabla, A^nabla A)."""
    pinv = pseudo_inverse(a)
    return mat_mul(a, pinv), mat_mul(pinv, a)


def is_quasi_identity(m: Matrix) -> bool:
    """Multiplicatively idempotent, determinant one, ghost-surpasses Id."""
    if not m.is_square:
        raise ShapeError("quasi-identity test needs a square matrix")
    if mat_mul(m, m) != m:
        return False
    if det(m).value != ONE:
        return False
    return m.ghost_surpasses(Matrix.identity(m.rows))


def double_pseudo(a: Matrix) -> Matrix:
    """A^{nabla nabla} = A^nabla A A^nabla."""
    pinv = pseudo_inverse(a)
    return mat_mul(pinv, mat_mul(a, pinv))


def close(a: Matrix) -> Matrix:
    """The closed base matrix I_A A."""
    i_a, _ = quasi_identities(a)
    return mat_mul(i_a, a)


def is_closed_base(a: Matrix) -> bool:
    """True iff A is fixed by its own quasi-identity: I_A A = A."""
    return close(a) == a


# -- rank and independence -------------------------------------------------


def rank(a: Matrix) -> int:
    """Largest k such that some k x k submatrix has tangible determinant."""
    if max(a.rows, a.cols) > RANK_CAP:
        raise CapacityError(f"rank enumeration capped at n = {RANK_CAP}")
    for k in range(min(a.rows, a.cols), 0, -1):
        for ri in itertools.combinations(range(a.rows), k):
            for ci in itertools.combinations(range(a.cols), k):
                sub = Matrix(
                    tuple(tuple(a.entries[i][j] for j in ci) for i in ri)
                )
                if det(sub).value.is_tangible:
                    return k
    return 0


def independent(vectors: Sequence[Vector]) -> bool:
    """Tropical independence via the rank criterion: the column matrix of
    the k vectors must have rank k."""
    k = len(vectors)
    if k == 0:
        return True
    n = vectors[0].dim
    if any(v.dim != n for v in vectors):
        raise ShapeError("vector dimension mismatch")
    if k > n:
        return False
    return rank(Matrix.from_columns(vectors)) == k


# -- text and JSON I/O -----------------------------------------------------


def parse_matrix(text: str) -> Matrix:
    """One row per line, whitespace-separated scalar tokens, '#' comments."""
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        rows.append(tuple(parse_scalar(t) for t in line.split()))
    if not rows:
        raise ParseError("empty matrix")
    if any(len(r) != len(rows[0]) for r in rows):
        raise ParseError("ragged matrix rows")
    return Matrix(tuple(rows))


def matrix_to_json(a: Matrix) -> dict:
    return {"rows": [[str(e) for e in r] for r in a.entries]}


def matrix_from_json(obj) -> Matrix:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        rows = obj["rows"]
    except (TypeError, KeyError) as exc:
        raise ParseError("matrix JSON must be an object with a 'rows' array") from exc
    if not rows:
        raise ParseError("empty matrix")
    return Matrix(tuple(tuple(parse_scalar(t) for t in r) for r in rows))
