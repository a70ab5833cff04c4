"""Independent brute-force engines, seeded samplers, and property suites.

Everything here is deterministic in (seed, index): replaying a suite with
the same name, trial count, and seed reproduces the identical report.
The suites mirror the library's core algebraic invariants and serve as the
acceptance battery.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import bilinear as bl
from . import dual as du
from . import quadratic as qd
from .errors import CapacityError, DomainError
from .matrices import (
    DetResult,
    Matrix,
    close,
    det,
    det_assignment,
    independent,
    mat_mul,
    quasi_identities,
    is_quasi_identity,
    rank,
)
from .scalars import ONE, ZERO, Scalar, Vector, lin_comb

NU_LO = -10
NU_HI = 10


# -- independent determinant oracle ---------------------------------------


def brute_force_det(a: Matrix) -> DetResult:
    """Permanent by folding the full permutation sum through scalar
    arithmetic; witnesses are the nonzero products nu-matching the total."""
    if not a.is_square:
        raise DomainError("determinant of a non-square matrix")
    n = a.rows
    if n > 8:
        raise CapacityError("brute-force expansion capped at n = 8")
    products = []
    total = ZERO
    for perm in itertools.permutations(range(n)):
        p = ONE
        for i, j in enumerate(perm):
            p = p * a.entries[i][j]
        products.append((perm, p))
        total = total + p
    if total.is_zero:
        return DetResult(ZERO, frozenset())
    witnesses = frozenset(
        perm for perm, p in products if not p.is_zero and p.nu_match(total)
    )
    return DetResult(total, witnesses)


def dependence_search(
    vectors: Sequence[Vector], grid: Sequence[Fraction]
) -> Optional[Tuple[Scalar, ...]]:
    """Search tangible coefficient tuples (nu-values from the grid, plus
    zero for sparsity) for a ghost-vector combination.  A returned witness
    proves tropical dependence; None proves nothing."""
    if not grid:
        raise DomainError("empty coefficient grid")
    choices = [ZERO] + [Scalar.tangible(g) for g in grid]
    for coeffs in itertools.product(choices, repeat=len(vectors)):
        if all(c.is_zero for c in coeffs):
            continue
        if lin_comb(list(coeffs), list(vectors)).is_ghost:
            return coeffs
    return None


# -- samplers --------------------------------------------------------------


def _rng(seed: int, index: int, salt: str = "") -> random.Random:
    return random.Random(f"supertrop:{salt}:{seed}:{index}")


def _rand_scalar(rng: random.Random, ghost_density: float, zero_density: float) -> Scalar:
    r = rng.random()
    if r < zero_density:
        return ZERO
    q = rng.randint(NU_LO, NU_HI)
    if r < zero_density + ghost_density:
        return Scalar.ghost_of(q)
    return Scalar.tangible(q)


def sample(
    kind: str,
    shape,
    seed: int,
    index: int,
    ghost_density: float = 0.2,
    zero_density: float = 0.15,
):
    """Deterministic sampler.  kinds: scalar, tangible-scalar, vector,
    matrix, nonsingular-matrix, symmetric-gram, closed-base."""
    rng = _rng(seed, index, kind)
    if kind == "scalar":
        return _rand_scalar(rng, ghost_density, zero_density)
    if kind == "tangible-scalar":
        return Scalar.tangible(rng.randint(NU_LO, NU_HI))
    if kind == "vector":
        return Vector(
            tuple(_rand_scalar(rng, ghost_density, zero_density) for _ in range(shape))
        )
    if kind == "matrix":
        rows, cols = shape if isinstance(shape, tuple) else (shape, shape)
        return Matrix(
            tuple(
                tuple(_rand_scalar(rng, ghost_density, zero_density) for _ in range(cols))
                for _ in range(rows)
            )
        )
    if kind == "nonsingular-matrix":
        n = shape
        for _ in range(200):
            m = Matrix(
                tuple(
                    tuple(_rand_scalar(rng, 0.0, zero_density) for _ in range(n))
                    for _ in range(n)
                )
            )
            if det(m).value.is_tangible:
                return m
        raise DomainError("nonsingular sampler exhausted its retry budget")
    if kind == "closed-base":
        return close(sample("nonsingular-matrix", shape, seed, index + 10_000))
    if kind == "symmetric-gram":
        n = shape
        grid = [[None] * n for _ in range(n)]
        for i in range(n):
            grid[i][i] = _rand_scalar(rng, ghost_density, zero_density)
            for j in range(i + 1, n):
                e = _rand_scalar(rng, ghost_density, zero_density)
                grid[i][j] = e
                grid[j][i] = e
        return Matrix(tuple(tuple(r) for r in grid))
    raise DomainError(f"unknown sample kind: {kind!r}")


# -- trial reports ---------------------------------------------------------


@dataclass(frozen=True)
class TrialReport:
    suite: str
    trials: int
    seed: int
    failures: Tuple[Tuple[str, str, str], ...]
    verdict: str  # pass | counterexample

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> str:
        return json.dumps(
            {
                "suite": self.suite,
                "trials": self.trials,
                "seed": self.seed,
                "verdict": self.verdict,
                "failures": [list(f) for f in self.failures],
            },
            indent=2,
            sort_keys=True,
        )


def _report(suite: str, trials: int, seed: int, failures: List[Tuple[str, str, str]]) -> TrialReport:
    failures = sorted(failures)
    return TrialReport(
        suite=suite,
        trials=trials,
        seed=seed,
        failures=tuple(failures),
        verdict="pass" if not failures else "counterexample",
    )


# -- suites ----------------------------------------------------------------


def _suite_frobenius(trials: int, seed: int) -> List[Tuple[str, str, str]]:
    failures = []
    for i in range(trials):
        a = sample("scalar", None, seed, 2 * i)
        b = sample("scalar", None, seed, 2 * i + 1)
        for m in range(1, 6):
            s = a + b
            lhs = s.power(m) if not s.is_zero else ZERO
            pa = a.power(m) if not a.is_zero else ZERO
            pb = b.power(m) if not b.is_zero else ZERO
            rhs = pa + pb
            if lhs != rhs:
                failures.append((f"a={a} b={b} m={m}", str(rhs), str(lhs)))
    return failures


def _suite_det_engines(trials: int, seed: int) -> List[Tuple[str, str, str]]:
    failures = []
    sizes = (2, 3, 4, 5, 6)
    for i in range(trials):
        n = sizes[i % len(sizes)]
        m = sample("matrix", n, seed, i)
        d1 = det(m)
        d2 = det_assignment(m)
        d3 = brute_force_det(m)
        if not (d1.value == d2.value == d3.value):
            failures.append(
                (f"matrix=[{m}]".replace("\n", "; "), str(d1.value), f"{d2.value}/{d3.value}")
            )
        if d1.witnesses != d3.witnesses:
            failures.append(
                (f"matrix=[{m}] witnesses".replace("\n", "; "), str(sorted(d1.witnesses)), str(sorted(d3.witnesses)))
            )
    return failures


def _suite_quasi_identity(trials: int, seed: int) -> List[Tuple[str, str, str]]:
    failures = []
    sizes = (2, 3, 4, 5)
    for i in range(trials):
        n = sizes[i % len(sizes)]
        a = sample("nonsingular-matrix", n, seed, i)
        i_a, i_a_prime = quasi_identities(a)
        tag = f"A=[{a}]".replace("\n", "; ")
        if not is_quasi_identity(i_a):
            failures.append((tag, "I_A quasi-identity", "violated"))
        if not is_quasi_identity(i_a_prime):
            failures.append((tag, "I'_A quasi-identity", "violated"))
        if mat_mul(i_a, i_a) != i_a:
            failures.append((tag, "I_A idempotent", "violated"))
        if det(i_a).value != ONE:
            failures.append((tag, "det(I_A) = one", str(det(i_a).value)))
        if not i_a.ghost_surpasses(Matrix.identity(n)):
            failures.append((tag, "I_A ghost-surpasses Id", "violated"))
    return failures


def _dual_pattern_ok(grid: Matrix) -> bool:
    n = grid.rows
    for i in range(n):
        for j in range(n):
            if i == j and grid[i, j] != ONE:
                return False
            if i != j and not grid[i, j].in_ghost_ideal:
                return False
    return True


def _suite_dual_base(trials: int, seed: int) -> List[Tuple[str, str, str]]:
    failures = []
    sizes = (2, 3, 4, 5)
    for i in range(trials):
        n = sizes[i % len(sizes)]
        a = sample("closed-base", n, seed, i)
        d = du.dual_base(a)
        tag = f"A=[{a}]".replace("\n", "; ")
        grid = du.dual_eval_matrix(d)
        if not _dual_pattern_ok(grid):
            failures.append((tag, "dual grid pattern", str(grid).replace("\n", "; ")))
        if du.dual_rank(d) != n:
            failures.append((tag, f"dual rank {n}", str(du.dual_rank(d))))
    return failures


def _suite_double_dual(trials: int, seed: int) -> List[Tuple[str, str, str]]:
    failures = []
    sizes = (2, 3, 4, 5)
    for i in range(trials):
        n = sizes[i % len(sizes)]
        a = sample("closed-base", n, seed, i)
        d = du.dual_base(a)
        tag = f"A=[{a}]".replace("\n", "; ")
        grid = Matrix(
            tuple(
                tuple(du.double_dual_eval(a.col(j), f) for j in range(n))
                for f in d.functionals
            )
        )
        if not _dual_pattern_ok(grid):
            failures.append((tag, "double-dual grid pattern", str(grid).replace("\n", "; ")))
        if rank(grid) != n:
            failures.append((tag, f"double-dual rank {n}", str(rank(grid))))
        if du.ghost_monic_verdict(a) != du.PROVED:
            failures.append((tag, "ghost monic proved", du.ghost_monic_verdict(a)))
    return failures


def _cs_base_gram(rng: random.Random, n: int) -> Matrix:
    # Tangible diagonal with strictly nu-dominated symmetric off-diagonals:
    # the standard base is Cauchy-Schwartz for this form.
    diag = [rng.randint(0, NU_HI) for _ in range(n)]
    grid = [[None] * n for _ in range(n)]
    for i in range(n):
        grid[i][i] = Scalar.tangible(diag[i])
        for j in range(i + 1, n):
            bound = Fraction(diag[i] + diag[j], 2)
            e = Scalar.tangible(bound - rng.randint(1, 5))
            grid[i][j] = e
            grid[j][i] = e
    return Matrix(tuple(tuple(r) for r in grid))


def _suite_gram_schmidt(trials: int, seed: int) -> List[Tuple[str, str, str]]:
    failures = []
    sizes = (2, 3, 4)
    for i in range(trials):
        rng = _rng(seed, i, "gs")
        n = sizes[i % len(sizes)]
        form = bl.BilinearForm(_cs_base_gram(rng, n))
        candidates = [
            sample("vector", n, seed, 100 * i + k, ghost_density=0.1)
            for k in range(n)
        ]
        base, _ = bl.gram_schmidt(form, candidates)
        v = sample("vector", n, seed, 100 * i + 50, ghost_density=0.1)
        res = bl.gs_step(form, base, v)
        tag = f"gram=[{form.gram}] v={v}".replace("\n", "; ")
        for b in base:
            if not bl.evaluate(form, res.corrected, b).in_ghost_ideal:
                failures.append((tag, "corrected g-orthogonal to base", "violated"))
                break
        lhs = bl.evaluate(form, res.corrected, res.corrected)
        rhs = bl.evaluate(form, v, v)
        for b in base:
            vb = bl.evaluate(form, v, b)
            bv = bl.evaluate(form, b, v)
            beta = bl.evaluate(form, b, b).tangible_lift()
            rhs = rhs + vb * (vb + bv) * beta.inv()
        if lhs != rhs:
            failures.append((tag, str(rhs), str(lhs)))
    return failures


def _suite_cs1(trials: int, seed: int) -> List[Tuple[str, str, str]]:
    failures = []
    sizes = (2, 3, 4)
    for i in range(trials):
        rng = _rng(seed, i, "cs1")
        n = sizes[i % len(sizes)]
        form = bl.BilinearForm(_cs_base_gram(rng, n))
        base = [Matrix.identity(n).col(j) for j in range(n)]
        coeffs_v = [Scalar.tangible(rng.randint(NU_LO, NU_HI)) for _ in range(n)]
        coeffs_w = [Scalar.tangible(rng.randint(NU_LO, NU_HI)) for _ in range(n)]
        v = lin_comb(coeffs_v, base)
        w = lin_comb(coeffs_w, base)
        pc = bl.pair_class(form, v, w)
        if not pc.weakly_cauchy_schwartz:
            tag = f"gram=[{form.gram}] v={v} w={w}".replace("\n", "; ")
            failures.append((tag, "weakly Cauchy-Schwartz", "violated"))
    return failures


def _nondegenerate_2x2(seed: int, index: int) -> bl.BilinearForm:
    for k in range(100):
        g = sample("symmetric-gram", 2, seed, 1000 * index + k)
        form = bl.BilinearForm(g)
        e1, e2 = Matrix.identity(2).columns()
        if not bl.radical_member(form, [e1, e2], e1) and not bl.radical_member(
            form, [e1, e2], e2
        ):
            return form
    raise DomainError("nondegenerate 2x2 sampler exhausted its retry budget")


def _suite_degen(trials: int, seed: int) -> List[Tuple[str, str, str]]:
    failures = []
    for i in range(trials):
        form = _nondegenerate_2x2(seed, i)
        e1, e2 = Matrix.identity(2).columns()
        strip = bl.isotropic_strip(form, e1, e2)  # re-verifies its witnesses
        if strip.kind == "empty":
            tag = f"gram=[{form.gram}]".replace("\n", "; ")
            failures.append((tag, "nonempty strip", "empty"))
    return failures


def _decompose_postconditions(
    form: bl.BilinearForm, base: Sequence[Vector]
) -> List[str]:
    aniso, alternate = bl.decompose(form, base)
    problems = []
    for x, y in itertools.combinations(aniso, 2):
        if not (
            bl.evaluate(form, x, y).in_ghost_ideal
            and bl.evaluate(form, y, x).in_ghost_ideal
        ):
            problems.append("aniso pairwise g-orthogonal")
        if not bl.pair_class(form, x, y).cauchy_schwartz:
            problems.append("aniso pairwise Cauchy-Schwartz")
    for x in aniso:
        if not bl.evaluate(form, x, x).is_tangible:
            problems.append("aniso g-nonisotropic")
    for x in alternate:
        if not bl.classify_vector(form, x).isotropic:
            problems.append("alternate g-isotropic")
    for x in alternate:
        for y in aniso:
            if not (
                bl.evaluate(form, x, y).in_ghost_ideal
                and bl.evaluate(form, y, x).in_ghost_ideal
            ):
                problems.append("cross pairing ghost")
    if len(aniso) + len(alternate) != len(base):
        problems.append("counts sum")
    return sorted(set(problems))


def _suite_decompose(trials: int, seed: int) -> List[Tuple[str, str, str]]:
    failures = []
    sizes = (2, 3, 4, 5)
    for i in range(trials):
        n = sizes[i % len(sizes)]
        g = sample("symmetric-gram", n, seed, i)
        form = bl.BilinearForm(g)
        if i % 2 == 0:
            base = Matrix.identity(n).columns()
        else:
            base = sample("nonsingular-matrix", n, seed, i + 5_000).columns()
        problems = _decompose_postconditions(form, base)
        if problems:
            tag = f"gram=[{g}] base#{i}".replace("\n", "; ")
            failures.append((tag, "decompose postconditions", "; ".join(problems)))
    return failures


def _suite_quadlin(trials: int, seed: int) -> List[Tuple[str, str, str]]:
    failures = []
    sizes = (2, 3, 4, 5)
    for i in range(trials):
        rng = _rng(seed, i, "quadlin")
        n = sizes[i % len(sizes)]
        diag = tuple(
            Scalar.ghost_of(rng.randint(NU_LO, NU_HI))
            if rng.random() < 0.25
            else Scalar.tangible(rng.randint(NU_LO, NU_HI))
            for _ in range(n)
        )
        q = qd.QuadraticForm.from_diagonal(diag)
        form = qd.form_from_q(q)
        tag = f"diag={' '.join(map(str, diag))}"
        if not bl.is_supertropically_symmetric(form):
            failures.append((tag, "companion symmetric", "violated"))
        for k in range(20):
            v = sample("vector", n, seed, 31 * i + k, ghost_density=0.1)
            w = sample("vector", n, seed, 31 * i + k + 1_000_000, ghost_density=0.1)
            lhs = bl.evaluate(form, v, w).power(2) if not bl.evaluate(form, v, w).is_zero else ZERO
            rhs = qd.q_eval(q, v) * qd.q_eval(q, w)
            if lhs != rhs:
                failures.append((f"{tag} v={v} w={w}", str(rhs), str(lhs)))
            prod = qd.q_eval(q, v) * qd.q_eval(q, w)
            sq = lhs
            if prod.nu_cmp(sq) < 0:
                failures.append((f"{tag} v={v} w={w}", "weak Cauchy-Schwartz", "violated"))
        a = Scalar.tangible(rng.randint(NU_LO, NU_HI))
        hyper = qd.hyperbolic_plane(a)
        e1, e2 = Matrix.identity(2).columns()
        if not qd.is_hyperbolic_plane(hyper, e1, e2):
            failures.append((f"hyperbolic a={a}", "is_hyperbolic_plane", "false"))
        q2 = qd.QuadraticForm.from_diagonal(
            tuple(Scalar.tangible(rng.randint(NU_LO, NU_HI)) for _ in range(2))
        )
        qs = qd.orthogonal_sum(q, q2)
        v1 = sample("vector", n, seed, 77 * i, ghost_density=0.1)
        v2 = sample("vector", 2, seed, 77 * i + 1, ghost_density=0.1)
        joined = Vector(tuple(v1) + tuple(v2))
        if qd.q_eval(qs, joined) != qd.q_eval(q, v1) + qd.q_eval(q2, v2):
            failures.append((f"{tag} osum", "Q(v1 (+) v2) = Q1(v1)+Q2(v2)", "violated"))
    return failures


def _suite_surpass_order(trials: int, seed: int) -> List[Tuple[str, str, str]]:
    failures = []
    for i in range(trials):
        a = sample("scalar", None, seed, 3 * i)
        b = sample("scalar", None, seed, 3 * i + 1)
        c = sample("scalar", None, seed, 3 * i + 2)
        tag = f"a={a} b={b} c={c}"
        if not a.ghost_surpasses(a):
            failures.append((tag, "reflexive", "violated"))
        if a.ghost_surpasses(b) and b.ghost_surpasses(c) and not a.ghost_surpasses(c):
            failures.append((tag, "transitive", "violated"))
        if a.ghost_surpasses(b) and b.ghost_surpasses(a) and a != b:
            failures.append((tag, "antisymmetric", "violated"))
    return failures


SUITES: Dict[str, Callable[[int, int], List[Tuple[str, str, str]]]] = {
    "frobenius": _suite_frobenius,
    "det-engines": _suite_det_engines,
    "quasi-identity": _suite_quasi_identity,
    "dual-base": _suite_dual_base,
    "double-dual": _suite_double_dual,
    "gram-schmidt": _suite_gram_schmidt,
    "cs1": _suite_cs1,
    "degen": _suite_degen,
    "decompose": _suite_decompose,
    "quadlin": _suite_quadlin,
    "surpass-order": _suite_surpass_order,
}


def run_suite(name: str, trials: int, seed: int) -> TrialReport:
    if name not in SUITES:
        raise DomainError(
            f"unknown suite {name!r}; available: {', '.join(sorted(SUITES))}"
        )
    return _report(name, trials, seed, SUITES[name](trials, seed))
