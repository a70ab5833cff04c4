"""Exact arithmetic in the supertropical semifield over max-plus rationals.

A scalar is ``-inf`` (the adjoined zero), a tangible rational, or a ghost
rational.  Addition is maximum on the rational values, with ties collapsing
to the ghost layer; multiplication is rational addition, with the ghost
layer absorbing.  All values are immutable and exact (``fractions.Fraction``
underneath), so every comparison in this library is structural equality.

Text grammar: ``-inf`` | RATIONAL | RATIONAL``g`` where RATIONAL is an
optionally signed integer or ``p/q``.  ``parse_scalar(str(x)) == x`` always.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DomainError, ParseError, ShapeError

Rational = Fraction


@dataclass(frozen=True)
class Scalar:
    """A supertropical scalar: zero, tangible, or ghost.

    ``value is None`` encodes the semiring zero (written ``-inf``); in that
    case ``ghost`` is always False.  Otherwise ``ghost`` selects the layer.
    """

    value: Optional[Fraction]
    ghost: bool = False

    def __post_init__(self) -> None:
        if self.value is None and self.ghost:
            raise ValueError("zero scalar carries no layer")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Scalar":
        return ZERO

    @staticmethod
    def tangible(q) -> "Scalar":
        return Scalar(Fraction(q), False)

    @staticmethod
    def ghost_of(q) -> "Scalar":
        return Scalar(Fraction(q), True)

    # -- predicates --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.value is None

    @property
    def is_tangible(self) -> bool:
        return self.value is not None and not self.ghost

    @property
    def is_ghost(self) -> bool:
        return self.value is not None and self.ghost

    @property
    def in_ghost_ideal(self) -> bool:
        """True for ghosts and zero (the ideal G adjoined with zero)."""
        return self.value is None or self.ghost

    # -- semiring operations ----------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        if self.value is None:
            return other
        if other.value is None:
            return self
        if self.value > other.value:
            return self
        if self.value < other.value:
            return other
        return Scalar(self.value, True)

    def __mul__(self, other: "Scalar") -> "Scalar":
        if self.value is None or other.value is None:
            return ZERO
        return Scalar(self.value + other.value, self.ghost or other.ghost)

    def nu(self) -> "Scalar":
        """The ghost map: a |-> a + a."""
        if self.value is None:
            return ZERO
        return Scalar(self.value, True)

    def inv(self) -> "Scalar":
        """Multiplicative inverse within the tangible or ghost group."""
        if self.value is None:
            raise DomainError("division by zero")
        return Scalar(-self.value, self.ghost)

    def power(self, r) -> "Scalar":
        """Raise to a rational power; the group (Q, +) is divisible, so any
        rational exponent is legal on nonzero scalars."""
        r = Fraction(r)
        if self.value is None:
            if r <= 0:
                raise DomainError("zero cannot be raised to a nonpositive power")
            return ZERO
        return Scalar(self.value * r, self.ghost)

    def nu_cmp(self, other: "Scalar") -> int:
        """Compare nu-values, zero at the bottom: -1 (Lt), 0 (Match), 1 (Gt)."""
        if self.value is None and other.value is None:
            return 0
        if self.value is None:
            return -1
        if other.value is None:
            return 1
        if self.value < other.value:
            return -1
        if self.value > other.value:
            return 1
        return 0

    def nu_lt(self, other: "Scalar") -> bool:
        return self.nu_cmp(other) < 0

    def nu_le(self, other: "Scalar") -> bool:
        return self.nu_cmp(other) <= 0

    def nu_match(self, other: "Scalar") -> bool:
        return self.nu_cmp(other) == 0

    def tangible_lift(self) -> "Scalar":
        """The tangible scalar with the same nu-value."""
        if self.value is None:
            raise DomainError("zero has no tangible lift")
        return Scalar(self.value, False)

    def ghost_surpasses(self, other: "Scalar") -> bool:
        """self |= other: self = other + c for some c in the ghost ideal."""
        if self == other:
            return True
        if not self.is_ghost:
            return False
        if other.value is None:
            return True
        return self.value >= other.value

    # -- text --------------------------------------------------------------

    def __str__(self) -> str:
        if self.value is None:
            return "-inf"
        body = str(self.value)
        return body + "g" if self.ghost else body

    def __repr__(self) -> str:
        return f"Scalar({self})"


ZERO = Scalar(None, False)
ONE = Scalar(Fraction(0), False)
E = Scalar(Fraction(0), True)  # the ghost unit e = ghost 0


_SCALAR_RE = re.compile(r"^([+-]?\d+(?:/\d+)?)(g?)$")


def parse_scalar(text: str) -> Scalar:
    text = text.strip()
    if text == "-inf":
        return ZERO
    m = _SCALAR_RE.match(text)
    if not m:
        raise ParseError(f"bad scalar token: {text!r}")
    return Scalar(Fraction(m.group(1)), m.group(2) == "g")


# -- vectors ---------------------------------------------------------------


@dataclass(frozen=True)
class Vector:
    """A fixed-length dense vector of supertropical scalars."""

    entries: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        if not self.entries:
            raise ValueError("vectors must have positive dimension")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Scalar:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __add__(self, other: "Vector") -> "Vector":
        if self.dim != other.dim:
            raise ShapeError("vector dimension mismatch")
        return Vector(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def scale(self, a: Scalar) -> "Vector":
        return Vector(tuple(a * x for x in self.entries))

    def nu(self) -> "Vector":
        return Vector(tuple(x.nu() for x in self.entries))

    @property
    def is_ghost(self) -> bool:
        """True iff the vector lies in the standard ghost subspace."""
        return all(x.in_ghost_ideal for x in self.entries)

    @property
    def is_tangible(self) -> bool:
        """All entries tangible or zero, at least one nonzero."""
        return all(not x.is_ghost for x in self.entries) and any(
            not x.is_zero for x in self.entries
        )

    def ghost_surpasses(self, other: "Vector") -> bool:
        if self.dim != other.dim:
            raise ShapeError("vector dimension mismatch")
        return all(a.ghost_surpasses(b) for a, b in zip(self.entries, other.entries))

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.entries)


def vector(*tokens) -> Vector:
    """Build a vector from scalar tokens, Scalars, or rational literals."""
    out = []
    for t in tokens:
        if isinstance(t, Scalar):
            out.append(t)
        elif isinstance(t, str):
            out.append(parse_scalar(t))
        else:
            out.append(Scalar.tangible(t))
    return Vector(tuple(out))


def parse_vector(text: str) -> Vector:
    tokens = text.split()
    if not tokens:
        raise ParseError("empty vector")
    return Vector(tuple(parse_scalar(t) for t in tokens))


def lin_comb(coeffs: Sequence[Scalar], vectors: Sequence[Vector]) -> Vector:
    """Entrywise sum of coeffs[i] * vectors[i]."""
    if len(coeffs) != len(vectors):
        raise ShapeError("coefficient/vector count mismatch")
    if not vectors:
        raise ShapeError("empty linear combination")
    dim = vectors[0].dim
    if any(v.dim != dim for v in vectors):
        raise ShapeError("vector dimension mismatch")
    acc = [ZERO] * dim
    for c, v in zip(coeffs, vectors):
        for i, x in enumerate(v):
            acc[i] = acc[i] + c * x
    return Vector(tuple(acc))
