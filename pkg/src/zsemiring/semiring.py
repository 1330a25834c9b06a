"""Scalar semirings: max-times, nonnegative, max-min and Lukasiewicz.

Every instance lives on a subset of the nonnegative reals, with 0 as the
additive zero and 1 as the multiplicative unit.  Elementwise operations are
vectorized over numpy arrays so the matrix layer can reuse them directly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import ContextError, DomainError, NotInvertibleError

__all__ = [
    "Semiring",
    "Scalar",
    "as_semiring",
    "sr_add",
    "sr_mul",
    "sr_try_div",
]


class Semiring(enum.Enum):
    MAX_TIMES = "max-times"
    NONNEGATIVE = "nonnegative"
    MAX_MIN = "max-min"
    LUKASIEWICZ = "lukasiewicz"

    @property
    def idempotent(self) -> bool:
        return self is not Semiring.NONNEGATIVE

    @property
    def is_lattice(self) -> bool:
        """True for the bounded instances living on [0, 1]."""
        return self in (Semiring.MAX_MIN, Semiring.LUKASIEWICZ)

    @property
    def zero(self) -> float:
        return 0.0

    @property
    def one(self) -> float:
        return 1.0

    @property
    def upper(self) -> float:
        return 1.0 if self.is_lattice else np.inf

    def check(self, values, what: str = "value") -> np.ndarray:
        """Return `values` as a float array, raising DomainError outside the carrier."""
        arr = np.asarray(values, dtype=float)
        if not np.all(np.isfinite(arr)):
            raise DomainError(f"{what} must be finite for {self.value}")
        if np.any(arr < 0):
            raise DomainError(f"{what} must be nonnegative for {self.value}")
        if self.is_lattice and np.any(arr > 1):
            raise DomainError(f"{what} must lie in [0, 1] for {self.value}")
        return arr

    def add(self, a, b):
        if self is Semiring.NONNEGATIVE:
            return np.add(a, b)
        return np.maximum(a, b)

    def mul(self, a, b):
        if self is Semiring.MAX_TIMES or self is Semiring.NONNEGATIVE:
            return np.multiply(a, b)
        if self is Semiring.MAX_MIN:
            return np.minimum(a, b)
        # a + b - 1 rounds; keep the unit law exact by passing units through
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        out = np.maximum(0.0, a + b - 1.0)
        out = np.where(b == 1.0, a, out)
        out = np.where(a == 1.0, b, out)
        return out if out.ndim else float(out)

    def sum(self, a, axis=None):
        """Semiring sum of an array along `axis` (0 for an empty reduction)."""
        a = np.asarray(a, dtype=float)
        if self is Semiring.NONNEGATIVE:
            return a.sum(axis=axis)
        return a.max(axis=axis, initial=0.0)

    def leq(self, a, b):
        # canonical order of the idempotent instances is the numeric order
        return np.less_equal(a, b)

    def try_div(self, a, lam):
        """Solve ``x * lam = a`` for x; raises NotInvertibleError if lam has no inverse."""
        lam = float(lam)
        if lam == 0.0:
            raise NotInvertibleError("zero is not invertible")
        if self.is_lattice:
            if lam != 1.0:
                raise NotInvertibleError(f"{lam} has no multiplicative inverse in {self.value}")
            return a
        return np.divide(a, lam)


_ALIASES = {
    "max-times": Semiring.MAX_TIMES,
    "maxtimes": Semiring.MAX_TIMES,
    "max-plus": Semiring.MAX_TIMES,
    "nonnegative": Semiring.NONNEGATIVE,
    "max-min": Semiring.MAX_MIN,
    "maxmin": Semiring.MAX_MIN,
    "lukasiewicz": Semiring.LUKASIEWICZ,
    "łukasiewicz": Semiring.LUKASIEWICZ,
}


def as_semiring(sr) -> Semiring:
    if isinstance(sr, Semiring):
        return sr
    try:
        return _ALIASES[str(sr).strip().lower()]
    except KeyError:
        raise ValueError(
            f"unknown semiring {sr!r}; expected one of "
            + ", ".join(s.value for s in Semiring)
        ) from None


@dataclass(frozen=True)
class Scalar:
    """A number tagged with the semiring that interprets it."""

    value: float
    semiring: Semiring

    def __post_init__(self):
        sr = as_semiring(self.semiring)
        object.__setattr__(self, "semiring", sr)
        object.__setattr__(self, "value", float(sr.check(self.value)))

    def _same(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            return Scalar(other, self.semiring)
        if other.semiring is not self.semiring:
            raise ContextError(f"cannot mix {self.semiring.value} and {other.semiring.value}")
        return other

    def __add__(self, other):
        other = self._same(other)
        return Scalar(float(self.semiring.add(self.value, other.value)), self.semiring)

    def __mul__(self, other):
        other = self._same(other)
        return Scalar(float(self.semiring.mul(self.value, other.value)), self.semiring)

    __radd__ = __add__
    __rmul__ = __mul__

    def __le__(self, other):
        return bool(self.semiring.leq(self.value, self._same(other).value))

    def __lt__(self, other):
        other = self._same(other)
        return self.value < other.value

    def __ge__(self, other):
        return self._same(other) <= self

    def __gt__(self, other):
        return self._same(other) < self

    def __float__(self):
        return self.value


def sr_add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def sr_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def sr_try_div(a: Scalar, lam: Scalar) -> Scalar:
    """Quotient ``a / lam``; raises NotInvertibleError when `lam` has no inverse."""
    lam = a._same(lam)
    return Scalar(float(a.semiring.try_div(a.value, lam.value)), a.semiring)
