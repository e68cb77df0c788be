"""The exponent pair (p, q) and the function-family enumeration."""

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError


class FnKind(Enum):
    """The six two-parameter functions and their inverses."""

    SIN = "sin"
    COS = "cos"
    SINH = "sinh"
    COSH = "cosh"
    TAM = "tam"
    TAMH = "tamh"
    ARCSIN = "arcsin"
    ARCCOS = "arccos"
    ARCSINH = "arcsinh"
    ARCCOSH = "arccosh"
    ARCTAM = "arctam"
    ARCTAMH = "arctamh"

    @property
    def is_inverse(self) -> bool:
        return self.value.startswith("arc")

    @property
    def inverse(self) -> "FnKind":
        """The arc-counterpart of a direct kind (identity on arc-kinds)."""
        if self.is_inverse:
            return self
        return FnKind("arc" + self.value)

    @property
    def direct(self) -> "FnKind":
        """The direct counterpart of an arc-kind (identity on direct kinds)."""
        if self.is_inverse:
            return FnKind(self.value[3:])
        return self


@dataclass(frozen=True)
class Params:
    """Exponent pair with its derived conjugate and connection exponents."""

    p: float
    q: float

    def __post_init__(self):
        if not (math.isfinite(self.p) and self.p > 1.0):
            raise DomainError(f"p must be a finite real > 1, got {self.p}")
        if not (math.isfinite(self.q) and self.q > 1.0):
            raise DomainError(f"q must be a finite real > 1, got {self.q}")

    @property
    def p_conj(self) -> float:
        """Conjugate exponent p/(p-1), so that 1/p + 1/p_conj = 1."""
        return self.p / (self.p - 1.0)

    @property
    def r(self) -> float:
        """Connection exponent pq/(pq + p - q); exceeds 1 exactly when p < q."""
        return self.p * self.q / (self.p * self.q + self.p - self.q)


@dataclass(frozen=True)
class PrincipalDomain:
    """Half-open or closed interval on which a kind is primarily defined."""

    lower: float
    upper: float
    description: str

    def __post_init__(self):
        if not self.lower < self.upper:
            raise DomainError("principal domain must have lower < upper")
