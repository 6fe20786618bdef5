"""Coefficient fields for the brute-force oracle."""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import isqrt

from ..errors import ParameterError

DEFAULT_PRIME = 1_000_003
SECOND_PRIME = 65_537
# entries are kept in [0, p) in int64; products must not overflow
MAX_PRIME = 2**31 - 1


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % q for q in range(3, isqrt(p) + 1, 2))


@dataclass(frozen=True)
class FieldSpec:
    """Either ``GF(p)`` for a prime ``p`` or the rationals (``p is None``)."""

    p: int | None = DEFAULT_PRIME

    def __post_init__(self) -> None:
        if self.p is None:
            return
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ParameterError(f"field characteristic must be prime, got {self.p!r}")
        if self.p > MAX_PRIME:
            raise ParameterError(f"prime {self.p} exceeds the supported maximum {MAX_PRIME}")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def default(cls) -> "FieldSpec":
        """``GF(p)`` with ``p`` from ``DRLAB_PRIME`` or the built-in default."""
        raw = os.environ.get("DRLAB_PRIME")
        if raw is None or not raw.strip():
            return cls(DEFAULT_PRIME)
        try:
            value = int(raw)
        except ValueError:
            raise ParameterError(f"DRLAB_PRIME is not an integer: {raw!r}") from None
        return cls(value)

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def companion(self) -> "FieldSpec":
        """A second prime field, distinct from this one, for cross-checks."""
        return FieldSpec(DEFAULT_PRIME if self.p == SECOND_PRIME else SECOND_PRIME)

    def require_large(self, *bounds: int) -> None:
        if self.p is not None and self.p <= max(bounds):
            raise ParameterError(
                f"characteristic {self.p} must exceed max{bounds} = {max(bounds)}"
            )

    def __str__(self) -> str:
        return "QQ" if self.p is None else f"GF({self.p})"
