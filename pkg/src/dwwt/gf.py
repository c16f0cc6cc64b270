"""Exact arithmetic in the prime field Mod[N] for odd primes N.

All phase-space indices, basis labels and the phase parameter live in this
field; the half-integer values needed for c = -1/2 embed via the inverse
of 2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CompositeDimensionError,
    ModulusMismatchError,
    UnsupportedDimensionError,
    ZeroInverseError,
)


def check_dimension(modulus: int) -> None:
    """Accept only odd primes; N = 2 is rejected outright."""
    if modulus == 2:
        raise UnsupportedDimensionError("dimension 2 is not supported")
    if modulus < 2:
        raise CompositeDimensionError(f"dimension {modulus} is not a prime")
    # trial division is plenty at these sizes
    for d in range(2, int(modulus**0.5) + 1):
        if modulus % d == 0:
            raise CompositeDimensionError(f"dimension {modulus} is not a prime")


@dataclass(frozen=True)
class GfElement:
    """Residue in the prime field Mod[modulus]."""

    value: int
    modulus: int

    def _check_partner(self, other: "GfElement") -> None:
        if self.modulus != other.modulus:
            raise ModulusMismatchError(
                f"cannot combine elements Mod[{self.modulus}] and Mod[{other.modulus}]"
            )

    def __add__(self, other: "GfElement") -> "GfElement":
        if not isinstance(other, GfElement):
            return NotImplemented
        self._check_partner(other)
        return GfElement((self.value + other.value) % self.modulus, self.modulus)

    def __sub__(self, other: "GfElement") -> "GfElement":
        if not isinstance(other, GfElement):
            return NotImplemented
        self._check_partner(other)
        return GfElement((self.value - other.value) % self.modulus, self.modulus)

    def __mul__(self, other: "GfElement") -> "GfElement":
        if not isinstance(other, GfElement):
            return NotImplemented
        self._check_partner(other)
        return GfElement((self.value * other.value) % self.modulus, self.modulus)

    def __neg__(self) -> "GfElement":
        return GfElement((-self.value) % self.modulus, self.modulus)

    def inverse(self) -> "GfElement":
        """Multiplicative inverse via Fermat's little theorem."""
        if self.value == 0:
            raise ZeroInverseError(f"0 has no inverse Mod[{self.modulus}]")
        return GfElement(pow(self.value, self.modulus - 2, self.modulus), self.modulus)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (Mod[{self.modulus}])"


def gf(value: int, modulus: int) -> GfElement:
    """Reduce an integer (possibly negative) into the field Mod[modulus]."""
    check_dimension(modulus)
    return GfElement(value % modulus, modulus)


def half(modulus: int) -> GfElement:
    """The field embedding of 1/2, i.e. the inverse of 2; equals (N+1)/2."""
    return gf(2, modulus).inverse()
