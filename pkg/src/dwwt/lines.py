"""Line geometry in the b-m plane for odd prime dimension.

A line attached to the phase-space point (q, p) and parameter c picks one
index per basis:

    m(b) = (-p + b(q + c)) Mod[N]   for the slope bases b = 0..N-1,
    m    = q                        for the reference basis.

There are N^2 such lines over N(N+1) points; two distinct lines always share
exactly one point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import IdenticalLinesError, MixedParametersError, ZeroInverseError
from .gf import GfElement, check_dimension, gf
from .mub import BasisLabel, all_basis_labels


@dataclass(frozen=True)
class PhaseParam:
    """The family parameter c embedded into the field Mod[N].

    Half-integers (and any rational with denominator coprime to N) embed via
    the modular inverse of the denominator, e.g. -1/2 -> (N-1)/2.  Equality
    and hashing use the embedded residue only; display keeps the rational
    form for reporting.
    """

    dim: int
    residue: int
    display: str = field(compare=False)

    def __post_init__(self):
        check_dimension(self.dim)
        if not 0 <= self.residue < self.dim:
            raise ValueError(f"residue {self.residue} out of range for dim {self.dim}")

    @property
    def as_gf(self) -> GfElement:
        return gf(self.residue, self.dim)

    def __repr__(self) -> str:
        return f"PhaseParam({self.display} -> {self.residue} Mod[{self.dim}])"


def phase_param(c, dim: int) -> PhaseParam:
    """Build a PhaseParam from an int, GfElement, Fraction, or text like '-1/2'."""
    check_dimension(dim)
    if isinstance(c, PhaseParam):
        if c.dim != dim:
            raise MixedParametersError(f"parameter is Mod[{c.dim}], expected Mod[{dim}]")
        return c
    if isinstance(c, GfElement):
        if c.modulus != dim:
            raise MixedParametersError(f"parameter is Mod[{c.modulus}], expected Mod[{dim}]")
        return PhaseParam(dim=dim, residue=c.value, display=str(c.value))
    frac = Fraction(c) if not isinstance(c, Fraction) else c
    if frac.denominator % dim == 0:
        raise ZeroInverseError(
            f"denominator {frac.denominator} is not invertible Mod[{dim}]"
        )
    inv_den = pow(frac.denominator, dim - 2, dim)
    residue = (frac.numerator * inv_den) % dim
    return PhaseParam(dim=dim, residue=residue, display=str(frac))


@dataclass(frozen=True)
class PhasePoint:
    q: GfElement
    p: GfElement

    def __post_init__(self):
        if self.q.modulus != self.p.modulus:
            raise MixedParametersError(
                f"coordinate moduli differ: {self.q.modulus} vs {self.p.modulus}"
            )

    @property
    def dim(self) -> int:
        return self.q.modulus

    def __repr__(self) -> str:
        return f"PhasePoint(q={self.q.value}, p={self.p.value}, dim={self.dim})"


def phase_point(q: int | GfElement, p: int | GfElement, dim: int) -> PhasePoint:
    if not isinstance(q, GfElement):
        q = gf(q, dim)
    if not isinstance(p, GfElement):
        p = gf(p, dim)
    return PhasePoint(q=q, p=p)


def line_value(point: PhasePoint, c: PhaseParam, basis: BasisLabel) -> GfElement:
    """The line's index m at one basis label."""
    if point.dim != c.dim or basis.dim != c.dim:
        raise MixedParametersError("point, parameter, and basis dimensions must agree")
    if basis.is_reference:
        return point.q
    return -point.p + basis.slope * (point.q + c.as_gf)


@dataclass(frozen=True)
class Line:
    """One line: the index it selects in each of the N+1 bases.

    Equality and hashing are structural over the value tuple; for a fixed
    dimension that coincides with equality of (q, p, c).
    """

    point: PhasePoint = field(compare=False)
    c: PhaseParam = field(compare=False)
    values: tuple[GfElement, ...]

    @property
    def dim(self) -> int:
        return self.point.dim

    def value_at(self, basis: BasisLabel) -> GfElement:
        if basis.dim != self.dim:
            raise MixedParametersError(f"basis is Mod[{basis.dim}], line is Mod[{self.dim}]")
        if basis.is_reference:
            return self.values[0]
        return self.values[1 + basis.slope.value]

    def mapping(self) -> dict[BasisLabel, GfElement]:
        """Reference label first, then slopes 0..N-1."""
        return dict(zip(all_basis_labels(self.dim), self.values))

    def point_set(self) -> frozenset[tuple[BasisLabel, GfElement]]:
        return frozenset(self.mapping().items())


def line_points(point: PhasePoint, c: PhaseParam) -> Line:
    values = tuple(line_value(point, c, basis) for basis in all_basis_labels(point.dim))
    return Line(point=point, c=c, values=values)


def line_intersection(l1: Line, l2: Line) -> tuple[BasisLabel, GfElement]:
    """The unique point shared by two distinct lines with the same (N, c)."""
    if l1.dim != l2.dim or l1.c != l2.c:
        raise MixedParametersError("lines carry different dimensions or parameters")
    q1, p1 = l1.point.q, l1.point.p
    q2, p2 = l2.point.q, l2.point.p
    if q1 == q2:
        if p1 == p2:
            raise IdenticalLinesError("a line has no single intersection with itself")
        return BasisLabel(dim=l1.dim), q1
    slope = (p1 - p2) * (q1 - q2).inverse()
    basis = BasisLabel(dim=l1.dim, slope=slope)
    return basis, l1.value_at(basis)


def enumerate_lines(c: PhaseParam, dim: int) -> list[Line]:
    """All N^2 lines, ordered by (q, p) ascending."""
    check_dimension(dim)
    if c.dim != dim:
        raise MixedParametersError(f"parameter is Mod[{c.dim}], expected Mod[{dim}]")
    return [
        line_points(phase_point(q, p, dim), c)
        for q in range(dim)
        for p in range(dim)
    ]
