"""Line operators and the c-parametrized Weyl-Wigner transform.

A line operator attaches to each phase-space point (q, p) the Hermitian

    P_{q,p} = sum_b |m(b); b><m(b); b|  -  I,

summing one projector per basis along the line m(b).  Its matrix elements
collapse to the closed form

    <n|P|n'> = d(q,n) d(q,n') - d(n,n') d(n, q+c+1/2)
               + d(n+n', 2q+2c+1) omega^((n-n')p),

every delta comparing field elements Mod[N] (the half-integer combinations
embed through the inverse of 2).  The transform of an operator A is
W(q,p) = Tr(A P_{q,p}); the same table is reproduced by the clock/shift
character sum and by summing MUB expectation values along the line, and the
family is invertible, A = (1/N) sum W(q,p) P_{q,p}.

At c = -1/2 the line operator coincides with the displaced parity operator,
the structure that survives the continuum limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import MixedParametersError, NonHermitianInputError
from .gf import half
from .linalg import as_complex_matrix, omega_powers
from .lines import PhaseParam, PhasePoint, line_points, line_value, phase_point
from .mub import BasisLabel, all_basis_labels, basis_kets, xz_basis
from .schwinger import build_schwinger, op_power

REAL_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class LineOperator:
    point: PhasePoint
    c: PhaseParam
    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return self.point.dim


def _check_params(point: PhasePoint, c: PhaseParam) -> None:
    if point.dim != c.dim:
        raise MixedParametersError(
            f"point is Mod[{point.dim}], parameter is Mod[{c.dim}]"
        )


def line_operator_mub(point: PhasePoint, c: PhaseParam) -> LineOperator:
    """Projector-sum construction: one basis state per line point, minus I."""
    _check_params(point, c)
    dim = point.dim
    line = line_points(point, c)
    mat = -np.eye(dim, dtype=complex)
    for basis in all_basis_labels(dim):
        ket = basis_kets(basis)[line.value_at(basis).value]
        mat += np.outer(ket, ket.conj())
    mat.setflags(write=False)
    return LineOperator(point=point, c=c, matrix=mat)


def line_operator_closed(point: PhasePoint, c: PhaseParam) -> LineOperator:
    """Entrywise construction from the closed-form matrix elements."""
    _check_params(point, c)
    dim = point.dim
    q, p = point.q.value, point.p.value
    h = half(dim).value
    cancel = (q + c.residue + h) % dim
    anti = (2 * q + 2 * c.residue + 1) % dim
    table = omega_powers(dim)
    mat = np.zeros((dim, dim), dtype=complex)
    for n in range(dim):
        for n2 in range(dim):
            val = 0j
            if n == q and n2 == q:
                val += 1
            if n == n2 == cancel:
                val -= 1
            if (n + n2) % dim == anti:
                val += table[((n - n2) * p) % dim]
            mat[n, n2] = val
    mat.setflags(write=False)
    return LineOperator(point=point, c=c, matrix=mat)


@lru_cache(maxsize=None)
def line_operator_stack(c: PhaseParam) -> np.ndarray:
    """All N^2 line-operator matrices as a read-only (N, N, N, N) array, indexed [q, p]."""
    dim = c.dim
    out = np.empty((dim, dim, dim, dim), dtype=complex)
    for q in range(dim):
        for p in range(dim):
            out[q, p] = line_operator_closed(phase_point(q, p, dim), c).matrix
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class WignerTable:
    """Real transform values on the (q, p) grid, row q, column p."""

    dim: int
    c: PhaseParam
    values: np.ndarray
    imag_residue: float = 0.0


def _project_real(c: PhaseParam, raw: np.ndarray) -> WignerTable:
    residue = float(np.abs(raw.imag).max())
    if residue > REAL_TOL:
        raise NonHermitianInputError(
            f"transform has imaginary residue {residue:.3e}; "
            "real values exist for Hermitian operators only"
        )
    vals = raw.real.copy()
    vals.setflags(write=False)
    return WignerTable(dim=c.dim, c=c, values=vals, imag_residue=residue)


def wwt_trace(a, c: PhaseParam) -> WignerTable:
    """W(q,p) = Tr(A P_{q,p}), the canonical route."""
    mat = as_complex_matrix(a, c.dim)
    raw = np.einsum("ij,qpji->qp", mat, line_operator_stack(c))
    return _project_real(c, raw)


def wwt_mub(a, c: PhaseParam) -> WignerTable:
    """W(q,p) = sum_b <m(b);b|A|m(b);b> - Tr(A), the basis-expectation route."""
    mat = as_complex_matrix(a, c.dim)
    dim = c.dim
    tr = np.trace(mat)
    expect = {}
    for basis in all_basis_labels(dim):
        kets = basis_kets(basis)
        expect[basis] = np.einsum("mi,ij,mj->m", kets.conj(), mat, kets)
    raw = np.full((dim, dim), -tr, dtype=complex)
    for q in range(dim):
        for p in range(dim):
            point = phase_point(q, p, dim)
            for basis in all_basis_labels(dim):
                m = line_value(point, c, basis).value
                raw[q, p] += expect[basis][m]
    return _project_real(c, raw)


def wwt_schwinger(a, c: PhaseParam) -> WignerTable:
    """The defining character sum over clock/shift powers (verification route).

    W(q,p) = (1/N) [ sum_{b, k>=1} Tr(A ((X Z^b)^k)^dag) omega^(k m(b))
                     + sum_k Tr(A (Z^k)^dag) omega^(k q) ],
    with m(b) = (-p + b(q+c)) Mod[N].
    """
    mat = as_complex_matrix(a, c.dim)
    dim = c.dim
    pair = build_schwinger(dim)
    table = omega_powers(dim)

    shift_traces = np.empty((dim, dim), dtype=complex)
    for b in range(dim):
        xzb = pair.X @ op_power(pair.Z, b)
        for k in range(1, dim):
            shift_traces[b, k] = np.trace(mat @ op_power(xzb, k).conj().T)
    clock_traces = np.array(
        [np.trace(mat @ op_power(pair.Z, k).conj().T) for k in range(dim)]
    )

    raw = np.empty((dim, dim), dtype=complex)
    for q in range(dim):
        ref_sum = sum(clock_traces[k] * table[(k * q) % dim] for k in range(dim))
        for p in range(dim):
            acc = ref_sum
            for b in range(dim):
                m = (-p + b * (q + c.residue)) % dim
                for k in range(1, dim):
                    acc += shift_traces[b, k] * table[(k * m) % dim]
            raw[q, p] = acc / dim
    return _project_real(c, raw)


def inverse_wwt(w: WignerTable) -> np.ndarray:
    """A = (1/N) sum_{q,p} W(q,p) P_{q,p}."""
    return np.einsum("qp,qpij->ij", w.values, line_operator_stack(w.c)) / w.dim


def overlap(wa: WignerTable, wb: WignerTable) -> float:
    """(1/N) sum W_A W_B, which equals Tr(A B) for Hermitian sources."""
    if wa.dim != wb.dim or wa.c != wb.c:
        raise MixedParametersError("tables carry different dimensions or parameters")
    return float((wa.values * wb.values).sum() / wa.dim)


def radon(w: WignerTable, basis: BasisLabel) -> np.ndarray:
    """out[m] = (1/N) sum over the line m(b) = m; the Born probabilities for wwt(rho)."""
    if basis.dim != w.dim:
        raise MixedParametersError(f"basis is Mod[{basis.dim}], table is Mod[{w.dim}]")
    dim = w.dim
    q_grid, p_grid = np.meshgrid(np.arange(dim), np.arange(dim), indexing="ij")
    if basis.is_reference:
        m_grid = q_grid
    else:
        b = basis.slope.value
        m_grid = (-p_grid + b * (q_grid + w.c.residue)) % dim
    out = np.zeros(dim)
    for m in range(dim):
        out[m] = w.values[m_grid == m].sum() / dim
    return out


def parity_op(point: PhasePoint) -> np.ndarray:
    """Displaced parity X^q Z^p P_00 Z^(-p) X^(-q); squares to the identity."""
    dim = point.dim
    pair = build_schwinger(dim)
    p00 = np.zeros((dim, dim), dtype=complex)
    for n in range(dim):
        p00[n, (-n) % dim] = 1.0
    xq = op_power(pair.X, point.q.value)
    zp = op_power(pair.Z, point.p.value)
    return xq @ zp @ p00 @ zp.conj().T @ xq.conj().T


def amputated_term(point: PhasePoint, c: PhaseParam, slope: int, n: int, n2: int) -> complex:
    """One basis-b contribution to the off-diagonal amputated matrix element.

    The amputated operator drops the reference-basis projector; its (n, n')
    element collects (1/N) omega^((n-n')[(b/2)(n+n'-1) - m(b)]) over b.
    """
    _check_params(point, c)
    dim = point.dim
    h = half(dim).value
    m = line_value(point, c, xz_basis(dim, slope)).value
    exponent = ((n - n2) * (slope * h * (n + n2 - 1) - m)) % dim
    return complex(omega_powers(dim)[exponent] / dim)


def coherence_sum(point: PhasePoint, c: PhaseParam, n: int, n2: int) -> complex:
    """Sum of amputated terms over all slopes.

    Vanishes unless n + n' = 2q + 2c + 1 Mod[N]; on that secondary diagonal
    the N terms are equal and total omega^((n-n')p).
    """
    return sum(amputated_term(point, c, b, n, n2) for b in range(point.dim))
