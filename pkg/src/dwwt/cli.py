"""Command-line front end.

Subcommands: wigner, lineop, line, radon, tomo, verify.  Exit codes are
fixed so the verify subcommand can drive CI:

    0 success, 1 usage error, 2 file parse error, 3 dimension error,
    4 non-Hermitian (or invalid density) input, 5 unknown basis label,
    6 verification failure.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .errors import (
    CompositeDimensionError,
    DimensionMismatchError,
    FileFormatError,
    InvalidDensityMatrixError,
    MixedParametersError,
    ModulusMismatchError,
    NonHermitianInputError,
    UnknownBasisError,
    UnsupportedDimensionError,
    ZeroInverseError,
)
from .io import (
    check_matrix_dim,
    read_matrix,
    read_record,
    write_csv,
    write_matrix,
)
from .linalg import hermiticity_residual, identity, max_abs, random_density_matrix, random_hermitian
from .lines import enumerate_lines, line_points, phase_param, phase_point
from .mub import all_basis_labels, basis_kets, parse_basis_label
from .schwinger import build_schwinger, commutation_residual
from .tomography import (
    check_density_matrix,
    reconstruct,
    sample_probs,
    simulate_probs,
    wigner_from_probs,
)
from .wigner import (
    inverse_wwt,
    line_operator_closed,
    line_operator_mub,
    line_operator_stack,
    overlap,
    parity_op,
    radon,
    wwt_mub,
    wwt_schwinger,
    wwt_trace,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_DIMENSION = 3
EXIT_NON_HERMITIAN = 4
EXIT_UNKNOWN_BASIS = 5
EXIT_VERIFY_FAILED = 6

HERMITIAN_INPUT_TOL = 1e-8
VERIFY_SEED = 987654321


class UsageError(Exception):
    """Bad flag combination or value, reported with exit code 1."""


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="dwwt",
        description="Discrete Weyl-Wigner transforms on odd-prime dimensions.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    def common(p, with_c=True):
        p.add_argument("--dim", type=int, required=True, help="Hilbert-space dimension (odd prime)")
        if with_c:
            p.add_argument("--c", required=True, help="family parameter, a rational like 0 or -1/2")

    w = sub.add_parser("wigner", help="transform a matrix file to a q,p,W table")
    common(w)
    w.add_argument("--state", required=True, help="MatrixFile path, or - for stdin")
    w.add_argument("--route", choices=["trace", "mub", "schwinger"], default="trace")
    w.add_argument("--out", default=None, help="output CSV path (default stdout)")

    lo = sub.add_parser("lineop", help="emit one line operator as a MatrixFile")
    common(lo)
    lo.add_argument("--q", type=int, required=True)
    lo.add_argument("--p", type=int, required=True)
    lo.add_argument("--construction", choices=["mub", "closed"], default="closed")

    ln = sub.add_parser("line", help="emit the b,m points of one line")
    common(ln)
    ln.add_argument("--q", type=int, required=True)
    ln.add_argument("--p", type=int, required=True)

    ra = sub.add_parser("radon", help="marginal distribution of a state in one basis")
    common(ra)
    ra.add_argument("--state", required=True, help="MatrixFile path, or - for stdin")
    ra.add_argument("--basis", required=True, help="basis label: ddot0 or a slope 0..N-1")

    to = sub.add_parser("tomo", help="reconstruct a density matrix from measurements")
    common(to)
    to.add_argument("--probs", default=None, help="RecordFile of per-basis probabilities")
    to.add_argument("--state", default=None, help="MatrixFile of the true state to measure")
    to.add_argument("--shots", type=int, default=None, help="samples per basis (omit for exact)")
    to.add_argument("--seed", type=int, default=0)

    ve = sub.add_parser("verify", help="run the identity checks and report PASS/FAIL")
    ve.add_argument("--dim", type=int, required=True)
    ve.add_argument("--c", default="-1/2")
    ve.add_argument("--deep", action="store_true", help="add the character-sum route and exhaustive geometry")

    return parser


def _load_hermitian(path: str, dim: int) -> np.ndarray:
    mat = check_matrix_dim(read_matrix(path), dim)
    residual = hermiticity_residual(mat)
    if residual > HERMITIAN_INPUT_TOL:
        raise NonHermitianInputError(
            f"input matrix has Hermiticity residual {residual:.3e}"
        )
    return mat


def cmd_wigner(args) -> int:
    c = phase_param(args.c, args.dim)
    mat = _load_hermitian(args.state, args.dim)
    route = {"trace": wwt_trace, "mub": wwt_mub, "schwinger": wwt_schwinger}[args.route]
    table = route(mat, c)
    rows = [
        (q, p, float(table.values[q, p]))
        for q in range(args.dim)
        for p in range(args.dim)
    ]
    if args.out is None:
        write_csv(sys.stdout, ("q", "p", "W"), rows)
    else:
        with open(args.out, "w", encoding="utf-8") as fp:
            write_csv(fp, ("q", "p", "W"), rows)
    return EXIT_OK


def cmd_lineop(args) -> int:
    c = phase_param(args.c, args.dim)
    point = phase_point(args.q, args.p, args.dim)
    build = {"mub": line_operator_mub, "closed": line_operator_closed}[args.construction]
    write_matrix(sys.stdout, build(point, c).matrix)
    return EXIT_OK


def cmd_line(args) -> int:
    c = phase_param(args.c, args.dim)
    line = line_points(phase_point(args.q, args.p, args.dim), c)
    rows = [
        (basis.text, line.value_at(basis).value)
        for basis in all_basis_labels(args.dim)
    ]
    write_csv(sys.stdout, ("b", "m"), rows)
    return EXIT_OK


def cmd_radon(args) -> int:
    c = phase_param(args.c, args.dim)
    basis = parse_basis_label(args.basis, args.dim)
    mat = _load_hermitian(args.state, args.dim)
    marginal = radon(wwt_trace(mat, c), basis)
    rows = [(m, float(marginal[m])) for m in range(args.dim)]
    write_csv(sys.stdout, ("m", "probability"), rows)
    return EXIT_OK


def cmd_tomo(args) -> int:
    c = phase_param(args.c, args.dim)
    if (args.probs is None) == (args.state is None):
        raise UsageError("exactly one of --probs or --state is required")
    if args.probs is not None:
        rec = read_record(args.probs)
        if rec.dim != args.dim:
            raise DimensionMismatchError(
                f"record is for dim {rec.dim}, expected {args.dim}"
            )
    else:
        rho = check_density_matrix(check_matrix_dim(read_matrix(args.state), args.dim))
        if args.shots is None:
            rec = simulate_probs(rho)
        else:
            if args.shots < 1:
                raise UsageError(f"--shots must be >= 1, got {args.shots}")
            rec = sample_probs(rho, shots=args.shots, seed=args.seed)
    matrix = reconstruct(rec, c)
    diagnostics = {
        "trace_re": float(np.trace(matrix).real),
        "trace_im": float(np.trace(matrix).imag),
        "hermiticity_residual": hermiticity_residual(matrix),
        "min_eigenvalue": float(np.linalg.eigvalsh((matrix + matrix.conj().T) / 2).min()),
    }
    write_matrix(sys.stdout, matrix, extra={"diagnostics": diagnostics})
    return EXIT_OK


def _verify_checks(dim: int, c, deep: bool):
    """Yield (name, residual, tolerance, note) tuples; note is None, or a skip reason."""
    rng = np.random.default_rng(VERIFY_SEED)
    stack = line_operator_stack(c)
    eye = identity(dim)

    flat = stack.reshape(dim * dim, dim * dim)
    gram = flat @ flat.conj().T / dim
    yield "orthogonality", max_abs(gram - identity(dim * dim)), 1e-9, None

    yield "closure", max_abs(stack.sum(axis=(0, 1)) / dim - eye), 1e-10, None

    residual = 0.0
    for q in range(dim):
        for p in range(dim):
            point = phase_point(q, p, dim)
            diff = line_operator_mub(point, c).matrix - line_operator_closed(point, c).matrix
            residual = max(residual, max_abs(diff))
    yield "construction-equivalence", residual, 1e-10, None

    yield "commutation", commutation_residual(build_schwinger(dim)), 1e-10, None

    yield "unit-operator", max_abs(wwt_trace(eye, c).values - 1.0), 1e-10, None

    rho = random_density_matrix(dim, rng)
    w_rho = wwt_trace(rho, c)
    yield "normalization", abs(w_rho.values.sum() / dim - 1.0), 1e-10, None

    a = random_hermitian(dim, rng)
    b = random_hermitian(dim, rng)
    wa, wb = wwt_trace(a, c), wwt_trace(b, c)
    yield "realness", max(wa.imag_residue, wb.imag_residue, w_rho.imag_residue), 1e-10, None

    yield "product-formula", abs(overlap(wa, wb) - np.trace(a @ b).real), 1e-9, None

    yield "round-trip", max_abs(inverse_wwt(wa) - a), 1e-9, None

    yield "mub-route", max_abs(wwt_mub(a, c).values - wa.values), 1e-9, None

    residual = 0.0
    for basis in all_basis_labels(dim):
        kets = basis_kets(basis)
        born = np.einsum("mi,ij,mj->m", kets.conj(), rho, kets).real
        residual = max(residual, float(np.abs(radon(w_rho, basis) - born).max()))
    yield "marginality", residual, 1e-9, None

    residual = 0.0
    for q in range(dim):
        for p in range(dim):
            pi = parity_op(phase_point(q, p, dim))
            residual = max(residual, max_abs(pi @ pi - eye))
    yield "parity-square", residual, 1e-10, None

    if (2 * c.residue + 1) % dim == 0:
        residual = 0.0
        for q in range(dim):
            for p in range(dim):
                point = phase_point(q, p, dim)
                residual = max(residual, max_abs(stack[q, p] - parity_op(point)))
        yield "parity-identification", residual, 1e-10, None
    else:
        yield "parity-identification", 0.0, 1e-10, "holds only at c = -1/2"

    if deep:
        yield "schwinger-route", max_abs(wwt_schwinger(a, c).values - wa.values), 1e-9, None

        lines = enumerate_lines(c, dim)
        worst = 0
        for i, l1 in enumerate(lines):
            for l2 in lines[i + 1 :]:
                shared = l1.point_set() & l2.point_set()
                worst = max(worst, abs(len(shared) - 1))
        yield "line-intersections", float(worst), 0.0, None

        counts = {}
        for line in lines:
            for item in line.point_set():
                counts[item] = counts.get(item, 0) + 1
        point_count_ok = len(counts) == dim * (dim + 1)
        incidence = max(abs(v - dim) for v in counts.values())
        if not point_count_ok:
            incidence = max(incidence, 1)
        yield "point-incidence", float(incidence), 0.0, None


def cmd_verify(args) -> int:
    c = phase_param(args.c, args.dim)
    failed = False
    for name, residual, tol, note in _verify_checks(args.dim, c, args.deep):
        if note is not None:
            print(f"{name:<26} SKIPPED ({note})")
            continue
        ok = residual <= tol
        failed = failed or not ok
        status = "PASS" if ok else "FAIL"
        print(f"{name:<26} {status}  max residual {residual:.3e} (tol {tol:.0e})")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


_HANDLERS = {
    "wigner": cmd_wigner,
    "lineop": cmd_lineop,
    "line": cmd_line,
    "radon": cmd_radon,
    "tomo": cmd_tomo,
    "verify": cmd_verify,
}


def _merge_c_values(argv: list[str]) -> list[str]:
    """Join '--c -1/2' into '--c=-1/2' so the dash is not read as a flag."""
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--c" and i + 1 < len(argv):
            out.append(f"--c={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_merge_c_values(list(argv)))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    handler = _HANDLERS[args.command]
    try:
        return handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FileFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (
        CompositeDimensionError,
        UnsupportedDimensionError,
        DimensionMismatchError,
        ModulusMismatchError,
        MixedParametersError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except (NonHermitianInputError, InvalidDensityMatrixError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NON_HERMITIAN
    except UnknownBasisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN_BASIS
    except (ZeroInverseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry_point() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    entry_point()
