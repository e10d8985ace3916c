"""``galsca`` command line.

Exit codes: 0 success, 1 invalid flags or input, 2 calibration failed,
3 divergent bracket, 4 verification failed, 5 search space too large.
Documents go to stdout unless --out is given; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
from fractions import Fraction
from typing import List, Optional

from . import io
from .core import count_jacobi_violations, verify_graded_jacobi

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CALIBRATION = 2
EXIT_DIVERGENT = 3
EXIT_VERIFY = 4
EXIT_SPACE = 5

log = logging.getLogger("galsca")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let weight values such as -3/2 through as arguments, not options
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _half(s: str) -> Fraction:
    try:
        v = Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a number: {s!r}")
    if (2 * v).denominator != 1:
        raise UsageError(f"{s!r} is not a half-integer")
    return v


# -- build -----------------------------------------------------------------------------------

def cmd_build(args) -> int:
    from .builder import CalibrationFailed, build_su22n_with_report
    if args.n < 2 or args.n % 2:
        raise UsageError(f"--n must be even and >= 2 (got {args.n}); the supercharge "
                         "projection needs a symplectic form, which exists only for N = 2k")
    try:
        alg, rep = build_su22n_with_report(args.n)
    except CalibrationFailed as e:
        print(f"calibration failed: {e}", file=sys.stderr)
        return EXIT_CALIBRATION
    summary = rep.summary()
    log.info("built su(2,2|%d): %d even + %d odd generators, %d Jacobi violations",
             args.n, summary["even"], summary["odd"], summary["jacobi_violations"])
    _emit(io.dumps(io.algebra_to_dict(alg, {"build": summary})), args.out)
    return EXIT_OK


# -- contract --------------------------------------------------------------------------------

def _load_weights(spec: str, alg, N: int):
    from .contraction import WeightAssignment, family_of, rename, standard_weights
    if spec == "standard":
        return standard_weights(N)
    if spec == "zero":
        return WeightAssignment.of({family_of(rename(g)[0]): 0 for g in alg.basis})
    with open(spec, encoding="utf-8") as fh:
        return io.weights_from_dict(io.loads(fh.read()))


def cmd_contract(args) -> int:
    from .contraction import analyse, contract, rescale
    from .core import compute_center
    from .projection import project_and_split, supercharge_count
    alg = _read(args.input)
    N = supercharge_count(alg)
    if any(g.kind in ("Q", "S") for g in alg.basis) and N % 2 == 0 and N > 0:
        log.info("projecting supercharges and splitting u(%d)", N)
        alg = project_and_split(alg)[0]
    if args.weights == "standard" and (N == 0 or N % 2):
        raise UsageError("standard weights need an even number of supercharge families")
    try:
        w = _load_weights(args.weights, alg, N)
    except OSError as e:
        raise UsageError(f"cannot read weights: {e}")
    try:
        r = rescale(alg, w)
    except KeyError as e:
        raise UsageError(str(e))
    rep = analyse(r)
    if rep.diverging:
        print(f"divergent brackets ({len(rep.diverging)}):", file=sys.stderr)
        for x, y, d in rep.diverging:
            print(f"  [{x}, {y}] grows like u^{d}", file=sys.stderr)
        return EXIT_DIVERGENT
    out = contract(r)
    rep.jacobi_violations = count_jacobi_violations(out)
    if args.center:
        rep.center_dim = len(compute_center(out))
    log.info("contracted: %d surviving, %d vanished entries, %d Jacobi violations",
             len(rep.surviving), len(rep.vanished), rep.jacobi_violations)
    _emit(io.dumps(io.algebra_to_dict(out, {"contraction": io.contraction_report_to_dict(rep),
                                            "weights": {k: str(v) for k, v in w.weights}})), args.out)
    return EXIT_OK if rep.jacobi_violations == 0 else EXIT_VERIFY


# -- verify -----------------------------------------------------------------------------------

def cmd_verify(args) -> int:
    from .contraction import verify_target
    from .projection import supercharge_count
    alg = _read(args.input)
    viol = verify_graded_jacobi(alg)
    ok = not viol
    print(f"graded Jacobi identity: {'pass' if ok else 'FAIL'} ({len(viol)} violations)")
    for v in viol[:20]:
        x, y, z = v.triple
        print(f"  ({x}, {y}, {z}) -> {v.residual}")
    items = []
    if args.target == "galilean-sc":
        if alg.domain != "constant":
            raise UsageError("target verification needs a constant-domain (contracted) algebra")
        N = supercharge_count(alg)
        if N == 0 or N % 2:
            raise UsageError(f"target verification needs N = 2k supercharge families, found N = {N}")
        items = verify_target(alg, N, literal=args.literal)
        for it in items:
            ok = ok and it.passed
            print(f"({it.key}) {it.label}: {'pass' if it.passed else 'FAIL'}")
            for d in it.details:
                print(f"    {d}")
            if args.verbose:
                for d in it.info:
                    print(f"    note: {d}")
    if args.out:
        _emit(io.dumps(io.checklist_to_dict(items, len(viol))), args.out)
    return EXIT_OK if ok else EXIT_VERIFY


# -- search ------------------------------------------------------------------------------------

def cmd_search(args) -> int:
    from .search import SearchSpec, SpaceTooLarge, scan_weights
    pins = {}
    for p in args.pin or []:
        if "=" not in p:
            raise UsageError(f"--pin expects FAMILY=VALUE, got {p!r}")
        k, v = p.split("=", 1)
        pins[k] = _half(v)
    try:
        spec = SearchSpec.make(args.n, _half(args.lo), _half(args.hi), _half(args.step), pins,
                               symmetric=not args.no_symmetry, cap=args.cap)
    except ValueError as e:
        raise UsageError(str(e))
    try:
        res = scan_weights(spec)
    except SpaceTooLarge as e:
        print(f"search space too large: {e}", file=sys.stderr)
        return EXIT_SPACE
    print(f"scan of {res.naive_size} assignments finished in {res.elapsed:.1f}s: "
          f"{len(res.admissible)} admissible", file=sys.stderr)
    _emit(io.dumps(io.search_result_to_dict(res)), args.out)
    return EXIT_OK


# -- plumbing ------------------------------------------------------------------------------------

def _read(path: str):
    try:
        if path == "-":
            return io.algebra_from_dict(io.loads(sys.stdin.read()))
        return io.read_algebra(path)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}")
    except ValueError as e:
        raise UsageError(f"{path}: {e}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS,
                        help="log progress to stderr")
    p = _Parser(prog="galsca", description="Exact su(2,2|N) tables and their Galilean contraction.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", parents=[common], help="build the su(2,2|N) bracket table")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--out")
    b.set_defaults(func=cmd_build)

    c = sub.add_parser("contract", parents=[common], help="rescale and take c -> infinity")
    c.add_argument("input", help="algebra document, or - for stdin")
    c.add_argument("--weights", default="standard", help="standard, zero, or a weights JSON file")
    c.add_argument("--center", action="store_true", help="also compute the center dimension")
    c.add_argument("--out")
    c.set_defaults(func=cmd_contract)

    v = sub.add_parser("verify", parents=[common], help="Jacobi identity and Galilean superconformal checklist")
    v.add_argument("input")
    v.add_argument("--target", choices=("galilean-sc", "jacobi-only"), default="galilean-sc")
    v.add_argument("--literal", action="store_true",
                   help="enforce the printed relations verbatim instead of the consistent reading")
    v.add_argument("--out", help="also write the checklist as JSON")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", parents=[common], help="scan half-integer contraction weights")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--lo", default="-2")
    s.add_argument("--hi", default="2")
    s.add_argument("--step", default="1/2")
    s.add_argument("--cap", type=int, default=10 ** 7)
    s.add_argument("--pin", action="append", metavar="FAMILY=VALUE")
    s.add_argument("--no-symmetry", action="store_true", help="one weight per generator")
    s.add_argument("--out")
    s.set_defaults(func=cmd_search)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"galsca {args.command}: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
