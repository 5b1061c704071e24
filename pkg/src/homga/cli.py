"""Command-line driver.

Exit codes: 0 when every check passes, 1 when a mathematical violation is
found, 2 for input errors (unreadable files, bad shapes, unknown names).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import algfile
from . import fixtures as fx
from . import harness
from . import homassoc as ha
from . import homdialg as hd
from . import trees as tr
from .cohomology import EmbeddedComplex, complex_for
from .exactlin import format_rational

TREE_CAP = 8
EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load(target: str):
    """A file path, or the name of a shipped example."""
    path = Path(target)
    if path.exists() or target.endswith(".json") or "/" in target:
        try:
            return algfile.load(path)
        except algfile.AlgebraFileError as exc:
            raise InputError(f"{target}: {exc}") from None
    try:
        return fx.fixture(target)
    except KeyError:
        raise InputError(f"{target}: no such file or shipped example") from None


def _emit(rows, fmt: str, out):
    for row in rows:
        if fmt == "tsv":
            out.write("\t".join(str(x) for x in row) + "\n")
        else:
            out.write("  ".join(str(x) for x in row).rstrip() + "\n")


def _vec(v) -> str:
    return "(" + ", ".join(format_rational(x) for x in v) + ")"


# ---------------------------------------------------------------------------
# validate


def cmd_validate(args, out) -> int:
    A = _load(args.path)
    if isinstance(A, ha.HomAssociativeAlgebra):
        report = ha.validate_hom_algebra(A)
        axioms = ["multiplicativity", "hom-associativity"]
    else:
        report = hd.validate_hom_dialgebra(A)
        axioms = ["multiplicativity(-|)", "multiplicativity(|-)",
                  "a(a)-|(b-|c) = (a-|b)-|a(c)", "(a-|b)-|a(c) = a(a)-|(b|-c)",
                  "(a|-b)-|a(c) = a(a)|-(b-|c)", "(a-|b)|-a(c) = a(a)|-(b|-c)",
                  "a(a)|-(b|-c) = (a|-b)|-a(c)"]
    rows = []
    for axiom in axioms:
        bad = [v for v in report if v.identity == axiom]
        if not bad:
            rows.append(("PASS", axiom, ""))
            continue
        v = bad[0]
        basis = "(" + ",".join(f"e{i + 1}" for i in v.basis) + ")"
        rows.append(("FAIL", axiom, f"{len(bad)} violation(s); first at {basis}: lhs={_vec(v.lhs)} rhs={_vec(v.rhs)}"))
    _emit(rows, args.format, out)
    verdict = "valid" if not report else "invalid"
    _emit([("summary", A.name or args.path, verdict)], args.format, out)
    return EXIT_OK if not report else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# cohomology


def _describe(f) -> list[str]:
    """Nonzero values of a cochain on basis tuples, one-based."""
    lines = []
    parts = [(None, f.coeffs)] if isinstance(f, ha.Cochain) else [
        (y, c) for y, c in zip(tr.enumerate_trees(f.degree), f.components)]
    for y, t in parts:
        for idx in np.ndindex(t.shape[:-1]):
            fiber = t[idx]
            if not any(fiber):
                continue
            args = ",".join(f"e{i + 1}" for i in idx)
            terms = " + ".join(f"{format_rational(c)}*e{k + 1}" for k, c in enumerate(fiber) if c)
            prefix = f"{y!r} " if y is not None else ""
            lines.append(f"{prefix}f({args}) = {terms}")
    return lines


def _table(cx, top: int, label: str, fmt: str, out, representatives: bool):
    z1 = cx.cocycle_dimension(1)
    rows = [(f"{label}.Z^1", "dimC=" + str(cx.dimension(1)), "rank=" + str(cx.delta_rank(1)), "dimZ^1=" + str(z1))]
    _emit(rows, fmt, out)
    _emit([("n", "dim C^n", "rank delta^n", f"dim {label}^n")], fmt, out)
    for n in range(2, top + 1):
        _emit([(n, cx.dimension(n), cx.delta_rank(n), cx.cohomology_dimension(n))], fmt, out)
        if representatives:
            for k, cls in enumerate(cx.cohomology_basis(n)):
                out.write(f"# {label}^{n} class {k + 1}\n")
                for line in _describe(cls.representative):
                    out.write(f"#   {line}\n")


def cmd_cohomology(args, out) -> int:
    A = _load(args.path)
    try:
        cx = complex_for(A)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    dialg = isinstance(A, hd.HomDialgebra)
    top = args.max_degree or (3 if dialg else 4)
    label = "HY" if dialg else "H"
    out.write(f"# {label}^n_alpha({A.name or args.path}), 2 <= n <= {top}\n")
    _table(cx, top, label, args.format, out, args.representatives)
    if dialg and np.array_equal(A.dashv, A.vdash):
        base = ha.HomAssociativeAlgebra(A.dashv, A.alpha, A.name)
        out.write("# constant-in-tree subcomplex\n")
        _table(EmbeddedComplex(base), top, "HYc", args.format, out, False)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _config(args) -> harness.TrialConfig:
    defaults = harness.TrialConfig()
    return harness.TrialConfig(
        seed=args.seed if args.seed is not None else defaults.seed,
        trials=args.trials if args.trials is not None else defaults.trials,
        max_degree=args.max_degree or defaults.max_degree,
    )


def cmd_verify(args, out) -> int:
    cfg = _config(args)
    name = args.identity
    if name != "all" and name not in harness.BY_NAME:
        raise InputError(f"unknown identity {name!r}; choose from all, {', '.join(harness.NAMES)}")
    algebra = _load(args.path) if args.path else None
    if algebra is not None and name != "all":
        verdicts = harness.check_identity(name, cfg, algebra)
        report = harness.SuiteReport(verdicts)
    else:
        report = harness.run_suite(cfg, None if name == "all" else [name], algebra)
    for line in report.lines(args.format):
        out.write(line + "\n")
    return EXIT_OK if not report.failures else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# trees


def _shape(text: str) -> tuple[int, ...]:
    try:
        ns = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"shape {text!r} is not a comma-separated list of integers") from None
    if not ns or any(n < 1 for n in ns):
        raise InputError(f"shape {text!r} needs positive entries")
    return ns


def cmd_trees(args, out) -> int:
    n = args.n
    if not 0 <= n <= TREE_CAP:
        raise InputError(f"n = {n} outside 0..{TREE_CAP}")
    r0_shape = _shape(args.r0) if args.r0 else None
    ri_shape = _shape(args.ri) if args.ri else None
    for shape in filter(None, (r0_shape, ri_shape)):
        if sum(shape) != n:
            raise InputError(f"shape {','.join(map(str, shape))} sums to {sum(shape)}, not {n}")
    ys = tr.enumerate_trees(n)
    fmt = args.format
    _emit([("count", len(ys))], fmt, out)
    for k, y in enumerate(ys):
        row = [k, repr(y)]
        if args.faces and n >= 1:
            row.append("faces " + " ".join(f"d{i}={tr.face(y, i)!r}" for i in range(n + 1)))
        if args.bullets and n >= 1:
            row.append("bullets " + " ".join(f"{i}:{tr.bullet(y, i)}" for i in range(n + 1)))
        if r0_shape:
            row.append(f"R0={tr.r0(len(r0_shape), r0_shape, y)!r}")
        if ri_shape:
            k_ = len(ri_shape)
            row.append(" ".join(f"R{i}={tr.ri(k_, ri_shape, i, y)!r}" for i in range(1, k_ + 1)))
        _emit([row], fmt, out)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--trials", type=int, default=None)
    common.add_argument("--max-degree", type=int, default=None)
    common.add_argument("--format", choices=("text", "tsv"), default="text")

    p = argparse.ArgumentParser(prog="homga", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", parents=[common], help="check the axioms of an algebra file")
    v.add_argument("path", help="algebra file or shipped example name")
    v.set_defaults(func=cmd_validate)

    c = sub.add_parser("cohomology", parents=[common], help="cohomology dimensions")
    c.add_argument("path")
    c.add_argument("--representatives", action="store_true", help="print a cocycle per class")
    c.set_defaults(func=cmd_cohomology)

    r = sub.add_parser("verify", parents=[common], help="run the identity catalogue")
    r.add_argument("path", nargs="?", help="algebra file or shipped example; default: all fixtures")
    r.add_argument("--identity", default="all")
    r.set_defaults(func=cmd_verify)

    t = sub.add_parser("trees", parents=[common], help="planar binary trees with n vertices")
    t.add_argument("n", type=int)
    t.add_argument("--labels", action="store_true", help="word labels (always shown)")
    t.add_argument("--faces", action="store_true")
    t.add_argument("--bullets", action="store_true")
    t.add_argument("--r0", metavar="SHAPE", help="e.g. 1,2 for R_0 with (n_1, n_2) = (1, 2)")
    t.add_argument("--ri", metavar="SHAPE", help="all R_i for the given shape")
    t.set_defaults(func=cmd_trees)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.trials is not None and args.trials < 0:
        print("error: --trials must be non-negative", file=sys.stderr)
        return EXIT_INPUT
    if args.max_degree is not None and args.max_degree < 1:
        print("error: --max-degree must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
