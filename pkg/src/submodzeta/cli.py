"""Command-line surface: analyze a matrix, verify against the oracle, closed forms.

Subcommands
-----------
analyze MATRIX      elementary divisors, global zeta product, abscissa/pole
                    data, functional-equation exponents, pole-at-zero verdict
verify MATRIX       expand the local formula at chosen primes and compare
                    against brute-force sublattice counts
special ...         zpxn N | powerseries N | fe-check PARTS | w-identity

MATRIX is inline JSON ("[[0,1],[0,0]]" or {"n":2,"entries":[[0,1],[0,0]]}),
a path to a file holding the same, or "-" for standard input.

Flags may also be supplied through SUBMODZETA_-prefixed environment
variables (SUBMODZETA_FORMAT, _EDV, _PRIMES, _MAX_INDEX_EXP, _BUDGET,
_PRUNE); explicit flags win.

Exit codes: 0 success / all good primes match, 1 usage or input error,
2 verification mismatch at a heuristically good prime, 3 work budget
exceeded.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from dataclasses import dataclass

from .canonical import ElementaryDivisorVector, EdvContext, edv_context
from .linalg import IntMatrix, IntPoly
from .oracle import (
    DEFAULT_MAX_CANDIDATES,
    DEFAULT_MAX_N,
    BudgetError,
    compare,
)
from .partitions import Partition
from .polyfactor import DegreeCapError, splitting_profile
from .zetacore import (
    BinomialProduct,
    abscissa,
    functional_equation_data,
    generic_local_factor,
    global_formula,
    good_primes,
    has_simple_pole_at_zero,
    powerseries_ring_coeffs,
    verify_functional_equation,
    w_lambda,
    zpxn_zeta,
)

ENV_PREFIX = "SUBMODZETA_"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _env(name):
    return os.environ.get(ENV_PREFIX + name)


def _partition_text(lam: Partition) -> str:
    return "(" + ", ".join(str(x) for x in lam.parts) + ")"


def _binomial_latex(product: BinomialProduct) -> str:
    if not product.factors:
        return "1"
    pieces = []
    for a, b, e in product.factors:
        qpart = f"q^{{{a}}} " if a else ""
        pieces.append(rf"\left(1 - {qpart}t^{{{b}}}\right)^{{{e}}}")
    return "".join(pieces)


def _series_text(values, p) -> str:
    """Truncated Dirichlet series over one prime, as readable text."""
    terms = []
    for e, a in enumerate(values):
        if a == 0:
            continue
        if e == 0:
            terms.append(str(a))
        else:
            coeff = "" if a == 1 else f"{a}*"
            terms.append(f"{coeff}{p ** e}^-s")
    body = " + ".join(terms) if terms else "0"
    return f"{body} + O({p ** (len(values))}^-s)"


# ---------------------------------------------------------------------------
# input loading


def load_matrix(text: str) -> IntMatrix:
    if text == "-":
        raw = sys.stdin.read()
    elif os.path.exists(text):
        with open(text) as fh:
            raw = fh.read()
    else:
        raw = text
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"matrix is not valid JSON: {exc}") from exc
    try:
        if isinstance(data, dict):
            return IntMatrix.from_json(data)
        if isinstance(data, list) and data:
            return IntMatrix(data)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"invalid matrix: {exc}") from exc
    raise UsageError("matrix must be a non-empty list of rows or {n, entries}")


def load_edv(path: str) -> ElementaryDivisorVector:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read EDV file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"EDV file is not valid JSON: {exc}") from exc
    if isinstance(data, dict):
        data = data.get("edv")
        if data is None:
            raise UsageError('EDV document must hold an "edv" field')
    try:
        return ElementaryDivisorVector.from_json(data)
    except (ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"invalid EDV: {exc}") from exc


# ---------------------------------------------------------------------------
# analyze


@dataclass(frozen=True)
class AnalysisDocument:
    """Everything `analyze` reports, renderable as text, JSON, or LaTeX."""

    matrix: IntMatrix | None
    edv: ElementaryDivisorVector
    denominator_lcm: int
    alpha: int
    beta: int
    fe_prime: int
    fe_sign: int
    fe_q: int
    fe_s: int
    fe_verified: bool
    simple_pole_at_zero: bool

    @property
    def global_expr(self):
        from .zetacore import bad_prime_reasons

        return global_formula(
            self.edv, bad_prime_reasons(self.edv, self.denominator_lcm)
        )

    def to_json(self) -> dict:
        expr = self.global_expr
        return {
            "matrix": self.matrix.to_json() if self.matrix is not None else None,
            "edv": self.edv.to_json(),
            "denominator_lcm": self.denominator_lcm,
            "global_formula": {
                "text": expr.text(),
                "latex": expr.latex(),
                "dedekind_factors": expr.to_json()["dedekind_factors"],
            },
            "bad_primes": expr.to_json()["bad_primes"],
            "alpha": self.alpha,
            "beta": self.beta,
            "functional_equation": {
                "prime": self.fe_prime,
                "sign_exponent": self.fe_sign,
                "q_exponent": self.fe_q,
                "s_exponent": self.fe_s,
                "verified": self.fe_verified,
            },
            "simple_pole_at_zero": self.simple_pole_at_zero,
        }

    def text(self) -> str:
        expr = self.global_expr
        lines = []
        if self.matrix is not None:
            lines.append(f"matrix: {json.dumps([list(r) for r in self.matrix.entries])}")
        lines.append(f"n: {self.edv.n}")
        lines.append("elementary divisor vector:")
        for f, lam in self.edv.entries:
            lines.append(f"  {f} : {_partition_text(lam)}")
        lines.append(f"global zeta: {expr.text()}")
        if expr.bad_primes:
            for p, reasons in expr.bad_primes:
                lines.append(f"bad prime {p}: {'; '.join(reasons)}")
        else:
            lines.append("bad primes: none")
        lines.append(f"abscissa of convergence: {self.alpha}")
        lines.append(f"pole order at the abscissa: {self.beta}")
        verdict = "verified" if self.fe_verified else "FAILED"
        lines.append(
            f"functional equation at p={self.fe_prime}: "
            f"sign {self.fe_sign}, q-exponent {self.fe_q}, "
            f"s-exponent {self.fe_s} ({verdict})"
        )
        lines.append(
            "simple pole at zero: " + ("yes" if self.simple_pole_at_zero else "no")
        )
        return "\n".join(lines)

    def latex(self) -> str:
        expr = self.global_expr
        lines = [rf"\[ \zeta_A(s) = {expr.latex()} \]"]
        lines.append(
            rf"% alpha = {self.alpha}, beta = {self.beta}, "
            rf"simple pole at zero: {'yes' if self.simple_pole_at_zero else 'no'}"
        )
        if expr.bad_prime_set:
            bad = ", ".join(str(p) for p in sorted(expr.bad_prime_set))
            lines.append(rf"% bad primes: {bad}")
        return "\n".join(lines)


def build_analysis(matrix: IntMatrix | None, ctx: EdvContext) -> AnalysisDocument:
    edv = ctx.edv
    alpha, beta = abscissa(edv)
    p = next(good_primes(edv, ctx.denominator_lcm))
    profiles = [splitting_profile(f, p) for f, _ in edv.entries]
    data = functional_equation_data(edv, profiles)
    verified = verify_functional_equation(generic_local_factor(edv, p), data)
    return AnalysisDocument(
        matrix=matrix,
        edv=edv,
        denominator_lcm=ctx.denominator_lcm,
        alpha=alpha,
        beta=beta,
        fe_prime=p,
        fe_sign=data.sign_exponent,
        fe_q=data.q_exponent,
        fe_s=data.s_exponent,
        fe_verified=verified,
        simple_pole_at_zero=has_simple_pole_at_zero(edv),
    )


def cmd_analyze(args) -> int:
    if args.edv:
        ctx = EdvContext(load_edv(args.edv), 1)
        matrix = None
    else:
        if args.matrix is None:
            raise UsageError("analyze needs a matrix argument or --edv")
        matrix = load_matrix(args.matrix)
        ctx = edv_context(matrix)
    doc = build_analysis(matrix, ctx)
    if args.format == "json":
        print(json.dumps(doc.to_json(), indent=2))
    elif args.format == "latex":
        print(doc.latex())
    else:
        print(doc.text())
    return 0


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    if args.matrix is None:
        raise UsageError("verify needs a matrix argument")
    matrix = load_matrix(args.matrix)
    ctx = edv_context(matrix)
    if args.primes:
        primes = args.primes
    else:
        primes = list(itertools.islice(good_primes(ctx.edv, ctx.denominator_lcm), 3))
    reports = [
        compare(
            matrix,
            p,
            args.max_index_exp,
            max_n=args.max_n,
            max_candidates=args.budget,
            prune=args.prune,
        )
        for p in primes
    ]
    failed = [r for r in reports if r.demoted]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "reports": [r.to_json() for r in reports],
                    "all_good_primes_match": not failed,
                },
                indent=2,
            )
        )
    else:
        for r in reports:
            status = "good" if r.heuristically_good else "bad"
            lines = [f"p = {r.prime} ({status} prime, E = {r.max_exp})"]
            if r.formula_values is None:
                lines.append("  formula: none (ramified)")
            else:
                lines.append(f"  formula: {list(r.formula_values)}")
            lines.append(f"  oracle:  {list(r.oracle_values)}")
            if r.formula_values is None or r.mismatch_index is not None:
                lines.append(
                    f"  truncated local factor: {_series_text(r.oracle_values, r.prime)}"
                )
            if r.demoted:
                lines.append(
                    f"  MISMATCH at exponent {r.mismatch_index}: "
                    f"p = {r.prime} demoted to bad"
                )
            elif r.matches:
                lines.append("  match")
            print("\n".join(lines))
        print(
            "all good primes match"
            if not failed
            else f"{len(failed)} good prime(s) mismatched"
        )
    return 2 if failed else 0


# ---------------------------------------------------------------------------
# special closed forms


def _parse_partition(tokens) -> Partition:
    raw = " ".join(tokens).replace("(", " ").replace(")", " ").replace(",", " ")
    parts = [int(tok) for tok in raw.split()]
    if not parts:
        raise UsageError("empty partition")
    try:
        return Partition(parts)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _int_arg(value, what) -> int:
    if value is None:
        raise UsageError(f"{what} needs an integer argument")
    try:
        return int(value)
    except ValueError as exc:
        raise UsageError(f"{what}: {value!r} is not an integer") from exc


def cmd_special(args) -> int:
    if args.what == "zpxn":
        n = _int_arg(args.n, "zpxn")
        if n < 1:
            raise UsageError("zpxn needs a positive block size")
        product = zpxn_zeta(n)
        if args.format == "json":
            print(json.dumps({"n": n, "factors": product.to_json()}, indent=2))
        elif args.format == "latex":
            print(_binomial_latex(product))
        else:
            print(f"local zeta factor of the truncated polynomial ring, n = {n}:")
            print(f"  {product.text()}")
        return 0

    if args.what == "powerseries":
        n = _int_arg(args.n, "powerseries")
        if n < 1:
            raise UsageError("powerseries needs a positive coefficient count")
        coeffs = powerseries_ring_coeffs(n)
        if args.format == "json":
            print(json.dumps({"coefficients": coeffs}, indent=2))
        else:
            for m, a in enumerate(coeffs, start=1):
                print(f"{m}\t{a}")
        return 0

    if args.what == "fe-check":
        tokens = ([args.n] if args.n is not None else []) + list(args.parts)
        lam = _parse_partition(tokens)
        edv = ElementaryDivisorVector.from_pairs([(IntPoly((0, 1)), lam)])
        p = next(good_primes(edv))
        data = functional_equation_data(
            edv, [splitting_profile(f, p) for f, _ in edv.entries]
        )
        verified = verify_functional_equation(generic_local_factor(edv, p), data)
        payload = {
            "partition": list(lam.parts),
            "prime": p,
            "sign_exponent": data.sign_exponent,
            "q_exponent": data.q_exponent,
            "s_exponent": data.s_exponent,
            "verified": verified,
        }
        if args.format == "json":
            print(json.dumps(payload, indent=2))
        else:
            print(
                f"partition {_partition_text(lam)}: sign {data.sign_exponent}, "
                f"q-exponent {data.q_exponent}, s-exponent {data.s_exponent} "
                f"({'verified' if verified else 'FAILED'} at p={p})"
            )
        return 0 if verified else 2

    if args.what == "w-identity":
        left = w_lambda(Partition([2, 2, 1])) * w_lambda(Partition([3, 1]))
        right = w_lambda(Partition([2, 2])) * w_lambda(Partition([3, 1, 1]))
        equal = left == right
        if args.format == "json":
            print(
                json.dumps(
                    {
                        "left": left.to_json(),
                        "right": right.to_json(),
                        "equal": equal,
                    },
                    indent=2,
                )
            )
        else:
            print(f"w(2,2,1) * w(3,1)   = {left.text()}")
            print(f"w(2,2)   * w(3,1,1) = {right.text()}")
            print(f"equal: {'yes' if equal else 'no'}")
        return 0 if equal else 2

    raise UsageError(f"unknown special form {args.what!r}")


# ---------------------------------------------------------------------------
# argument plumbing


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="submodzeta",
        description="Submodule zeta functions of integer matrices, exactly.",
    )
    sub = parser.add_subparsers(dest="command")

    def add_format(p):
        p.add_argument(
            "--format",
            choices=["text", "json", "latex"],
            default=None,
            help="output rendering (default text; env SUBMODZETA_FORMAT)",
        )

    pa = sub.add_parser("analyze", help="symbolic analysis of one matrix")
    pa.add_argument("matrix", nargs="?", help="matrix JSON, file path, or -")
    pa.add_argument("--edv", default=None, help="EDV JSON file, bypasses factorization")
    add_format(pa)
    pa.set_defaults(func=cmd_analyze)

    pv = sub.add_parser("verify", help="compare the formula against brute force")
    pv.add_argument("matrix", nargs="?", help="matrix JSON, file path, or -")
    pv.add_argument("--primes", default=None, help="comma-separated primes")
    pv.add_argument(
        "--max-index-exp", type=int, default=None, help="largest tested exponent E"
    )
    pv.add_argument(
        "--budget", type=int, default=None, help="HNF candidate budget per prime"
    )
    pv.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="oracle size cap")
    pv.add_argument(
        "--prune",
        action="store_true",
        default=None,
        help="drop rejected candidates between substitution columns",
    )
    add_format(pv)
    pv.set_defaults(func=cmd_verify)

    ps = sub.add_parser("special", help="closed forms and identity checks")
    ps.add_argument(
        "what", choices=["zpxn", "powerseries", "fe-check", "w-identity"]
    )
    ps.add_argument("n", nargs="?", default=None, help="size argument")
    ps.add_argument("parts", nargs="*", help="partition parts for fe-check")
    add_format(ps)
    ps.set_defaults(func=cmd_special)

    return parser


def _apply_env(args) -> None:
    if args.format is None:
        env = _env("FORMAT")
        args.format = env if env in ("text", "json", "latex") else "text"
    if getattr(args, "edv", None) is None and args.command == "analyze":
        args.edv = _env("EDV")
    if args.command == "verify":
        if args.primes is None:
            args.primes = _env("PRIMES")
        if isinstance(args.primes, str):
            try:
                args.primes = [int(tok) for tok in args.primes.split(",") if tok.strip()]
            except ValueError as exc:
                raise UsageError(f"bad --primes list: {exc}") from exc
        if args.max_index_exp is None:
            env = _env("MAX_INDEX_EXP")
            args.max_index_exp = int(env) if env else 3
        if args.budget is None:
            env = _env("BUDGET")
            args.budget = int(env) if env else DEFAULT_MAX_CANDIDATES
        if args.prune is None:
            env = (_env("PRUNE") or "").lower()
            args.prune = env in ("1", "true", "yes", "on")


def main(argv=None) -> int:
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
        if getattr(args, "command", None) is None:
            raise UsageError("a subcommand is required (analyze, verify, special)")
        _apply_env(args)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except DegreeCapError as exc:
        print(
            f"error: {exc} — factor the matrix yourself and pass --edv",
            file=sys.stderr,
        )
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
