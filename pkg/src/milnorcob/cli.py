"""Command-line front end.

Exit codes: 0 success / proven, 1 verification failure, 2 invalid input,
3 inconclusive.  JSON goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .criteria import (
    SearchPolicy,
    build_linind_family,
    first_subsets,
    is_nonbounding,
    linind_homs,
    test_indecomposable,
    verify_linear_independence,
)
from .linratfun import lagrange_ii, lagrange_p, lagrange_q
from .gf2poly import PolyContext
from .milnor import InvalidAction, MilnorAction, eta_closed_formula, eta_fixed_point_sum
from .repring import GroupHom, EmptyCharacter
from .serialize import certificate_doc, certify_doc, class_doc
from .tomdieck import check_integrality

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INVALID = 2
EXIT_INCONCLUSIVE = 3

MAX_RANK = 6
MAX_K = 64
WEIGHT_SLACK = 10
MAX_LAGRANGE_N = 8
MAX_FORMULA_N = 8


class UsageError(Exception):
    pass


def parse_hom(text: str, rank: int | None = None) -> GroupHom:
    """``"1;2;3,4"`` -> S_1={1}, S_2={2}, S_3={3,4}."""
    subsets = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            subsets.append([])
            continue
        try:
            subsets.append([int(x) for x in chunk.split(",")])
        except ValueError:
            raise UsageError(f"cannot parse subset {chunk!r} in --hom") from None
    try:
        return GroupHom.from_subsets(subsets, rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _action(args) -> MilnorAction:
    if args.m is None or args.n is None:
        raise UsageError("--m and --n are required")
    hom = None
    if args.hom is not None:
        hom = parse_hom(args.hom, args.rank)
    elif args.rank is not None and args.rank != args.n:
        raise UsageError("--rank other than n needs --hom")
    try:
        action = MilnorAction(args.m, args.n, hom)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None
    if action.rank > MAX_RANK and not args.force:
        raise UsageError(f"rank {action.rank} exceeds {MAX_RANK}; pass --force to override")
    return action


def _eta(action: MilnorAction):
    try:
        return eta_fixed_point_sum(action)
    except (EmptyCharacter, InvalidAction) as exc:
        raise UsageError(str(exc)) from None


def _emit(doc, output: str, text: str) -> None:
    if output == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(text)


# -- class --------------------------------------------------------------


def cmd_class(args) -> int:
    action = _action(args)
    e = _eta(action)
    doc = {
        "class": class_doc(action, e),
        "monomial_count": len(e),
        "nonbounding": is_nonbounding(e),
        "verdict": "nonbounding" if is_nonbounding(e) else "bounds",
    }
    text = "\n".join(
        [
            f"H({action.m},{action.n}) rank={action.rank} degree={action.dim}",
            f"monomials: {len(e)}",
            f"eta = {e}",
            f"nonbounding={'true' if is_nonbounding(e) else 'false'}",
        ]
    )
    _emit(doc, args.output, text)
    return EXIT_OK


# -- certify ------------------------------------------------------------


def _policy(args, m: int, d: int) -> SearchPolicy:
    if args.k_min is None and args.k_max is None:
        policy = SearchPolicy.default(m, d)
    else:
        lo = args.k_min if args.k_min is not None else d + 1
        hi = args.k_max if args.k_max is not None else lo
        if hi < lo:
            raise UsageError(f"--k-max {hi} is below --k-min {lo}")
        policy = SearchPolicy(tuple(range(lo, hi + 1)))
    try:
        policy.check(d)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if max(policy.k_candidates) > MAX_K and not args.force:
        raise UsageError(f"k up to {max(policy.k_candidates)} exceeds {MAX_K}; pass --force")
    return policy


def cmd_certify(args) -> int:
    action = _action(args)
    e = _eta(action)
    policy = _policy(args, action.m, action.dim)
    params = {"m": action.m, "n": action.n, "rank": action.rank,
              "hom": action.hom.subsets() if action.hom else None}
    result = test_indecomposable(e, action.dim, policy, params)
    doc = certify_doc(action, e, result)
    if result.proven:
        c = result.certificate
        text = (
            f"H({action.m},{action.n}) rank={action.rank} degree={action.dim}: PROVEN indecomposable\n"
            f"coefficient of {c.b_index} (k={c.k}, {c.kind}) is nonzero:\n  {c.witness}"
        )
    else:
        text = (
            f"H({action.m},{action.n}) rank={action.rank} degree={action.dim}: INCONCLUSIVE "
            f"(no nonzero coefficient for k in {list(policy.k_candidates)})"
        )
    _emit(doc, args.output, text)
    return EXIT_OK if result.proven else EXIT_INCONCLUSIVE


# -- verify -------------------------------------------------------------


def _lagrange_checks(n_max: int):
    for n in range(2, n_max + 1):
        yield f"lagrange_p({n}) = 0", not lagrange_p(n)
    for n in range(1, n_max + 1):
        yield f"lagrange_ii({n}) = 0", not lagrange_ii(n)
    for n in range(2, n_max + 1):
        ctx = PolyContext(n)
        total = sum((ctx.var(i) for i in range(1, n + 1)), ctx.zero())
        for k in range(0, n + 1):
            q = lagrange_q(n, k, ctx=ctx)
            if k < n - 1:
                yield f"lagrange_q({n},{k}) = 0", not q
            elif k == n - 1:
                yield f"lagrange_q({n},{k}) = 1", q == 1
            else:
                yield f"lagrange_q({n},{k}) = y1+...+y{n}", q == total
    for n in range(2, n_max):
        ctx = PolyContext(n + 1)
        lo, hi, full = list(range(1, n + 1)), list(range(2, n + 2)), list(range(1, n + 2))
        edge = (1 << 0) | (1 << n)
        lhs = lagrange_p(n + 1, full, ctx) * ctx.linear_form(edge)
        ok = lhs == lagrange_p(n, lo, ctx) + lagrange_p(n, hi, ctx)
        yield f"p recursion n={n}", ok
        for k in range(0, n + 2):
            lhs = lagrange_q(n + 1, k, full, ctx) * ctx.linear_form(edge)
            ok = lhs == lagrange_q(n, k, lo, ctx) + lagrange_q(n, k, hi, ctx)
            yield f"q_{k} recursion n={n}", ok


def _formula_checks(n_max: int):
    for n in range(1, n_max + 1):
        for m in range(1, n + 1):
            ok = eta_closed_formula(m, n) == eta_fixed_point_sum(MilnorAction(m, n))
            yield f"closed formula = fixed-point sum for H({m},{n})", ok


def _integrality_checks(args):
    action = _action(args)
    e = _eta(action)
    d = action.dim
    max_weight = args.max_weight if args.max_weight is not None else d + 6
    if max_weight > d + WEIGHT_SLACK and not args.force:
        raise UsageError(f"--max-weight {max_weight} exceeds d+{WEIGHT_SLACK}={d + WEIGHT_SLACK}; pass --force")
    report = check_integrality(e, d, max_weight)
    for entry in report.entries:
        yield f"b[{entry.B}] {entry.expected}", entry.passed


def cmd_verify(args) -> int:
    if args.target in ("lagrange", "lemma41"):
        if args.n_max > MAX_LAGRANGE_N and not args.force:
            raise UsageError(f"--n-max {args.n_max} exceeds {MAX_LAGRANGE_N}; pass --force")
        if args.n_max < 2:
            raise UsageError("--n-max must be at least 2")
        checks = _lagrange_checks(args.n_max)
    elif args.target == "formula":
        if args.n_max > MAX_FORMULA_N and not args.force:
            raise UsageError(f"--n-max {args.n_max} exceeds {MAX_FORMULA_N}; pass --force")
        if args.n_max < 1:
            raise UsageError("--n-max must be at least 1")
        checks = _formula_checks(args.n_max)
    else:
        checks = _integrality_checks(args)

    results = []
    for name, ok in checks:
        results.append({"check": name, "pass": bool(ok)})
    all_ok = all(r["pass"] for r in results)
    doc = {"target": args.target, "checks": results, "pass": all_ok}
    text = "\n".join(f"{'PASS' if r['pass'] else 'FAIL'}  {r['check']}" for r in results)
    text += f"\n{sum(r['pass'] for r in results)}/{len(results)} passed"
    _emit(doc, args.output, text)
    return EXIT_OK if all_ok else EXIT_FAIL


# -- table --------------------------------------------------------------


def pullback_rows(rank: int, n_max: int | None = None):
    """One row per 1 <= m <= n-2 with n <= 2^(rank-1) - 1.

    The hom is S_1 = {1} and S_2..S_n the first n-1 nonempty subsets of {2..rank}.
    """
    top = 2 ** (rank - 1) - 1
    if n_max is not None:
        top = min(top, n_max)
    for n in range(3, top + 1):
        tail = first_subsets(range(2, rank + 1), n - 1)
        hom = GroupHom.from_subsets([[1]] + tail, rank)
        for m in range(1, n - 1):
            yield MilnorAction(m, n, hom)


def _certify_row(action: MilnorAction) -> dict:
    e = eta_fixed_point_sum(action)
    d = action.dim
    result = test_indecomposable(e, d, SearchPolicy.default(action.m, d))
    row = {
        "degree": d,
        "m": action.m,
        "n": action.n,
        "rank": action.rank,
        "hom": action.hom.subsets() if action.hom else None,
        "verdict": result.verdict,
        "k": result.certificate.k if result.proven else None,
        "kind": result.certificate.kind if result.proven else None,
    }
    if result.proven:
        row["certificate"] = certificate_doc(result.certificate)
    return row


_COLUMNS = ["degree", "m", "n", "rank", "hom", "verdict", "k", "kind"]


def _hom_text(hom) -> str:
    return "-" if hom is None else ";".join(",".join(map(str, s)) for s in hom)


def _render_rows(rows: list[dict], output: str, extra: dict) -> str:
    if output == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(_COLUMNS)
        for r in rows:
            w.writerow([_hom_text(r[c]) if c == "hom" else ("" if r[c] is None else r[c]) for c in _COLUMNS])
        return buf.getvalue().rstrip("\n")
    lines = [f"{'d':>3} {'m':>3} {'n':>3} {'rank':>4}  {'verdict':<12} {'k':>3}  {'kind':<6} hom"]
    for r in rows:
        lines.append(
            f"{r['degree']:>3} {r['m']:>3} {r['n']:>3} {r['rank']:>4}  {r['verdict']:<12} "
            f"{'-' if r['k'] is None else r['k']:>3}  {r['kind'] or '-':<6} {_hom_text(r['hom'])}"
        )
    for key, value in extra.items():
        if isinstance(value, bool):
            value = "true" if value else "false"
        lines.append(f"{key}: {value}")
    if not rows:
        lines.append("(no feasible rows)")
    return "\n".join(lines)


def cmd_table(args) -> int:
    if args.rank is None or args.rank < 1:
        raise UsageError("--rank must be a positive integer")
    if args.rank > MAX_RANK and not args.force:
        raise UsageError(f"rank {args.rank} exceeds {MAX_RANK}; pass --force to override")
    extra: dict = {}
    if args.mode == "linind":
        if None in (args.i, args.m, args.n):
            raise UsageError("table linind needs --i, --m and --n")
        try:
            homs = linind_homs(args.rank, args.i, args.m, args.n)
        except (ValueError, InvalidAction) as exc:
            raise UsageError(str(exc)) from None
        actions = [MilnorAction(args.m, args.n, h) for h in homs]
        family = build_linind_family(args.rank, args.i, args.m, args.n)
        extra["family_size"] = len(family)
        extra["linearly_independent"] = verify_linear_independence(family)
    else:
        actions = list(pullback_rows(args.rank, args.n_max))
    rows = [_certify_row(a) for a in actions]

    if args.output == "json":
        print(json.dumps({"mode": args.mode, "rank": args.rank, "rows": rows, **extra}, indent=2))
    else:
        print(_render_rows(rows, args.output, extra))
    if args.figure:
        from .plotting import plot_family, plot_table

        if args.mode == "linind":
            plot_family(rows, args.figure)
        else:
            plot_table(rows, args.figure, f"rank {args.rank}: certificates (cell label = degree)")
        print(f"figure written to {args.figure}", file=sys.stderr)
    return EXIT_OK


# -- entry point ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="milnorcob",
        description="Equivariant cobordism classes of Milnor hypersurfaces: eta, tom Dieck coefficients, certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, output_choices=("text", "json")):
        p.add_argument("--output", choices=output_choices, default="text")
        p.add_argument("--force", action="store_true", help="lift desk-scale guards")

    def action_args(p):
        p.add_argument("--m", type=int)
        p.add_argument("--n", type=int)
        p.add_argument("--rank", type=int, help="rank of the acting group (default n)")
        p.add_argument("--hom", help='subsets S_1;...;S_n, e.g. "1;2;3,4"')

    p = sub.add_parser("class", help="build eta of H(m,n)")
    action_args(p)
    common(p)
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("certify", help="search for an indecomposability certificate")
    action_args(p)
    p.add_argument("--k-min", type=int)
    p.add_argument("--k-max", type=int)
    common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="run identity and integrality checks")
    p.add_argument("target", choices=["lagrange", "lemma41", "integrality", "formula"],
                   help="lemma41 is an alias of lagrange")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--max-weight", type=int)
    action_args(p)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="tabulate certificates over a family")
    p.add_argument("mode", nargs="?", choices=["pullback", "linind"], default="pullback")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--i", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--n-max", type=int, help="cap n in pullback mode")
    p.add_argument("--figure", help="also render the table to this image file")
    common(p, ("text", "json", "csv"))
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
