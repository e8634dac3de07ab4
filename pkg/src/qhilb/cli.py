"""Command-line entry point.

Exit codes: 0 success, 1 verification or golden-diff failure, 2 usage error.
"""
import argparse
import json
import sys

from . import bn_combinatorics as bn
from .errors import ParameterError
from .euler_series import chi_hilb
from .flag_euler import (
    FORMATTERS,
    cell_count,
    chi_flag,
    chi_flag_linear,
    compare_tables,
    emit_tables,
    load_golden,
)
from .scheme_oracle.campaign import report_lines, run_campaign, summarize
from .scheme_oracle.instances import CampaignConfig, InstanceSpec, generate_instances, stratum_instances

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_range(text):
    try:
        if "-" in text.strip("-"):
            lo, hi = text.split("-", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO-HI, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _stratum(text):
    key, _, value = text.partition("=")
    if key != "k" or not value.isdigit():
        raise argparse.ArgumentTypeError(f"expected k=<int>, got {text!r}")
    return int(value)


def _print_value(value):
    print(value)
    return EXIT_OK


def cmd_tables(args, out):
    tables = emit_tables()
    if not args.compare:
        out.write(FORMATTERS[args.format](tables))
        return EXIT_OK
    try:
        golden = load_golden()
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    diffs = compare_tables(tables, golden)
    for name, idx, want, got in diffs:
        out.write(f"{name} {idx}: golden {want}, computed {got}\n")
    out.write(f"{cell_count(golden)} cells, {len(diffs)} mismatches\n")
    return EXIT_FAIL if diffs else EXIT_OK


def _emit_campaign(instances, pairs_for_length, jobs, report):
    total = agreements = 0
    for index, inst, reports in run_campaign(instances, pairs_for_length, jobs):
        bad = False
        for rep in reports:
            total += 1
            if rep.get("agrees"):
                agreements += 1
            else:
                bad = True
        if report is not None:
            for line in report_lines(index, inst, reports):
                report.write(line + "\n")
        if bad:
            print(f"mismatch in instance {index}; replay with: {inst.to_json()}", file=sys.stderr)
    return total, agreements


def cmd_verify(args, out):
    def pick(rng, default):
        return rng if rng is not None else default

    config = CampaignConfig(
        l_range=pick(args.l, (1, 6)),
        m_range=pick(args.m, (0, 7)),
        n_range=pick(args.n, (0, 7)),
        trials=args.trials,
        seed=args.seed,
    )
    if args.replay:
        try:
            with open(args.replay, encoding="utf-8") as fh:
                instances = [InstanceSpec.from_json(fh.read())]
        except (OSError, ValueError, KeyError) as exc:
            raise UsageError(f"cannot read instance: {exc}")
        pairs = config.mn_pairs
    elif args.stratum is not None:
        if not all(r is not None and r[0] == r[1] for r in (args.l, args.m, args.n)):
            raise UsageError("--stratum needs single values for --l, --m and --n")
        l, m, n = args.l[0], args.m[0], args.n[0]
        bn.check_bn_hypotheses(l, m, n, args.stratum)
        instances = stratum_instances(args.stratum, l, m, n, seed=args.seed)
        if not instances:
            raise UsageError(f"BN({args.stratum},{l},({m},{n})) is empty: k_max = {bn.k_max(l, m, n)}")

        def pairs(_length):
            return [(m, n)]
    else:
        instances = list(generate_instances(config))
        pairs = config.mn_pairs

    report = None
    if args.report == "-":
        report = out
    elif args.report:
        report = open(args.report, "w", encoding="utf-8", newline="\n")
    try:
        total, agreements = _emit_campaign(instances, pairs, args.jobs, report)
    finally:
        if report is not None and report is not out:
            report.close()
    summary = summarize(total, agreements, len(instances))
    out.write(json.dumps(summary, sort_keys=True) + "\n")
    return EXIT_OK if agreements == total else EXIT_FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="qhilb", description="Euler characteristics of (flag) Hilbert schemes of points on P1 x P1.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_text, *params):
        sp = sub.add_parser(name, help=help_text)
        for param in params:
            sp.add_argument(param, type=int)
        return sp

    add("chi-hilb", "chi(Hilb(l))", "l")
    add("xi", "xi(l, m)", "l", "m")
    add("chi-flag", "chi(Hilb(l, (m, n))), needs m+n >= l-1", "l", "m", "n")
    add("chi-flag-linear", "slope and intercept of chi(Hilb(l, (m, n))) for n >= l-1", "l", "m")
    add("chi-bn", "chi(BN(k, l, (m, n)))", "k", "l", "m", "n")
    add("chi-s", "chi(S(k, l, n)), vertical stratum", "k", "l", "n")
    add("chi-t", "chi(T(k, l, m)), horizontal stratum", "k", "l", "m")
    add("kmax", "largest k with BN(k, l, (m, n)) nonempty", "l", "m", "n")

    t = sub.add_parser("tables", help="emit the four tables, optionally diffed against golden data")
    t.add_argument("--format", choices=sorted(FORMATTERS), default="md")
    t.add_argument("--compare", action="store_true")

    v = sub.add_parser("verify", help="check exact-rank h^1 against the predicted value")
    v.add_argument("--l", type=_int_range, default=None, help="N or LO-HI (default 1-6)")
    v.add_argument("--m", type=_int_range, default=None, help="N or LO-HI (default 0-7)")
    v.add_argument("--n", type=_int_range, default=None, help="N or LO-HI (default 0-7)")
    v.add_argument("--trials", type=int, default=200, help="random instances on top of the structured ones")
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--replay", metavar="PATH", help="recompute a single serialized instance")
    v.add_argument("--stratum", type=_stratum, metavar="k=K", help="only schemes in BN(K, l, (m, n))")
    v.add_argument("--report", metavar="PATH", help="write JSON-lines reports here ('-' for stdout)")
    return p


def _dispatch(args, out):
    c = args.command
    if c == "chi-hilb":
        return _print_value(chi_hilb(args.l))
    if c == "xi":
        return _print_value(bn.xi(args.l, args.m))
    if c == "chi-flag":
        return _print_value(chi_flag(args.l, args.m, args.n))
    if c == "chi-flag-linear":
        return _print_value(chi_flag_linear(args.l, args.m))
    if c == "chi-bn":
        return _print_value(bn.chi_BN(args.k, args.l, args.m, args.n))
    if c == "chi-s":
        return _print_value(bn.chi_S(args.k, args.l, args.n))
    if c == "chi-t":
        return _print_value(bn.chi_T(args.k, args.l, args.m))
    if c == "kmax":
        bn.check_bn_hypotheses(args.l, args.m, args.n)
        return _print_value(bn.k_max(args.l, args.m, args.n))
    if c == "tables":
        return cmd_tables(args, out)
    if c == "verify":
        if args.jobs < 1 or args.trials < 0:
            raise UsageError("--jobs must be >= 1 and --trials >= 0")
        return cmd_verify(args, out)
    raise UsageError(f"unknown command {c}")


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args, sys.stdout)
    except (ParameterError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
