"""Command-line front end: compute, verify, bench, enumerate.

Reports are JSON on stdout (CSV for bench on request); diagnostics go to
stderr.  Exit codes: 0 success, 1 verification found mismatches, 2
malformed input or flags, 3 unsupported period for a forced non-fallback
algorithm, 4 infeasible enumeration.

Randomized campaigns draw inputs from SplitMix64 (see _rng) so runs
reproduce bit-for-bit across implementations given the same seed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from ._rng import SplitMix64
from .cyclicseq import CyclicSeq, OpMeter
from .gf2poly import Poly2, UnsupportedPeriod, factor_xn_minus_1, is_primitive
from .lincomplex import (
    NotGeneratedBy,
    TAG_FAST_3X2N,
    TAG_FAST_PX2N,
    TAG_GAMES_CHAN,
    TAG_GENERAL,
    TAG_ODD_COMPOSITE,
    TAG_ODD_PRIME_POWER,
    TAG_ORACLE_FALLBACK,
    choose_algorithm,
    games_chan,
    lc_3x2n,
    lc_odd_composite,
    lc_odd_prime_power,
    lc_px2n,
    min_poly_general,
    ppp,
    solve,
)
from .oracle import InfeasibleSize, LcResult, berlekamp_massey, enumerate_by_period, gcd_method

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3
EXIT_INFEASIBLE = 4

_FAST_TAGS = (
    TAG_GAMES_CHAN,
    TAG_FAST_3X2N,
    TAG_FAST_PX2N,
    TAG_ODD_PRIME_POWER,
    TAG_ODD_COMPOSITE,
)


class _UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# bounds


def _two_valuation(n: int) -> int:
    return (n & -n).bit_length() - 1


def bound_for(tag: str, n: int):
    """The paper's operation bound for the family handling length n, if any.

    For odd prime powers the 2N data-operation bound excludes the counter
    additions; the reported bound allows them one bit each (2N + n).
    """
    n2 = _two_valuation(n)
    odd = n >> n2
    if tag == TAG_GAMES_CHAN:
        return n + n2
    if tag == TAG_FAST_3X2N:
        return 7 * (1 << n2) + 2 * n2
    if tag == TAG_FAST_PX2N:
        p = odd
        return (p * p + 7 * p + 7) / 4 * (1 << n2) + 2 * n2
    if tag == TAG_ODD_PRIME_POWER:
        iterations = _prime_power_height(odd)
        return 2 * n + iterations
    return None


def _prime_power_height(m: int) -> int:
    k = 0
    p = None
    d = 2
    mm = m
    while d * d <= mm:
        if mm % d == 0:
            p = d
            break
        d += 1
    p = p if p is not None else mm
    while m > 1:
        m //= p
        k += 1
    return k


def _violates_bound(tag: str, n: int, meter: OpMeter) -> bool:
    n2 = _two_valuation(n)
    if tag == TAG_ODD_PRIME_POWER:
        # the paper's 2N claim omits complexity-counter additions
        return (meter.xor_ops + meter.cmp_ops > 2 * n) or (
            meter.counter_ops > _prime_power_height(n)
        )
    b = bound_for(tag, n)
    return b is not None and meter.total() > b


# ---------------------------------------------------------------------------
# report assembly


def _human_factored(deltas) -> str:
    live = [(q, d) for q, d in deltas if d > 0]
    if not live:
        return "1"
    if len(live) == 1 and live[0][1] == 1:
        return live[0][0].to_human()
    return "".join(
        f"({q.to_human()})" + (f"^{d}" if d > 1 else "") for q, d in live
    )


def make_report(s: CyclicSeq, input_format: str, result: LcResult, elapsed_ns: int) -> dict:
    tag = result.algorithm
    bound = bound_for(tag, s.n)
    ops = result.meter.as_dict()
    within = None
    if bound is not None:
        within = ops["total"] <= bound
    deltas = None
    if result.deltas is not None:
        deltas = [
            {"factor_bits": q.to_bits_str(), "factor_human": q.to_human(), "exponent": d}
            for q, d in result.deltas
        ]
    human = (
        _human_factored(result.deltas)
        if result.deltas is not None
        else result.min_poly.to_human()
    )
    return {
        "n": s.n,
        "input_format": input_format,
        "algorithm": tag,
        "complexity": result.complexity,
        "min_poly_bits": result.min_poly.to_bits_str(),
        "min_poly_human": human,
        "deltas": deltas,
        "ops": ops,
        "bound": bound,
        "within_bound": within,
        "elapsed_ns": elapsed_ns,
    }


# ---------------------------------------------------------------------------
# compute


def _read_sequence(args) -> tuple[CyclicSeq, str]:
    if (args.seq is None) == (getattr(args, "infile", None) is None):
        raise _UsageError("exactly one of --seq and --in is required")
    text = args.seq
    if text is None:
        try:
            with open(args.infile, "r", encoding="ascii") as fh:
                text = fh.read().strip()
        except OSError as exc:
            raise _UsageError(f"cannot read {args.infile}: {exc}")
    try:
        if args.format == "bits":
            return CyclicSeq.from_bits_str(text), "bits"
        if args.len is None:
            raise _UsageError("--len is required with --format hex")
        return CyclicSeq.from_hex_str(text, args.len), "hex"
    except ValueError as exc:
        raise _UsageError(str(exc))


def _run_algorithm(name: str, s: CyclicSeq, poly_arg: str | None) -> LcResult:
    if name == "auto":
        return solve(s)
    if name == "gcd":
        return gcd_method(s)
    if name == "bm":
        return berlekamp_massey(s)
    if name == "games-chan":
        return games_chan(s)
    if name == "general":
        return min_poly_general(s, factor_xn_minus_1(s.n))
    if name == "ppp":
        if poly_arg is None:
            raise _UsageError("--algorithm ppp requires --poly")
        f = Poly2.from_bits_str(poly_arg)
        return ppp(f, s)[1]
    if name == "fast":
        choice = choose_algorithm(s.n)
        if choice.tag not in _FAST_TAGS:
            raise UnsupportedPeriod(s.n, "no fast family applies")
        if choice.tag == TAG_GAMES_CHAN:
            return games_chan(s)
        if choice.tag == TAG_FAST_3X2N:
            return lc_3x2n(s)
        if choice.tag == TAG_FAST_PX2N:
            return lc_px2n(choice.p, s)
        if choice.tag == TAG_ODD_PRIME_POWER:
            return lc_odd_prime_power(choice.p, choice.n, s)
        return lc_odd_composite(list(choice.primes), s)
    raise _UsageError(f"unknown algorithm {name!r}")


def cmd_compute(args) -> int:
    try:
        s, fmt = _read_sequence(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    t0 = time.perf_counter_ns()
    try:
        result = _run_algorithm(args.algorithm, s, args.poly)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UnsupportedPeriod, NotGeneratedBy, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    elapsed = time.perf_counter_ns() - t0
    report = make_report(s, fmt, result, elapsed)
    if args.plain:
        print(f"n          : {report['n']}")
        print(f"algorithm  : {report['algorithm']}")
        print(f"complexity : {report['complexity']}")
        print(f"min_poly   : {report['min_poly_human']}  (bits: {report['min_poly_bits']})")
        print(f"ops        : {report['ops']}")
        if report["bound"] is not None:
            print(f"bound      : {report['bound']}  within: {report['within_bound']}")
    else:
        print(json.dumps(report, indent=2))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify / bench campaigns


_FAMILIES = ("pow2", "3x2n", "5x2n", "p^n", "composite")


def _family_lengths(family: str, n_max: int) -> list[int]:
    if family == "pow2":
        return [1 << k for k in range(1, n_max + 1)]
    if family == "3x2n":
        return [3 << k for k in range(0, n_max + 1)]
    if family == "5x2n":
        return [5 << k for k in range(0, n_max + 1)]
    if family == "p^n":
        return [3**k for k in range(1, n_max + 1)]
    if family == "composite":
        out = []
        m = 3
        while len(out) < n_max and m <= 4096:
            m += 2
            if _odd_multi_prime(m) and _supported(m):
                out.append(m)
        return out
    raise _UsageError(f"unknown family {family!r}")


def _odd_multi_prime(m: int) -> bool:
    if m % 2 == 0:
        return False
    primes = 0
    mm = m
    d = 3
    while d * d <= mm:
        if mm % d == 0:
            primes += 1
            while mm % d == 0:
                mm //= d
        d += 2
    if mm > 1:
        primes += 1
    return primes >= 2


def _supported(m: int) -> bool:
    try:
        factor_xn_minus_1(m)
        return True
    except UnsupportedPeriod:
        return False


def _check_one(s: CyclicSeq) -> tuple[bool, bool, LcResult]:
    res = solve(s)
    ok = res.key() == gcd_method(s).key() and res.key() == berlekamp_massey(s).key()
    bad_bound = _violates_bound(res.algorithm, s.n, res.meter)
    return ok, bad_bound, res


def cmd_verify(args) -> int:
    if (args.n is None) == (args.family is None):
        print("error: exactly one of --n and --family is required", file=sys.stderr)
        return EXIT_USAGE
    checked = 0
    mismatches = 0
    mismatch_examples: list[str] = []
    bound_violations = 0
    bound_examples: list[str] = []

    def consider(s: CyclicSeq) -> None:
        nonlocal checked, mismatches, bound_violations
        ok, bad_bound, _ = _check_one(s)
        checked += 1
        if not ok:
            mismatches += 1
            if len(mismatch_examples) < 5:
                mismatch_examples.append(s.to_bits_str())
        if bad_bound:
            bound_violations += 1
            if len(bound_examples) < 5:
                bound_examples.append(s.to_bits_str())

    if args.n is not None:
        if args.exhaustive:
            if args.n > 20:
                print("error: exhaustive verification caps n at 20", file=sys.stderr)
                return EXIT_USAGE
            for bits in range(1 << args.n):
                consider(CyclicSeq(bits, args.n))
        else:
            rng = SplitMix64(args.seed)
            for _ in range(args.trials):
                consider(CyclicSeq(rng.getrandbits(args.n), args.n))
        scope: dict = {"n": args.n}
    else:
        rng = SplitMix64(args.seed)
        lengths = _family_lengths(args.family, args.n_max)
        for n in lengths:
            for _ in range(args.trials):
                consider(CyclicSeq(rng.getrandbits(n), n))
        scope = {"family": args.family, "lengths": lengths}

    summary = {
        **scope,
        "checked": checked,
        "mismatches": mismatches,
        "mismatch_examples": mismatch_examples,
        "bound_violations": bound_violations,
        "bound_violation_examples": bound_examples,
        "seed": None if args.exhaustive else args.seed,
    }
    print(json.dumps(summary, indent=2))
    return EXIT_MISMATCH if (mismatches or bound_violations) else EXIT_OK


def cmd_bench(args) -> int:
    rng = SplitMix64(args.seed)
    rows = []
    for n in _family_lengths(args.family, args.n_max):
        totals = []
        t0 = time.perf_counter_ns()
        tag = None
        for _ in range(args.trials):
            s = CyclicSeq(rng.getrandbits(n), n)
            res = solve(s)
            tag = res.algorithm
            totals.append(res.meter.total())
        elapsed = time.perf_counter_ns() - t0
        bound = bound_for(tag, n)
        rows.append(
            {
                "family": args.family,
                "N": n,
                "algorithm": tag,
                "trials": args.trials,
                "ops_max": max(totals),
                "ops_mean": sum(totals) / len(totals),
                "bound": bound,
                "beta_max": max(totals) / n,
                "elapsed_ns": elapsed,
            }
        )
    if args.format == "csv":
        cols = list(rows[0].keys()) if rows else []
        print(",".join(cols))
        for row in rows:
            print(",".join(str(row[c]) for c in cols))
    else:
        print(json.dumps(rows, indent=2))
    return EXIT_OK


# ---------------------------------------------------------------------------
# enumerate


def cmd_enumerate(args) -> int:
    try:
        f = Poly2.from_bits_str(args.poly)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if f.degree < 1 or not is_primitive(f):
        print(f"error: {f.to_human()} is not primitive", file=sys.stderr)
        return EXIT_USAGE
    k = f.degree
    if k * args.max_power > 20:
        print("error: degree * max-power exceeds the brute-force cap 20", file=sys.stderr)
        return EXIT_INFEASIBLE
    censuses = {0: {1: 1}}
    for power in range(1, args.max_power + 1):
        censuses[power] = enumerate_by_period(f, power)
    rows = []
    all_pass = True
    for power in range(1, args.max_power + 1):
        i = (power - 1).bit_length()  # ceil(log2(power))
        period = ((1 << k) - 1) << i
        formula = 1 << ((power - 1) * k - i)
        brute = censuses[power].get(period, 0) - censuses[power - 1].get(period, 0)
        ok = brute == formula
        all_pass = all_pass and ok
        rows.append(
            {
                "l": power,
                "i": i,
                "period": period,
                "formula": formula,
                "brute_force": brute,
                "pass": ok,
            }
        )
    print(json.dumps({"poly": f.to_bits_str(), "rows": rows, "all_pass": all_pass}, indent=2))
    return EXIT_OK if all_pass else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# argument plumbing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcseq",
        description="Linear complexity of periodic binary sequences, with "
        "metered fast algorithms and differential verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="complexity and minimal polynomial of one sequence")
    pc.add_argument("--seq", help="sequence literal (s_0 first)")
    pc.add_argument("--in", dest="infile", help="file with one line of bits/hex digits")
    pc.add_argument("--format", choices=("bits", "hex"), default="bits")
    pc.add_argument("--len", type=int, help="cycle length (required for hex)")
    pc.add_argument(
        "--algorithm",
        choices=("auto", "games-chan", "ppp", "general", "fast", "bm", "gcd"),
        default="auto",
    )
    pc.add_argument("--poly", help="connection polynomial bits for --algorithm ppp")
    pc.add_argument("--plain", action="store_true", help="plain text instead of JSON")
    pc.set_defaults(func=cmd_compute)

    pv = sub.add_parser("verify", help="differential campaign against both oracles")
    pv.add_argument("--n", type=int, help="single cycle length")
    pv.add_argument("--family", choices=_FAMILIES, help="length family ('p^n' uses p=3)")
    pv.add_argument("--n-max", type=int, default=8, dest="n_max")
    pv.add_argument("--trials", type=int, default=100)
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--exhaustive", action="store_true", help="all 2^n inputs (with --n)")
    pv.set_defaults(func=cmd_verify)

    pb = sub.add_parser("bench", help="metered operation counts vs the paper bounds")
    pb.add_argument("--family", choices=_FAMILIES, required=True)
    pb.add_argument("--n-max", type=int, default=8, dest="n_max")
    pb.add_argument("--trials", type=int, default=100)
    pb.add_argument("--seed", type=int, default=0)
    pb.add_argument("--format", choices=("json", "csv"), default="json")
    pb.set_defaults(func=cmd_bench)

    pe = sub.add_parser("enumerate", help="period census of powers of a primitive polynomial")
    pe.add_argument("--poly", required=True, help="polynomial bits, constant term first")
    pe.add_argument("--max-power", type=int, required=True, dest="max_power")
    pe.set_defaults(func=cmd_enumerate)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except InfeasibleSize as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
