"""Command-line entry point: ``ramanujan-vf <command> ...``.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .errors import BoundExceeded, NotPrime, RamanujanError
from .exact_arith import is_prime, require_prime
from .modforms import compute_AB
from .ppower import rp_closed, rp_iterated
from .qseries import eisenstein
from .serialize import derivation_to_json, poly_to_json, unipoly_to_json
from .suite import CHECKS, run_prime
from .supersingular import ss_deuring_oracle, ss_from_A

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_SWEEP = (5, 31)


class UsageError(Exception):
    pass


def parse_primes(text: str) -> list[int]:
    """"5..31", "7", or "5,7,11"; every entry must be a prime >= 5."""
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if ".." in chunk:
            lo, _, hi = chunk.partition("..")
            lo, hi = int(lo), int(hi)
            if lo > hi:
                raise UsageError(f"empty range {chunk}")
            if lo < 5 or not any(is_prime(q) for q in range(lo, hi + 1)):
                raise UsageError(f"range {chunk} must start at 5 or above and contain a prime")
            out.extend(q for q in range(lo, hi + 1) if is_prime(q))
        else:
            out.append(require_prime(int(chunk)))
    return sorted(set(out))


def _emit(obj, fmt, text_lines):
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_eisenstein(args) -> int:
    if args.nu < 2 or args.nu % 2:
        raise UsageError(f"--nu must be an even integer >= 2, got {args.nu}")
    if args.terms < 1:
        raise UsageError("--terms must be positive")
    series = eisenstein(args.nu, args.terms)
    coeffs = [str(c) for c in series.coeffs]
    _emit({"nu": args.nu, "terms": args.terms, "coeffs": coeffs}, args.format, [str(series)])
    return EXIT_OK


def cmd_ab(args) -> int:
    ab = compute_AB(require_prime(args.p))
    obj = {
        "p": ab.p,
        "A": poly_to_json(ab.A),
        "B": poly_to_json(ab.B),
        "A_mod": poly_to_json(ab.A_mod),
        "B_mod": poly_to_json(ab.B_mod),
    }
    lines = [
        f"A = {ab.A}",
        f"B = {ab.B}",
        f"A~ = {ab.A_mod}  (mod {ab.p})",
        f"B~ = {ab.B_mod}  (mod {ab.p})",
    ]
    _emit(obj, args.format, lines)
    return EXIT_OK


def cmd_rp(args) -> int:
    p = require_prime(args.p)
    obj = {"p": p, "method": args.method}
    lines = []
    closed = iterated = None
    if args.method in ("closed", "both"):
        closed = rp_closed(p)
        obj["closed"] = derivation_to_json(closed)
    if args.method in ("iterate", "both"):
        iterated = rp_iterated(p)
        obj["iterated"] = derivation_to_json(iterated)
    shown = closed if closed is not None else iterated
    for var, img in zip(("e2", "e4", "e6"), shown.images):
        lines.append(f"R^{p}({var}) = {img}")
    status = EXIT_OK
    if args.method == "both":
        equal = closed == iterated
        obj["equal"] = equal
        lines.append(f"closed == iterated: {str(equal).lower()}")
        status = EXIT_OK if equal else EXIT_FAIL
    _emit(obj, args.format, lines)
    return status


def cmd_ss(args) -> int:
    p = require_prime(args.p)
    obj = {"p": p, "method": args.method}
    primary = None
    status = EXIT_OK
    if args.method in ("kaneko-zagier", "both"):
        primary = ss_from_A(p)
        obj["kaneko_zagier"] = unipoly_to_json(primary.poly)
    if args.method in ("deuring", "both"):
        oracle = ss_deuring_oracle(p)
        obj["deuring"] = unipoly_to_json(oracle.poly)
        if primary is None:
            primary = oracle
        else:
            agree = primary.poly == oracle.poly
            obj["agree"] = agree
            status = EXIT_OK if agree else EXIT_FAIL
    roots = [str(j) for j in primary.j_values]
    obj["roots"] = roots
    obj["n_p"] = primary.n_p
    lines = [f"ss_{p}(t) = {primary.poly}"]
    if "agree" in obj:
        lines.append(f"agreement: {str(obj['agree']).lower()}")
    lines.append(f"roots: [{', '.join(roots)}]")
    _emit(obj, args.format, lines)
    return status


def _verify_one(job):
    p, names, timing = job
    return run_prime(p, names).to_dict(timing)


def cmd_verify(args) -> int:
    primes = parse_primes(args.primes) if args.primes else [
        q for q in range(DEFAULT_SWEEP[0], DEFAULT_SWEEP[1] + 1) if is_prime(q)
    ]
    if args.check:
        unknown = [c for c in args.check if c not in CHECKS]
        if unknown:
            raise UsageError(f"unknown checks {unknown}; choose from {sorted(CHECKS)}")
        names = args.check
    else:
        names = list(CHECKS)
    jobs = [(p, names, not args.no_timing) for p in primes]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_one, jobs))
    else:
        reports = [_verify_one(j) for j in jobs]
    all_ok = True
    for rep in reports:  # already in ascending prime order
        all_ok &= rep["status"] == "pass"
        if args.format == "json":
            print(json.dumps(rep, sort_keys=True))
            continue
        for c in rep["checks"]:
            timing = f"  [{c['seconds']:.3f}s]" if "seconds" in c else ""
            detail = f"  {c['detail']}" if c["detail"] else ""
            print(f"p={rep['p']:<4d} {c['name']:<20s} {c['status']:<7s}{detail}{timing}")
            if c["status"] == "fail" and c["witness"] is not None:
                print(f"       witness: {json.dumps(c['witness'], sort_keys=True)}")
    if args.format != "json":
        print(f"overall: {'pass' if all_ok else 'FAIL'} ({len(primes)} primes, {len(names)} checks)")
    return EXIT_OK if all_ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramanujan-vf",
        description="p-th power of the Ramanujan vector field and supersingular loci, in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("eisenstein", help="q-expansion of E_nu")
    sp.add_argument("--nu", type=int, required=True)
    sp.add_argument("--terms", type=int, default=10)
    add_format(sp)
    sp.set_defaults(func=cmd_eisenstein)

    sp = sub.add_parser("ab", help="A, B with A(E4,E6) = E_{p-1}, B(E4,E6) = E_{p+1}, and their reductions")
    sp.add_argument("--p", type=int, required=True)
    add_format(sp)
    sp.set_defaults(func=cmd_ab)

    sp = sub.add_parser("rp", help="the p-th power of the Ramanujan vector field")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--method", choices=("closed", "iterate", "both"), default="closed")
    add_format(sp)
    sp.set_defaults(func=cmd_rp)

    sp = sub.add_parser("ss", help="the supersingular polynomial ss_p")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--method", choices=("kaneko-zagier", "deuring", "both"), default="kaneko-zagier")
    add_format(sp)
    sp.set_defaults(func=cmd_ss)

    sp = sub.add_parser("verify", help="run the verification suite over a range of primes")
    sp.add_argument("--primes", help="e.g. 5..31, 13, or 5,7,11 (default 5..31)")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--check", action="append", help=f"one of: {', '.join(CHECKS)}")
    group.add_argument("--all", action="store_true", help="run every check (default)")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--no-timing", action="store_true", help="omit timings for byte-stable output")
    add_format(sp)
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, NotPrime, BoundExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RamanujanError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
