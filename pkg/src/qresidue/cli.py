"""Command-line front end: decide, certificate, scan, census, synthesize, oracle-check.

Human-readable text by default; --json emits a single envelope object
{schema_version, command, input, result, timing_ms} on stdout.  Exit codes:
0 for success/Yes, 1 for a definitive No (or disagreements), 2 for usage and
guard errors.
"""

import argparse
import json
import sys
import time
from itertools import product

from . import criterion, primescan
from .arith import is_probable_prime
from .covering import GuardError, covers, minimal_cover, synthesize_covering
from .criterion import Verdict, decide
from .profiles import QInput, build_profile, hyperplanes_of

SCHEMA_VERSION = "1"
TWIST_ORBIT_LIMIT = 10**5


class UsageError(ValueError):
    pass


def _parse_q(value):
    q = int(value)
    if q == 2:
        raise UsageError("q must be an odd prime; q = 2 is out of scope")
    if q < 3 or q % 2 == 0 or not is_probable_prime(q):
        raise UsageError(f"q must be an odd prime, got {q}")
    return q


def _parse_set(text):
    try:
        elems = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise UsageError(f"malformed integer list: {text!r}") from e
    if not elems:
        raise UsageError("element set must be nonempty")
    if any(b == 0 for b in elems):
        raise UsageError("elements must be nonzero")
    return elems


def _profile_payload(profile):
    return {
        "support_primes": list(profile.support_primes),
        "exponent_matrix": [list(row) for row in profile.exponents],
        "qfree_values": list(profile.qfree_values),
        "provenance": {str(j): b for j, b in profile.provenance.items()},
    }


def _assignment_digest(result, q, k):
    digest = {",".join(map(str, v)): i for v, i in sorted(result.assignment.items())}
    return {"points_assigned": len(result.assignment), "assignment": digest}


def cmd_decide(args):
    qinput = QInput(args.q, tuple(args.set))
    decision = decide(qinput)
    result = {"verdict": decision.verdict.value}
    if decision.verdict is Verdict.TRIVIALLY_YES:
        cert = decision.trivial
        result["trivial_certificate"] = {
            "index": cert.index,
            "element": qinput.elements[cert.index],
            "root": cert.root,
        }
        return 0, result
    result["profile"] = _profile_payload(decision.profile)
    if decision.verdict is Verdict.YES:
        result["covering"] = _assignment_digest(
            decision.covering, args.q, decision.profile.k
        )
        return 0, result
    result["uncovered_witness"] = list(decision.uncovered)
    return 1, result


def cmd_certificate(args):
    qinput = QInput(args.q, tuple(args.set))
    decision = decide(qinput)
    result = {"verdict": decision.verdict.value}
    if decision.verdict is Verdict.TRIVIALLY_YES:
        cert = decision.trivial
        result["trivial_certificate"] = {
            "index": cert.index,
            "element": qinput.elements[cert.index],
            "root": cert.root,
        }
        return 0, result
    profile = decision.profile
    result["profile"] = _profile_payload(profile)
    if decision.verdict is Verdict.YES:
        c = args.c if args.c is not None else [1] * profile.l
        if len(c) != profile.l:
            raise UsageError(
                f"--c must have {profile.l} entries (one per deduplicated column)"
            )
        cert = criterion.skalba_solve(profile, c)
        if cert is None:
            raise RuntimeError("Skalba condition failed on a Yes-instance")
        exponents = [ci * fi % args.q for ci, fi in zip(cert.c, cert.f)]
        result["skalba_certificate"] = {
            "c": list(cert.c),
            "f": list(cert.f),
            "exponents": exponents,
            "product": cert.product,
            "root": cert.root,
            "identity": " * ".join(
                f"{b}^{e}" for b, e in zip(profile.qfree_values, exponents)
            )
            + f" = {cert.product} = {cert.root}^{args.q}",
        }
        return 0, result
    d = decision.uncovered
    c = criterion.counterexample_c(profile, d)
    result["failing_twist"] = {
        "d": list(d),
        "c": list(c),
        "row_combination": [1] * profile.l,
    }
    return 1, result


def cmd_scan(args):
    _check_bound(args.bound, 2)
    qinput = QInput(args.q, tuple(args.set))  # validates inputs
    p = primescan.find_counterexample_prime(qinput.elements, args.q, args.bound)
    if p is None:
        return 0, {"counterexample_prime": None, "bound": args.bound}
    report = primescan.has_qth_power_mod_p(qinput.elements, p, args.q)
    return 1, {
        "counterexample_prime": p,
        "splits": report.splits,
        "per_element": [{"element": b, "is_residue": r} for b, r in report.per_element],
    }


def cmd_census(args):
    _check_bound(args.bound, 100)
    qinput = QInput(args.q, tuple(args.set))
    rep = primescan.census(qinput.elements, args.q, args.bound)
    return 0, {
        "bound": rep.bound,
        "primes_checked": rep.primes_checked,
        "excluded_primes": rep.excluded_primes,
        "split_primes": rep.split_primes,
        "failing_count": rep.failing_count,
        "failing_primes_truncated": list(rep.failing_primes),
        "empirical_density": {
            "fraction": str(rep.empirical_density),
            "float": float(rep.empirical_density),
        },
        "predicted_density": {
            "fraction": str(rep.predicted_density),
            "float": float(rep.predicted_density),
            "derived": True,
        },
    }


def _default_primes(q, k):
    primes, p = [], 3
    while len(primes) < k:
        if p != q and is_probable_prime(p):
            primes.append(p)
        p += 2
    return primes


def cmd_synthesize(args):
    if args.k < 2:
        raise UsageError("k must be >= 2")
    if args.primes is not None:
        primes = args.primes
        if len(primes) < args.k:
            raise UsageError(f"need at least {args.k} primes")
        primes = primes[: args.k]
        if len(set(primes)) != len(primes):
            raise UsageError("primes must be distinct")
        for p in primes:
            if not is_probable_prime(p):
                raise UsageError(f"{p} is not prime")
    else:
        primes = _default_primes(args.q, args.k)
    hyperplanes = synthesize_covering(args.k, args.q)
    B = []
    for h in hyperplanes:
        b = 1
        for p, e in zip(primes, h.normal):
            b *= p**e
        B.append(b)
    decision = decide(QInput(args.q, tuple(B)))
    if decision.verdict is not Verdict.YES:
        raise RuntimeError("synthesized set failed its own covering check")
    result = {
        "primes": primes,
        "normals": [list(h.normal) for h in hyperplanes],
        "set": B,
        "verdict": decision.verdict.value,
    }
    l = len(B)
    if args.twists == "all":
        if (args.q - 1) ** l > TWIST_ORBIT_LIMIT:
            raise GuardError(
                f"(q-1)^l = {(args.q - 1) ** l} exceeds orbit limit; use --twists N"
            )
        orbit = [
            [b**aj for b, aj in zip(B, a)]
            for a in product(range(1, args.q), repeat=l)
        ]
        result["twists"] = orbit
    elif args.twists is not None:
        import random

        rng = random.Random(args.seed)
        result["twists"] = [
            [b ** rng.randint(1, args.q - 1) for b in B] for _ in range(int(args.twists))
        ]
    return 0, result


def cmd_oracle_check(args):
    if args.mode == "exhaustive":
        if (args.q**args.k_max - 1) ** args.l_max > 10**6:
            raise GuardError("exhaustive instance space exceeds 10^6")
        checked, bad = criterion.oracle_check_exhaustive(args.q, args.k_max, args.l_max)
    else:
        checked, bad = criterion.oracle_check_random(
            args.q, args.k_max, args.l_max, args.trials, args.seed
        )
    result = {
        "mode": args.mode,
        "instances_checked": checked,
        "disagreements": len(bad),
        "disagreeing_columns": [list(map(list, cols)) for cols in bad[:10]],
    }
    return (0 if not bad else 1), result


def _check_bound(bound, minimum):
    if bound < minimum:
        raise UsageError(f"bound must be >= {minimum}")
    if bound > primescan.SCAN_BOUND_LIMIT:
        raise UsageError(f"bound must be <= {primescan.SCAN_BOUND_LIMIT}")


def _print_text(result):
    def emit(obj, indent=0):
        pad = "  " * indent
        if isinstance(obj, dict):
            for key, val in obj.items():
                if isinstance(val, (dict, list)) and val and not _is_flat(val):
                    print(f"{pad}{key}:")
                    emit(val, indent + 1)
                else:
                    print(f"{pad}{key}: {_flat(val)}")
        elif isinstance(obj, list):
            for item in obj:
                if isinstance(item, list) and _is_flat(item):
                    print(f"{pad}- {_flat(item)}")
                elif isinstance(item, (dict, list)):
                    emit(item, indent)
                else:
                    print(f"{pad}- {item}")

    emit(result)


def _is_flat(val):
    if isinstance(val, list):
        return all(not isinstance(x, (dict, list)) for x in val)
    return False


def _flat(val):
    if isinstance(val, list):
        return "[" + ", ".join(str(x) for x in val) + "]"
    if isinstance(val, dict) and not val:
        return "{}"
    return str(val)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qresidue",
        description="Decide q-th power residues modulo almost every prime "
        "via hyperplane coverings of F_q^k",
    )
    parser.add_argument("--json", action="store_true", help="emit a JSON envelope")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        return p

    p = add("decide", cmd_decide, help="verdict + covering certificate or witness")
    p.add_argument("--q", required=True)
    p.add_argument("--set", required=True)

    p = add("certificate", cmd_certificate, help="Skalba certificate or failing twist")
    p.add_argument("--q", required=True)
    p.add_argument("--set", required=True)
    p.add_argument("--c", default=None, help="twist vector, comma-separated")

    p = add("scan", cmd_scan, help="search for a counterexample prime")
    p.add_argument("--q", required=True)
    p.add_argument("--set", required=True)
    p.add_argument("--bound", type=int, required=True)

    p = add("census", cmd_census, help="empirical vs predicted failure density")
    p.add_argument("--q", required=True)
    p.add_argument("--set", required=True)
    p.add_argument("--bound", type=int, required=True)

    p = add("synthesize", cmd_synthesize, help="generate pencil-covering fixtures")
    p.add_argument("--q", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--primes", default=None)
    p.add_argument("--twists", default=None, help="'all' or a sample count")
    p.add_argument("--seed", type=int, default=0)

    p = add("oracle-check", cmd_oracle_check, help="covering vs Skalba brute force")
    p.add_argument("--q", required=True)
    p.add_argument("--k-max", dest="k_max", type=int, required=True)
    p.add_argument("--l-max", dest="l_max", type=int, required=True)
    p.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        args.q = _parse_q(args.q)
        if hasattr(args, "set"):
            args.set = _parse_set(args.set)
        if getattr(args, "c", None) is not None:
            args.c = _parse_set(args.c)
        if getattr(args, "primes", None) is not None:
            args.primes = _parse_set(args.primes)
        start = time.perf_counter()
        code, result = args.func(args)
        elapsed_ms = (time.perf_counter() - start) * 1000.0
    except (UsageError, GuardError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    envelope = {
        "schema_version": SCHEMA_VERSION,
        "command": args.command,
        "input": {
            key: val
            for key, val in vars(args).items()
            if key not in ("func", "json", "command") and val is not None
        },
        "result": result,
        "timing_ms": round(elapsed_ms, 3),
    }
    if args.json:
        json.dump(envelope, sys.stdout, default=str)
        print()
    else:
        print(f"command: {args.command}")
        _print_text(result)
    return code


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
