"""Command-line front end.

    nihocorr dist <p> <m> [--verify] [--format json|csv|text]
    nihocorr quantity <name> <p> <m> [--verify]
    nihocorr verify-all <max_q> [--quick]

Exit codes: 0 success, 2 precondition violation, 3 verification mismatch,
64 usage error.
"""

import argparse
from dataclasses import dataclass, field
import io
import json
import sys

import numpy as np

from . import charsums, codes, k3, niho
from .errors import PreconditionError, VerificationError
from .field import build_field_context, restriction_table
from .numtheory import is_prime, primes_up_to

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_MISMATCH = 3
EXIT_USAGE = 64

ORACLE_MAX_Q = 350
LAMBDA_ORACLE_MAX_Q = 200_000
SURFACE_CHECK_MAX_Q = 50
QUANTITIES = ("lambda", "aq", "b3", "n4", "n5", "gamma2", "gamma5", "b5")


@dataclass
class Check:
    name: str
    passed: bool
    details: str = ""


@dataclass
class ReportRecord:
    command: str
    p: int
    m: int
    rows: list = field(default_factory=list)  # [(value, count)]
    outputs: dict = field(default_factory=dict)  # name -> int
    checks: list = field(default_factory=list)

    @property
    def q(self) -> int:
        return self.p ** self.m

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> str:
        obj = {
            "command": self.command,
            "p": str(self.p),
            "m": str(self.m),
            "q": str(self.q),
            "rows": [{"value": str(v), "count": str(c)} for v, c in self.rows],
            "outputs": {k: str(v) for k, v in self.outputs.items()},
            "checks": [{"name": c.name, "passed": c.passed, "details": c.details} for c in self.checks],
        }
        return json.dumps(obj, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ReportRecord":
        obj = json.loads(text)
        rec = cls(
            obj["command"],
            int(obj["p"]),
            int(obj["m"]),
            [(int(r["value"]), int(r["count"])) for r in obj["rows"]],
            {k: int(v) for k, v in obj.get("outputs", {}).items()},
            [Check(c["name"], bool(c["passed"]), c.get("details", "")) for c in obj["checks"]],
        )
        if str(rec.q) != obj["q"]:
            raise ValueError("q does not match p^m")
        return rec

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("value,count\n")
        for v, c in self.rows:
            buf.write(f"{v},{c}\n")
        return buf.getvalue()

    @staticmethod
    def rows_from_csv(text: str) -> list:
        lines = text.strip("\n").split("\n")
        if lines[0] != "value,count":
            raise ValueError("missing CSV header")
        return [tuple(int(x) for x in line.split(",")) for line in lines[1:]]

    def to_text(self) -> str:
        lines = [f"{self.command} p={self.p} m={self.m} q={self.q}"]
        if self.rows:
            width = max(len(str(v)) for v, _ in self.rows)
            lines.append(f"{'value':>{width}}  count")
            lines += [f"{v:>{width}}  {c}" for v, c in self.rows]
        for k, v in self.outputs.items():
            lines.append(f"{k} = {v}")
        for c in self.checks:
            lines.append(f"check {c.name}: {'PASS' if c.passed else 'FAIL'} {c.details}".rstrip())
        return "\n".join(lines) + "\n"


# -- dist ---------------------------------------------------------------------

def _require_prime(p, m):
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if m < 1:
        raise PreconditionError("m must be at least 1")


def cmd_dist(p: int, m: int, verify: bool = False) -> ReportRecord:
    _require_prime(p, m)
    table = niho.distribution_closed(p, m)
    rec = ReportRecord("dist", p, m, list(table.rows))
    if verify:
        q = p ** m
        method = "direct" if q <= ORACLE_MAX_Q else "incidence"
        oracle = niho.distribution_oracle_for(p, m, method)
        got = oracle.as_dict()
        for v, c in table.rows:
            rec.checks.append(Check(f"row {v}", got[v] == c, f"oracle={got[v]} ({method})"))
    return rec


# -- quantity -------------------------------------------------------------------

def _closed_quantity(name, p, m):
    if name == "lambda":
        return charsums.lambda_closed(p, m)
    if name == "aq":
        return k3.a_q(p, m)
    if name == "b3":
        return niho.b3_closed(p, m)
    if name == "n4":
        return niho.n4_closed(p, m)
    if name == "n5":
        return niho.n5_closed(p, m)
    if name == "gamma2":
        return codes.gamma_d(2, p, m)
    if name == "gamma5":
        return codes.gamma_d(5, p, m)
    if name == "b5":
        return codes.b5_pure_weight(p, m)
    raise PreconditionError(f"unknown quantity {name!r}")  # argparse guards this


def _oracle_quantity(name, p, m):
    """(check name, oracle value) pairs, or [] when q is out of oracle range."""
    q = p ** m
    small = lambda: build_field_context(p, m)
    big = lambda: build_field_context(p, 2 * m)
    if name == "lambda":
        return [("direct sum", charsums.lambda_direct(small()))] if q <= LAMBDA_ORACLE_MAX_Q else []
    if name == "aq":
        out = []
        if m == 1 and p not in (3, 5):
            out.append(("modular form", k3.a_p_modular_form(p)))
        if q <= SURFACE_CHECK_MAX_Q:
            sc = k3.count_surface_points(small())
            tail = 1 + q * q + q * (16 + 4 * k3.q_over_3(p, m))
            out.append(("surface count", sc.NXtilde - tail))
        return out
    if q > ORACLE_MAX_Q:
        return []
    if name == "b3":
        return [("direct evaluation", niho.b3_brute_force(big()))]
    if name == "n4":
        return [("unit-circle triples", niho.n4_counts_brute(big()).n4),
                ("root-count histogram", niho.root_count_histogram(big()).counts[4])]
    if name == "n5":
        return [("root-count histogram", niho.root_count_histogram(big()).counts[5]),
                ("zero-sum 5-subsets", codes.b5_brute_force(big()) // (q + 1))]
    if name == "gamma2":
        return [("pattern tuples", codes.gamma_d_brute(2, small()))]
    if name == "gamma5":
        return [("pattern tuples", codes.gamma_d_brute(5, small()))]
    if name == "b5":
        return [("zero-sum 5-subsets", codes.b5_brute_force(big()))]
    return []


def cmd_quantity(name: str, p: int, m: int, verify: bool = False) -> ReportRecord:
    _require_prime(p, m)
    value = _closed_quantity(name, p, m)
    rec = ReportRecord("quantity", p, m, outputs={name: value})
    if verify:
        for check, got in _oracle_quantity(name, p, m):
            rec.checks.append(Check(check, got == value, f"oracle={got}"))
    return rec


# -- verify-all ----------------------------------------------------------------

def prime_powers_up_to(max_q: int):
    out = []
    for p in primes_up_to(max_q):
        q, m = p, 1
        while q <= max_q:
            out.append((q, p, m))
            q, m = q * p, m + 1
    return sorted(out)


def _duality_check(p, m, samples=20):
    big = build_field_context(p, 2 * m)
    small = build_field_context(p, m)
    restrict = restriction_table(big, small)
    rng = np.random.default_rng(p * 1000 + m)
    picks = rng.integers(1, big.order, size=samples)
    return all(codes.duality_holds(big.from_index(int(a)), small, restrict) for a in picks)


def suite_checks(p: int, m: int, quick: bool = False):
    """Yield (name, thunk) pairs; each thunk returns True on success."""
    q = p ** m
    valid = niho.check_gcd_condition(p, m)
    small = lambda: build_field_context(p, m)
    big = lambda: build_field_context(p, 2 * m)

    if p >= 5:
        yield "lambda", lambda: charsums.lambda_closed(p, m) == charsums.lambda_direct(small())
    if m == 1 and p >= 7:
        yield "A_p", lambda: k3.a_p_coefficient(p) == k3.a_p_modular_form(p)
    if not quick and q <= SURFACE_CHECK_MAX_Q:
        yield "surface", lambda: k3.count_surface_points(small()).NXtilde == k3.surface_count_closed(p, m)
    yield "duality", lambda: _duality_check(p, m)
    if p >= 3:
        def patterns():
            ctx = small()
            return all(
                codes.pattern_count_closed(s, p, m) == codes.pattern_count_brute(s, ctx)
                for s in codes.SUPPORTED_PATTERNS
                if not (quick and s.size == 5)
            )
        yield "patterns", patterns
        yield "gamma2", lambda: codes.gamma_d(2, p, m) == codes.gamma_d_brute(2, small())
        if not quick:
            yield "gamma5", lambda: codes.gamma_d(5, p, m) == codes.gamma_d_brute(5, small())
            yield "b5", lambda: codes.b5_pure_weight(p, m) == codes.b5_brute_force(big())
    if not quick and q <= codes.MACWILLIAMS_MAX_Q:
        pts = [0.5 * np.exp(2j * np.pi * (k + 0.5) / 10) for k in range(10)]
        yield "macwilliams", lambda: codes.macwilliams_identity_check(big(), pts)
    if not valid:
        return
    yield "b3", lambda: niho.b3_closed(p, m) == niho.b3_brute_force(big())
    yield "moments", lambda: niho.moment_identities_check(niho.root_count_histogram(big()), p, m)
    if p >= 3:
        yield "n5", lambda: niho.n5_closed(p, m) == niho.root_count_histogram(big()).counts[5]
    if p >= 5:
        yield "n4", lambda: (niho.n4_intermediate_counts(big()).n4 == niho.n4_closed(p, m)
                             == niho.root_count_histogram(big()).counts[4])
        yield "distribution", lambda: (niho.distribution_closed(p, m).rows
                                       == niho.distribution_oracle(big()).rows)


def run_check(thunk):
    try:
        return bool(thunk()), ""
    except VerificationError as exc:
        return False, f"{type(exc).__name__}: {exc}"


def cmd_verify_all(max_q: int, quick: bool = False, out=None) -> bool:
    out = out or sys.stdout
    if max_q > ORACLE_MAX_Q:
        raise PreconditionError(f"max_q={max_q} exceeds the oracle range {ORACLE_MAX_Q}")
    all_ok = True
    for q, p, m in prime_powers_up_to(max_q):
        cells = []
        for name, thunk in suite_checks(p, m, quick):
            ok, why = run_check(thunk)
            all_ok &= ok
            cells.append(f"{name}={'PASS' if ok else 'FAIL'}")
            if why:
                print(f"q={q} {name}: {why}", file=sys.stderr)
        out.write(f"q={q:<4d} p={p:<3d} m={m}  " + " ".join(cells) + "\n")
    out.write(f"verify-all {max_q}: {'PASS' if all_ok else 'FAIL'}\n")
    return all_ok


# -- argument parsing ------------------------------------------------------------

class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nihocorr", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("dist", help="value distribution of the cross-correlation")
    d.add_argument("p", type=int)
    d.add_argument("m", type=int)
    d.add_argument("--verify", action="store_true", help="compare against root-count enumeration")
    d.add_argument("--format", choices=("json", "csv", "text"), default="text")

    qn = sub.add_parser("quantity", help="one intermediate quantity")
    qn.add_argument("name", choices=QUANTITIES)
    qn.add_argument("p", type=int)
    qn.add_argument("m", type=int)
    qn.add_argument("--verify", action="store_true")

    v = sub.add_parser("verify-all", help="run the invariant suite for all q <= max_q")
    v.add_argument("max_q", type=int)
    v.add_argument("--quick", action="store_true", help="skip the slowest checks")
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "dist":
            rec = cmd_dist(args.p, args.m, args.verify)
            fmt = args.format
        elif args.command == "quantity":
            rec = cmd_quantity(args.name, args.p, args.m, args.verify)
            sys.stdout.write(f"{rec.outputs[args.name]}\n")
            for c in rec.checks:
                sys.stdout.write(f"check {c.name}: {'PASS' if c.passed else 'FAIL'} {c.details}\n")
            return EXIT_OK if rec.ok else EXIT_MISMATCH
        else:
            return EXIT_OK if cmd_verify_all(args.max_q, args.quick) else EXIT_MISMATCH
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH

    if fmt == "json":
        sys.stdout.write(rec.to_json())
    elif fmt == "csv":
        sys.stdout.write(rec.to_csv())
    else:
        sys.stdout.write(rec.to_text())
    return EXIT_OK if rec.ok else EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
