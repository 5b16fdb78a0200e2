"""``multctl`` command-line front end.

Every command builds a report ``{command, inputs, result, verdict?, witness?,
timing_ms, seed?}``.  ``--json`` prints it as one JSON object; the plain form
prints the same fields flattened to ``key: value`` lines.

Exit codes: 0 success, 1 usage or input error, 2 a verification FAILS (or an
``--oracle`` cross-check disagrees), 3 inconclusive truncation.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import os
import re
import shlex
import sys
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Sequence

from . import harness
from .graded import (
    GradedSystem,
    TruncationInconclusive,
    asymptotic_multiplier_ideal,
    powers_system,
    validate,
)
from .lp import LPInputError
from .monomial import IdealInputError, MonomialIdeal, ZeroIdealError
from .newton import (
    DomainError,
    jumping_numbers,
    jumping_numbers_bruteforce,
    lct,
    multiplier_ideal,
    multiplier_ideal_bruteforce,
    newton_polyhedron,
    oracle_mode,
    unit_vector,
)
from .syntax import ParseError, default_names, parse_expression, parse_ideal, parse_rational, parse_variables, render_ideal

EXIT_OK, EXIT_USAGE, EXIT_FAILS, EXIT_INCONCLUSIVE = 0, 1, 2, 3

INPUT_ERRORS = (ParseError, IdealInputError, ZeroIdealError, DomainError, LPInputError, ValueError, OSError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class CommandReport:
    command: str
    inputs: dict[str, Any]
    result: dict[str, Any] = field(default_factory=dict)
    verdict: str | None = None
    witness: str | None = None
    timing_ms: int | None = None
    seed: int | None = None
    exit_code: int = EXIT_OK

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"command": self.command, "inputs": self.inputs, "result": self.result}
        if self.verdict is not None:
            out["verdict"] = self.verdict
        if self.witness is not None:
            out["witness"] = self.witness
        out["timing_ms"] = self.timing_ms
        if self.seed is not None:
            out["seed"] = self.seed
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines: list[str] = []
        _flatten("", self.to_dict(), lines)
        return "\n".join(lines)


def _flatten(prefix: str, value: Any, lines: list[str]) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else k, v, lines)
    elif isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, lines)
    elif isinstance(value, list):
        lines.append(f"{prefix}: {', '.join(str(v) for v in value)}")
    elif value is None:
        lines.append(f"{prefix}: -")
    elif isinstance(value, bool):
        lines.append(f"{prefix}: {'true' if value else 'false'}")
    else:
        lines.append(f"{prefix}: {value}")


# --------------------------------------------------------------------------
# input helpers


def _names(args, attr: str = "vars") -> tuple[str, ...] | None:
    raw = getattr(args, attr, None)
    return parse_variables(raw) if raw else None


def _ideal(text: str, names) -> tuple[MonomialIdeal, tuple[str, ...]]:
    expr = parse_expression(text, names)
    if not expr.variables:
        raise UsageError("cannot infer variables from the ideal; pass --vars")
    return expr.to_ideal(), expr.variables


def _rational(text: str | None, flag: str) -> Fraction:
    if text is None:
        raise UsageError(f"missing {flag}")
    return parse_rational(text)


def _positive_int(text: str | None, flag: str, default: int | None = None) -> int:
    if text is None:
        if default is None:
            raise UsageError(f"missing {flag}")
        return default
    try:
        v = int(text)
    except ValueError:
        raise UsageError(f"{flag} expects an integer, got {text!r}") from None
    if v < 0:
        raise UsageError(f"{flag} must be nonnegative")
    return v


def _workers() -> int:
    raw = os.environ.get("MULTCTL_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"MULTCTL_THREADS must be an integer, got {raw!r}") from None
    return max(1, n)


def load_graded_system(path: str | Path) -> tuple[GradedSystem, tuple[str, ...]]:
    """Read a graded-system file.

    Lines are ``key = value`` with ``#`` comments.  Required headers are
    ``arity`` and ``p_max``; ``vars`` is optional.  Every other key is an index
    ``p`` with an ideal as value.
    """
    text = Path(path).read_text()
    headers: dict[str, str] = {}
    entries: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        if key.isdigit():
            if int(key) in entries:
                raise ParseError(f"{path}:{lineno}: duplicate entry for p = {key}")
            entries[int(key)] = value
        elif key in ("arity", "p_max", "vars"):
            headers[key] = value
        else:
            raise ParseError(f"{path}:{lineno}: unknown key {key!r}")
    for key in ("arity", "p_max"):
        if key not in headers:
            raise ParseError(f"{path}: missing header {key!r}")
    arity, p_max = int(headers["arity"]), int(headers["p_max"])
    names = parse_variables(headers["vars"]) if "vars" in headers else default_names(arity)
    if len(names) != arity:
        raise ParseError(f"{path}: {len(names)} variable names for arity {arity}")
    if sorted(entries) != list(range(1, p_max + 1)):
        raise ParseError(f"{path}: entries must be exactly p = 1..{p_max}")
    system = GradedSystem(arity, p_max, tuple(parse_ideal(entries[p], names) for p in range(1, p_max + 1)))
    ok, pair = validate(system)
    if not ok:
        p, q = pair
        raise IdealInputError(f"{path}: a_{p} * a_{q} is not contained in a_{p + q}")
    return system, names


def _system(spec: str, names, p_max: int | None) -> tuple[GradedSystem, tuple[str, ...], str]:
    """A graded system from a file, or the powers of an inline ideal."""
    if spec.lstrip().startswith("<"):
        if p_max is None:
            raise UsageError("an inline ideal needs --pmax to build its powers system")
        I, names = _ideal(spec, names)
        return powers_system(I, p_max), names, f"powers {render_ideal(I, names)}"
    system, file_names = load_graded_system(spec)
    if names is not None and tuple(names) != tuple(file_names):
        raise UsageError(f"--vars disagrees with the variables of {spec}")
    if p_max is not None and p_max != system.p_max:
        raise UsageError(f"--pmax {p_max} disagrees with p_max = {system.p_max} in {spec}")
    return system, file_names, str(spec)


# --------------------------------------------------------------------------
# commands


def cmd_lct(args) -> CommandReport:
    I, names = _ideal(args.ideal, _names(args))
    value = lct(I)
    rep = CommandReport("lct", {"vars": ",".join(names), "ideal": render_ideal(I, names)}, {"lct": str(value)})
    if args.oracle:
        alt = newton_polyhedron(I).mu_facets(unit_vector(I.arity))
        rep.result["oracle"] = "agrees" if alt == value else f"disagrees: facet table gives {alt}"
        if alt != value:
            rep.exit_code = EXIT_FAILS
    return rep


def cmd_mi(args) -> CommandReport:
    I, names = _ideal(args.ideal, _names(args))
    c = _rational(args.coeff, "--coeff")
    J = multiplier_ideal(I, c)
    rep = CommandReport("mi", {"vars": ",".join(names), "ideal": render_ideal(I, names), "coeff": str(c)},
                        {"ideal": render_ideal(J, names)})
    if args.oracle:
        scans = {"full_scan": multiplier_ideal(I, c, full_scan=True), "lp": multiplier_ideal_bruteforce(I, c)}
        bad = [k for k, v in scans.items() if v != J]
        rep.result["oracle"] = "agrees" if not bad else "disagrees: " + ", ".join(bad)
        if bad:
            rep.exit_code = EXIT_FAILS
    return rep


def cmd_jn(args) -> CommandReport:
    I, names = _ideal(args.ideal, _names(args))
    T = _rational(args.max, "--max")
    values = jumping_numbers(I, T)
    rep = CommandReport("jn", {"vars": ",".join(names), "ideal": render_ideal(I, names), "max": str(T)},
                        {"jumping_numbers": [str(x) for x in values]})
    if args.oracle:
        alt = jumping_numbers_bruteforce(I, T)
        rep.result["oracle"] = "agrees" if alt == values else "disagrees with the LP scan"
        if alt != values:
            rep.exit_code = EXIT_FAILS
    return rep


def cmd_amult(args) -> CommandReport:
    p = _positive_int(args.p, "--p", 1)
    q_max = _positive_int(args.qmax, "--qmax", 2)
    gamma = _rational(args.coeff, "--coeff")
    p_max = _positive_int(args.pmax, "--pmax") if args.pmax is not None else (p * q_max if args.system.lstrip().startswith("<") else None)
    system, names, label = _system(args.system, _names(args), p_max)
    inputs = {"vars": ",".join(names), "system": label, "p_max": str(system.p_max), "p": str(p),
              "coeff": str(gamma), "qmax": str(q_max)}
    try:
        res = asymptotic_multiplier_ideal(system, p, gamma, q_max)
    except TruncationInconclusive as exc:
        return CommandReport("amult", inputs, {"error": str(exc)}, verdict="Inconclusive", exit_code=EXIT_INCONCLUSIVE)
    rep = CommandReport("amult", inputs, {"ideal": render_ideal(res.ideal, names), "stabilized": res.stabilized})
    if not res.stabilized:
        rep.verdict = "Inconclusive"
        rep.result["note"] = "lower bound: no stabilization within qmax"
        rep.exit_code = EXIT_INCONCLUSIVE
    return rep


def _single_report(args) -> harness.VerificationReport:
    kind, pos = args.kind, args.ideals
    names = _names(args)
    need = {"thm1": 2, "equality": 2, "lemma": 2, "main": 2, "thm2": 2, "approx": 1, "subvariety": 1, "jumpshift": 1}[kind]
    if len(pos) != need:
        raise UsageError(f"verify {kind} takes {need} ideal argument(s) (or --trials)")
    if kind == "thm2":
        m_max = _positive_int(args.mmax, "--mmax", 2)
        q_max = _positive_int(args.qmax, "--qmax", 2)
        p = _positive_int(args.p, "--p", 1)
        p_max = _positive_int(args.pmax, "--pmax") if args.pmax is not None else p * max(m_max, q_max)
        A, na, _ = _system(pos[0], names, p_max if pos[0].lstrip().startswith("<") else None)
        B, nb, _ = _system(pos[1], na, p_max if pos[1].lstrip().startswith("<") else None)
        return harness.verify_asymptotic(A, B, p, m_max, q_max, _rational(args.coeff, "--coeff"), names=na)
    if kind in ("equality", "lemma") or (kind == "main" and args.product_space):
        a, na = _ideal(pos[0], names)
        b, nb = _ideal(pos[1], _names(args, attr="vars_b"))
        gamma = _rational(args.coeff, "--coeff")
        if kind == "main":
            m = _positive_int(args.m, "--m")
            n = _positive_int(args.n, "--n")
            return harness.verify_main_inclusion(harness.powers_family(a, m, n), harness.powers_family(b, m, n),
                                                 m, n, gamma, product_space=True, names=na, names_b=nb)
        fn = harness.verify_product_equality if kind == "equality" else harness.verify_sum_equals_intersection
        return fn(a, b, gamma, names_a=na, names_b=nb)
    if need == 2:
        expr_names = names
        if expr_names is None:
            # infer a shared variable order from both ideals
            seen: list[str] = []
            for text in pos:
                for v in parse_expression(text).variables:
                    if v not in seen:
                        seen.append(v)
            expr_names = tuple(seen)
        a, na = _ideal(pos[0], expr_names)
        b, _ = _ideal(pos[1], expr_names)
        gamma = _rational(args.coeff, "--coeff")
        if kind == "thm1":
            return harness.verify_sum_inclusion(a, b, gamma, names=na)
        m = _positive_int(args.m, "--m")
        n = _positive_int(args.n, "--n")
        return harness.verify_main_inclusion(harness.powers_family(a, m, n), harness.powers_family(b, m, n),
                                             m, n, gamma, names=na)
    a, na = _ideal(pos[0], names)
    if kind == "approx":
        return harness.verify_approximation(a, _positive_int(args.p, "--p"), _rational(args.coeff, "--coeff"),
                                            _rational(args.eps, "--eps"), names=na)
    r = _positive_int(args.r, "--r")
    if kind == "subvariety":
        return harness.verify_subvariety(a, r, _rational(args.coeff, "--coeff"), names=na)
    return harness.verify_jumping_shift(a, r, _rational(args.max, "--max"), names=na)


def _verdict_exit(verdicts: Sequence[str]) -> tuple[str, int]:
    if "FAILS" in verdicts:
        return "FAILS", EXIT_FAILS
    if "Inconclusive" in verdicts:
        return "Inconclusive", EXIT_INCONCLUSIVE
    if "Holds" in verdicts:
        return "Holds", EXIT_OK
    return "HoldsWithEquality", EXIT_OK


def _oracle_compare(rep: harness.VerificationReport) -> str | None:
    with oracle_mode():
        alt = harness.replay(rep.theorem_id, rep.params)
    if (alt.lhs, alt.rhs, alt.verdict) != (rep.lhs, rep.rhs, rep.verdict):
        return "oracle disagrees (full-box scan with uniform alpha grid)"
    return None


def cmd_verify(args) -> CommandReport:
    command = f"verify {args.kind}"
    if args.trials is not None:
        trials = _positive_int(args.trials, "--trials")
        if trials < 1:
            raise UsageError("--trials must be at least 1")
        seed = int(args.seed)
        reports = harness.run_campaign(args.kind, trials, seed, workers=_workers())
        return _aggregate(command, {"kind": args.kind, "trials": str(trials)}, reports, seed, args.oracle)
    rep = _single_report(args)
    out = CommandReport(command, rep.params, {"theorem": rep.theorem_id.value, "lhs": rep.render_side(rep.lhs),
                                             "rhs": rep.render_side(rep.rhs)},
                        verdict=rep.verdict.value, witness=rep.render_witness())
    if rep.note:
        out.result["note"] = rep.note
    _, out.exit_code = _verdict_exit([rep.verdict.value])
    if args.oracle:
        problem = _oracle_compare(rep)
        out.result["oracle"] = problem or "agrees"
        if problem:
            out.exit_code = EXIT_FAILS
    return out


def _aggregate(command, inputs, reports, seed, oracle) -> CommandReport:
    counts = Counter(r.verdict.value for r in reports)
    verdict, code = _verdict_exit(list(counts))
    entries = []
    mismatches = 0
    for i, r in enumerate(reports):
        entry = {"trial": i, **r.to_dict()}
        if oracle:
            problem = _oracle_compare(r)
            entry["oracle"] = problem or "agrees"
            mismatches += problem is not None
        entries.append(entry)
    result: dict[str, Any] = {"counts": {k: counts[k] for k in sorted(counts)}, "reports": entries}
    if oracle:
        result["oracle_mismatches"] = mismatches
        if mismatches:
            code = EXIT_FAILS
    witness = next((e.get("witness") for e in entries if e["verdict"] == "FAILS"), None)
    return CommandReport(command, inputs, result, verdict=verdict, witness=witness, seed=seed, exit_code=code)


# --------------------------------------------------------------------------
# regression corpus


@dataclass
class CorpusEntry:
    argv: list[str]
    expected: str


def load_corpus(text: str | None = None) -> list[CorpusEntry]:
    """Parse ``$ <command>`` blocks followed by their expected plain output."""
    if text is None:
        text = resources.files("multctl").joinpath("data/corpus.txt").read_text()
    entries: list[CorpusEntry] = []
    current: CorpusEntry | None = None
    body: list[str] = []
    for line in text.splitlines():
        if line.startswith("$ "):
            if current is not None:
                current.expected = "\n".join(body).strip("\n")
                entries.append(current)
            current, body = CorpusEntry(shlex.split(line[2:]), ""), []
        elif line.startswith("#") and current is None:
            continue
        elif current is not None:
            body.append(line)
    if current is not None:
        current.expected = "\n".join(body).strip("\n")
        entries.append(current)
    return entries


def run_captured(argv: Sequence[str]) -> tuple[int, str]:
    """Run the CLI in-process with timing disabled; return ``(exit code, stdout)``."""
    argv = list(argv)
    if "--no-timing" not in argv:
        argv.append("--no-timing")
    buf, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, buf.getvalue().rstrip("\n")


def run_corpus(entries: Sequence[CorpusEntry] | None = None) -> list[dict]:
    results = []
    for entry in entries if entries is not None else load_corpus():
        _, got = run_captured(entry.argv)
        results.append({"command": shlex.join(entry.argv), "passed": got == entry.expected})
    return results


def cmd_campaign(args) -> CommandReport:
    trials = _positive_int(args.trials, "--trials", 20)
    if trials < 1:
        raise UsageError("--trials must be at least 1")
    seed = int(args.seed)
    workers = _workers()
    counts: dict[str, dict[str, int]] = {}
    entries = []
    all_verdicts: list[str] = []
    mismatches = 0
    for kind in harness.CAMPAIGN_KINDS:
        reports = harness.run_campaign(kind, trials, seed, workers=workers)
        c = Counter(r.verdict.value for r in reports)
        counts[kind] = {k: c[k] for k in sorted(c)}
        all_verdicts.extend(c)
        for i, r in enumerate(reports):
            entry = {"kind": kind, "trial": i, **r.to_dict()}
            if args.oracle:
                problem = _oracle_compare(r)
                entry["oracle"] = problem or "agrees"
                mismatches += problem is not None
            entries.append(entry)
    corpus = run_corpus()
    failed = [c["command"] for c in corpus if not c["passed"]]
    verdict, code = _verdict_exit(all_verdicts)
    # An inconclusive truncation on a random instance is reported, not fatal.
    if code == EXIT_INCONCLUSIVE:
        code = EXIT_OK
    result: dict[str, Any] = {
        "counts": counts,
        "corpus": {"total": len(corpus), "passed": len(corpus) - len(failed), "failed": failed},
        "reports": entries,
    }
    if args.oracle:
        result["oracle_mismatches"] = mismatches
    if failed or mismatches:
        code = EXIT_FAILS
    witness = next((e.get("witness") for e in entries if e["verdict"] == "FAILS"), None)
    return CommandReport("campaign", {"trials": str(trials)}, result, verdict=verdict, witness=witness,
                         seed=seed, exit_code=code)


# --------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--vars", help="comma-separated variable names, in order")
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--oracle", action="store_true", help="cross-check against brute-force oracles")
    common.add_argument("--no-timing", action="store_true", help="report timing_ms as null (reproducible output)")

    parser = _Parser(prog="multctl", description="Multiplier ideals of monomial ideals, computed exactly.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("lct", parents=[common], help="log canonical threshold")
    p.add_argument("ideal")
    p = sub.add_parser("mi", parents=[common], help="multiplier ideal I(c*a)")
    p.add_argument("ideal")
    p.add_argument("--coeff", required=True, help="rational coefficient c")
    p = sub.add_parser("jn", parents=[common], help="jumping numbers in (0, max]")
    p.add_argument("ideal")
    p.add_argument("--max", required=True, help="upper end of the range")
    p = sub.add_parser("amult", parents=[common], help="truncated asymptotic multiplier ideal")
    p.add_argument("system", help="graded-system file, or an inline ideal whose powers are used")
    p.add_argument("--coeff", required=True, help="rational coefficient c")
    p.add_argument("--p", help="level of the system (default 1)")
    p.add_argument("--qmax", help="largest q tried when stabilising (default 2)")
    p.add_argument("--pmax", help="truncation for an inline ideal (default p*qmax)")

    p = sub.add_parser("verify", parents=[common], help="check one statement on an instance or random trials")
    p.add_argument("kind", choices=harness.CAMPAIGN_KINDS)
    p.add_argument("ideals", nargs="*")
    p.add_argument("--vars-b", help="variables of the second factor (product-space statements)")
    p.add_argument("--coeff", help="rational coefficient gamma")
    p.add_argument("--max", help="upper end T of the jump window (jumpshift)")
    p.add_argument("--eps", help="perturbation (approx)")
    p.add_argument("--p", help="power of the ideal (approx) or level of the systems (thm2)")
    p.add_argument("--r", help="number of added variables (subvariety, jumpshift)")
    p.add_argument("--m", help="family size (main)")
    p.add_argument("--n", help="ambient dimension for the 1/n scaling (main)")
    p.add_argument("--mmax", help="number of summands (thm2, default 2)")
    p.add_argument("--qmax", help="largest q tried when stabilising (thm2, default 2)")
    p.add_argument("--pmax", help="truncation for inline ideals (thm2)")
    p.add_argument("--product-space", action="store_true", help="main: families live in disjoint variables")
    p.add_argument("--trials", help="run this many random instances instead of one")
    p.add_argument("--seed", type=int, default=0, help="campaign seed (default 0)")

    p = sub.add_parser("campaign", parents=[common], help="random trials of every statement plus the regression corpus")
    p.add_argument("--trials", help="trials per statement (default 20)")
    p.add_argument("--seed", type=int, default=0, help="campaign seed (default 0)")
    return parser


def _parse(parser: argparse.ArgumentParser, argv: list[str]) -> argparse.Namespace:
    # "--coeff -1/2" would otherwise read the negative rational as a flag
    joined: list[str] = []
    for tok in argv:
        if joined and re.match(r"-\d", tok) and joined[-1].startswith("--") and "=" not in joined[-1]:
            joined[-1] = f"{joined[-1]}={tok}"
        else:
            joined.append(tok)
    args, extra = parser.parse_known_args(joined)
    # ideals given after options land in ``extra``
    stray = [t for t in extra if t.startswith("-") or not hasattr(args, "ideals")]
    if stray:
        raise UsageError(f"multctl: unrecognized arguments: {' '.join(stray)}")
    if extra:
        args.ideals = list(args.ideals) + extra
    return args


COMMANDS = {"lct": cmd_lct, "mi": cmd_mi, "jn": cmd_jn, "amult": cmd_amult, "verify": cmd_verify, "campaign": cmd_campaign}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = _parse(parser, list(sys.argv[1:] if argv is None else argv))
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    start = time.perf_counter()
    try:
        report = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"multctl {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except INPUT_ERRORS as exc:
        print(f"multctl {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not args.no_timing:
        report.timing_ms = round((time.perf_counter() - start) * 1000)
    print(report.to_json() if args.json else report.to_text())
    return report.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
