"""Command-line interface: one binary, one subcommand per analysis.

Exit codes: 0 success/certified, 1 refuted, 2 input error, 3 budget
exhausted, 4 degenerate instance.  All output is UTF-8; pass --json for
machine-readable reports.  Reports echo the command, a digest of the
input, the rule citations behind each verdict, and timing.
"""

import argparse
import hashlib
import json
import os
import sys
import time
from fractions import Fraction

from gkzrational import groebner
from gkzrational.cayley import (
    DEFAULT_CIRCUIT_BUDGET,
    DEFAULT_NODE_BUDGET,
    classify,
    detect_cayley,
    is_essential,
)
from gkzrational.circuits import enumerate_circuits, is_balanced
from gkzrational.errors import (
    BudgetExceeded,
    ConfigurationError,
    DegenerateInstance,
    GKZError,
    ParseError,
)
from gkzrational.exprparse import format_fraction, parse
from gkzrational.polytope import Configuration, facial_subsets, is_spanning
from gkzrational.residue import ResidueProblem, toric_residue
from gkzrational.resultant import generic_resultant, resultant_value
from gkzrational.weyl import verify_hypergeometric

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_DEGENERATE = 4


def _digest(data):
    return hashlib.sha256(data.encode("utf-8")).hexdigest()[:16]


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
        return json.loads(text), _digest(text)
    except OSError as exc:
        raise ConfigurationError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"invalid JSON in {path}: {exc}") from None


def _load_config(path):
    payload, digest = _load_json(path)
    if isinstance(payload, dict) and "config" in payload:
        payload = payload["config"]
    return Configuration.from_json_dict(payload), digest


def _load_function_text(value):
    if value and os.path.exists(value):
        with open(value, "r", encoding="utf-8") as fh:
            return fh.read().strip()
    return value


class Report:
    def __init__(self, command, digest, seed):
        self.command = command
        self.digest = digest
        self.seed = seed
        self.rules = []
        self.result = None
        self.started = time.monotonic()

    def finish(self):
        return {
            "command": self.command,
            "input_digest": self.digest,
            "seed": self.seed,
            "result": self.result,
            "rules": self.rules,
            "elapsed_ms": round(1000 * (time.monotonic() - self.started), 3),
        }


def _emit(args, report, human_lines):
    if args.json:
        print(json.dumps(report.finish(), indent=1, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


RULE_TEXT = {
    "point": "a single point has a monomial discriminant",
    "pyramid": "a pyramid has trivial discriminant 1",
    "essential-cayley": "essential Cayley configurations are gkz-rational "
                        "(their discriminant is the sparse resultant, realized "
                        "by a toric residue)",
    "unbalanced-spanning-circuit": "an unbalanced circuit contained in no "
                                   "proper face rules out rational "
                                   "hypergeometric denominators",
    "three-parallel-lines": "a 3-space configuration on three parallel lines "
                            "has trivial discriminant 1",
    "low-dimension": "in affine dimension <= 3, only essential Cayley "
                     "configurations are gkz-rational",
    "cayley-conjecture": "no essential Cayley structure found; conjecturally "
                         "not gkz-rational",
}


def cmd_classify(args):
    config, digest = _load_config(args.input)
    report = Report("classify", digest, args.seed)
    result = classify(config,
                      node_budget=args.max_subsets,
                      circuit_budget=args.budget or DEFAULT_CIRCUIT_BUDGET)
    payload = result.to_json_dict()
    report.result = payload
    report.rules.append(f"{result.rule}: {RULE_TEXT.get(result.rule, '')}")
    lines = [f"verdict: {result.verdict}",
             f"rule: {result.rule} ({RULE_TEXT.get(result.rule, '')})",
             f"witness: {json.dumps(payload['witness'])}"]
    lines += [f"note: {n}" for n in result.notes]
    _emit(args, report, lines)
    return EXIT_OK


def cmd_circuits(args):
    config, digest = _load_config(args.input)
    report = Report("circuits", digest, args.seed)
    circuits = enumerate_circuits(config)
    payload = []
    lines = [f"{len(circuits)} circuit(s)"]
    for c in circuits:
        entry = c.to_json_dict()
        entry["spanning"] = is_spanning(config, c.support)
        payload.append(entry)
        tag = "balanced" if entry["balanced"] else "unbalanced"
        span = "spanning" if entry["spanning"] else "non-spanning"
        lines.append(f"  support {entry['support']} b={entry['b']} "
                     f"rho={entry['rho']} {tag} {span}")
    report.result = {"circuits": payload}
    _emit(args, report, lines)
    return EXIT_OK


def cmd_faces(args):
    config, digest = _load_config(args.input)
    report = Report("faces", digest, args.seed)
    faces = facial_subsets(config)
    report.result = {"faces": [f.to_json_dict() for f in faces]}
    lines = [f"{len(faces)} face(s) including the improper face"]
    for f in faces:
        lines.append(f"  {sorted(i + 1 for i in f.indices)}")
    _emit(args, report, lines)
    return EXIT_OK


def cmd_cayley(args):
    config, digest = _load_config(args.input)
    report = Report("cayley", digest, args.seed)
    structures = detect_cayley(config, node_budget=args.max_subsets)
    payload = []
    lines = [f"{len(structures)} Cayley structure(s)"]
    for cs in structures:
        ok, violating = is_essential(cs)
        entry = cs.to_json_dict()
        entry["essential"] = ok
        if not ok:
            entry["violating_subset"] = list(violating)
        payload.append(entry)
        lines.append(f"  groups {entry['groups']} essential={ok}")
    report.result = {"structures": payload}
    _emit(args, report, lines)
    return EXIT_OK


def cmd_verify(args):
    config, digest = _load_config(args.input)
    text = _load_function_text(args.function)
    report = Report("verify", _digest(digest + text), args.seed)
    f = parse(text, nvars=config.s)
    cert = verify_hypergeometric(config, f,
                                 budget=args.budget or groebner.DEFAULT_BUDGET)
    report.result = cert.to_json_dict()
    if cert.certified:
        beta = [format_fraction(b) for b in cert.beta]
        _emit(args, report, [f"certified: degree beta = ({', '.join(beta)})",
                             f"toric generators checked: {cert.generators}"])
        return EXIT_OK
    _emit(args, report, ["refuted",
                         f"counterexample operator: "
                         f"{json.dumps(cert.counterexample.to_json_dict())}"])
    return EXIT_REFUTED


def cmd_residue(args):
    payload, digest = _load_json(args.input)
    report = Report("residue", digest, args.seed)
    prob = ResidueProblem.from_json_dict(payload)
    value = toric_residue(prob, order=args.order,
                          budget=args.budget or groebner.DEFAULT_BUDGET)
    report.result = {"residue": format_fraction(value)}
    _emit(args, report, [f"residue of t^{list(prob.a)}: {format_fraction(value)}"])
    return EXIT_OK


def cmd_resultant(args):
    try:
        m, n = (int(x) for x in args.degrees.split(","))
    except ValueError:
        raise ConfigurationError("degrees must be 'm,n'") from None
    report = Report("resultant", _digest(args.degrees + (args.coeffs or "")), args.seed)
    if args.coeffs:
        groups = args.coeffs.split(";")
        if len(groups) != 2:
            raise ConfigurationError("coefficients must be two ';'-separated groups")
        f = [Fraction(c) for c in groups[0].split(",")]
        g = [Fraction(c) for c in groups[1].split(",")]
        if len(f) != m + 1 or len(g) != n + 1:
            raise ConfigurationError("coefficient counts must match degrees + 1")
        value = resultant_value(f, g, m, n)
        report.result = {"resultant": format_fraction(value)}
        _emit(args, report, [f"resultant: {format_fraction(value)}"])
        return EXIT_OK
    poly = generic_resultant(m, n)
    from gkzrational.exprparse import format_polynomial
    text = format_polynomial(poly)
    report.result = {"resultant": text,
                     "variables": f"x1..x{m + n + 2} (coefficients of f low "
                                  "to high, then of g)"}
    _emit(args, report, [text])
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gkzrat",
        description="Exact analysis of integer point configurations: "
                    "classification, circuits, faces, Cayley structure, "
                    "hypergeometric certification, resultants and toric "
                    "residues.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", "-i", required=True,
                           help="JSON input file")
        p.add_argument("--json", action="store_true",
                       help="emit a machine-readable report")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for randomized subroutines")
        p.add_argument("--max-subsets", type=int, default=DEFAULT_NODE_BUDGET,
                       help="search-node budget for the Cayley partition search")
        p.add_argument("--budget", type=int,
                       default=int(os.environ.get("GKZ_BUDGET", 0)) or None,
                       help="step budget override (default from GKZ_BUDGET)")

    p = sub.add_parser("classify", help="classify a configuration")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("circuits", help="enumerate circuits")
    common(p)
    p.set_defaults(func=cmd_circuits)

    p = sub.add_parser("faces", help="enumerate faces")
    common(p)
    p.set_defaults(func=cmd_faces)

    p = sub.add_parser("cayley", help="detect Cayley structures")
    common(p)
    p.set_defaults(func=cmd_cayley)

    p = sub.add_parser("verify", help="certify a rational function "
                                      "hypergeometric for a configuration")
    common(p)
    p.add_argument("--function", "-f", required=True,
                   help="expression text or a file containing it")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("residue", help="evaluate a toric residue instance")
    common(p)
    p.add_argument("--order", default="grevlex",
                   choices=["grevlex", "grlex", "lex"],
                   help="monomial order for the Groebner step")
    p.set_defaults(func=cmd_residue)

    p = sub.add_parser("resultant", help="Sylvester resultant (symbolic or "
                                         "numeric)")
    common(p, needs_input=False)
    p.add_argument("--degrees", "-d", required=True, help="degrees 'm,n'")
    p.add_argument("--coeffs", help="rational coefficients "
                                    "'a0,..,am;b0,..,bn' (low to high); "
                                    "omit for the symbolic resultant")
    p.set_defaults(func=cmd_resultant)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigurationError, ParseError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except DegenerateInstance as exc:
        print(f"degenerate instance: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except GKZError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
