"""Command-line front end.

Exit codes: 0 success; 1 malformed input; 2 a theorem hypothesis needed by
the requested computation fails; 3 randomized seed trials disagreed; 4 two
routes that must agree did not (a bug or a genuine discovery).

All stdout is a pure function of the inputs and seeds; wall-clock timing is
only ever written to stderr, behind --timing.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import newton
from .core_engine import (CoreReport, adjoint_colon, check_adj_hypothesis,
                          check_colon_lemma, check_comes_out, containment_relation,
                          core_colon, core_mono, find_monomial_reduction,
                          first_coefficient_ideal, reduction_number)
from .errors import (GenericityError, HypothesisError, IdealParseError,
                     OracleDisagreementError)
from .formulas import (core_dim2, core_dim3, decompose, fci_dim2, fci_dim3,
                       parse_dim2, parse_dim3, weighted_core)
from .ideal_io import format_ideal, parse_ideal_file, parse_monomial
from .monomials import (MonomialIdeal, RingContext, monomial_str)
from .scalars import FieldSpec

EXIT_CODES = {
    IdealParseError: 1,
    HypothesisError: 2,
    GenericityError: 3,
    OracleDisagreementError: 4,
}

DEFAULT_CHAR = 65537


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise IdealParseError(message)


def _read_ideal(args):
    try:
        with open(args.file, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise IdealParseError(f"cannot read {args.file}: {exc.strerror}")
    ring, ideal = parse_ideal_file(data.decode("utf-8"))
    if getattr(args, "char", None) is not None:
        field = FieldSpec(args.char)
        ring = RingContext(ring.variable_names, field, ring.weights)
        ideal = MonomialIdeal(ring, ideal.gens)
    digest = hashlib.sha256(data).hexdigest()
    return ring, ideal, digest


def _emit(args, record, ideal=None, extra_lines=()):
    """One record to stdout: JSON object or commented text + generators."""
    if args.json:
        if ideal is not None:
            record["generators"] = [list(g) for g in ideal.gens]
        print(json.dumps(record, sort_keys=True, indent=2))
        return
    for key in sorted(record):
        if key in ("generators", "mono_generators", "colon_generators"):
            continue
        value = record[key]
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        print(f"# {key}: {value}")
    for line in extra_lines:
        print(line)
    if ideal is not None:
        print(format_ideal(ideal))


def _base_record(args, command, digest=None):
    rec = {"command": command}
    if digest:
        rec["input_sha256"] = digest
    return rec


def _report_flags(report: CoreReport):
    return {k: bool(v) for k, v in report.validity.items()}


def cmd_core(args) -> int:
    ring, ideal, digest = _read_ideal(args)
    rec = _base_record(args, "core", digest)
    rec["ring"] = list(ring.variable_names)
    rec["char"] = ring.field.characteristic
    seeds = (args.seed, args.seed + 1, args.seed + 2)

    colon_report = mono_report = None
    rd = find_monomial_reduction(ideal)
    if args.method in ("colon", "both"):
        if rd is None:
            raise HypothesisError("no monomial reduction: the pure-power "
                                  "candidate is not a reduction of this ideal")
        colon_report = core_colon(ideal, rd, t=args.t)
    if args.method in ("mono", "both"):
        mono_report = core_mono(ideal, seeds=seeds)

    if args.method == "colon":
        rec.update(method="colon", parameters=colon_report.parameters,
                   flags=_report_flags(colon_report))
        _emit(args, rec, colon_report.core)
        return 0
    if args.method == "mono":
        flags = _report_flags(mono_report)
        if rd is not None:
            colon_value = core_colon(ideal, rd, t=args.t)
            flags["colon_comparison"] = containment_relation(
                mono_report.core, colon_value.core)
            flags["colon_value_valid"] = colon_value.valid
        rec.update(method="mono", parameters=mono_report.parameters, flags=flags)
        _emit(args, rec, mono_report.core)
        return 0
    # both
    relation = containment_relation(mono_report.core, colon_report.core)
    flags = {"methods_agree": relation == "equal",
             "mono_vs_colon": relation,
             "colon_valid": colon_report.valid}
    rec.update(method="both", flags=flags,
               parameters={**colon_report.parameters, **mono_report.parameters})
    if relation == "equal":
        _emit(args, rec, mono_report.core)
        return 0
    rec["mono_generators"] = [list(g) for g in mono_report.core.gens]
    rec["colon_generators"] = [list(g) for g in colon_report.core.gens]
    names = ring.variable_names
    _emit(args, rec, None, extra_lines=(
        ["# mono value:"] + [monomial_str(g, names) for g in mono_report.core.gens]
        + ["# colon value:"] + [monomial_str(g, names) for g in colon_report.core.gens]))
    print(f"methods disagree: mono is a {relation} of the colon value",
          file=sys.stderr)
    return 4


def cmd_closure(args) -> int:
    ring, ideal, digest = _read_ideal(args)
    rec = _base_record(args, "closure", digest)
    rec.update(ring=list(ring.variable_names), char=ring.field.characteristic,
               method="newton-polyhedron", parameters={"power": args.power}, flags={})
    result = newton.closure_of_power(ideal, args.power)
    _emit(args, rec, result)
    return 0


def cmd_adjoint(args) -> int:
    ring, ideal, digest = _read_ideal(args)
    rec = _base_record(args, "adjoint", digest)
    rec.update(ring=list(ring.variable_names), char=ring.field.characteristic,
               method="newton-polyhedron", parameters={"power": args.power})
    result = newton.adjoint(ideal, args.power)
    flags = {}
    if args.power == ring.dimension:
        rd = find_monomial_reduction(ideal)
        if rd is not None:
            adjoint_colon(ideal, rd)  # raises on cross-oracle mismatch
            flags["colon_cross_check"] = True
    rec["flags"] = flags
    _emit(args, rec, result)
    return 0


def cmd_fci(args) -> int:
    ring, ideal, digest = _read_ideal(args)
    rec = _base_record(args, "fci", digest)
    result = first_coefficient_ideal(ideal)
    rec.update(ring=list(ring.variable_names), char=ring.field.characteristic,
               method="reduction-colon", parameters={}, flags={})
    _emit(args, rec, result)
    return 0


def cmd_rednum(args) -> int:
    ring, ideal, digest = _read_ideal(args)
    rec = _base_record(args, "rednum", digest)
    gens = [parse_monomial(tok, ring.variable_names)
            for tok in args.reduction.split(",") if tok.strip()]
    if not gens:
        raise IdealParseError("--reduction needs a comma-separated monomial list")
    J = MonomialIdeal(ring, gens)
    if not ideal.contains_ideal(J):
        raise HypothesisError("the candidate reduction is not inside the ideal")
    if not J.is_zero_dimensional():
        raise HypothesisError("the candidate reduction is not zero-dimensional")
    for v in ideal.gens:
        if not newton.np_member(J, v):
            raise HypothesisError("not a reduction: a generator lies outside "
                                  "the candidate's Newton polyhedron")
    r = reduction_number(J, ideal)
    rec.update(ring=list(ring.variable_names), char=ring.field.characteristic,
               method="power-iteration", parameters={}, flags={},
               reduction_number=r)
    if args.json:
        print(json.dumps(rec, sort_keys=True, indent=2))
    else:
        print(r)
    return 0


def cmd_formula(args) -> int:
    ring, ideal, digest = _read_ideal(args)
    rec = _base_record(args, "formula", digest)
    rec.update(ring=list(ring.variable_names), char=ring.field.characteristic)
    d = ring.dimension
    if d == 2:
        shape = parse_dim2(ideal)
        if shape is None:
            raise HypothesisError("ideal does not match the dimension-2 "
                                  "equigenerated shape mu(x^n, y^n, mixed)")
        closed = core_dim2(shape)
        mu = shape.mu
        stripped = MonomialIdeal(ring, [tuple(g[i] - mu[i] for i in range(2))
                                        for g in ideal.gens])
        general = core_colon(stripped).core.product(MonomialIdeal(ring, [mu]))
        params = {"n": shape.n, "ks": list(shape.ks), "delta": shape.delta,
                  "mu": list(shape.mu)}
        fci_value = None
        if not any(mu) and shape.delta == 1:
            fci_value = fci_dim2(shape)
    elif d == 3:
        shape = parse_dim3(ideal)
        if shape is None:
            raise HypothesisError("ideal does not match the dimension-3 "
                                  "equigenerated two-variable-mixed shape")
        closed = core_dim3(shape)  # raises HypothesisError when a > 1
        general = core_colon(ideal).core
        params = {"n": shape.n, "gcds": [shape.a, shape.b, shape.c],
                  "rescale": shape.delta}
        fci_value = fci_dim3(shape)
    else:
        raise HypothesisError("closed forms exist only for 2 or 3 variables")
    verdict = containment_relation(closed, general)
    if verdict != "equal":
        raise OracleDisagreementError(
            "closed-form core disagrees with the general algorithm")
    flags = {"matches_general_algorithm": True}
    if fci_value is not None:
        flags["fci_matches"] = fci_value == first_coefficient_ideal(ideal)
        if not flags["fci_matches"]:
            raise OracleDisagreementError(
                "closed-form coefficient ideal disagrees with the colon route")
    rec.update(method="closed-form", parameters=params, flags=flags)
    _emit(args, rec, closed)
    return 0


def cmd_weighted(args) -> int:
    weights = tuple(int(t) for t in args.weights.split(","))
    names = tuple(f"u{i+1}" for i in range(len(weights)))
    ring = RingContext(names, FieldSpec(DEFAULT_CHAR), weights)
    result = weighted_core(ring, args.n, probe_normality=args.probe_normality)
    rec = _base_record(args, "weighted")
    rec.update(ring=list(names), char=DEFAULT_CHAR,
               method="weighted-piece", flags={
                   "gate": result.gate,
                   "normality_unverified": result.normality_unverified},
               parameters={"weights": list(weights), "n": args.n,
                           "threshold": result.threshold})
    _emit(args, rec, result.ideal)
    return 0


def cmd_decompose(args) -> int:
    ks = tuple(int(t) for t in args.k.split(",")) if args.k else ()
    alpha, betas = decompose(args.t, args.n, ks,
                             require_alpha_nonneg=args.require_alpha_nonneg)
    rec = _base_record(args, "decompose")
    rec.update(method="lexicographic-search", flags={},
               parameters={"t": args.t, "n": args.n, "ks": list(ks)},
               alpha=alpha, betas=list(betas))
    if args.json:
        print(json.dumps(rec, sort_keys=True, indent=2))
    else:
        print(f"alpha {alpha}")
        print("betas " + (",".join(str(b) for b in betas) if betas else "-"))
    return 0


def cmd_check(args) -> int:
    ring, ideal, digest = _read_ideal(args)
    rd = find_monomial_reduction(ideal)
    if rd is None:
        raise HypothesisError("checks need the pure-power monomial reduction")
    d = ring.dimension
    if args.property == "colon-lemma":
        t = args.t if args.t is not None else max(rd.r, 1)
        i = args.i if args.i is not None else 1
        verdict = check_colon_lemma(ideal, rd, t, i)
        params = {"t": t, "i": i}
    elif args.property == "comes-out":
        s = args.t if args.t is not None else rd.r
        i_max = args.i if args.i is not None else 3
        verdict = check_comes_out(ideal, rd, s, i_max)
        params = {"s": s, "i_max": i_max}
    else:  # adj-hypothesis
        t = args.t if args.t is not None else max(rd.r, d - 1)
        verdict = check_adj_hypothesis(ideal, rd, t)
        params = {"t": t}
    rec = _base_record(args, "check", digest)
    rec.update(ring=list(ring.variable_names), char=ring.field.characteristic,
               method=args.property, parameters=params, flags={}, holds=verdict)
    if args.json:
        print(json.dumps(rec, sort_keys=True, indent=2))
    else:
        print("true" if verdict else "false")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="monocore",
                     description="cores, closures, adjoints and coefficient "
                                 "ideals of zero-dimensional monomial ideals")
    parser.add_argument("--timing", action="store_true",
                        help="print wall time to stderr")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true", help="JSON output")
        return p

    p = add("core", cmd_core, help="core of a zero-dimensional monomial ideal")
    p.add_argument("file")
    p.add_argument("--method", choices=("mono", "colon", "both"), default="both")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--char", type=int, default=None,
                   help="override the file's characteristic")
    p.add_argument("--t", type=int, default=None,
                   help="colon exponent (defaults to the reduction number)")

    p = add("closure", cmd_closure, help="integral closure of a power")
    p.add_argument("file")
    p.add_argument("--power", type=int, default=1)

    p = add("adjoint", cmd_adjoint, help="adjoint (multiplier) ideal of a power")
    p.add_argument("file")
    p.add_argument("--power", type=int, default=1)

    p = add("fci", cmd_fci, help="first coefficient ideal")
    p.add_argument("file")

    p = add("rednum", cmd_rednum, help="reduction number w.r.t. a given reduction")
    p.add_argument("file")
    p.add_argument("--reduction", required=True,
                   help='comma-separated monomials, e.g. "x^6,y^9"')

    p = add("formula", cmd_formula, help="closed-form core with cross-check")
    p.add_argument("file")

    p = add("weighted", cmd_weighted, help="core of a weighted-ring piece")
    p.add_argument("--weights", required=True, help="e.g. 2,3,5")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--probe-normality", type=int, default=None,
                   help="accept after a finite normality probe up to this power")

    p = add("decompose", cmd_decompose, help="t = alpha n + sum beta_i k_i")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", default="", help="comma-separated k_i list")
    p.add_argument("--require-alpha-nonneg", action="store_true")

    p = add("check", cmd_check, help="test a colon identity on an ideal")
    p.add_argument("file")
    p.add_argument("--property", required=True,
                   choices=("colon-lemma", "comes-out", "adj-hypothesis"))
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--i", type=int, default=None)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except IdealParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    t0 = time.monotonic()
    try:
        code = args.fn(args)
    except tuple(EXIT_CODES) as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_CODES[type(exc)]
    if args.timing:
        print(f"elapsed: {time.monotonic() - t0:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
