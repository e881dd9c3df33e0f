"""Command line front end.

Verbs: invariants, fiber, classify, verify-paper.  Reports share one
shape: {command, inputs, bounds, computed, paper_asserted, verdicts};
with --json the report is emitted as a single canonical line (sorted
keys, fixed separators), so equal inputs give byte-identical output.

Exit codes: 0 all pass, 1 computed mismatch, 2 input or parse error,
3 resource ceiling (a bound too low to certify an answer).
"""

import argparse
import json
import sys

from .artin import local_invariants, quotient_algebra
from .errors import (
    IncompleteProfileError,
    InconclusiveError,
    InvalidFiberError,
    LimitExceededError,
    NotCofiniteError,
    ParseError,
    StructuralError,
    UnsupportedInputError,
)
from .fiber import (
    FiberSpec,
    classify_fcmt_cm,
    classify_fcmt_depth_le1,
    classify_gorenstein_fiber,
    fiber_dim_depth,
    fiber_multiplicity,
    fiber_present,
    fiber_profile,
    recognized_normal_form,
)
from .groebner import buchberger, is_cofinite, pure_power_caps
from .homalg import DEFAULT_TRUNC, bass_series, poincare_series
from .scalars import Rationals
from .specfile import load_spec_file, to_profile
from .verify import (
    verify_corpus_formulas,
    verify_theorem_1_1,
    verify_theorem_1_2,
)

DEFAULT_EXT_BOUND = 12
DEFAULT_HILBERT_MAX = 12
CROSSCHECK_MAX_LENGTH = 8
CROSSCHECK_MAX_EDIM = 4
CROSSCHECK_TRUNC = 8
CROSSCHECK_DIM_LIMIT = 10 ** 7

_VERDICT_EXIT = {"pass": 0, "fail": 1, "inconclusive": 3}


def canonical_json(report):
    return json.dumps(report, sort_keys=True, separators=(",", ":"),
                      default=str)


def _series_strs(s):
    if s is None:
        return None
    return [str(c) for c in s.coeffs]


def profile_dict(p):
    return {
        "name": p.name,
        "dim": p.dim,
        "depth": p.depth,
        "cm": p.cm,
        "edim": p.edim,
        "ecodepth": p.ecodepth,
        "type": p.type,
        "multiplicity": p.multiplicity,
        "length": p.length,
        "regular": p.regular,
        "gorenstein": p.gorenstein,
        "hypersurface": p.hypersurface,
        "analytically_unramified": p.analytically_unramified,
        "finite_cm_type": p.finite_cm_type,
        "curve_exponent": p.curve_exponent,
        "poincare_k": _series_strs(p.poincare_k),
        "bass": _series_strs(p.bass),
        "provenance": dict(sorted(p.provenance.items())),
    }


def _bounds(args):
    return {
        "trunc": args.trunc,
        "ext_bound": args.ext_bound,
        "hilbert_max": args.hilbert_max,
    }


def cmd_invariants(args):
    spec = load_spec_file(args.spec)
    if spec.ideal and not spec.declared_flags.get("regular"):
        G = buchberger(spec.core_ideal())
        if not is_cofinite(G):
            missing = [v for v, c in zip(spec.vars, pure_power_caps(G))
                       if c is None]
            raise NotCofiniteError(
                "ideal of %s is not cofinite: no pure power of %s among "
                "the lead monomials" % (spec.name, ", ".join(missing)),
                missing_vars=missing)
    prof = to_profile(spec, trunc=args.trunc, n_max=args.hilbert_max)
    report = {
        "command": "invariants",
        "inputs": {"spec": args.spec, "name": spec.name,
                   "cone_vars": list(spec.cone_vars)},
        "bounds": _bounds(args),
        "computed": {"profile": profile_dict(prof)},
        "paper_asserted": [],
        "verdicts": {"status": "computed"},
    }
    return report, 0


def _crosscheck_eligible(specS, specT, S, T, prof):
    if specS.cone_vars or specT.cone_vars:
        return "a cone factor is not artinian"
    if S.dim != 0 or T.dim != 0:
        return "both cores must be artinian"
    if S.length is None or T.length is None:
        return "factor lengths unknown"
    if S.length > CROSSCHECK_MAX_LENGTH or T.length > CROSSCHECK_MAX_LENGTH:
        return "factor length above %d" % CROSSCHECK_MAX_LENGTH
    if S.edim + T.edim > CROSSCHECK_MAX_EDIM:
        return "glued embedding dimension above %d" % CROSSCHECK_MAX_EDIM
    if prof.poincare_k is None or prof.bass is None:
        return "formula series unavailable for these factors"
    if set(specS.vars) & set(specT.vars):
        return "variable names overlap; rename one factor to glue"
    return None


def _fiber_crosscheck(specS, specT, S, T, prof, trunc):
    """Recompute the fiber profile from the glued presentation and diff
    it against the formula route."""
    n = min(trunc, CROSSCHECK_TRUNC)
    IR = fiber_present(specS.core_ideal(), specT.core_ideal())
    A = quotient_algebra(IR, name="direct fiber")
    inv = local_invariants(A)
    P = poincare_series(A, n, dim_limit=CROSSCHECK_DIM_LIMIT)
    B = bass_series(A, n, dim_limit=CROSSCHECK_DIM_LIMIT)
    mismatches = []

    def diff(field, formula, direct):
        if formula != direct:
            mismatches.append({"field": field, "formula": formula,
                               "direct": direct})

    diff("length", prof.length, inv["length"])
    diff("type", prof.type, inv["socle_dim"])
    diff("edim", prof.edim, inv["edim"])
    diff("multiplicity", prof.multiplicity, inv["length"])
    diff("poincare_k", [int(c) for c in prof.poincare_k.coeffs[:n + 1]],
         [int(c) for c in P.coeffs[:n + 1]])
    diff("bass", [int(c) for c in prof.bass.coeffs[:n + 1]],
         [int(c) for c in B.coeffs[:n + 1]])
    return {
        "status": "fail" if mismatches else "pass",
        "trunc": n,
        "presentation": [str(g) for g in IR.gens],
        "direct": {"length": inv["length"], "type": inv["socle_dim"],
                   "edim": inv["edim"],
                   "poincare_k": [int(c) for c in P.coeffs],
                   "bass": [int(c) for c in B.coeffs]},
        "mismatches": mismatches,
    }


def cmd_fiber(args):
    specS = load_spec_file(args.spec_s)
    specT = load_spec_file(args.spec_t)
    S = to_profile(specS, trunc=args.trunc, n_max=args.hilbert_max)
    T = to_profile(specT, trunc=args.trunc, n_max=args.hilbert_max)
    fs = FiberSpec(S, T)
    prof = fiber_profile(fs, trunc=args.trunc,
                         name="%s x_k %s" % (S.name, T.name))
    gor = classify_gorenstein_fiber(fs)
    computed = {
        "left": profile_dict(S),
        "right": profile_dict(T),
        "fiber": profile_dict(prof),
        "gorenstein_reason": gor["reason"],
    }
    verdicts = {"gorenstein": gor["gorenstein"]}
    code = 0
    skip = _crosscheck_eligible(specS, specT, S, T, prof)
    if skip is None:
        cross = _fiber_crosscheck(specS, specT, S, T, prof, args.trunc)
        code = 0 if cross["status"] == "pass" else 1
    else:
        cross = {"status": "skipped", "reason": skip}
    computed["direct_crosscheck"] = cross
    verdicts["direct_crosscheck"] = cross["status"]
    report = {
        "command": "fiber",
        "inputs": {"spec_s": args.spec_s, "spec_t": args.spec_t,
                   "names": [S.name, T.name]},
        "bounds": _bounds(args),
        "computed": computed,
        "paper_asserted": [],
        "verdicts": verdicts,
    }
    return report, code


def cmd_classify(args):
    specS = load_spec_file(args.spec_s)
    specT = load_spec_file(args.spec_t)
    S = to_profile(specS, trunc=args.trunc, n_max=args.hilbert_max,
                   with_series=False)
    T = to_profile(specT, trunc=args.trunc, n_max=args.hilbert_max,
                   with_series=False)
    fs = FiberSpec(S, T)
    dim, depth, cm = fiber_dim_depth(fs)
    general = classify_fcmt_depth_le1(fs)
    cm_route = None
    if cm:
        cm_route = classify_fcmt_cm(fs)
        if cm_route["finite_cm_type"] != general["finite_cm_type"]:
            raise StructuralError(
                "CM-case predicate (%r) disagrees with the depth <= 1 "
                "predicate (%r)" % (cm_route, general))
    try:
        e = fiber_multiplicity(fs)
    except IncompleteProfileError:
        e = None
    report = {
        "command": "classify",
        "inputs": {"spec_s": args.spec_s, "spec_t": args.spec_t,
                   "names": [S.name, T.name]},
        "bounds": _bounds(args),
        "computed": {
            "left": profile_dict(S),
            "right": profile_dict(T),
            "fiber": {"dim": dim, "depth": depth, "cm": cm,
                      "multiplicity": e},
            "finite_cm_type": general["finite_cm_type"],
            "matched_condition": general["matched_condition"],
            "cm_route": cm_route,
            "normal_form": recognized_normal_form(fs),
        },
        "paper_asserted": [],
        "verdicts": {"finite_cm_type": general["finite_cm_type"]},
    }
    return report, 0


def _worst(verdicts):
    for v in ("fail", "inconclusive"):
        if v in verdicts:
            return v
    return "pass"


def cmd_verify_paper(args):
    alpha = Rationals().coerce(args.alpha)
    seed = 0 if args.seed is None else args.seed
    if args.n is not None and args.theorem != "1.2":
        raise UnsupportedInputError("--n applies to --theorem 1.2 only")
    if args.theorem == "1.1":
        subs = [verify_theorem_1_1(alpha=alpha, trunc=args.trunc,
                                   hilbert_max=args.hilbert_max)]
    elif args.theorem == "1.2":
        if args.n is not None and not 1 <= args.n <= 3:
            raise UnsupportedInputError("--n must be 1, 2 or 3")
        ns = [args.n] if args.n is not None else [1, 2, 3]
        subs = [verify_theorem_1_2(n, trunc=args.trunc,
                                   ext_bound=args.ext_bound,
                                   hilbert_max=args.hilbert_max)
                for n in ns]
    else:
        subs = [verify_corpus_formulas(seed=seed, count=25,
                                       trunc=min(args.trunc,
                                                 CROSSCHECK_TRUNC))]
    verdicts = {}
    asserted = []
    for r in subs:
        key = "theorem %s" % r["theorem"]
        if "n" in r:
            key += " n=%d" % r["n"]
        verdicts[key] = r["verdict"]
        for line in r["paper_asserted"]:
            entry = dict(line)
            entry["theorem"] = r["theorem"]
            asserted.append(entry)
    overall = _worst(set(verdicts.values()))
    verdicts["overall"] = overall
    report = {
        "command": "verify-paper",
        "inputs": {"theorem": args.theorem, "n": args.n, "seed": seed,
                   "alpha": str(alpha)},
        "bounds": _bounds(args),
        "computed": {"reports": subs},
        "paper_asserted": asserted,
        "verdicts": verdicts,
    }
    return report, _VERDICT_EXIT[overall]


def _render_profile(lines, label, d, indent="  "):
    lines.append("%s%s:" % (indent, label))
    core = "dim %s  depth %s  edim %s  ecodepth %s" % (
        d["dim"], d["depth"], d["edim"], d["ecodepth"])
    if d["cm"]:
        core += "  (CM)"
    lines.append("%s  %s" % (indent, core))
    lines.append("%s  type %s  multiplicity %s  length %s" % (
        indent, d["type"], d["multiplicity"], d["length"]))
    flags = []
    for key in ("regular", "gorenstein", "hypersurface",
                "analytically_unramified", "finite_cm_type"):
        val = d[key]
        if val is not None:
            flags.append("%s=%s" % (key, val))
    lines.append("%s  %s" % (indent, "  ".join(flags)))
    for key in ("poincare_k", "bass"):
        if d[key] is not None:
            lines.append("%s  %s: %s" % (indent, key, ", ".join(d[key])))


def _render_checks(lines, report, indent="  "):
    for c in report["checks"]:
        entry = "%s%-13s %s: computed %r, expected %r" % (
            indent, c["status"], c["id"], c["computed"], c["expected"])
        if c.get("citation"):
            entry += "  [%s]" % c["citation"]
        lines.append(entry)
    for line in report.get("notes", ()):
        lines.append("%snote: %s" % (indent, line))
    for a in report["paper_asserted"]:
        lines.append("%sPAPER-ASSERTED: %s  [%s]"
                     % (indent, a["claim"], a["citation"]))
    lines.append("%sverdict: %s" % (indent, report["verdict"]))


def render_report(report):
    cmd = report["command"]
    lines = ["== %s ==" % cmd]
    if cmd == "invariants":
        _render_profile(lines, report["inputs"]["name"],
                        report["computed"]["profile"])
    elif cmd == "fiber":
        comp = report["computed"]
        _render_profile(lines, "S = " + comp["left"]["name"], comp["left"])
        _render_profile(lines, "T = " + comp["right"]["name"],
                        comp["right"])
        _render_profile(lines, comp["fiber"]["name"], comp["fiber"])
        lines.append("  gorenstein: %s (%s)" % (
            report["verdicts"]["gorenstein"], comp["gorenstein_reason"]))
        cross = comp["direct_crosscheck"]
        if cross["status"] == "skipped":
            lines.append("  direct cross-check skipped: %s"
                         % cross["reason"])
        else:
            lines.append("  direct cross-check (degree %d): %s"
                         % (cross["trunc"], cross["status"]))
            for m in cross["mismatches"]:
                lines.append("    MISMATCH %s: formula %r, direct %r"
                             % (m["field"], m["formula"], m["direct"]))
    elif cmd == "classify":
        comp = report["computed"]
        fib = comp["fiber"]
        lines.append("  fiber: dim %s  depth %s  cm %s  multiplicity %s"
                     % (fib["dim"], fib["depth"], fib["cm"],
                        fib["multiplicity"]))
        lines.append("  finite_cm_type: %s (condition %s)"
                     % (comp["finite_cm_type"],
                        comp["matched_condition"]))
        if comp["cm_route"] is not None:
            lines.append("  CM-case route agrees (condition %s)"
                         % comp["cm_route"]["matched_condition"])
        if comp["normal_form"]:
            lines.append("  normal form: %s" % comp["normal_form"])
    elif cmd == "verify-paper":
        for r in report["computed"]["reports"]:
            head = "theorem %s" % r["theorem"]
            if "n" in r:
                head += ", n = %d" % r["n"]
            if "alpha" in r:
                head += ", alpha = %s" % r["alpha"]
            lines.append("  -- %s --" % head)
            if r["theorem"] == "corpus":
                lines.append("    %d cases, tallies %s"
                             % (len(r["cases"]), r["tallies"]))
                for line in r.get("notes", ()):
                    lines.append("    note: %s" % line)
                lines.append("    verdict: %s" % r["verdict"])
            else:
                _render_checks(lines, r, indent="    ")
        lines.append("  overall: %s" % report["verdicts"]["overall"])
    return "\n".join(lines)


def _emit(args, report):
    if args.json:
        print(canonical_json(report))
    else:
        print(render_report(report))


def _emit_error(args, exc, code):
    if getattr(args, "json", False):
        err = {"type": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, ParseError):
            err["line"] = exc.line
            err["col"] = exc.col
        if isinstance(exc, IncompleteProfileError):
            err["missing"] = list(exc.missing)
        if isinstance(exc, NotCofiniteError):
            err["missing_vars"] = list(exc.missing_vars)
        print(canonical_json({"command": args.command, "error": err}))
    else:
        print("error: %s" % exc, file=sys.stderr)
    return code


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit one canonical JSON line")
    common.add_argument("--trunc", type=int, default=DEFAULT_TRUNC,
                        help="series truncation degree")
    common.add_argument("--ext-bound", type=int, dest="ext_bound",
                        default=DEFAULT_EXT_BOUND,
                        help="Ext vanishing bound for semidualizing checks")
    common.add_argument("--hilbert-max", type=int, dest="hilbert_max",
                        default=DEFAULT_HILBERT_MAX,
                        help="Hilbert function degree cap")
    common.add_argument("--alpha", default="2",
                        help="rational unit for the quadric construction")
    common.add_argument("--seed", type=int, default=None,
                        help="corpus seed")

    ap = argparse.ArgumentParser(
        prog="ringbench",
        description="Local-ring invariants, fiber products, and the "
                    "verification harnesses behind them.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common],
                       help="invariants of one ring spec file")
    p.add_argument("spec")
    p = sub.add_parser("fiber", parents=[common],
                       help="fiber-product profile of two spec files")
    p.add_argument("spec_s")
    p.add_argument("spec_t")
    p = sub.add_parser("classify", parents=[common],
                       help="finite CM type classification of a fiber")
    p.add_argument("spec_s")
    p.add_argument("spec_t")
    p = sub.add_parser("verify-paper", parents=[common],
                       help="run a verification harness")
    p.add_argument("--theorem", required=True,
                   choices=("1.1", "1.2", "corpus"))
    p.add_argument("--n", type=int, default=None,
                   help="theorem 1.2 parameter (default: 1, 2 and 3)")
    return ap


_HANDLERS = {
    "invariants": cmd_invariants,
    "fiber": cmd_fiber,
    "classify": cmd_classify,
    "verify-paper": cmd_verify_paper,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        report, code = _HANDLERS[args.command](args)
    except (ParseError, NotCofiniteError, UnsupportedInputError,
            InvalidFiberError, IncompleteProfileError) as exc:
        return _emit_error(args, exc, 2)
    except OSError as exc:
        return _emit_error(args, exc, 2)
    except (LimitExceededError, InconclusiveError) as exc:
        return _emit_error(args, exc, 3)
    except StructuralError as exc:
        return _emit_error(args, exc, 1)
    _emit(args, report)
    return code


if __name__ == "__main__":
    sys.exit(main())
