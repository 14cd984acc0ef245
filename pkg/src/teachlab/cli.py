"""Subcommand front end, file codecs, and the exit-code contract.

Exit codes: 0 success; 1 a mathematically meaningful property failed to
hold (never used for I/O trouble); 2 bad input, malformed file, or bad
usage; 3 budget exceeded or result inconclusive.

All numeric output is explicit: integers exact, rationals as p/q, reals
with 12 significant digits.  --json mirrors each report as one JSON
object with the same formatting rules (rationals as strings).  Every
subcommand is deterministic given its arguments; randomness only enters
through an explicit --seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .bounds import bound_report
from .classical import rtd, rtd_bruteforce, teaching_report
from .concepts import Concept, ConceptClass, parse_class, serialize_class
from .errors import BudgetError, FormatError, PropertyViolation
from .experiments import (
    ExperimentConfig,
    claim_scan,
    max_class_search,
    run_tdmin_experiment,
    tau_estimate,
    verify_dim1,
)
from .johnson import h_max, serialize_family
from .ncteach import NCTeacher, clash, is_nc_teacher, nctd, parse_teacher, serialize_teacher
from .tournaments import (
    class1,
    class2,
    linear_tournament,
    parse_tournament,
    random_tournament,
    recover_tournament,
    serialize_tournament,
)

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

BUDGET_ENV = "TEACHLAB_BUDGET_SECS"


@dataclass(frozen=True)
class CommandOutcome:
    code: int
    text: str
    csv_path: str | None = None


def _real(x: float) -> str:
    return f"{x:.12g}"


def _jreal(x: float) -> float:
    return float(f"{x:.12g}")


def _frac(q: Fraction) -> str:
    return str(q)


def _read(path: str) -> str:
    return Path(path).read_text(encoding="ascii")


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="ascii")


def _jdump(obj) -> str:
    return json.dumps(obj)


def _default_timeout() -> float | None:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return None
    try:
        return float(raw)
    except ValueError:
        raise FormatError(f"{BUDGET_ENV} must be a number, got {raw!r}") from None


def _witness_str(w) -> str:
    return " ".join(str(x) for x in sorted(w))


# ---------------------------------------------------------------- td / rtd


def _cmd_td(args) -> CommandOutcome:
    k = parse_class(_read(args.class_file))
    rep = teaching_report(k)
    if args.concept is not None:
        if not 0 <= args.concept < len(k):
            raise ValueError(f"concept index {args.concept} outside 0..{len(k) - 1}")
        i = args.concept
        c = k.concepts[i]
        if args.json:
            return CommandOutcome(EXIT_OK, _jdump({
                "n": k.n, "index": i, "concept": c.to_string(),
                "td": rep.sizes[i], "witness": sorted(rep.witnesses[i]),
            }))
        return CommandOutcome(EXIT_OK, (
            f"concept {i} {c.to_string()}: td={rep.sizes[i]}"
            f" witness={_witness_str(rep.witnesses[i]) or '-'}"))
    csv_path = None
    if args.csv:
        lines = ["concept_index,td,witness"]
        for i in range(len(k)):
            lines.append(f"{i},{rep.sizes[i]},{_witness_str(rep.witnesses[i])}")
        _write(args.csv, "\n".join(lines) + "\n")
        csv_path = args.csv
    if args.json:
        return CommandOutcome(EXIT_OK, _jdump({
            "n": k.n, "size": len(k),
            "concepts": [
                {"index": i, "concept": k.concepts[i].to_string(),
                 "td": rep.sizes[i], "witness": sorted(rep.witnesses[i])}
                for i in range(len(k))
            ],
            "td_min": rep.td_min, "td_max": rep.td,
        }), csv_path)
    lines = [f"n = {k.n}, concepts = {len(k)}"]
    for i in range(len(k)):
        lines.append(f"concept {i} {k.concepts[i].to_string()}: td={rep.sizes[i]}"
                     f" witness={_witness_str(rep.witnesses[i]) or '-'}")
    lines.append(f"td_min = {rep.td_min}")
    lines.append(f"td_max = {rep.td}")
    if csv_path:
        lines.append(f"wrote CSV to {csv_path}")
    return CommandOutcome(EXIT_OK, "\n".join(lines), csv_path)


def _cmd_rtd(args) -> CommandOutcome:
    k = parse_class(_read(args.class_file))
    r = rtd(k)
    oracle = rtd_bruteforce(k) if args.oracle else None
    if args.json:
        out = {"n": k.n, "size": len(k), "rtd": r}
        if args.oracle:
            out["oracle"] = oracle
            out["match"] = oracle == r
        code = EXIT_PROPERTY if args.oracle and oracle != r else EXIT_OK
        return CommandOutcome(code, _jdump(out))
    if args.oracle and oracle != r:
        return CommandOutcome(EXIT_PROPERTY,
                              f"rtd mismatch: recursive={r} bruteforce={oracle}")
    suffix = " (oracle agrees)" if args.oracle else ""
    return CommandOutcome(EXIT_OK, f"rtd = {r}{suffix}")


# ---------------------------------------------------------------- nctd


def _teacher_json(t: NCTeacher) -> list[dict]:
    return [{"concept": c.to_string(), "set": sorted(s)}
            for c, s in zip(t.k.concepts, t.sets)]


def _cmd_nctd(args) -> CommandOutcome:
    k = parse_class(_read(args.class_file))
    timeout = args.timeout if args.timeout is not None else _default_timeout()
    res = nctd(k, d_max=args.max_d, timeout=timeout)
    emitted = None
    if res.status == "exact" and args.emit_teacher:
        assert res.teacher is not None
        _write(args.emit_teacher, serialize_teacher(res.teacher))
        emitted = args.emit_teacher
    if args.json:
        out = {"n": k.n, "size": len(k), "status": res.status, "d": res.d,
               "lower_bound": res.lower_bound,
               "teacher": _teacher_json(res.teacher) if res.teacher else None}
        if emitted:
            out["teacher_file"] = emitted
        code = EXIT_OK if res.status == "exact" else EXIT_BUDGET
        return CommandOutcome(code, _jdump(out))
    if res.status == "exact":
        lines = [f"nctd = {res.d}", f"verified lower bound = {res.lower_bound}"]
        if emitted:
            lines.append(f"wrote teacher to {emitted}")
        return CommandOutcome(EXIT_OK, "\n".join(lines))
    if res.status == "exceeds_d_max":
        return CommandOutcome(EXIT_BUDGET, (
            f"inconclusive: no admissible teacher of order <= {args.max_d};"
            f" nctd >= {res.lower_bound}"))
    return CommandOutcome(EXIT_BUDGET, (
        f"inconclusive: search timed out; verified lower bound = {res.lower_bound}"))


def _cmd_verify_teacher(args) -> CommandOutcome:
    k = parse_class(_read(args.class_file))
    t = parse_teacher(_read(args.teacher))
    if t.k.n != k.n or set(t.k.masks) != set(k.masks):
        raise FormatError("teacher file does not cover exactly the concepts of the class file")
    bad = None
    cs = t.k.concepts
    for i in range(len(cs)):
        for j in range(i + 1, len(cs)):
            if clash(cs[i], cs[j], t.sets[i], t.sets[j]):
                bad = (i, j)
                break
        if bad:
            break
    if args.json:
        out = {"n": k.n, "size": len(k), "order": t.order,
               "admissible": bad is None}
        if bad:
            out["clash"] = [cs[bad[0]].to_string(), cs[bad[1]].to_string()]
        return CommandOutcome(EXIT_OK if bad is None else EXIT_PROPERTY, _jdump(out))
    if bad is None:
        return CommandOutcome(EXIT_OK, f"teacher is admissible (order {t.order})")
    i, j = bad
    joint = sorted(t.sets[i] | t.sets[j])
    return CommandOutcome(EXIT_PROPERTY, (
        f"clash: concepts {cs[i].to_string()} and {cs[j].to_string()}"
        f" agree on {{{', '.join(map(str, joint))}}}"))


# ---------------------------------------------------------------- tournament


def _cmd_tournament_gen(args) -> CommandOutcome:
    g = linear_tournament(args.n) if args.linear else random_tournament(args.n, args.seed)
    text = serialize_tournament(g)
    if args.out:
        _write(args.out, text)
    if args.json:
        return CommandOutcome(EXIT_OK, _jdump({
            "n": g.n, "edges": [[i, j] for i, j in g.edges()],
        }))
    if args.out:
        return CommandOutcome(EXIT_OK, f"wrote tournament to {args.out}")
    return CommandOutcome(EXIT_OK, text.rstrip("\n"))


def _cmd_tournament_class(args) -> CommandOutcome:
    g = parse_tournament(_read(args.infile))
    k = class1(g) if args.mode == 1 else class2(g)
    text = serialize_class(k)
    if args.out:
        _write(args.out, text)
    if args.json:
        return CommandOutcome(EXIT_OK, _jdump({
            "n": k.n, "mode": args.mode,
            "concepts": [c.to_string() for c in k.concepts],
        }))
    if args.out:
        return CommandOutcome(EXIT_OK, f"wrote {len(k)} concepts to {args.out}")
    return CommandOutcome(EXIT_OK, text.rstrip("\n"))


def _align_teacher(k: ConceptClass, t: NCTeacher) -> NCTeacher:
    """Reindex a parsed teacher onto the class's concept order (same concept set)."""
    if t.k.masks == k.masks:
        return t
    return NCTeacher(k, tuple(t.set_for(c) for c in k.concepts))


def _cmd_tournament_recover(args) -> CommandOutcome:
    k = parse_class(_read(args.class_file))
    if args.teacher:
        t = parse_teacher(_read(args.teacher))
        if t.k.n != k.n or set(t.k.masks) != set(k.masks):
            raise FormatError("teacher file does not cover exactly the concepts of the class file")
        t = _align_teacher(k, t)
    else:
        res = nctd(k, d_max=1, timeout=_default_timeout())
        if res.status != "exact":
            raise PropertyViolation("class admits no order-1 no-clash teacher")
        assert res.teacher is not None
        t = res.teacher
    g = recover_tournament(k, t)
    if args.json:
        return CommandOutcome(EXIT_OK, _jdump({
            "n": g.n, "edges": [[i, j] for i, j in g.edges()],
        }))
    return CommandOutcome(EXIT_OK, serialize_tournament(g).rstrip("\n"))


# ---------------------------------------------------------------- johnson


def _cmd_johnson_hmax(args) -> CommandOutcome:
    res = h_max(args.n, args.k, args.t, exact_limit=args.exact_limit)
    wrote = None
    if args.witness and res.witness is not None:
        _write(args.witness, serialize_family(res.witness))
        wrote = args.witness
    if args.json:
        out = {"n": res.n, "k": res.k, "t": res.t, "status": res.status,
               "size": res.size, "lower": res.lower, "upper": res.upper,
               "witness": None if res.witness is None else
               [sorted(a) for a in sorted(res.witness.members, key=sorted)]}
        if wrote:
            out["witness_file"] = wrote
        code = EXIT_OK if res.status == "exact" else EXIT_BUDGET
        return CommandOutcome(code, _jdump(out))
    if res.status == "exact":
        lines = [f"H_{res.t}({res.n},{res.k}) = {res.size}"]
        if wrote:
            lines.append(f"wrote witness family to {wrote}")
        return CommandOutcome(EXIT_OK, "\n".join(lines))
    lines = [f"inconclusive: {res.lower} <= H_{res.t}({res.n},{res.k}) <= {res.upper}"]
    if wrote:
        lines.append(f"wrote greedy witness (lower bound) to {wrote}")
    return CommandOutcome(EXIT_BUDGET, "\n".join(lines))


# ---------------------------------------------------------------- bounds


def _cmd_bounds(args) -> CommandOutcome:
    rep = bound_report(args.n, args.d, args.t)
    if args.json:
        return CommandOutcome(EXIT_OK, _jdump({
            "n": rep.n, "d": rep.d, "t": rep.t, "ksz": rep.ksz,
            "gub": _frac(rep.gub), "factor": _jreal(rep.factor),
            "h_used": _frac(rep.h_used), "h_kind": rep.h_kind,
        }))
    if args.csv:
        header = "n,d,t,ksz,gub,factor,h_used,h_kind"
        t_field = "" if rep.t is None else str(rep.t)
        row = (f"{rep.n},{rep.d},{t_field},{rep.ksz},{_frac(rep.gub)},"
               f"{_real(rep.factor)},{_frac(rep.h_used)},{rep.h_kind}")
        return CommandOutcome(EXIT_OK, header + "\n" + row)
    width = max(len(key) for key, _ in rep.rows())
    lines = [f"{key.ljust(width)} = {val}" for key, val in rep.rows()]
    return CommandOutcome(EXIT_OK, "\n".join(lines))


# ---------------------------------------------------------------- experiments


def _cmd_experiment_tdmin(args) -> CommandOutcome:
    cfg = ExperimentConfig(n=args.n, trials=args.trials, seed=args.seed)
    records, summary = run_tdmin_experiment(cfg, jobs=args.jobs)
    csv_lines = ["trial,seed,n,td_min,nctd"]
    for r in records:
        csv_lines.append(f"{r.trial},{r.seed},{cfg.n},{r.td_min},{r.nctd}")
    csv_text = "\n".join(csv_lines) + "\n"
    csv_path = None
    if args.out == "-":
        return CommandOutcome(EXIT_OK, csv_text.rstrip("\n"))
    if args.out:
        _write(args.out, csv_text)
        csv_path = args.out
    if args.json:
        out = {"n": summary.n, "trials": summary.trials, "seed": summary.seed,
               "counts": [list(p) for p in summary.counts],
               "min": summary.minimum, "mean": _jreal(summary.mean),
               "max": summary.maximum, "threshold": summary.threshold,
               "fraction_below": _jreal(summary.fraction_below)}
        if csv_path:
            out["csv"] = csv_path
        return CommandOutcome(EXIT_OK, _jdump(out), csv_path)
    hist = ", ".join(f"{v} x{c}" for v, c in summary.counts)
    lines = [
        f"n = {summary.n}, trials = {summary.trials}, seed = {summary.seed}",
        f"td_min distribution: {hist}",
        f"min/mean/max = {summary.minimum} / {_real(summary.mean)} / {summary.maximum}",
        f"threshold k = {summary.threshold},"
        f" fraction below = {_real(summary.fraction_below)}",
    ]
    if csv_path:
        lines.append(f"wrote CSV to {csv_path}")
    return CommandOutcome(EXIT_OK, "\n".join(lines), csv_path)


def _flag(v: bool | None) -> str:
    if v is None:
        return "-"
    return "yes" if v else "no"


def _cmd_experiment_claim(args) -> CommandOutcome:
    scan = claim_scan(args.scan_max)
    code = EXIT_OK if scan.n0 is not None and scan.cor_n0 is not None else EXIT_PROPERTY
    if args.json:
        return CommandOutcome(code, _jdump({
            "limit": scan.limit, "n0": scan.n0, "cor_n0": scan.cor_n0,
            "records": [
                {"n": r.n, "k": r.k, "ineq1": r.ineq1, "ineq2": r.ineq2,
                 "sufficient": r.sufficient, "holds": r.holds,
                 "cor_k": r.cor_k, "cor_ineq1": r.cor_ineq1,
                 "cor_ineq2": r.cor_ineq2, "cor_sufficient": r.cor_sufficient,
                 "cor_holds": r.cor_holds}
                for r in scan.records
            ],
        }))
    lines = [f"{'n':>14} {'k':>4} {'in1':>4} {'in2':>4} {'ok':>4}"
             f"   {'k2':>4} {'in1':>4} {'in2':>4} {'ok':>4}"]
    for r in scan.records:
        lines.append(
            f"{r.n:>14} {r.k:>4} {_flag(r.ineq1):>4} {_flag(r.ineq2):>4}"
            f" {_flag(r.holds):>4}   {r.cor_k:>4} {_flag(r.cor_ineq1):>4}"
            f" {_flag(r.cor_ineq2):>4} {_flag(r.cor_holds):>4}")
    lines.append(f"claim n0 = {scan.n0}")
    lines.append(f"corollary n0 = {scan.cor_n0}")
    return CommandOutcome(code, "\n".join(lines))


def _cmd_experiment_tau(args) -> CommandOutcome:
    rep = tau_estimate(args.n, args.trials, args.seed, k_override=args.k)
    if args.json:
        return CommandOutcome(EXIT_OK, _jdump({
            "n": rep.n, "trials": rep.trials, "seed": rep.seed,
            "k": rep.k, "k_source": rep.k_source, "vacuous": rep.vacuous,
            "hits": rep.hits, "fraction": _jreal(rep.fraction),
            "ci_low": _jreal(rep.ci_low), "ci_high": _jreal(rep.ci_high),
        }))
    lines = [f"n = {rep.n}, trials = {rep.trials}, seed = {rep.seed}",
             f"k = {rep.k} ({rep.k_source})"]
    if rep.vacuous:
        lines.append("event td_min <= k is empty for k < 1; tau = 0 exactly (vacuous)")
    else:
        lines.append(f"hits = {rep.hits}, fraction = {_real(rep.fraction)}")
        lines.append(f"95% CI = [{_real(rep.ci_low)}, {_real(rep.ci_high)}]")
    return CommandOutcome(EXIT_OK, "\n".join(lines))


def _cmd_verify_dim1(args) -> CommandOutcome:
    rep = verify_dim1(args.n, prefilter=args.prefilter)
    code = EXIT_OK if rep.ok else EXIT_PROPERTY
    if args.json:
        return CommandOutcome(code, _jdump({
            "n": rep.n, "candidates": rep.candidates,
            "passing": len(rep.passing), "expected": len(rep.expected),
            "complement_closed": rep.complement_closed, "ok": rep.ok,
        }))
    lines = [
        f"n = {rep.n}: decided {rep.candidates} classes of size {2 * rep.n}",
        f"passing = {len(rep.passing)}, tournament-induced = {len(rep.expected)}",
        f"complement-closed = {_flag(rep.complement_closed)}",
        f"characterization {'holds' if rep.ok else 'FAILS'}",
    ]
    return CommandOutcome(code, "\n".join(lines))


def _cmd_search_maxclass(args) -> CommandOutcome:
    res = max_class_search(args.n, args.d)
    if args.json:
        out = {"n": res.n, "d": res.d, "status": res.status, "size": res.size,
               "lower": res.lower, "upper": res.upper,
               "witnesses": [[c.to_string() for c in w.concepts]
                             for w in res.witnesses]}
        code = EXIT_OK if res.status == "exact" else EXIT_BUDGET
        return CommandOutcome(code, _jdump(out))
    if res.status == "exact":
        lines = [f"M_NC({res.n},{res.d}) = {res.size}",
                 f"maximum classes up to relabeling: {len(res.witnesses)}"]
        for w in res.witnesses:
            lines.append("  " + " ".join(c.to_string() for c in w.concepts))
        return CommandOutcome(EXIT_OK, "\n".join(lines))
    lines = [f"inconclusive: {res.lower} <= M_NC({res.n},{res.d}) <= {res.upper}",
             "greedy witness: " + " ".join(c.to_string() for c in res.witnesses[0].concepts)]
    return CommandOutcome(EXIT_BUDGET, "\n".join(lines))


# ---------------------------------------------------------------- parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="teachlab",
        description="Exact teaching-dimension computations on finite concept classes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def leaf(owner, name: str, handler, help: str):
        p = owner.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", help="emit one JSON object")
        p.set_defaults(handler=handler)
        return p

    p = leaf(sub, "td", _cmd_td, "teaching dimensions of a class")
    p.add_argument("--class", dest="class_file", required=True, metavar="FILE")
    p.add_argument("--concept", type=int, metavar="INDEX",
                   help="report a single concept (0-based class order)")
    p.add_argument("--csv", metavar="FILE", help="write concept_index,td,witness rows")

    p = leaf(sub, "rtd", _cmd_rtd, "recursive teaching dimension")
    p.add_argument("--class", dest="class_file", required=True, metavar="FILE")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against subclass enumeration; mismatch exits 1")

    p = leaf(sub, "nctd", _cmd_nctd, "no-clash teaching dimension")
    p.add_argument("--class", dest="class_file", required=True, metavar="FILE")
    p.add_argument("--max-d", type=int, metavar="D")
    p.add_argument("--timeout", type=float, metavar="SECS",
                   help=f"default from ${BUDGET_ENV}")
    p.add_argument("--emit-teacher", metavar="FILE")

    p = leaf(sub, "verify-teacher", _cmd_verify_teacher, "check teacher admissibility")
    p.add_argument("--class", dest="class_file", required=True, metavar="FILE")
    p.add_argument("--teacher", required=True, metavar="FILE")

    t = sub.add_parser("tournament", help="tournament generation, classes, recovery")
    tsub = t.add_subparsers(dest="subcommand", required=True)

    p = leaf(tsub, "gen", _cmd_tournament_gen, "generate a tournament")
    p.add_argument("--n", type=int, required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--linear", action="store_true", help="i beats j for i < j")
    src.add_argument("--seed", type=int, help="independent fair edge coins")
    p.add_argument("--out", metavar="FILE")

    p = leaf(tsub, "class", _cmd_tournament_class, "induced concept class")
    p.add_argument("--mode", type=int, choices=(1, 2), required=True)
    p.add_argument("--in", dest="infile", required=True, metavar="FILE")
    p.add_argument("--out", metavar="FILE")

    p = leaf(tsub, "recover", _cmd_tournament_recover, "rebuild the tournament from its class")
    p.add_argument("--class", dest="class_file", required=True, metavar="FILE")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--teacher", metavar="FILE")
    src.add_argument("--find-teacher", action="store_true",
                     help="search for an order-1 teacher first")

    j = sub.add_parser("johnson", help="Johnson-graph extremal search")
    jsub = j.add_subparsers(dest="subcommand", required=True)

    p = leaf(jsub, "hmax", _cmd_johnson_hmax, "largest narrow-clique-free family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--witness", metavar="FILE", help="write the witness family")
    p.add_argument("--exact-limit", type=int, default=1000, metavar="M",
                   help="exact search only when C(n,k) <= M")

    p = leaf(sub, "bounds", _cmd_bounds, "counting and refined upper bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--t", type=int)
    p.add_argument("--csv", action="store_true", help="one header and one data row")

    e = sub.add_parser("experiment", help="seeded experiments")
    esub = e.add_subparsers(dest="subcommand", required=True)

    p = leaf(esub, "tdmin", _cmd_experiment_tdmin, "td_min of random tournament classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", metavar="CSV", help="'-' prints the CSV to stdout")
    p.add_argument("--jobs", type=int, default=1, metavar="J")

    p = leaf(esub, "claim", _cmd_experiment_claim, "growth-inequality scan")
    p.add_argument("--scan-max", type=int, default=1 << 40, metavar="N")

    p = leaf(esub, "tau", _cmd_experiment_tau, "threshold event probability")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--k", type=int, help="override the shifted threshold")

    v = sub.add_parser("verify", help="exhaustive verifications")
    vsub = v.add_subparsers(dest="subcommand", required=True)

    p = leaf(vsub, "dim1", _cmd_verify_dim1, "dimension-1 maximum classes are tournament classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--prefilter", action="store_true",
                   help="skip classes not closed under complement")

    s = sub.add_parser("search", help="exhaustive searches")
    ssub = s.add_subparsers(dest="subcommand", required=True)

    p = leaf(ssub, "maxclass", _cmd_search_maxclass, "largest class with an order-d teacher")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    return parser


def dispatch(argv: list[str]) -> CommandOutcome:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except FormatError as exc:
        return CommandOutcome(EXIT_INPUT, f"error: {exc}")
    except PropertyViolation as exc:
        return CommandOutcome(EXIT_PROPERTY, f"error: {exc}")
    except BudgetError as exc:
        return CommandOutcome(EXIT_BUDGET, f"error: {exc}")
    except ValueError as exc:
        return CommandOutcome(EXIT_INPUT, f"error: {exc}")
    except OSError as exc:
        return CommandOutcome(EXIT_INPUT, f"error: {exc}")


def main(argv: list[str] | None = None) -> int:
    outcome = dispatch(sys.argv[1:] if argv is None else argv)
    if outcome.text:
        sys.stdout.write(outcome.text + "\n")
    return outcome.code


if __name__ == "__main__":
    sys.exit(main())
