"""Command line front end.

Exit statuses: 0 on success, 2 for usage errors (including malformed word
specs), 3 when an operation is invoked outside its preconditions, 4 when a
verification the run was supposed to establish fails. Output files are
written atomically (temp file plus rename) and identical invocations produce
byte-identical outputs.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .decompose import (
    LeveledLanguage,
    build_st,
    split_records_to_csv,
    split_sets_bound,
    sturmian_split_sets,
    thue_morse_split_sets,
    verify_cover,
    witness_split,
    greedy_two_sets,
)
from .errors import FactorLangError, PreconditionError, VerificationError
from .experiments import (
    growth_fit,
    product_bound_audit,
    staircase_pair_count,
    witness_pair_count,
)
from .factors import DEFAULT_N_MAX, DEFAULT_STABILIZATION_FACTOR, build_factor_index
from .periodicity import build_all_markers, markers_to_jsonl
from .words import parse_word_spec

_TM_SPECS = ("tm", "morphic:0->01,1->10@0")


@dataclass(frozen=True)
class RunConfig:
    """Canonical description of one invocation, embedded in reports.

    The canonical string is "<command> key=value ..." with keys sorted, and
    parses back to an equal config.
    """

    command: str
    options: tuple[tuple[str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "options", tuple(sorted(self.options)))

    def canonical(self) -> str:
        parts = [self.command]
        parts.extend(f"{k}={v}" for k, v in self.options)
        return " ".join(parts)

    @classmethod
    def from_string(cls, text: str) -> "RunConfig":
        head, *rest = text.split()
        options = []
        for item in rest:
            key, eq, value = item.partition("=")
            if not eq:
                raise PreconditionError("bad-config", f"bad config item {item!r}")
            options.append((key, value))
        return cls(command=head, options=tuple(options))


def _write_atomic(path: Path, text: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(f"{path.name}.tmp{os.getpid()}")
    tmp.write_text(text)
    os.replace(tmp, path)


def _int_list(text: str) -> list[int]:
    try:
        values = [int(t) for t in text.split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a,b,c integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _int_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo:hi integers, got {text!r}")


def _window(args) -> int:
    if args.window is not None:
        return args.window
    return DEFAULT_STABILIZATION_FACTOR * args.n_max


# -- commands -------------------------------------------------------------------


def cmd_word(args) -> int:
    source = parse_word_spec(args.spec)
    print(source.prefix(args.prefix))
    return 0


def cmd_complexity(args) -> int:
    source = parse_word_spec(args.spec)
    index = build_factor_index(source, _window(args), args.n_max)
    double = build_factor_index(source, 2 * index.n_work, args.n_max)
    if index.profile().p != double.profile().p:
        raise VerificationError(
            "unstable-window",
            f"profile changes when the window grows from {index.n_work} to"
            f" {double.n_work}; enlarge --window")
    csv = index.profile().to_csv()
    if args.out:
        _write_atomic(Path(args.out), csv)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(csv)
    return 0


def _decompose_marker(index, out_dir):
    markers = build_all_markers(index)
    s_lang, t_lang, records = build_st(index, markers)
    _write_atomic(out_dir / "markers.jsonl", markers_to_jsonl(markers))
    c, k = index.slope_constants()
    d = next(iter(markers.values())).D
    r = max(len(ms.markers) for ms in markers.values())
    extras = {
        "C": c,
        "K": k,
        "D": d,
        "R": r,
        "orders": sorted(markers),
        "bound": split_sets_bound(r, c, d),
    }
    return s_lang, t_lang, records, extras


def _decompose_tm(index, args):
    if args.spec not in _TM_SPECS:
        raise PreconditionError(
            "method-mismatch",
            "the doubling-morphism route is specific to the tm word")
    s_lang, t_lang, cut = thue_morse_split_sets(args.n_max, index.n_work)
    records = []
    for n in range(1, index.n_max + 1):
        for v, _ in index.factors_with_positions(n):
            records.append(cut(v))
    return s_lang, t_lang, records, {}


def _decompose_sturmian(index):
    s_lang, t_lang = sturmian_split_sets(index)
    records = []
    for n in range(1, index.n_max + 1):
        for v, _ in index.factors_with_positions(n):
            records.append(witness_split(v, s_lang, t_lang))
    return s_lang, t_lang, records, {}


def cmd_decompose(args) -> int:
    source = parse_word_spec(args.spec)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    if args.method == "greedy":
        prefixes = LeveledLanguage(source.prefix(args.n_max)[:n]
                                   for n in range(1, args.n_max + 1))
        s_lang, t_lang = greedy_two_sets(prefixes, args.budget)
        records = [witness_split(v, s_lang, t_lang) for v in prefixes.words()]
        extras = {"budget": args.budget}
        total = prefixes.total()
        uncovered: list[str] = []
        coverage = 1.0
    else:
        index = build_factor_index(source, _window(args), args.n_max)
        if args.method == "marker":
            s_lang, t_lang, records, extras = _decompose_marker(index, out_dir)
        elif args.method == "tm":
            s_lang, t_lang, records, extras = _decompose_tm(index, args)
        else:
            s_lang, t_lang, records, extras = _decompose_sturmian(index)
        report = verify_cover(index, s_lang, t_lang)
        total = report.total
        uncovered = report.uncovered
        coverage = report.coverage

    config = RunConfig("decompose", (
        ("method", args.method),
        ("word", args.spec),
        ("n-max", str(args.n_max)),
        ("window", str(_window(args))),
    ))
    stats = {
        "config": config.canonical(),
        "method": args.method,
        "word": args.spec,
        "n_max": args.n_max,
        "window": _window(args),
        "factors": total,
        "coverage": coverage,
        "s_per_length_max": s_lang.per_length_max(),
        "t_per_length_max": t_lang.per_length_max(),
        "s_total": s_lang.total(),
        "t_total": t_lang.total(),
    }
    stats.update(extras)
    _write_atomic(out_dir / "S.jsonl", s_lang.to_jsonl("S"))
    _write_atomic(out_dir / "T.jsonl", t_lang.to_jsonl("T"))
    _write_atomic(out_dir / "splits.csv", split_records_to_csv(records))
    _write_atomic(out_dir / "stats.json",
                  json.dumps(stats, sort_keys=True, indent=2) + "\n")
    print(f"word: {args.spec}")
    print(f"method: {args.method}")
    print(f"factors: {total}")
    print(f"coverage: {coverage:.6f}")
    print(f"per-length max: S={s_lang.per_length_max()} T={t_lang.per_length_max()}")
    for key in ("C", "K", "D", "R", "bound", "budget"):
        if key in extras:
            print(f"{key}: {extras[key]}")
    if uncovered:
        raise VerificationError(
            "coverage-incomplete",
            f"{len(uncovered)} factors not covered, first: {uncovered[0]}")
    return 0


def cmd_verify(args) -> int:
    source = parse_word_spec(args.spec)
    s_lang = LeveledLanguage.from_jsonl(Path(args.s_file).read_text())
    t_lang = LeveledLanguage.from_jsonl(Path(args.t_file).read_text())
    index = build_factor_index(source, _window(args), args.n_max)
    report = verify_cover(index, s_lang, t_lang)
    print(f"factors: {report.total}")
    print(f"coverage: {report.coverage:.6f}")
    print(f"per-length max: S={report.s_per_length_max} T={report.t_per_length_max}")
    if report.uncovered:
        raise VerificationError(
            "coverage-incomplete",
            f"{len(report.uncovered)} factors not covered, first: {report.uncovered[0]}")
    return 0


def _experiment_rows(args) -> tuple[list[tuple], str]:
    name = args.name
    if name == "e-count":
        ns = args.n or [1000, 10000, 100000, 1000000]
        rows = []
        for n in ns:
            count = staircase_pair_count(n)
            model = n * math.log(n)
            rows.append((n, count, f"{model:.3f}", f"{count / model:.6f}"))
        return rows, "staircase pairs against n*ln(n)"
    if name == "claim-pairs":
        ns = args.n or [1000, 10000, 100000]
        rows = []
        for n in ns:
            count = witness_pair_count(n, args.k)
            rows.append((n, count, n, f"{count / n:.6f}"))
        return rows, f"witness pairs at k={args.k} against n"
    if name == "fit":
        lo, hi = args.range
        source = parse_word_spec(args.spec)
        window = args.window if args.window is not None else \
            DEFAULT_STABILIZATION_FACTOR * hi
        index = build_factor_index(source, window, hi)
        profile = index.profile()
        fit = growth_fit(profile, args.model, lo, hi)
        rows = []
        from .experiments import resolve_model
        model_name, model_fn = resolve_model(args.model)
        for n in range(lo, hi + 1):
            m = model_fn(n)
            rows.append((n, profile.p[n - 1], f"{m:.3f}",
                         f"{profile.p[n - 1] / m:.6f}"))
        note = (f"{args.spec} against {model_name}: ratio"
                f" [{fit.ratio_min:.6f}, {fit.ratio_max:.6f}] spread"
                f" {fit.spread:.3f}")
        return rows, note
    # lemma1
    ns = args.n or [8, 16, 32, 64]
    hi = max(ns)
    source = parse_word_spec(args.spec)
    window = args.window if args.window is not None else \
        DEFAULT_STABILIZATION_FACTOR * hi
    index = build_factor_index(source, window, hi)
    if args.method == "tm":
        if args.spec not in _TM_SPECS:
            raise PreconditionError(
                "method-mismatch",
                "the doubling-morphism route is specific to the tm word")
        s_lang, t_lang, _ = thue_morse_split_sets(hi, index.n_work)
    else:
        s_lang, t_lang = sturmian_split_sets(index)
    rows = []
    for n in ns:
        report = product_bound_audit([s_lang, t_lang], index, n)
        if not report.ok:
            raise VerificationError(
                "bound-exceeded",
                f"p({n}) = {report.measured} exceeds the product bound {report.bound}")
        rows.append((n, report.measured, report.bound,
                     f"{report.measured / report.bound:.6f}"))
    return rows, f"measured complexity against the product bound (cap from the sets)"


def cmd_experiment(args) -> int:
    rows, note = _experiment_rows(args)
    lines = ["n,count,model,ratio"]
    lines.extend(",".join(str(x) for x in row) for row in rows)
    csv = "\n".join(lines) + "\n"
    if args.out:
        _write_atomic(Path(args.out), csv)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(csv)
    print(f"note: {note}")
    return 0


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="factorlang",
        description="Factor complexity and decompositions of infinite words.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_word = sub.add_parser("word", help="print a prefix of a word")
    p_word.add_argument("spec")
    p_word.add_argument("--prefix", type=int, default=64,
                        help="number of letters to print")
    p_word.set_defaults(func=cmd_word)

    p_cx = sub.add_parser("complexity", help="per-length factor counts as CSV")
    p_cx.add_argument("spec")
    p_cx.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    p_cx.add_argument("--window", type=int, default=None)
    p_cx.add_argument("--out", default=None)
    p_cx.set_defaults(func=cmd_complexity)

    p_dec = sub.add_parser("decompose", help="build a two-set decomposition")
    p_dec.add_argument("method", choices=("marker", "greedy", "tm", "sturmian"))
    p_dec.add_argument("spec")
    p_dec.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    p_dec.add_argument("--window", type=int, default=None)
    p_dec.add_argument("--out", default="decompose-out")
    p_dec.add_argument("--budget", type=int, default=1,
                       help="greedy per-length budget slope")
    p_dec.set_defaults(func=cmd_decompose)

    p_ver = sub.add_parser("verify", help="re-check a decomposition from files")
    p_ver.add_argument("spec")
    p_ver.add_argument("--s-file", required=True)
    p_ver.add_argument("--t-file", required=True)
    p_ver.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    p_ver.add_argument("--window", type=int, default=None)
    p_ver.set_defaults(func=cmd_verify)

    p_exp = sub.add_parser("experiment", help="growth counting experiments")
    p_exp.add_argument("name", choices=("e-count", "claim-pairs", "fit", "lemma1"))
    p_exp.add_argument("--n", type=_int_list, default=None,
                       help="comma separated lengths")
    p_exp.add_argument("--k", type=int, default=3)
    p_exp.add_argument("--word", dest="spec", default="abk")
    p_exp.add_argument("--model", default="n2")
    p_exp.add_argument("--range", type=_int_range, default=(100, 1000))
    p_exp.add_argument("--window", type=int, default=None)
    p_exp.add_argument("--method", choices=("tm", "sturmian"), default="tm")
    p_exp.add_argument("--out", default=None)
    p_exp.set_defaults(func=cmd_experiment)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FactorLangError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_status


if __name__ == "__main__":
    sys.exit(run())
