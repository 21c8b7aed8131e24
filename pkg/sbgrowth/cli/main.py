from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from typing import Callable, Sequence

import pandas as pd

from ..automaton import alphabet, count_via_dp, epsilon_matrix, flip_syllable, normal_form_automaton
from ..errors import (
    InvalidStrandCountError,
    InvalidWordError,
    NotCubicError,
    ResourceLimitError,
    SBGrowthError,
)
from ..growth import DEFAULT_GROWTH_CONFIG, GrowthConfig, generating_function, growth_report
from ..oracle import count_by_length, enumerate_classes
from ..ratfunc import RationalFunction, recurrence_from, series_expand
from ..words import MonoidKind, build_presentation
from .models import (
    CheckOut,
    CubicOut,
    GenfuncPayload,
    GrowthPayload,
    OraclePayload,
    OutputDocument,
    PredecessorRow,
    PredecessorsPayload,
    RecurrenceOut,
    RootOut,
    SeriesPayload,
    VerifyPayload,
)
from .report import clear_checks, first_difference, get_checks, record_check, summarize_checks

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

# Predecessor sets on 3 strands, by syllable id: g2=s1, g3=s2, g4=s1s2, g5=s2s1, g6=Delta, g7=x1, g8=x2
THREE_STRAND_PREDECESSORS = {
    2: {2, 5, 7, 8},
    3: {3, 4, 7, 8},
    4: {2, 5, 7, 8},
    5: {3, 4, 7, 8},
    6: {2, 3, 4, 5, 6, 7, 8},
    7: {3, 7, 8},
    8: {2, 7, 8},
}
THREE_STRAND_DENOMINATOR = [1, -4, 2, 3, -2]
FIRST_TERMS = [1, 4, 14, 45, 142, 444]
DOMINANT_ROOT = 0.3210368161


def _number(value: Fraction) -> int | str:
    return value.numerator if value.denominator == 1 else str(value)


def _integers(values: Sequence[Fraction]) -> list[int]:
    out = []
    for v in values:
        if Fraction(v).denominator != 1:
            raise SBGrowthError(f"non-integer coefficient {v} in a counting series")
        out.append(int(v))
    return out


def compute_series(n: int, kind: MonoidKind, terms: int, method: str) -> list[int]:
    if method == "genfunc":
        return _integers(series_expand(generating_function(n, kind).rf, terms))
    if method == "dp":
        return list(count_via_dp(n, terms, kind).counts)
    return list(count_by_length(build_presentation(n, kind), terms).counts)


# ── Subcommands ──────────────────────────────────────────────────────────


def cmd_series(args: argparse.Namespace) -> tuple[OutputDocument, int]:
    coefficients = compute_series(args.n, args.kind, args.terms, args.method)
    payload = SeriesPayload(method=args.method, terms=args.terms, coefficients=coefficients)
    return _document("series", args, payload.model_dump()), EXIT_OK


def cmd_genfunc(args: argparse.Namespace) -> tuple[OutputDocument, int]:
    gf = generating_function(args.n, args.kind)
    automaton = normal_form_automaton(args.n, args.kind)
    blocks: dict[str, int] = {}
    for b in automaton.blocks:
        blocks[b.syllable.label] = blocks.get(b.syllable.label, 0) + 1
    payload = GenfuncPayload(
        numerator=gf.numerator,
        denominator=gf.denominator,
        unknowns=sum(1 for b in automaton.blocks if not b.syllable.is_delta),
        blocks_per_syllable=blocks,
    )
    return _document("genfunc", args, payload.model_dump()), EXIT_OK


def cmd_growth(args: argparse.Namespace) -> tuple[OutputDocument, int]:
    config = GrowthConfig(tol=args.tol, precision_dps=DEFAULT_GROWTH_CONFIG.precision_dps)
    report = growth_report(generating_function(args.n, args.kind), config)
    residues = report.residues or [None] * len(report.roots)
    rec = report.recurrence
    cubic = None
    if report.cubic is not None:
        cubic = CubicOut(
            factor=list(report.cubic.factor.integer_coefficients()),
            p=str(report.cubic.p),
            q=str(report.cubic.q),
            discriminant_expr=str(report.cubic.discriminant_expr),
            root_count=report.cubic.root_count,
            trig_roots=[float(r) for r in report.cubic.trig_roots] if report.cubic.trig_roots else None,
        )
    payload = GrowthPayload(
        roots=[
            RootOut(value=float(r), multiplicity=r.multiplicity, residue=None if a is None else float(a))
            for r, a in zip(report.roots, residues)
        ],
        growth_rate=report.growth_rate,
        residues_available=report.residues is not None,
        recurrence=RecurrenceOut(
            coefficients=[_number(c) for c in rec.coefficients],
            valid_from=rec.valid_from,
            reduced_coefficients=(
                [_number(c) for c in rec.reduced_coefficients] if rec.reduced_coefficients else None
            ),
            constant=_number(rec.constant) if rec.constant is not None else None,
        ),
        cubic=cubic,
    )
    return _document("growth", args, payload.model_dump()), EXIT_OK


def cmd_predecessors(args: argparse.Namespace) -> tuple[OutputDocument, int]:
    eps = epsilon_matrix(args.n, args.kind)
    rows = [
        PredecessorRow(
            id=s.id, word=str(s.word), length=s.length, predecessors=sorted(eps.row(s.id)),
        )
        for s in alphabet(args.n, args.kind)
    ]
    return _document("predecessors", args, PredecessorsPayload(rows=rows).model_dump()), EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> tuple[OutputDocument, int]:
    presentation = build_presentation(args.n, args.kind)
    census = count_by_length(presentation, args.maxlen)
    representatives = None
    if args.list_length is not None:
        representatives = [str(w) for w in enumerate_classes(presentation, args.list_length)]
    payload = OraclePayload(
        maxlen=args.maxlen,
        counts=list(census.counts),
        list_length=args.list_length,
        representatives=representatives,
    )
    return _document("oracle", args, payload.model_dump()), EXIT_OK


def cmd_verify(args: argparse.Namespace) -> tuple[OutputDocument, int]:
    clear_checks()
    n, kind, maxlen = args.n, args.kind, args.maxlen
    over_budget = _verify_agreement(n, kind, maxlen)
    if kind is MonoidKind.SINGULAR:
        over_budget |= _verify_agreement(n, MonoidKind.CLASSICAL, maxlen)
    _verify_flip(n, kind)
    if n == 3 and kind is MonoidKind.SINGULAR:
        _verify_three_strand_fixtures()
    if n == 2 and kind is MonoidKind.SINGULAR:
        expected = RationalFunction.from_lists([1], [1, -2, 1])
        gf = generating_function(2, kind)
        record_check("fixture:closed-form-n2", gf.rf == expected, None if gf.rf == expected else str(gf.rf))

    checks = get_checks()
    summary = summarize_checks(checks)
    payload = VerifyPayload(
        maxlen=maxlen,
        summary=summary,
        checks=[CheckOut(name=c["name"], passed=c["passed"], detail=c["detail"]) for c in checks],
    )
    mismatches = [c for c in checks if not c["passed"] and c["name"] not in over_budget]
    for c in mismatches:
        print(f"MISMATCH {c['name']}: {c['detail']}", file=sys.stderr)
    for name in sorted(over_budget):
        print(f"SKIPPED {name}: oracle word budget exceeded", file=sys.stderr)
    # a real disagreement outranks an unfinished check
    if mismatches:
        code = EXIT_MISMATCH
    elif over_budget:
        code = EXIT_RESOURCE
    else:
        code = EXIT_OK
    return _document("verify", args, payload.model_dump()), code


def _verify_agreement(n: int, kind: MonoidKind, maxlen: int) -> set[str]:
    """Record the agreement checks; return the names the oracle could not finish."""
    series = compute_series(n, kind, maxlen, "genfunc")
    dp = compute_series(n, kind, maxlen, "dp")
    record_check(f"agreement:genfunc-dp:{kind.value}", series == dp, first_difference(series, dp))
    name = f"agreement:genfunc-oracle:{kind.value}"
    try:
        oracle = compute_series(n, kind, maxlen, "oracle")
    except ResourceLimitError as exc:
        record_check(name, False, str(exc))
        return {name}
    record_check(name, series == oracle, first_difference(series, oracle))
    return set()


def _verify_flip(n: int, kind: MonoidKind) -> None:
    gf = generating_function(n, kind)
    bad = []
    for s in alphabet(n, kind):
        # commuting x's are ordered by index from 4 strands on, which breaks their symmetry
        if s.is_x and n > 3:
            continue
        image = flip_syllable(s, kind)
        if gf.per_syllable[s.id] != gf.per_syllable[image.id]:
            bad.append(f"g{s.id}<->g{image.id}")
    record_check(f"symmetry:flip:{kind.value}", not bad, ", ".join(bad) or None)


def _verify_three_strand_fixtures() -> None:
    gf = generating_function(3, MonoidKind.SINGULAR)
    record_check(
        "fixture:denominator",
        gf.numerator == [1] and gf.denominator == THREE_STRAND_DENOMINATOR,
        f"numerator {gf.numerator}, denominator {gf.denominator}",
    )
    eps = epsilon_matrix(3)
    table = {sid: set(eps.row(sid)) for sid in eps.ids}
    record_check("fixture:predecessor-table", table == THREE_STRAND_PREDECESSORS, None if table == THREE_STRAND_PREDECESSORS else str(table))

    series = _integers(series_expand(gf.rf, 30))
    record_check("fixture:first-terms", series[:6] == FIRST_TERMS, first_difference(FIRST_TERMS, series[:6]))
    rec = recurrence_from(gf.rf)
    homogeneous = all(rec.predict(series, k) == series[k] for k in range(1, 31))
    inhomogeneous = all(rec.predict_inhomogeneous(series, k) == series[k] for k in range(1, 31))
    record_check("fixture:recurrence", homogeneous, None if homogeneous else "homogeneous recurrence fails")
    record_check("fixture:recurrence-unit-pole", inhomogeneous, None if inhomogeneous else "inhomogeneous recurrence fails")

    report = growth_report(gf)
    dominant = report.dominant_root
    root_ok = dominant is not None and abs(float(dominant) - DOMINANT_ROOT) < 1e-9
    record_check("fixture:dominant-root", root_ok, None if root_ok else f"dominant root {dominant}")
    if report.residues is None:
        record_check("fixture:residues", False, "residues unavailable")
        return
    approx = report.reconstruct(range(5, 31))
    worst = max(abs(a - b) / b for a, b in zip(approx, series[5:31]))
    record_check("fixture:residues", worst < 1e-6, None if worst < 1e-6 else f"relative error {worst:.3g}")


# ── Rendering ────────────────────────────────────────────────────────────


def _document(command: str, args: argparse.Namespace, payload: dict) -> OutputDocument:
    return OutputDocument(
        command=command, n=args.n, kind=args.kind.value, format=args.format, payload=payload,
    )


def _table(doc: OutputDocument) -> pd.DataFrame:
    p = doc.payload
    if doc.command == "series":
        return pd.DataFrame({"k": range(len(p["coefficients"])), "b_k": p["coefficients"]})
    if doc.command == "genfunc":
        num, den = p["numerator"], p["denominator"]
        size = max(len(num), len(den))
        return pd.DataFrame({
            "degree": range(size),
            "numerator": num + [0] * (size - len(num)),
            "denominator": den + [0] * (size - len(den)),
        })
    if doc.command == "growth":
        return pd.DataFrame(p["roots"], columns=["value", "multiplicity", "residue"])
    if doc.command == "predecessors":
        df = pd.DataFrame(p["rows"])
        df["predecessors"] = df["predecessors"].apply(lambda ids: " ".join(str(i) for i in ids))
        return df
    if doc.command == "oracle":
        return pd.DataFrame({"k": range(len(p["counts"])), "classes": p["counts"]})
    return pd.DataFrame(p["checks"], columns=["name", "passed", "detail"])


def _text(doc: OutputDocument) -> str:
    p = doc.payload
    if doc.command == "series":
        return ",".join(str(c) for c in p["coefficients"])
    if doc.command == "genfunc":
        return f"numerator: {p['numerator']}\ndenominator: {p['denominator']}"
    if doc.command == "growth":
        lines = [f"growth rate: {p['growth_rate']:.12f}"]
        for r in p["roots"]:
            residue = "" if r["residue"] is None else f"  residue {r['residue']:.12f}"
            lines.append(f"root {r['value']:.12f} (multiplicity {r['multiplicity']}){residue}")
        rec = p["recurrence"]
        lines.append(f"recurrence (k >= {rec['valid_from']}): {rec['coefficients']}")
        if rec["reduced_coefficients"] is not None:
            lines.append(f"recurrence with constant {rec['constant']}: {rec['reduced_coefficients']}")
        if p["cubic"] is not None:
            c = p["cubic"]
            lines.append(f"cubic factor: {c['factor']}")
            lines.append(f"depressed cubic: p = {c['p']}, q = {c['q']}, q^2/4 + p^3/27 = {c['discriminant_expr']}")
        return "\n".join(lines)
    if doc.command == "predecessors":
        return "\n".join(
            f"g{r['id']:<3} {r['word']:<14} l={r['length']}  Pred: {' '.join(f'g{i}' for i in r['predecessors'])}"
            for r in p["rows"]
        )
    if doc.command == "oracle":
        out = ",".join(str(c) for c in p["counts"])
        if p["representatives"] is not None:
            out += "\n" + "\n".join(p["representatives"])
        return out
    s = p["summary"]
    lines = [f"{c['name']}: {'ok' if c['passed'] else 'FAIL'}" for c in p["checks"]]
    lines.append(f"{s['passed']}/{s['total']} checks passed")
    return "\n".join(lines)


def render(doc: OutputDocument) -> str:
    if doc.format == "json":
        return doc.to_json()
    if doc.format == "csv":
        return _table(doc).to_csv(index=False).rstrip("\n")
    return _text(doc)


# ── Entry point ──────────────────────────────────────────────────────────


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sbgrowth",
        description="Growth series of positive singular and classical braid monoids.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="number of strands")
    common.add_argument(
        "--kind", type=MonoidKind, choices=[k.value for k in MonoidKind], default=MonoidKind.SINGULAR,
    )
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--verbose", action="store_true", help="log progress to stderr")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", parents=[common], help="coefficients b_0..b_K")
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--method", choices=["genfunc", "dp", "oracle"], default="genfunc")
    p.set_defaults(handler=cmd_series)

    p = sub.add_parser("genfunc", parents=[common], help="growth function as integer coefficient lists")
    p.set_defaults(handler=cmd_genfunc)

    p = sub.add_parser("growth", parents=[common], help="roots, residues, growth rate, recurrence")
    p.add_argument("--tol", type=float, default=DEFAULT_GROWTH_CONFIG.tol)
    p.set_defaults(handler=cmd_growth)

    p = sub.add_parser("predecessors", parents=[common], help="syllables and their predecessor sets")
    p.set_defaults(handler=cmd_predecessors)

    p = sub.add_parser("oracle", parents=[common], help="brute-force class counts")
    p.add_argument("--maxlen", type=int, required=True)
    p.add_argument("--list-length", type=int, default=None)
    p.set_defaults(handler=cmd_oracle)

    p = sub.add_parser("verify", parents=[common], help="cross-check all methods and fixtures")
    p.add_argument("--maxlen", type=int, required=True)
    p.set_defaults(handler=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    for flag in ("terms", "maxlen", "list_length"):
        value = getattr(args, flag, None)
        if value is not None and value < 0:
            print(f"error: --{flag.replace('_', '-')} must be non-negative", file=sys.stderr)
            return EXIT_USAGE
    tol = getattr(args, "tol", None)
    if tol is not None and not tol > 0:
        print("error: --tol must be positive", file=sys.stderr)
        return EXIT_USAGE

    handler: Callable[[argparse.Namespace], tuple[OutputDocument, int]] = args.handler
    try:
        doc, code = handler(args)
    except (InvalidStrandCountError, InvalidWordError, NotCubicError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except SBGrowthError as exc:
        logger.warning("Computation failed", exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH

    print(render(doc))
    return code


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
