"""Command-line frontend: run the pipeline in batch or interactively,
record fixtures, and run the rating-agreement kit.

Exit codes: 0 success, 1 pipeline failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .agreement import RatingMatrix, drop_na_items, fleiss_kappa, is_degenerate, mean_rating
from .config import MODE_LIVE, MODE_RECORD, MODE_REPLAY, EvidexConfig
from .errors import AllNA, EvidexError, MalformedUrl
from .ingest import validate_article_url
from .keywords import apply_selection
from .pipeline import EvidencePipeline
from .serialize import bundle_to_dict, bundle_to_json
from .textproc import normalize_phrase

EXIT_OK = 0
EXIT_PIPELINE = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evidex",
        description="Evidence engine for fact-checking a news article.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run the full pipeline for a news article URL")
    check.add_argument("url", help="news article to investigate")
    check.add_argument("--offline", action="store_true",
                       help="replay recorded fixtures instead of live calls")
    check.add_argument("--fixtures", metavar="DIR", help="fixture directory")
    check.add_argument("--record", action="store_true",
                       help="perform live calls and record fixtures into --fixtures")
    check.add_argument("--keywords", metavar="CSV",
                       help="comma-separated keywords; skips the interactive prompt")
    check.add_argument("--interactive", action="store_true",
                       help="print candidates and read the selection from stdin")
    check.add_argument("--format", choices=("json", "text"), default="text")
    check.add_argument("--max-per-tier", type=int, default=10, metavar="N")
    check.add_argument("--timeout", type=float, default=15.0, metavar="SECS")

    kappa = sub.add_parser("kappa", help="mean rating and Fleiss' kappa for rating CSVs")
    kappa.add_argument("files", nargs="+", metavar="CSV",
                       help="rating files (header: item,rater_1,...,rater_k)")

    return parser


def _config_for(args) -> EvidexConfig:
    if args.offline:
        mode = MODE_REPLAY
    elif args.record:
        mode = MODE_RECORD
    else:
        mode = MODE_LIVE
    return EvidexConfig.from_env(
        mode=mode,
        fixtures_dir=Path(args.fixtures) if args.fixtures else None,
        max_per_tier=args.max_per_tier,
        timeout=args.timeout,
    )


def _select_keywords(args, candidates) -> tuple[list[str], list[str]]:
    """Resolve the user's keyword choice into (chosen, custom)."""
    phrases = {c.phrase for c in candidates}
    if args.keywords:
        wanted = [p.strip() for p in args.keywords.split(",") if p.strip()]
        chosen = [p for p in wanted if normalize_phrase(p) in phrases]
        custom = [p for p in wanted if normalize_phrase(p) not in phrases]
        return chosen, custom
    if args.interactive:
        print("Candidate keywords:")
        for c in candidates:
            marker = "*" if c.boosted else " "
            print(f"  {c.rank:2d}{marker} {c.display}")
        print("Select by number (comma-separated); free text adds a custom keyword.")
        try:
            line = input("> ")
        except EOFError:
            line = ""
        chosen, custom = [], []
        for piece in line.split(","):
            piece = piece.strip()
            if not piece:
                continue
            if piece.isdigit() and 1 <= int(piece) <= len(candidates):
                chosen.append(candidates[int(piece) - 1].phrase)
            else:
                custom.append(piece)
        return chosen, custom
    # batch default: take every offered candidate
    return [c.phrase for c in candidates], []


def _print_text_report(report: dict, out) -> None:
    print(f"News query:    {report['query_news']}", file=out)
    print(f"Scholar query: {report['query_scholar']}", file=out)
    print(f"\nExpert opinions ({len(report['cards'])} sources):", file=out)
    for card in report["cards"]:
        tick = " [credibility rating: " + card["mbfc_url"] + "]" if card["mbfc_url"] else ""
        date = card["published_at"] or "date unknown"
        kind = "summary" if card["is_summary_card"] else "opinions"
        print(f"- {card['source_name']} ({card['source_tier']}, {date}, {kind}){tick}", file=out)
        print(f"  {card['article_url']}", file=out)
        for paragraph in card["opinion_paragraphs"]:
            print(f"    | {paragraph}", file=out)
    print(f"\nPublications ({len(report['publications'])}):", file=out)
    for pub in report["publications"]:
        print(f"- {pub['title']} ({pub['venue']}, {pub['year']})", file=out)
    print(f"\nResearchers ({len(report['researchers'])}):", file=out)
    for r in report["researchers"]:
        affiliation = f", {r['affiliation']}" if r["affiliation"] else ""
        print(f"- {r['name']}{affiliation} ({r['count']} publications)", file=out)
    if report["warnings"]:
        print("\nWarnings:", file=out)
        for warning in report["warnings"]:
            print(f"! {warning}", file=out)


def cmd_check(args) -> int:
    try:
        validate_article_url(args.url)
    except MalformedUrl as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if (args.offline or args.record) and not args.fixtures:
        print("error: --offline/--record require --fixtures DIR", file=sys.stderr)
        return EXIT_USAGE

    config = _config_for(args)
    try:
        pipeline = EvidencePipeline(config)
        doc = pipeline.ingest(args.url)
        candidates = pipeline.candidates(doc)
        chosen, custom = _select_keywords(args, candidates)
        selection = apply_selection(candidates, chosen, custom)
        result = pipeline.build_bundle(selection)
    except EvidexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PIPELINE

    if args.format == "json":
        print(bundle_to_json(result.bundle, result.warnings))
    else:
        _print_text_report(bundle_to_dict(result.bundle, result.warnings), sys.stdout)
    return EXIT_OK


def cmd_kappa(args) -> int:
    for name in args.files:
        try:
            matrix = RatingMatrix.from_csv(Path(name))
        except (OSError, ValueError) as exc:
            print(f"error: {name}: {exc}", file=sys.stderr)
            return EXIT_USAGE
        try:
            mean = mean_rating(matrix)
            rated = drop_na_items(matrix)
            kappa = fleiss_kappa(rated)
        except AllNA as exc:
            print(f"error: {name}: {exc}", file=sys.stderr)
            return EXIT_USAGE
        note = " (single category: agreement is perfect by definition)" \
            if is_degenerate(rated) else ""
        print(f"{name}: items={len(rated.items)} raters={len(matrix.raters)} "
              f"mean={mean:.4f} fleiss_kappa={kappa:.4f}{note}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "check":
        return cmd_check(args)
    if args.command == "kappa":
        return cmd_kappa(args)
    parser.error("unknown command")
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
