"""Command-line interface.

Exit codes: 0 success, 1 usage/config error, 2 data error, 3 provider error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from datetime import date
from pathlib import Path

from .corpus import FileCorpusProvider, estimate_all, load_corpus
from .distant import (
    EmoticonSet,
    build_eval_corpus,
    default_emoticons,
    load_labeled_corpus,
    save_labeled_corpus,
)
from .errors import ConfigError, ProviderError, SlangSentError
from .ingest import (
    DirectoryFetcher,
    build_vocabulary,
    fetch_new_entries,
    load_vocabulary,
    open_records,
    parse_entries,
    save_vocabulary,
    serialize_entries,
)
from .lexicon import (
    SeedSource,
    combine,
    export_idiom_table,
    export_slangsd,
    load_lexicon,
    load_seed_values,
    merge_seed_lexicons,
    save_lexicon,
)
from .pipeline import _parse_scale, load_config, run_pipeline
from .propagate import build_graph, propagate, stage_report
from .scoring import EvalSubset, evaluate, score_text

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_DATA = 2
EXIT_PROVIDER = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; this tool reserves 2 for
    # data errors and reports usage problems as 1.
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def _date_arg(text: str) -> date:
    try:
        return date.fromisoformat(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a YYYY-MM-DD date: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="slangsent", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true", help="log stage progress")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ingest", help="parse entry records into a vocabulary file")
    p.add_argument("--input", nargs="+", required=True, type=Path)
    p.add_argument("--output", required=True, type=Path)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--strict", dest="strict", action="store_true", default=True)
    mode.add_argument("--lenient", dest="strict", action="store_false")
    p.set_defaults(func=_cmd_ingest)

    p = sub.add_parser("seed", help="merge external seed lexicons")
    p.add_argument("--sources", required=True, type=Path, help="JSON list of {id, path, scale}")
    p.add_argument("--output", required=True, type=Path)
    p.set_defaults(func=_cmd_seed)

    p = sub.add_parser("estimate", help="corpus-estimate strengths for uncovered terms")
    p.add_argument("--vocabulary", required=True, type=Path)
    p.add_argument("--seed", required=True, type=Path)
    p.add_argument("--corpus", required=True, type=Path)
    p.add_argument("--max-docs", type=int, default=150)
    p.add_argument("--sample-seed", type=int, default=0)
    p.add_argument("--output", required=True, type=Path)
    p.add_argument("--report", type=Path)
    p.set_defaults(func=_cmd_estimate)

    p = sub.add_parser("propagate", help="propagate strengths over the related-word graph")
    p.add_argument("--graph-from", required=True, type=Path, help="vocabulary file")
    p.add_argument("--seeds", required=True, type=Path, help="lexicon file")
    p.add_argument("--output", required=True, type=Path)
    p.add_argument("--report", type=Path, help="text report path (JSON twin gets .json)")
    p.set_defaults(func=_cmd_propagate)

    p = sub.add_parser("assemble", help="combine stage lexicons with stage precedence")
    p.add_argument("--vocabulary", required=True, type=Path)
    p.add_argument("--seed", required=True, type=Path)
    p.add_argument("--estimates", required=True, type=Path)
    p.add_argument("--propagated", required=True, type=Path)
    p.add_argument("--output", required=True, type=Path)
    p.set_defaults(func=_cmd_assemble)

    p = sub.add_parser("export", help="write the dictionary and/or idiom-table files")
    p.add_argument("--lexicon", required=True, type=Path)
    p.add_argument("--slangsd", type=Path)
    p.add_argument("--idiom-table", type=Path)
    p.set_defaults(func=_cmd_export)

    p = sub.add_parser("score", help="score a text or a corpus file")
    p.add_argument("--lexicon", required=True, type=Path)
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--text")
    what.add_argument("--corpus", type=Path)
    p.set_defaults(func=_cmd_score)

    p = sub.add_parser("evaluate", help="evaluate against a gold-labeled corpus")
    p.add_argument("--lexicon", required=True, type=Path)
    p.add_argument("--corpus", required=True, type=Path)
    p.add_argument("--subset", choices=[s.value for s in EvalSubset], default="all")
    p.add_argument("--json", type=Path, help="also write the machine-readable report here")
    p.set_defaults(func=_cmd_evaluate)

    p = sub.add_parser("label", help="distant-label a corpus via emoticons")
    p.add_argument("--corpus", required=True, type=Path)
    p.add_argument("--output", required=True, type=Path)
    p.add_argument("--emoticons", type=Path, help="emoticon set file (default: built-in)")
    p.set_defaults(func=_cmd_label)

    p = sub.add_parser("extend", help="fetch new entries for a date range")
    p.add_argument("--from", dest="start", required=True, type=_date_arg)
    p.add_argument("--to", dest="end", required=True, type=_date_arg)
    p.add_argument("--fetch-dir", required=True, type=Path,
                   help="directory of <YYYY-MM-DD>.jsonl record files")
    p.add_argument("--output", required=True, type=Path)
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("report", help="stage/class report for a lexicon file")
    p.add_argument("--lexicon", required=True, type=Path)
    p.add_argument("--json", type=Path)
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("run", help="run the full pipeline from a config file")
    p.add_argument("--config", required=True, type=Path)
    p.add_argument("--resume", action="store_true",
                   help="reuse stage outputs already present in the output directory")
    p.set_defaults(func=_cmd_run)

    return parser


def _cmd_ingest(args) -> int:
    issues = []
    entries = []
    for path in args.input:
        with open_records(path) as handle:
            entries.extend(parse_entries(handle, strict=args.strict, issues=issues))
    vocabulary = build_vocabulary(entries)
    save_vocabulary(vocabulary, args.output)
    for issue in issues:
        print(f"skipped line {issue.line}: {issue.message}", file=sys.stderr)
    print(f"{len(entries)} entries -> {len(vocabulary)} terms -> {args.output}")
    return EXIT_OK


def _load_seed_sources(path: Path) -> list[SeedSource]:
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise ConfigError(f"sources file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"sources file is not valid JSON: {exc}") from None
    if not isinstance(raw, list):
        raise ConfigError("sources file must be a JSON list")
    sources = []
    for item in raw:
        try:
            scale = _parse_scale(item.get("scale"))
            source_path = path.parent / item["path"]
            sources.append(SeedSource(str(item["id"]), load_seed_values(source_path), scale))
        except (KeyError, TypeError) as exc:
            raise ConfigError(f"bad source entry: {exc!r}") from None
    return sources


def _cmd_seed(args) -> int:
    lexicon = merge_seed_lexicons(_load_seed_sources(args.sources))
    save_lexicon(lexicon, args.output)
    print(f"{len(lexicon)} seed terms -> {args.output}")
    return EXIT_OK


def _cmd_estimate(args) -> int:
    vocabulary = load_vocabulary(args.vocabulary)
    seed = load_lexicon(args.seed)
    provider = FileCorpusProvider(args.corpus, sample_seed=args.sample_seed)
    delta, report = estimate_all(vocabulary, provider, seed, max_docs=args.max_docs)
    save_lexicon(delta, args.output)
    if args.report:
        payload = {
            "estimated": report.estimated,
            "unlabelable": report.unlabelable,
            "failures": [{"term": t, "error": e} for t, e in report.failures],
        }
        args.report.write_text(
            json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8", newline="\n"
        )
    print(
        f"{report.estimated} estimated, {len(report.unlabelable)} unlabelable, "
        f"{len(report.failures)} failures -> {args.output}"
    )
    return EXIT_OK


def _cmd_propagate(args) -> int:
    vocabulary = load_vocabulary(args.graph_from)
    seeds = load_lexicon(args.seeds)
    result = propagate(build_graph(vocabulary), seeds)
    save_lexicon(result.labeled, args.output)
    if args.report:
        report = stage_report(combine(seeds.restricted(vocabulary.keys()), result.labeled))
        args.report.write_text(report.format_text(), encoding="utf-8", newline="\n")
        args.report.with_suffix(args.report.suffix + ".json").write_text(
            json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n",
            encoding="utf-8",
            newline="\n",
        )
    print(
        f"{len(result.labeled)} labeled in {result.iterations} iterations, "
        f"{len(result.unreached)} unreached -> {args.output}"
    )
    return EXIT_OK


def _cmd_assemble(args) -> int:
    vocabulary = load_vocabulary(args.vocabulary)
    seed = load_lexicon(args.seed).restricted(vocabulary.keys())
    final = combine(seed, load_lexicon(args.estimates), load_lexicon(args.propagated))
    save_lexicon(final, args.output)
    print(f"{len(final)} terms -> {args.output}")
    return EXIT_OK


def _cmd_export(args) -> int:
    if not args.slangsd and not args.idiom_table:
        raise ConfigError("nothing to export: pass --slangsd and/or --idiom-table")
    lexicon = load_lexicon(args.lexicon)
    if args.slangsd:
        args.slangsd.write_text(export_slangsd(lexicon), encoding="utf-8", newline="\n")
        print(f"dictionary -> {args.slangsd}")
    if args.idiom_table:
        args.idiom_table.write_text(export_idiom_table(lexicon), encoding="utf-8", newline="\n")
        print(f"idiom table -> {args.idiom_table}")
    return EXIT_OK


def _cmd_score(args) -> int:
    lexicon = load_lexicon(args.lexicon)
    if args.text is not None:
        print(score_text(args.text, lexicon).format_text(), end="")
        return EXIT_OK
    for doc in load_corpus(args.corpus):
        breakdown = score_text(doc.text, lexicon)
        print(f"{doc.id}\t{breakdown.total:+g}\t{breakdown.polarity.value}")
    return EXIT_OK


def _cmd_evaluate(args) -> int:
    lexicon = load_lexicon(args.lexicon)
    corpus = load_labeled_corpus(args.corpus)
    report = evaluate(corpus, lexicon, EvalSubset(args.subset))
    print(f"subset: {args.subset}")
    print(report.format_table(), end="")
    if args.json:
        args.json.write_text(
            json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n",
            encoding="utf-8",
            newline="\n",
        )
    return EXIT_OK


def _cmd_label(args) -> int:
    emoticons = EmoticonSet.from_file(args.emoticons) if args.emoticons else default_emoticons()
    labeled, report = build_eval_corpus(load_corpus(args.corpus), emoticons)
    save_labeled_corpus(labeled, args.output)
    print(
        f"{report.labeled} labeled, {report.discarded_conflict} conflicting, "
        f"{report.discarded_unmarked} without emoticons -> {args.output}"
    )
    return EXIT_OK


def _cmd_extend(args) -> int:
    if not args.fetch_dir.is_dir():
        raise ConfigError(f"not a directory: {args.fetch_dir}")
    entries, report = fetch_new_entries(DirectoryFetcher(args.fetch_dir), args.start, args.end)
    args.output.write_text(serialize_entries(entries), encoding="utf-8", newline="\n")
    for failure in report.failures:
        print(f"fetch failed for {failure.day}: {failure.error}", file=sys.stderr)
    print(
        f"{len(entries)} entries from {report.succeeded}/{report.requested} days "
        f"-> {args.output}"
    )
    return EXIT_OK


def _cmd_report(args) -> int:
    report = stage_report(load_lexicon(args.lexicon))
    print(report.format_text(), end="")
    if args.json:
        args.json.write_text(
            json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n",
            encoding="utf-8",
            newline="\n",
        )
    return EXIT_OK


def _cmd_run(args) -> int:
    result = run_pipeline(load_config(args.config), resume=args.resume)
    print(result.report.format_text(), end="")
    print(f"exports under {result.paths['slangsd'].parent}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ProviderError as exc:
        print(f"provider error: {exc}", file=sys.stderr)
        return EXIT_PROVIDER
    except (SlangSentError, OSError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
