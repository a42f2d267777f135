"""End-to-end lexicon construction pipeline.

Stages: ingest entries -> build vocabulary -> merge seed lexicons ->
corpus-estimate the rest -> propagate over the related-word graph ->
assemble with stage precedence (seed > corpus estimate > propagation) ->
export. Every stage's output is persisted in the output directory, so a run
can resume from any intermediate, and identical configs produce
byte-identical exports.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import DEFAULT_MAX_DOCS, EstimationReport, FileCorpusProvider, estimate_all
from .errors import ConfigError
from .ingest import (
    IngestIssue,
    build_vocabulary,
    load_vocabulary,
    open_records,
    parse_entries,
    save_vocabulary,
)
from .lexicon import (
    Lexicon,
    LinearScale,
    SeedSource,
    combine,
    export_idiom_table,
    export_slangsd,
    load_lexicon,
    load_seed_values,
    merge_seed_lexicons,
    save_lexicon,
)
from .propagate import PropagationResult, StageReport, build_graph, propagate, stage_report

log = logging.getLogger(__name__)

OUTPUT_FILES = {
    "vocabulary": "vocabulary.jsonl",
    "seed": "seed_lexicon.jsonl",
    "estimates": "corpus_estimates.jsonl",
    "propagated": "propagated.jsonl",
    "final": "final_lexicon.jsonl",
    "slangsd": "slangsd.txt",
    "idiom_table": "idiom_additions.txt",
    "report_text": "stage_report.txt",
    "report_json": "stage_report.json",
}


@dataclass(frozen=True)
class SeedSourceConfig:
    source_id: str
    path: Path
    scale: LinearScale = LinearScale()

    def load(self) -> SeedSource:
        return SeedSource(self.source_id, load_seed_values(self.path), self.scale)


@dataclass
class PipelineConfig:
    entry_files: list[Path]
    seed_sources: list[SeedSourceConfig]
    corpus_file: Path
    output_dir: Path
    max_docs: int = DEFAULT_MAX_DOCS
    sample_seed: int = 0
    strict: bool = True

    def validate(self) -> None:
        if self.max_docs < 1:
            raise ConfigError(f"max_docs must be >= 1, got {self.max_docs}")
        if not self.entry_files:
            raise ConfigError("no entry files configured")
        missing = [
            str(path)
            for path in [*self.entry_files, *(s.path for s in self.seed_sources), self.corpus_file]
            if not Path(path).is_file()
        ]
        if missing:
            raise ConfigError(f"missing input files: {', '.join(missing)}")


def _parse_scale(raw: object) -> LinearScale:
    if raw is None:
        return LinearScale()
    if not isinstance(raw, dict):
        raise ConfigError(f"scale must be an object, got {raw!r}")
    if "source_range" in raw:
        lo, hi = raw["source_range"]
        target = raw.get("target_range", [-2.0, 2.0])
        return LinearScale.from_ranges((float(lo), float(hi)), (float(target[0]), float(target[1])))
    return LinearScale(
        factor=float(raw.get("factor", 1.0)), offset=float(raw.get("offset", 0.0))
    )


def load_config(path: str | Path) -> PipelineConfig:
    """Read a pipeline config file (JSON). Relative paths are resolved
    against the config file's directory."""
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")

    base = path.parent

    def _resolve(value: object, name: str) -> Path:
        if not isinstance(value, str) or not value:
            raise ConfigError(f"'{name}' must be a path string")
        return base / value

    try:
        entry_files = [_resolve(p, "entries") for p in raw["entries"]]
        corpus_file = _resolve(raw["corpus"], "corpus")
        output_dir = _resolve(raw["output_dir"], "output_dir")
        seed_sources = [
            SeedSourceConfig(
                source_id=str(item["id"]),
                path=_resolve(item["path"], "seed_lexicons.path"),
                scale=_parse_scale(item.get("scale")),
            )
            for item in raw.get("seed_lexicons", [])
        ]
    except (KeyError, TypeError) as exc:
        raise ConfigError(f"bad config: {exc!r}") from None

    config = PipelineConfig(
        entry_files=entry_files,
        seed_sources=seed_sources,
        corpus_file=corpus_file,
        output_dir=output_dir,
        max_docs=int(raw.get("max_docs", DEFAULT_MAX_DOCS)),
        sample_seed=int(raw.get("sample_seed", 0)),
        strict=bool(raw.get("strict", True)),
    )
    config.validate()
    return config


@dataclass
class PipelineResult:
    final: Lexicon
    report: StageReport
    paths: dict[str, Path]
    vocabulary_size: int
    ingest_issues: list[IngestIssue] = field(default_factory=list)
    estimation: EstimationReport | None = None
    propagation: PropagationResult | None = None


def run_pipeline(config: PipelineConfig, *, resume: bool = False) -> PipelineResult:
    """Run the full construction pipeline, persisting every stage output.

    With resume=True, stages whose output file already exists are loaded
    instead of recomputed; rerunning from any persisted intermediate yields
    the same final exports.
    """
    config.validate()
    out = Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {name: out / filename for name, filename in OUTPUT_FILES.items()}
    result_issues: list[IngestIssue] = []

    # Stage: ingest + vocabulary.
    if resume and paths["vocabulary"].exists():
        log.info("resuming: vocabulary from %s", paths["vocabulary"])
        vocabulary = load_vocabulary(paths["vocabulary"])
    else:
        entries = []
        for entry_file in config.entry_files:
            with open_records(entry_file) as handle:
                entries.extend(
                    parse_entries(handle, strict=config.strict, issues=result_issues)
                )
        vocabulary = build_vocabulary(entries)
        save_vocabulary(vocabulary, paths["vocabulary"])
        log.info("vocabulary: %d terms from %d entries", len(vocabulary), len(entries))

    # Stage: merge seed lexicons (full external vocabulary; used both as
    # labels for vocabulary terms and as sentiment evidence for estimation).
    if resume and paths["seed"].exists():
        log.info("resuming: seed lexicon from %s", paths["seed"])
        seed = load_lexicon(paths["seed"])
    else:
        seed = merge_seed_lexicons(source.load() for source in config.seed_sources)
        save_lexicon(seed, paths["seed"])
        log.info("seed lexicon: %d terms", len(seed))

    seed_stage = seed.restricted(vocabulary.keys())

    # Stage: corpus estimation for terms the seeds do not cover.
    estimation_report = None
    if resume and paths["estimates"].exists():
        log.info("resuming: corpus estimates from %s", paths["estimates"])
        estimates = load_lexicon(paths["estimates"])
    else:
        provider = FileCorpusProvider(config.corpus_file, sample_seed=config.sample_seed)
        estimates, estimation_report = estimate_all(
            vocabulary, provider, seed, max_docs=config.max_docs
        )
        save_lexicon(estimates, paths["estimates"])
        log.info(
            "corpus estimates: %d labeled, %d unlabelable, %d failures",
            estimation_report.estimated,
            len(estimation_report.unlabelable),
            len(estimation_report.failures),
        )

    # Stage: propagation over the related-word graph.
    propagation = None
    if resume and paths["propagated"].exists():
        log.info("resuming: propagation from %s", paths["propagated"])
        propagated = load_lexicon(paths["propagated"])
    else:
        graph = build_graph(vocabulary)
        propagation = propagate(graph, combine(seed_stage, estimates))
        propagated = propagation.labeled
        save_lexicon(propagated, paths["propagated"])
        log.info(
            "propagation: %d labeled in %d iterations, %d unreached",
            len(propagated),
            propagation.iterations,
            len(propagation.unreached),
        )

    # Assemble with stage precedence; unreached vocabulary terms stay out.
    final = combine(seed_stage, estimates, propagated)
    save_lexicon(final, paths["final"])

    report = stage_report(final)
    paths["slangsd"].write_text(export_slangsd(final), encoding="utf-8", newline="\n")
    paths["idiom_table"].write_text(export_idiom_table(final), encoding="utf-8", newline="\n")
    paths["report_text"].write_text(report.format_text(), encoding="utf-8", newline="\n")
    paths["report_json"].write_text(
        json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
        newline="\n",
    )
    log.info("final lexicon: %d terms -> %s", len(final), paths["slangsd"])

    return PipelineResult(
        final=final,
        report=report,
        paths=paths,
        vocabulary_size=len(vocabulary),
        ingest_issues=result_issues,
        estimation=estimation_report,
        propagation=propagation,
    )
