"""Ingestion of crowdsourced slang-dictionary entries.

Entries arrive as JSON lines, one object per record, with fields term,
meanings, examples, related_terms, upvotes, downvotes and an optional
created_date. Meanings and examples are carried for provenance only; the
related-word lists are the only entry content the sentiment stages trust.
"""

from __future__ import annotations

import gzip
import io
import json
import logging
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from datetime import date, timedelta
from pathlib import Path
from typing import TextIO
from urllib.parse import parse_qs, urlparse

from .errors import IngestError
from .text import normalize_term

log = logging.getLogger(__name__)

Vocabulary = dict[str, "SlangEntry"]

EXTENSION_URL_BASE = "http://www.urbandictionary.com/yesterday.php"


@dataclass(frozen=True)
class SlangEntry:
    """One crowdsourced dictionary record."""

    term: str
    meanings: tuple[str, ...]
    examples: tuple[str, ...]
    related_terms: tuple[str, ...] = ()
    upvotes: int = 0
    downvotes: int = 0
    created_date: date | None = None

    def __post_init__(self) -> None:
        if not self.meanings:
            raise ValueError(f"entry {self.term!r} has no meanings")
        if not self.examples:
            raise ValueError(f"entry {self.term!r} has no examples")
        if self.upvotes < 0 or self.downvotes < 0:
            raise ValueError(f"entry {self.term!r} has negative votes")

    @property
    def net_votes(self) -> int:
        return self.upvotes - self.downvotes


@dataclass(frozen=True)
class IngestIssue:
    line: int
    message: str


def parse_entries(
    lines: Iterable[str],
    *,
    strict: bool = True,
    issues: list[IngestIssue] | None = None,
) -> list[SlangEntry]:
    """Parse JSON-line entry records in stream order.

    In strict mode the first bad record raises IngestError (with its line
    number); in lenient mode bad records are skipped and reported through the
    optional `issues` list. Blank lines are ignored in both modes.
    """
    entries: list[SlangEntry] = []
    for number, raw in enumerate(lines, start=1):
        if not raw.strip():
            continue
        try:
            entries.append(_parse_record(raw, number))
        except IngestError as exc:
            if strict:
                raise
            if issues is not None:
                issues.append(IngestIssue(number, str(exc)))
            log.warning("skipping entry record: %s", exc)
    return entries


def _parse_record(raw: str, number: int) -> SlangEntry:
    try:
        record = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise IngestError(f"bad JSON: {exc}", line=number) from None
    if not isinstance(record, dict):
        raise IngestError("record is not an object", line=number)

    term = record.get("term")
    if not isinstance(term, str) or not term.strip():
        raise IngestError("missing or empty 'term'", line=number)
    try:
        normalize_term(term)
    except Exception:
        raise IngestError(f"term {term!r} normalizes to nothing", line=number) from None

    meanings = _string_list(record, "meanings", number)
    examples = _string_list(record, "examples", number)
    if not meanings:
        raise IngestError("entry must have at least one meaning", line=number)
    if not examples:
        raise IngestError("entry must have at least one example", line=number)

    related = _string_list(record, "related_terms", number, default=())
    upvotes = _vote(record, "upvotes", number)
    downvotes = _vote(record, "downvotes", number)

    created = None
    if record.get("created_date") is not None:
        try:
            created = date.fromisoformat(record["created_date"])
        except (TypeError, ValueError):
            raise IngestError(
                f"bad created_date {record['created_date']!r}", line=number
            ) from None

    return SlangEntry(
        term=term,
        meanings=meanings,
        examples=examples,
        related_terms=related,
        upvotes=upvotes,
        downvotes=downvotes,
        created_date=created,
    )


def _string_list(
    record: dict, key: str, number: int, default: tuple[str, ...] | None = None
) -> tuple[str, ...]:
    value = record.get(key)
    if value is None:
        if default is not None:
            return default
        raise IngestError(f"missing '{key}'", line=number)
    if not isinstance(value, list) or any(not isinstance(v, str) for v in value):
        raise IngestError(f"'{key}' must be a list of strings", line=number)
    return tuple(value)


def _vote(record: dict, key: str, number: int) -> int:
    value = record.get(key, 0)
    if isinstance(value, bool) or not isinstance(value, int):
        raise IngestError(f"'{key}' must be an integer", line=number)
    if value < 0:
        raise IngestError(f"'{key}' must be non-negative", line=number)
    return value


def serialize_entry(entry: SlangEntry) -> str:
    record: dict[str, object] = {
        "term": entry.term,
        "meanings": list(entry.meanings),
        "examples": list(entry.examples),
        "related_terms": list(entry.related_terms),
        "upvotes": entry.upvotes,
        "downvotes": entry.downvotes,
    }
    if entry.created_date is not None:
        record["created_date"] = entry.created_date.isoformat()
    return json.dumps(record, ensure_ascii=False, sort_keys=True)


def serialize_entries(entries: Iterable[SlangEntry]) -> str:
    return "".join(serialize_entry(e) + "\n" for e in entries)


def build_vocabulary(entries: Iterable[SlangEntry]) -> Vocabulary:
    """Merge entries into one record per normalized term.

    Meanings and examples are concatenated with the better-voted entry's
    items first (descending net votes, ties keep input order); votes are
    summed; related terms are normalized, deduplicated, sorted, and never
    include the term itself. Terms pointing outside the vocabulary are kept:
    graph construction decides what to do with them.
    """
    groups: dict[str, list[SlangEntry]] = {}
    for entry in entries:
        groups.setdefault(normalize_term(entry.term), []).append(entry)

    vocabulary: Vocabulary = {}
    for term, group in groups.items():
        ranked = sorted(group, key=lambda e: e.net_votes, reverse=True)
        related: set[str] = set()
        for entry in group:
            for raw in entry.related_terms:
                try:
                    related.add(normalize_term(raw))
                except Exception:
                    continue
        related.discard(term)
        dates = [e.created_date for e in group if e.created_date is not None]
        vocabulary[term] = SlangEntry(
            term=term,
            meanings=tuple(m for e in ranked for m in e.meanings),
            examples=tuple(x for e in ranked for x in e.examples),
            related_terms=tuple(sorted(related)),
            upvotes=sum(e.upvotes for e in group),
            downvotes=sum(e.downvotes for e in group),
            created_date=min(dates) if dates else None,
        )
    return vocabulary


def save_vocabulary(vocabulary: Vocabulary, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        for term in sorted(vocabulary):
            handle.write(serialize_entry(vocabulary[term]) + "\n")


def load_vocabulary(path: str | Path) -> Vocabulary:
    with open_records(path) as handle:
        return build_vocabulary(parse_entries(handle, strict=True))


def open_records(path: str | Path) -> TextIO:
    """Open a record file for reading, transparently decompressing gzip."""
    with open(path, "rb") as probe:
        magic = probe.read(2)
    if magic == b"\x1f\x8b":
        return io.TextIOWrapper(gzip.open(path, "rb"), encoding="utf-8")
    return open(path, encoding="utf-8")


# --- extension workflow ------------------------------------------------------


def extension_url(day: date) -> str:
    """URL of the new-words-by-creation-date page for one calendar day."""
    return f"{EXTENSION_URL_BASE}?date={day.isoformat()}"


def date_range(start: date, end: date) -> list[date]:
    """Calendar days from start to end, inclusive; empty when start > end."""
    days = (end - start).days
    return [start + timedelta(days=i) for i in range(days + 1)] if days >= 0 else []


EntryFetcher = Callable[[str], "str | bytes"]


@dataclass(frozen=True)
class FetchFailure:
    day: date
    error: str


@dataclass
class FetchReport:
    requested: int = 0
    succeeded: int = 0
    failures: list[FetchFailure] = field(default_factory=list)


def fetch_new_entries(
    fetcher: EntryFetcher, start: date, end: date
) -> tuple[list[SlangEntry], FetchReport]:
    """Fetch and parse entry records for every day in [start, end].

    The fetcher maps a URL to raw records (text or bytes). A failing day is
    recorded in the report and the remaining days still run; output order is
    by date, then record order within a day. Duplicate terms are left for
    build_vocabulary to merge.
    """
    entries: list[SlangEntry] = []
    report = FetchReport()
    for day in date_range(start, end):
        report.requested += 1
        url = extension_url(day)
        try:
            payload = fetcher(url)
            if isinstance(payload, bytes):
                payload = payload.decode("utf-8")
            entries.extend(parse_entries(payload.splitlines(), strict=True))
        except Exception as exc:
            report.failures.append(FetchFailure(day, str(exc)))
            log.warning("fetch failed for %s: %s", day, exc)
            continue
        report.succeeded += 1
    return entries, report


class DirectoryFetcher:
    """EntryFetcher over local files: the record file for a date-keyed URL is
    <directory>/<YYYY-MM-DD>.jsonl (optionally .jsonl.gz)."""

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)

    def __call__(self, url: str) -> str:
        query = parse_qs(urlparse(url).query)
        dates = query.get("date") or []
        if len(dates) != 1:
            raise ValueError(f"no date parameter in URL: {url!r}")
        for name in (f"{dates[0]}.jsonl", f"{dates[0]}.jsonl.gz"):
            candidate = self.directory / name
            if candidate.exists():
                with open_records(candidate) as handle:
                    return handle.read()
        raise FileNotFoundError(f"no record file for {dates[0]} under {self.directory}")
