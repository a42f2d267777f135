"""Corpus-based strength estimation via the nearest-sentiment-word rule.

A query term's strength in one document is the mean strength of the known
sentiment words closest to it (token-index distance, ties averaged); a
document with no known sentiment word counts as neutral. The estimate for
the term is the mean over up to `max_docs` documents that contain it.
"""

from __future__ import annotations

import json
import logging
import random
from collections.abc import Iterable
from dataclasses import dataclass, field
from pathlib import Path
from typing import Protocol

from .errors import EstimationError, MissingTermError, ParseError
from .ingest import open_records
from .lexicon import Lexicon, LexiconEntry, Stage, clamp_strength, mean_strength
from .text import find_occurrences, tokenize

log = logging.getLogger(__name__)

DEFAULT_MAX_DOCS = 150


@dataclass(frozen=True)
class Document:
    """A short text with its derived token sequence."""

    id: str
    text: str
    tokens: tuple[str, ...]

    @classmethod
    def from_text(cls, id: str, text: str) -> Document:
        return cls(id=id, text=text, tokens=tuple(tokenize(text)))


class CorpusProvider(Protocol):
    """Provider boundary: retrieve documents containing a term."""

    def query(self, term: str, max_docs: int) -> list[Document]: ...


def load_corpus(path: str | Path) -> list[Document]:
    """Read a corpus file: one JSON object per line with "id" and "text"."""
    documents = []
    with open_records(path) as handle:
        for number, raw in enumerate(handle, start=1):
            if not raw.strip():
                continue
            try:
                record = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise ParseError(f"bad JSON: {exc}", line=number) from None
            if not isinstance(record, dict):
                raise ParseError("record is not an object", line=number)
            doc_id, text = record.get("id"), record.get("text")
            if not isinstance(doc_id, str) or not isinstance(text, str):
                raise ParseError("record needs string 'id' and 'text'", line=number)
            documents.append(Document.from_text(doc_id, text))
    return documents


class FileCorpusProvider:
    """Offline corpus provider over a local document file.

    query() finds every document whose token sequence contains the term; when
    more than max_docs match, a seeded per-term sample is drawn so runs are
    reproducible. Returned documents keep file order.
    """

    def __init__(self, path: str | Path, *, sample_seed: int = 0):
        self._documents = load_corpus(path)
        self._sample_seed = sample_seed
        self._index: dict[str, set[int]] = {}
        for position, doc in enumerate(self._documents):
            for token in set(doc.tokens):
                self._index.setdefault(token, set()).add(position)

    def __len__(self) -> int:
        return len(self._documents)

    def query(self, term: str, max_docs: int) -> list[Document]:
        candidates: set[int] | None = None
        for token in term.split(" "):
            positions = self._index.get(token)
            if positions is None:
                return []
            candidates = positions if candidates is None else candidates & positions
        matching = [
            position
            for position in sorted(candidates or ())
            if find_occurrences(self._documents[position].tokens, term)
        ]
        if len(matching) > max_docs:
            rng = random.Random(f"{self._sample_seed}:{term}")
            matching = sorted(rng.sample(matching, max_docs))
        return [self._documents[position] for position in matching]


def document_strength(doc: Document, term: str, seed: Lexicon) -> float:
    """Strength evidence one document gives for a term.

    Candidates are single tokens found in the seed lexicon, excluding tokens
    inside any occurrence of the term itself. Distance is the smallest
    token-index gap to any occurrence span; the document's value is the mean
    over candidates at the globally minimal distance. No candidates: 0.
    """
    spans = find_occurrences(doc.tokens, term)
    if not spans:
        raise MissingTermError(f"term {term!r} not in document {doc.id!r}")
    in_span = {i for start, end in spans for i in range(start, end + 1)}

    best_gap: int | None = None
    best_values: list[float] = []
    for index, token in enumerate(doc.tokens):
        if index in in_span:
            continue
        entry = seed.get(token)
        if entry is None:
            continue
        gap = min(
            start - index if index < start else index - end for start, end in spans
        )
        if best_gap is None or gap < best_gap:
            best_gap, best_values = gap, [entry.strength]
        elif gap == best_gap:
            best_values.append(entry.strength)
    if not best_values:
        return 0.0
    return mean_strength(best_values)


def estimate_strength(
    term: str,
    provider: CorpusProvider,
    seed: Lexicon,
    max_docs: int = DEFAULT_MAX_DOCS,
) -> float | None:
    """Estimated strength for a term, or None when no document contains it
    (the term then falls through to the propagation stage).

    Provider failures, including documents returned without the term, raise
    EstimationError carrying the underlying error.
    """
    if max_docs < 1:
        raise ValueError(f"max_docs must be >= 1, got {max_docs}")
    try:
        documents = provider.query(term, max_docs)
    except Exception as exc:
        raise EstimationError(f"provider failed for {term!r}: {exc}") from exc
    if not documents:
        return None
    try:
        values = [document_strength(doc, term, seed) for doc in documents]
    except MissingTermError as exc:
        raise EstimationError(f"provider broke its contract for {term!r}: {exc}") from exc
    return clamp_strength(mean_strength(values))


@dataclass
class EstimationReport:
    estimated: int = 0
    unlabelable: list[str] = field(default_factory=list)
    failures: list[tuple[str, str]] = field(default_factory=list)


def estimate_all(
    vocabulary: Iterable[str],
    provider: CorpusProvider,
    seed: Lexicon,
    max_docs: int = DEFAULT_MAX_DOCS,
) -> tuple[Lexicon, EstimationReport]:
    """Estimate every vocabulary term not already in the seed lexicon.

    Seed entries are never touched; per-term provider failures are recorded
    in the report and the run continues. The delta is assembled in sorted
    term order, so results are deterministic.
    """
    report = EstimationReport()
    entries = []
    for term in sorted(set(vocabulary)):
        if term in seed:
            continue
        try:
            value = estimate_strength(term, provider, seed, max_docs)
        except EstimationError as exc:
            report.failures.append((term, str(exc)))
            log.warning("estimation failed: %s", exc)
            continue
        if value is None:
            report.unlabelable.append(term)
            continue
        entries.append(LexiconEntry(term, value, Stage.CORPUS_ESTIMATE))
        report.estimated += 1
    return Lexicon(entries), report
