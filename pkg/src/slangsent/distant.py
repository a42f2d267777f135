"""Distant labeling of documents via emoticons.

A document with positive emoticons only is Positive, negative only is
Negative; documents with both kinds or neither are discarded. Emoticons are
stripped from the labeled output so a scorer can never see the label source.
"""

from __future__ import annotations

import json
from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .corpus import Document
from .errors import ParseError
from .ingest import open_records
from .lexicon import Polarity
from .text import emoticon_token


@dataclass(frozen=True)
class EmoticonSet:
    """Disjoint, non-empty positive/negative emoticon token sets."""

    positive: frozenset[str]
    negative: frozenset[str]

    def __post_init__(self) -> None:
        if not self.positive or not self.negative:
            raise ValueError("both emoticon sets must be non-empty")
        overlap = self.positive & self.negative
        if overlap:
            raise ValueError(f"emoticons in both sets: {sorted(overlap)}")

    @property
    def all_tokens(self) -> frozenset[str]:
        return self.positive | self.negative

    def swapped(self) -> EmoticonSet:
        return EmoticonSet(positive=self.negative, negative=self.positive)

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> EmoticonSet:
        """Parse the two-section config format: `[positive]` / `[negative]`
        headers, one emoticon token per line, '#' comments ignored."""
        sections: dict[str, set[str]] = {"positive": set(), "negative": set()}
        current: set[str] | None = None
        for number, raw in enumerate(lines, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("[") and line.endswith("]"):
                name = line[1:-1].strip().lower()
                if name not in sections:
                    raise ParseError(f"unknown section {name!r}", line=number)
                current = sections[name]
                continue
            if current is None:
                raise ParseError("emoticon before any section header", line=number)
            current.add(line)
        return cls(
            positive=frozenset(sections["positive"]),
            negative=frozenset(sections["negative"]),
        )

    @classmethod
    def from_file(cls, path: str | Path) -> EmoticonSet:
        with open(path, encoding="utf-8") as handle:
            return cls.from_lines(handle)


@lru_cache(maxsize=1)
def default_emoticons() -> EmoticonSet:
    text = resources.files("slangsent").joinpath("data/emoticons.txt").read_text("utf-8")
    return EmoticonSet.from_lines(text.splitlines())


@dataclass(frozen=True)
class LabeledDocument:
    document: Document
    gold: Polarity


def _strip_emoticons(doc: Document, emoticons: frozenset[str]) -> Document:
    kept = [
        chunk
        for chunk in doc.text.split()
        if (token := emoticon_token(chunk)) is None or token not in emoticons
    ]
    return Document.from_text(doc.id, " ".join(kept))


def label_by_emoticon(doc: Document, emoticons: EmoticonSet) -> LabeledDocument | None:
    """Label one document, or None when it must be discarded (emoticons of
    both polarities, or none at all). The returned document has every token
    from either set removed, in text and tokens alike."""
    has_positive = any(t in emoticons.positive for t in doc.tokens)
    has_negative = any(t in emoticons.negative for t in doc.tokens)
    if has_positive == has_negative:
        return None
    gold = Polarity.POSITIVE if has_positive else Polarity.NEGATIVE
    return LabeledDocument(_strip_emoticons(doc, emoticons.all_tokens), gold)


@dataclass
class DistantReport:
    total: int = 0
    labeled: int = 0
    discarded_conflict: int = 0
    discarded_unmarked: int = 0


def build_eval_corpus(
    documents: Iterable[Document], emoticons: EmoticonSet
) -> tuple[list[LabeledDocument], DistantReport]:
    """Label a document stream, preserving input order; discards are tallied
    by reason in the report."""
    labeled: list[LabeledDocument] = []
    report = DistantReport()
    for doc in documents:
        report.total += 1
        has_positive = any(t in emoticons.positive for t in doc.tokens)
        has_negative = any(t in emoticons.negative for t in doc.tokens)
        if has_positive and has_negative:
            report.discarded_conflict += 1
            continue
        if not has_positive and not has_negative:
            report.discarded_unmarked += 1
            continue
        gold = Polarity.POSITIVE if has_positive else Polarity.NEGATIVE
        labeled.append(LabeledDocument(_strip_emoticons(doc, emoticons.all_tokens), gold))
        report.labeled += 1
    return labeled, report


# --- labeled-corpus file: one {"id", "label", "text"} object per line -------


def save_labeled_corpus(documents: Iterable[LabeledDocument], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        for item in documents:
            record = {
                "id": item.document.id,
                "label": item.gold.value,
                "text": item.document.text,
            }
            handle.write(json.dumps(record, ensure_ascii=False, sort_keys=True) + "\n")


def load_labeled_corpus(path: str | Path) -> list[LabeledDocument]:
    polarities = {p.value: p for p in Polarity}
    items: list[LabeledDocument] = []
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
            label = record.get("label")
            if not isinstance(doc_id, str) or not isinstance(text, str):
                raise ParseError("record needs string 'id' and 'text'", line=number)
            if label not in polarities:
                raise ParseError(f"bad label {label!r}", line=number)
            items.append(LabeledDocument(Document.from_text(doc_id, text), polarities[label]))
    return items
