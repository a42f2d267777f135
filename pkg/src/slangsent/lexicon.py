"""Sentiment lexicon core: strength scale, entries, seed merging, file formats.

Strengths are floats on a fixed [-2.0, +2.0] scale (-2 strongly negative, 0
neutral, +2 strongly positive). Values stay real-valued internally so that
averaging keeps its precision; discretization into the five integer classes
happens only at export and reporting time.
"""

from __future__ import annotations

import json
import math
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .errors import ParseError, ScaleError
from .text import normalize_term

STRENGTH_MIN = -2.0
STRENGTH_MAX = 2.0


class Stage(Enum):
    """Which labeling mechanism produced an entry."""

    SEED_LEXICON = "seed_lexicon"
    CORPUS_ESTIMATE = "corpus_estimate"
    PROPAGATION = "propagation"
    # Entries re-read from an exported dictionary; original provenance and
    # fractional strength are not recoverable from the quantized file.
    IMPORTED = "imported"


class Polarity(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"

    @classmethod
    def from_value(cls, value: float) -> Polarity:
        if value > 0:
            return cls.POSITIVE
        if value < 0:
            return cls.NEGATIVE
        return cls.NEUTRAL


def clamp_strength(value: float) -> float:
    """Clamp a computed strength onto the scale.

    Only guards against float drift in averaging chains; parsed input is
    rejected instead (see load_lexicon / parse_slangsd).
    """
    return min(STRENGTH_MAX, max(STRENGTH_MIN, float(value)))


def mean_strength(values: Sequence[float]) -> float:
    """Arithmetic mean, closed over the inputs' own range.

    math.fsum makes the result independent of summation order; the final
    nudge into [min(values), max(values)] removes the one-ulp drift a
    correctly-rounded sum followed by a division can produce (the true mean
    never leaves that range). Both matter: averaging chains must stay
    bounded and order-free, exactly.
    """
    mean = math.fsum(values) / len(values)
    return min(max(values), max(min(values), mean))


def classify(strength: float) -> int:
    """Discretize a strength into one of the five classes -2..+2.

    Nearest integer; exact halves round away from zero so the rule stays
    symmetric around neutral.
    """
    magnitude = int(math.floor(abs(strength) + 0.5))
    return -magnitude if strength < 0 else magnitude


@dataclass(frozen=True)
class LexiconEntry:
    """One labeled term. `sources` names contributing seed lexicons and is
    non-empty exactly when the entry came from the seed-merge stage."""

    term: str
    strength: float
    stage: Stage
    sources: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.term != normalize_term(self.term):
            raise ValueError(f"term is not normalized: {self.term!r}")
        if not STRENGTH_MIN <= self.strength <= STRENGTH_MAX:
            raise ValueError(f"strength out of range: {self.strength!r}")
        if (self.stage is Stage.SEED_LEXICON) != bool(self.sources):
            raise ValueError(
                f"sources must be non-empty iff stage is seed_lexicon "
                f"(term {self.term!r}, stage {self.stage.value})"
            )


class Lexicon:
    """Immutable mapping from normalized term to LexiconEntry."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[LexiconEntry] = ()):
        table: dict[str, LexiconEntry] = {}
        for entry in entries:
            if entry.term in table:
                raise ValueError(f"duplicate term: {entry.term!r}")
            table[entry.term] = entry
        self._entries = table

    def __contains__(self, term: object) -> bool:
        return term in self._entries

    def __getitem__(self, term: str) -> LexiconEntry:
        return self._entries[term]

    def get(self, term: str, default: LexiconEntry | None = None) -> LexiconEntry | None:
        return self._entries.get(term, default)

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[str]:
        return iter(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lexicon):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self) -> str:
        return f"Lexicon({len(self)} terms)"

    def strength(self, term: str) -> float:
        return self._entries[term].strength

    def terms(self) -> list[str]:
        return sorted(self._entries)

    def entries(self) -> list[LexiconEntry]:
        """Entries in term-sorted order (the canonical order everywhere)."""
        return [self._entries[t] for t in sorted(self._entries)]

    def restricted(self, terms: Iterable[str]) -> Lexicon:
        """The sub-lexicon covering only the given terms."""
        keep = set(terms)
        return Lexicon(e for t, e in self._entries.items() if t in keep)


def combine(*lexicons: Lexicon) -> Lexicon:
    """Union with first-wins precedence: a term labeled by an earlier lexicon
    is never overwritten by a later one."""
    table: dict[str, LexiconEntry] = {}
    for lexicon in lexicons:
        for term in lexicon:
            if term not in table:
                table[term] = lexicon[term]
    return Lexicon(table.values())


@dataclass(frozen=True)
class LinearScale:
    """Monotone linear map from a source lexicon's native scale onto the
    [-2, +2] strength scale."""

    factor: float = 1.0
    offset: float = 0.0

    def apply(self, value: float) -> float:
        return self.factor * value + self.offset

    @classmethod
    def from_ranges(
        cls,
        source: tuple[float, float],
        target: tuple[float, float] = (STRENGTH_MIN, STRENGTH_MAX),
    ) -> LinearScale:
        (lo, hi), (target_lo, target_hi) = source, target
        if hi == lo:
            raise ValueError("degenerate source range")
        factor = (target_hi - target_lo) / (hi - lo)
        return cls(factor=factor, offset=target_lo - factor * lo)


@dataclass(frozen=True)
class SeedSource:
    """One external sentiment lexicon: an id, its term -> native strength
    mapping, and the scale map onto [-2, +2]."""

    source_id: str
    values: Mapping[str, float]
    scale: LinearScale = LinearScale()


def merge_seed_lexicons(sources: Iterable[SeedSource]) -> Lexicon:
    """Merge external seed lexicons into one strength lexicon.

    Each source's native values are scale-mapped onto [-2, +2]; a term found
    in several sources gets the arithmetic mean of its per-source values.
    Terms are normalized first; if normalization makes two of one source's
    terms collide, that source contributes their mean as its single value.
    The result is independent of source order: contributions are keyed and
    summed per sorted source id, with math.fsum making the mean exact with
    respect to ordering.
    """
    per_source: dict[str, dict[str, list[float]]] = {}
    for source in sources:
        for raw_term, native in source.values.items():
            term = normalize_term(raw_term)
            mapped = source.scale.apply(float(native))
            if not STRENGTH_MIN <= mapped <= STRENGTH_MAX:
                raise ScaleError(
                    f"source {source.source_id!r} maps {raw_term!r} ({native!r}) "
                    f"to {mapped!r}, outside [{STRENGTH_MIN}, {STRENGTH_MAX}]"
                )
            per_source.setdefault(term, {}).setdefault(source.source_id, []).append(mapped)

    entries = []
    for term, by_source in per_source.items():
        source_ids = tuple(sorted(by_source))
        source_means = [mean_strength(by_source[sid]) for sid in source_ids]
        strength = clamp_strength(mean_strength(source_means))
        entries.append(LexiconEntry(term, strength, Stage.SEED_LEXICON, source_ids))
    return Lexicon(entries)


def load_seed_values(path: str | Path) -> dict[str, float]:
    """Read a seed-lexicon source file: one `term<TAB>native_strength` per
    line, '#' comments and blank lines ignored."""
    values: dict[str, float] = {}
    with open(path, encoding="utf-8") as handle:
        for number, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 2:
                raise ParseError(f"expected 'term<TAB>value', got {line!r}", line=number)
            term, text = fields
            try:
                values[term] = float(text)
            except ValueError:
                raise ParseError(f"bad strength value {text!r}", line=number) from None
    return values


# --- exported dictionary format -------------------------------------------
#
# One `term<TAB>class` line per term, class in {-2..2}, lines sorted by term,
# UTF-8, LF-terminated. Sorting makes re-exports byte-reproducible.


def export_slangsd(lexicon: Lexicon) -> str:
    return "".join(f"{e.term}\t{classify(e.strength)}\n" for e in lexicon.entries())


def parse_slangsd(stream: str | Iterable[str]) -> Lexicon:
    """Inverse of export_slangsd up to quantization.

    Parsed strengths are the class values; provenance is not recoverable, so
    entries carry the distinguished stage `imported`.
    """
    entries = []
    seen: set[str] = set()
    for number, raw in enumerate(_iter_lines(stream), start=1):
        line = raw.rstrip("\n")
        fields = line.split("\t")
        if len(fields) != 2:
            raise ParseError(f"expected 'term<TAB>class', got {line!r}", line=number)
        term, class_text = fields
        try:
            cls = int(class_text)
        except ValueError:
            raise ParseError(f"bad class {class_text!r}", line=number) from None
        if cls < -2 or cls > 2:
            raise ParseError(f"class {cls} outside -2..2", line=number)
        if term != _safe_normalize(term):
            raise ParseError(f"term is not normalized: {term!r}", line=number)
        if term in seen:
            raise ParseError(f"duplicate term {term!r}", line=number)
        seen.add(term)
        entries.append(LexiconEntry(term, float(cls), Stage.IMPORTED))
    return Lexicon(entries)


def export_idiom_table(lexicon: Lexicon) -> str:
    """Export non-neutral terms for a phrase/idiom lookup table on a -5..+5
    scale: value = 2 * class, so entries land on {-4, -2, +2, +4} and the
    host scorer's native extremes stay free."""
    lines = []
    for entry in lexicon.entries():
        cls = classify(entry.strength)
        if cls != 0:
            lines.append(f"{entry.term}\t{2 * cls}\n")
    return "".join(lines)


# --- full-fidelity lexicon persistence (pipeline intermediates) -------------


def save_lexicon(lexicon: Lexicon, path: str | Path) -> None:
    """Write a lexicon as sorted JSON lines, keeping exact strengths, stages
    and sources (unlike the quantized exported dictionary)."""
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        for entry in lexicon.entries():
            record = {
                "term": entry.term,
                "strength": entry.strength,
                "stage": entry.stage.value,
                "sources": list(entry.sources),
            }
            handle.write(json.dumps(record, ensure_ascii=False, sort_keys=True) + "\n")


def load_lexicon(path: str | Path) -> Lexicon:
    entries = []
    stages = {stage.value: stage for stage in Stage}
    with open(path, encoding="utf-8") as handle:
        for number, raw in enumerate(handle, start=1):
            try:
                record = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise ParseError(f"bad JSON: {exc}", line=number) from None
            if not isinstance(record, dict):
                raise ParseError("record is not an object", line=number)
            try:
                term = record["term"]
                strength = record["strength"]
                stage = stages[record["stage"]]
                sources = tuple(record.get("sources", ()))
            except KeyError as exc:
                raise ParseError(f"missing field {exc}", line=number) from None
            if not isinstance(strength, (int, float)) or isinstance(strength, bool):
                raise ParseError(f"bad strength {strength!r}", line=number)
            try:
                entries.append(LexiconEntry(str(term), float(strength), stage, sources))
            except ValueError as exc:
                raise ParseError(str(exc), line=number) from None
    try:
        return Lexicon(entries)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _safe_normalize(term: str) -> str | None:
    try:
        return normalize_term(term)
    except Exception:
        return None


def _iter_lines(stream: str | Iterable[str]) -> Iterator[str]:
    if isinstance(stream, str):
        return iter(stream.splitlines())
    return iter(stream)
