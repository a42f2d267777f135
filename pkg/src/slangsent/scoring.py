"""Lexicon-based scoring of short texts and the evaluation harness.

Scoring is transparent on purpose: greedy longest-match over lexicon terms,
sum the matched strengths, read the polarity off the sign. Evaluation
reports accuracy plus one-vs-all precision/recall/F-score for the positive
and negative classes.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .corpus import Document
from .distant import LabeledDocument
from .errors import EmptyEvaluationError
from .lexicon import Lexicon, Polarity
from .text import tokenize

# Trie terminal marker; token strings are never None.
_END = None


class Match(NamedTuple):
    term: str
    span: tuple[int, int]
    strength: float


class PhraseMatcher:
    """Greedy longest-match lookup of lexicon terms in token sequences.

    At each position the longest term starting there wins and the cursor
    jumps past it, so matches never overlap and a phrase always beats its
    own prefix word.
    """

    def __init__(self, lexicon: Lexicon):
        self._root: dict = {}
        for entry in lexicon.entries():
            node = self._root
            for token in entry.term.split(" "):
                node = node.setdefault(token, {})
            node[_END] = (entry.term, entry.strength)

    def match(self, tokens: Sequence[str]) -> list[Match]:
        matches: list[Match] = []
        position = 0
        while position < len(tokens):
            node = self._root
            found: tuple[tuple[str, float], int] | None = None
            cursor = position
            while cursor < len(tokens) and tokens[cursor] in node:
                node = node[tokens[cursor]]
                cursor += 1
                if _END in node:
                    found = (node[_END], cursor - 1)
            if found is None:
                position += 1
                continue
            (term, strength), end = found
            matches.append(Match(term, (position, end), strength))
            position = end + 1
        return matches


def match_terms(tokens: Sequence[str], lexicon: Lexicon) -> list[Match]:
    return PhraseMatcher(lexicon).match(tokens)


@dataclass(frozen=True)
class ScoreBreakdown:
    matches: tuple[Match, ...]
    total: float
    polarity: Polarity

    def format_text(self) -> str:
        lines = [f"total: {self.total:+g}  polarity: {self.polarity.value}"]
        for match in self.matches:
            start, end = match.span
            lines.append(f"  {match.term}  [{start}:{end}]  {match.strength:+g}")
        return "\n".join(lines) + "\n"


def _score(tokens: Sequence[str], matcher: PhraseMatcher) -> ScoreBreakdown:
    matches = matcher.match(tokens)
    total = math.fsum(m.strength for m in matches)
    return ScoreBreakdown(tuple(matches), total, Polarity.from_value(total))


def score_text(text: str, lexicon: Lexicon) -> ScoreBreakdown:
    return _score(tokenize(text), PhraseMatcher(lexicon))


def contains_slang(doc: Document, lexicon: Lexicon) -> bool:
    return bool(match_terms(doc.tokens, lexicon))


class EvalSubset(Enum):
    ALL = "all"
    SLANG_ONLY = "slang"


class ClassMetrics(NamedTuple):
    precision: float
    recall: float
    f_score: float


@dataclass(frozen=True)
class EvaluationReport:
    accuracy: float
    per_class: dict[Polarity, ClassMetrics]
    counts: dict[tuple[Polarity, Polarity], int]  # (gold, predicted) -> count
    size: int

    def to_dict(self) -> dict:
        confusion = {
            gold.value: {
                pred.value: self.counts.get((gold, pred), 0) for pred in Polarity
            }
            for gold in Polarity
        }
        return {
            "size": self.size,
            "accuracy": self.accuracy,
            "classes": {
                polarity.value: metrics._asdict()
                for polarity, metrics in self.per_class.items()
            },
            "confusion": confusion,
        }

    def format_table(self) -> str:
        lines = [
            f"documents: {self.size}   accuracy: {self.accuracy:.4f}",
            f"{'class':<10} {'precision':>9} {'recall':>9} {'f_score':>9}",
        ]
        for polarity in (Polarity.POSITIVE, Polarity.NEGATIVE):
            m = self.per_class[polarity]
            lines.append(
                f"{polarity.value:<10} {m.precision:>9.4f} {m.recall:>9.4f} {m.f_score:>9.4f}"
            )
        return "\n".join(lines) + "\n"


def _one_vs_all(
    pairs: list[tuple[Polarity, Polarity]], positive_class: Polarity
) -> ClassMetrics:
    tp = sum(1 for gold, pred in pairs if gold is positive_class and pred is positive_class)
    fp = sum(1 for gold, pred in pairs if gold is not positive_class and pred is positive_class)
    fn = sum(1 for gold, pred in pairs if gold is positive_class and pred is not positive_class)
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    f_score = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return ClassMetrics(precision, recall, f_score)


def evaluate(
    corpus: Sequence[LabeledDocument],
    lexicon: Lexicon,
    subset: EvalSubset = EvalSubset.ALL,
) -> EvaluationReport:
    """Score a gold-labeled corpus and compute accuracy plus one-vs-all
    metrics for Positive and Negative (Neutral counts toward accuracy and
    toward the "all" side of each one-vs-all split, but gets no row).

    With subset SLANG_ONLY, only documents containing at least one lexicon
    term are evaluated; an empty subset raises EmptyEvaluationError.
    """
    matcher = PhraseMatcher(lexicon)
    pairs: list[tuple[Polarity, Polarity]] = []
    for item in corpus:
        matches = matcher.match(item.document.tokens)
        if subset is EvalSubset.SLANG_ONLY and not matches:
            continue
        total = math.fsum(m.strength for m in matches)
        pairs.append((item.gold, Polarity.from_value(total)))
    if not pairs:
        raise EmptyEvaluationError(f"no documents to evaluate (subset={subset.value})")

    counts: dict[tuple[Polarity, Polarity], int] = {}
    for pair in pairs:
        counts[pair] = counts.get(pair, 0) + 1
    correct = sum(1 for gold, pred in pairs if gold is pred)
    per_class = {
        polarity: _one_vs_all(pairs, polarity)
        for polarity in (Polarity.POSITIVE, Polarity.NEGATIVE)
    }
    return EvaluationReport(
        accuracy=correct / len(pairs),
        per_class=per_class,
        counts=counts,
        size=len(pairs),
    )
