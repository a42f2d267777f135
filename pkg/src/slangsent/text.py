"""Text plumbing: term normalization, tokenization, phrase occurrence search.

Tokenization is deliberately simple (whitespace split, edge punctuation
stripped) with one twist: whole chunks that look like ASCII emoticons are
kept verbatim as single tokens, so downstream emoticon-based labeling and
lexicon matching can see them.
"""

from __future__ import annotations

import re
import unicodedata
from collections.abc import Sequence

from .errors import NormalizationError

# Classic ASCII emoticons: eyes+nose+mouth, reversed variants, hearts, and a
# few fixed faces. Applied to whole whitespace-delimited chunks only.
_EMOTICON = r"""
    (?:
        [<>]?                                   # optional brow
        [:;=8xX]                                # eyes
        [-o*']?                                 # optional nose
        [)(\]\[dDpP/\\|}{@3*]+                  # mouth (repeats: ":)))")
      |
        [)(\]\[dDpP/\\|}{@]                     # mouth-first (reversed) face
        [-o*']?
        [:;=8]
        [<>]?
      |
        <+/?3+                                  # hearts, broken hearts
      |
        \^_*\^ | [xX][dD]+ | [oO][._][oO] | -_+- | [tT][._][tT] | ;_; | \\o/
    )
"""
EMOTICON_RE = re.compile(_EMOTICON, re.VERBOSE)

# Quote-like punctuation that may wrap an emoticon chunk (":)." or '":)"').
# Deliberately excludes brackets, slashes and pipes, which are mouth glyphs.
_WRAPPING_PUNCT = ".,!?;\"'`\u2026\u201c\u201d\u2018\u2019"

_EDGE_RE = re.compile(r"^[\W_]+|[\W_]+$")


def normalize_term(raw: str) -> str:
    """Canonical form of a dictionary term.

    Unicode NFC, lowercase, outer whitespace stripped, inner whitespace runs
    collapsed to single spaces. Raises NormalizationError if nothing is left.
    """
    term = " ".join(unicodedata.normalize("NFC", raw).lower().split())
    if not term:
        raise NormalizationError(f"term is empty after normalization: {raw!r}")
    return term


def emoticon_token(chunk: str) -> str | None:
    """The emoticon token a whitespace-delimited chunk yields, if any.

    Emoticons are preserved verbatim (no case folding): the mouth/eye glyphs
    are meaning-bearing, so ":D" must survive as written.
    """
    if EMOTICON_RE.fullmatch(chunk):
        return chunk
    trimmed = chunk.strip(_WRAPPING_PUNCT)
    if trimmed and EMOTICON_RE.fullmatch(trimmed):
        return trimmed
    return None


def tokenize(text: str) -> list[str]:
    """Split text into lowercase tokens.

    Whitespace-delimited chunks are stripped of leading/trailing punctuation
    (word-internal apostrophes and hyphens survive); chunks recognized as
    emoticons are kept whole and verbatim; empty leftovers are dropped.
    """
    tokens: list[str] = []
    for chunk in text.split():
        emo = emoticon_token(chunk)
        if emo is not None:
            tokens.append(emo)
            continue
        word = _EDGE_RE.sub("", chunk).lower()
        if word:
            tokens.append(word)
    return tokens


def find_occurrences(tokens: Sequence[str], term: str) -> list[tuple[int, int]]:
    """All non-overlapping spans where the term's token sequence appears.

    Spans are inclusive (start, end) token indexes, found leftmost-first; the
    cursor jumps past each match so occurrences never overlap.
    """
    pattern = term.split(" ")
    width = len(pattern)
    spans: list[tuple[int, int]] = []
    i = 0
    limit = len(tokens) - width
    while i <= limit:
        if all(tokens[i + k] == pattern[k] for k in range(width)):
            spans.append((i, i + width - 1))
            i += width
        else:
            i += 1
    return spans
