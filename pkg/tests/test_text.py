from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from slangsent.errors import NormalizationError
from slangsent.text import emoticon_token, find_occurrences, normalize_term, tokenize


class TestNormalizeTerm:
    def test_case_folding(self):
        assert normalize_term("LoL") == "lol"

    def test_whitespace_collapse(self):
        assert normalize_term("  Shit   Hot ") == "shit hot"

    def test_empty_after_normalization(self):
        with pytest.raises(NormalizationError):
            normalize_term("   ")

    def test_nfc(self):
        # decomposed e + combining acute vs precomposed
        assert normalize_term("café") == normalize_term("café")

    @given(st.text(max_size=30))
    def test_idempotent(self, raw):
        try:
            once = normalize_term(raw)
        except NormalizationError:
            return
        assert normalize_term(once) == once

    @given(st.text(max_size=30))
    def test_no_outer_or_doubled_space(self, raw):
        try:
            term = normalize_term(raw)
        except NormalizationError:
            return
        assert term == term.strip()
        assert "  " not in term
        assert term == term.lower()


class TestTokenize:
    def test_strips_trailing_punctuation(self):
        text = "Apple you knocked it out of the park!"
        assert tokenize(text) == ["apple", "you", "knocked", "it", "out", "of", "the", "park"]

    def test_keeps_internal_apostrophe(self):
        assert tokenize("battery life's shit hot") == ["battery", "life's", "shit", "hot"]

    def test_preserves_emoticon(self):
        assert tokenize(":) great") == [":)", "great"]

    def test_preserves_emoticon_next_to_punctuation(self):
        assert tokenize("nice :), really") == ["nice", ":)", "really"]

    def test_keeps_internal_hyphen(self):
        assert tokenize("so-so movie") == ["so-so", "movie"]

    def test_drops_pure_punctuation(self):
        assert tokenize("wow !!! ... --") == ["wow"]

    def test_empty_text(self):
        assert tokenize("") == []

    def test_emoticons_not_case_folded(self):
        assert tokenize("fun xD :D") == ["fun", "xD", ":D"]

    @given(st.text(max_size=60))
    def test_no_empty_tokens(self, text):
        assert all(tokenize(text))

    @given(st.text(max_size=60))
    def test_non_emoticon_tokens_are_lowercase(self, text):
        for token in tokenize(text):
            if emoticon_token(token) is None:
                assert token == token.lower()


class TestFindOccurrences:
    def test_phrase(self):
        assert find_occurrences(["a", "shit", "hot", "b"], "shit hot") == [(1, 2)]

    def test_repeated_single_token(self):
        assert find_occurrences(["lol", "x", "lol"], "lol") == [(0, 0), (2, 2)]

    def test_no_match(self):
        assert find_occurrences(["a", "b"], "c") == []

    def test_non_overlapping_leftmost_first(self):
        assert find_occurrences(["a", "a", "a"], "a a") == [(0, 1)]

    def test_adjacent_matches(self):
        assert find_occurrences(["a", "a", "a", "a"], "a a") == [(0, 1), (2, 3)]

    def test_term_longer_than_tokens(self):
        assert find_occurrences(["a"], "a b") == []
