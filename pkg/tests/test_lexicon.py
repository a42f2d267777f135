from __future__ import annotations

import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from slangsent.errors import ParseError, ScaleError
from slangsent.lexicon import (
    Lexicon,
    LexiconEntry,
    LinearScale,
    Polarity,
    SeedSource,
    Stage,
    clamp_strength,
    classify,
    combine,
    export_idiom_table,
    export_slangsd,
    load_lexicon,
    load_seed_values,
    merge_seed_lexicons,
    parse_slangsd,
    save_lexicon,
)


def entry(term, strength, stage=Stage.IMPORTED, sources=()):
    return LexiconEntry(term, strength, stage, tuple(sources))


class TestClassify:
    @pytest.mark.parametrize(
        "strength,expected",
        [(0.4, 0), (1.5, 2), (-1.5, -2), (0.5, 1), (-0.5, -1), (2.0, 2), (-2.0, -2),
         (0.0, 0), (1.49, 1), (-0.49, 0), (0.75, 1)],
    )
    def test_examples(self, strength, expected):
        assert classify(strength) == expected

    @given(st.floats(min_value=-2.0, max_value=2.0))
    def test_odd(self, s):
        assert classify(-s) == -classify(s)

    @given(st.floats(min_value=-2.0, max_value=2.0))
    def test_range(self, s):
        assert classify(s) in {-2, -1, 0, 1, 2}


class TestStrengthHelpers:
    def test_clamp(self):
        assert clamp_strength(2.5) == 2.0
        assert clamp_strength(-9) == -2.0
        assert clamp_strength(0.25) == 0.25

    def test_polarity_from_value(self):
        assert Polarity.from_value(0.1) is Polarity.POSITIVE
        assert Polarity.from_value(-3) is Polarity.NEGATIVE
        assert Polarity.from_value(0.0) is Polarity.NEUTRAL


class TestLexiconEntry:
    def test_rejects_unnormalized_term(self):
        with pytest.raises(ValueError):
            entry("LoL", 1.0)

    def test_rejects_out_of_range_strength(self):
        with pytest.raises(ValueError):
            entry("lol", 2.5)

    def test_seed_stage_requires_sources(self):
        with pytest.raises(ValueError):
            entry("lol", 1.0, Stage.SEED_LEXICON)
        with pytest.raises(ValueError):
            entry("lol", 1.0, Stage.PROPAGATION, sources=("x",))

    def test_lexicon_rejects_duplicates(self):
        with pytest.raises(ValueError):
            Lexicon([entry("lol", 1.0), entry("lol", 0.0)])


class TestMergeSeedLexicons:
    def test_single_source_passthrough(self):
        merged = merge_seed_lexicons([SeedSource("a", {"great": 2.0})])
        assert merged.strength("great") == 2.0
        assert merged["great"].stage is Stage.SEED_LEXICON
        assert merged["great"].sources == ("a",)

    def test_mean_across_sources(self):
        merged = merge_seed_lexicons(
            [SeedSource("a", {"ok": 1.0}), SeedSource("b", {"ok": 2.0})]
        )
        assert merged.strength("ok") == 1.5
        assert merged["ok"].sources == ("a", "b")

    def test_empty(self):
        assert len(merge_seed_lexicons([])) == 0

    def test_scale_maps_applied(self):
        scale = LinearScale.from_ranges((-5.0, 5.0))
        merged = merge_seed_lexicons([SeedSource("five", {"love": 5.0, "meh": -2.5}, scale)])
        assert merged.strength("love") == 2.0
        assert merged.strength("meh") == -1.0

    def test_scale_error(self):
        with pytest.raises(ScaleError):
            merge_seed_lexicons([SeedSource("bad", {"x": 3.0})])

    def test_terms_normalized(self):
        merged = merge_seed_lexicons([SeedSource("a", {"  GREAT  ": 1.0})])
        assert "great" in merged

    def test_collision_within_source_averages_first(self):
        merged = merge_seed_lexicons(
            [SeedSource("a", {"LoL": 2.0, "lol": 0.0}), SeedSource("b", {"lol": -1.0})]
        )
        # a contributes mean(2, 0) = 1; cross-source mean(1, -1) = 0
        assert merged.strength("lol") == 0.0

    def test_order_independent(self):
        rng = random.Random(7)
        sources = [
            SeedSource(f"s{i}", {t: rng.uniform(-2, 2) for t in ("a", "b", "c", "d") if rng.random() < 0.8})
            for i in range(5)
        ]
        base = merge_seed_lexicons(sources)
        for _ in range(10):
            rng.shuffle(sources)
            assert merge_seed_lexicons(sources) == base

    def test_bounded_by_contributions(self):
        rng = random.Random(11)
        for _ in range(50):
            values = [rng.uniform(-2, 2) for _ in range(rng.randint(1, 6))]
            sources = [SeedSource(f"s{i}", {"t": v}) for i, v in enumerate(values)]
            merged = merge_seed_lexicons(sources)
            assert min(values) <= merged.strength("t") <= max(values)


class TestSlangsdFormat:
    def test_export_line_format(self):
        lex = Lexicon([entry("shit hot", 2.0)])
        assert export_slangsd(lex) == "shit hot\t2\n"

    def test_sorted_by_term(self):
        lex = Lexicon([entry("zzz", 1.0), entry("aaa", -1.0)])
        assert export_slangsd(lex) == "aaa\t-1\nzzz\t1\n"

    def test_round_trip_classes(self):
        lex = Lexicon([entry("lol", 1.3), entry("meh", -0.2), entry("shit hot", 2.0)])
        parsed = parse_slangsd(export_slangsd(lex))
        assert parsed.strength("lol") == 1.0
        assert parsed.strength("meh") == 0.0
        assert parsed.strength("shit hot") == 2.0
        assert all(parsed[t].stage is Stage.IMPORTED for t in parsed)

    def test_second_export_byte_identical(self):
        lex = Lexicon([entry("a", 0.6), entry("b c", -1.9), entry("d", 0.0)])
        once = export_slangsd(lex)
        assert export_slangsd(parse_slangsd(once)) == once

    def test_out_of_range_class_rejected(self):
        with pytest.raises(ParseError) as exc:
            parse_slangsd("lol\t7\n")
        assert exc.value.line == 1

    def test_wrong_field_count_rejected(self):
        with pytest.raises(ParseError):
            parse_slangsd("lol\n")
        with pytest.raises(ParseError):
            parse_slangsd("lol\t1\textra\n")

    def test_bad_line_number_reported(self):
        with pytest.raises(ParseError) as exc:
            parse_slangsd("ok\t1\nbad\tx\n")
        assert exc.value.line == 2

    def test_duplicate_term_rejected(self):
        with pytest.raises(ParseError):
            parse_slangsd("lol\t1\nlol\t1\n")

    @given(
        st.dictionaries(
            st.text(alphabet="abcdefg ", min_size=1, max_size=8).map(str.strip).filter(bool),
            st.floats(min_value=-2, max_value=2),
            max_size=8,
        )
    )
    def test_export_parse_export_identity(self, table):
        lex = Lexicon(
            entry(" ".join(t.split()), s) for t, s in table.items() if t.strip()
        )
        once = export_slangsd(lex)
        assert export_slangsd(parse_slangsd(once)) == once


class TestIdiomTable:
    def test_doubles_class(self):
        assert export_idiom_table(Lexicon([entry("lit", 2.0)])) == "lit\t4\n"
        assert export_idiom_table(Lexicon([entry("meh", -1.0)])) == "meh\t-2\n"

    def test_omits_neutral(self):
        lex = Lexicon([entry("meh", 0.2), entry("lit", 1.6)])
        assert export_idiom_table(lex) == "lit\t4\n"

    def test_values_in_allowed_set(self):
        rng = random.Random(3)
        lex = Lexicon([entry(f"t{i}", rng.uniform(-2, 2)) for i in range(200)])
        values = {int(line.split("\t")[1]) for line in export_idiom_table(lex).splitlines()}
        assert values <= {-4, -2, 2, 4}


class TestPersistence:
    def test_save_load_round_trip(self, tmp_path):
        lex = Lexicon(
            [
                entry("lol", 1.2345678901234567, Stage.CORPUS_ESTIMATE),
                entry("shit hot", 2.0, Stage.SEED_LEXICON, sources=("a", "b")),
                entry("meh", -0.125, Stage.PROPAGATION),
            ]
        )
        path = tmp_path / "lex.jsonl"
        save_lexicon(lex, path)
        assert load_lexicon(path) == lex

    def test_load_rejects_out_of_range(self, tmp_path):
        path = tmp_path / "lex.jsonl"
        path.write_text('{"term": "lol", "strength": 3.0, "stage": "imported", "sources": []}\n')
        with pytest.raises(ParseError) as exc:
            load_lexicon(path)
        assert exc.value.line == 1

    def test_load_rejects_bad_stage(self, tmp_path):
        path = tmp_path / "lex.jsonl"
        path.write_text('{"term": "lol", "strength": 1.0, "stage": "nope", "sources": []}\n')
        with pytest.raises(ParseError):
            load_lexicon(path)

    def test_seed_values_file(self, tmp_path):
        path = tmp_path / "seed.tsv"
        path.write_text("# comment\ngreat\t2.0\n\nbad\t-1\n", encoding="utf-8")
        assert load_seed_values(path) == {"great": 2.0, "bad": -1.0}

    def test_seed_values_bad_line(self, tmp_path):
        path = tmp_path / "seed.tsv"
        path.write_text("great\ttwo\n", encoding="utf-8")
        with pytest.raises(ParseError) as exc:
            load_seed_values(path)
        assert exc.value.line == 1


class TestCombine:
    def test_first_wins(self):
        a = Lexicon([entry("x", 1.0, Stage.SEED_LEXICON, ("s",))])
        b = Lexicon([entry("x", -1.0), entry("y", 0.5)])
        merged = combine(a, b)
        assert merged.strength("x") == 1.0
        assert merged["x"].stage is Stage.SEED_LEXICON
        assert merged.strength("y") == 0.5

    def test_restricted(self):
        lex = Lexicon([entry("a", 1.0), entry("b", -1.0)])
        sub = lex.restricted(["b", "zzz"])
        assert sub.terms() == ["b"]
