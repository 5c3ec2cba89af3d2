"""Acceptance criteria, one test per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see one PASS line per
criterion; any failure shows up as a normal pytest failure.
"""

import random
import time
import unicodedata
from fractions import Fraction

from urdustem import data
from urdustem.cli import main
from urdustem.corpus import normalize
from urdustem.evaluation import (
    ErrorClass,
    GoldEntry,
    classify_error,
    evaluate,
    format_percent,
    parse_gold_file,
)
from urdustem.graphemes import count as gcount
from urdustem.morphology import generate_gold, parse_lexicon_file
from urdustem.rules import parse_rule_file, serialize_rule_set
from urdustem.stemmer import StemResult, stem_word

from conftest import URDU_LETTERS, random_ruleset, random_word
from naive_oracle import naive_stem
from test_cli import TABLE2_TSV, TABLE2_WORDS


def report(criterion: str) -> None:
    print(f"PASS {criterion}")


def test_criterion_1_table_golden(capsys, tmp_path):
    start = time.monotonic()
    inp = tmp_path / "words.txt"
    inp.write_text("".join(w + "\n" for w in TABLE2_WORDS), encoding="utf-8")
    code = main(["stem", str(inp), "--rules", data.path(data.TABLE2_RULES), "--pretokenized"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.splitlines() == TABLE2_TSV
    assert time.monotonic() - start < 1.0
    report("criterion 1: golden 8-word decomposition table, exact, < 1 s")


def test_criterion_2_accuracy_arithmetic():
    start = time.monotonic()
    rng = random.Random(2000)
    results, gold = [], []
    for i in range(2000):
        w = random_word(rng, 4, 15)
        gold.append(GoldEntry(w, w))
        if i < 1730:
            results.append(StemResult(word=w, stem=w))
        else:
            results.append(StemResult(word=w, stem=w[:-1], suffix=w[-1]))
    rep = evaluate(results, gold)
    assert rep.total_words == 2000 and rep.correct == 1730 and rep.wrong == 270
    assert rep.accuracy_percent == Fraction(173, 2)
    assert format_percent(rep.accuracy_percent) == "86.5"
    assert time.monotonic() - start < 1.0
    report("criterion 2: 1730/2000 renders exactly 86.5, < 1 s")


def test_criterion_3_error_taxonomy():
    under = classify_error(
        StemResult(word="پیشگی", stem="پیشگ", suffix="ی"),
        GoldEntry("پیشگی", "پیش", None, "گی"),
    )
    over = classify_error(
        StemResult(word="بدمعاش", stem="ماش", prefix="بد"),
        GoldEntry("بدمعاش", "بدمعاش"),
    )
    assert under is ErrorClass.UNDER_STEMMING
    assert over is ErrorClass.OVER_STEMMING
    report("criterion 3: documented under-/over-stemming cases classified exactly")


def test_criterion_4_longest_match_property():
    rng = random.Random(4)
    mismatches = 0
    cases = 0
    while cases < 1000:
        rs, naive_rules, default_min = random_ruleset(rng, n_rules=rng.randint(1, 12))
        lexicon = [random_word(rng, 1, 9) for _ in range(50)]
        for _ in range(40):
            word = rng.choice(lexicon)
            got = stem_word(word, rs)
            expected = naive_stem(word, naive_rules, rs.exceptions, default_min)
            if (got.prefix, got.stem, got.suffix, got.exception_hit, got.applied) != expected:
                mismatches += 1
            cases += 1
    assert cases >= 1000 and mismatches == 0

    # Whenever the two- and one-grapheme endings both match, the longer wins.
    rs = parse_rule_file("S\tی\nS\tگی\n")
    for _ in range(200):
        word = random_word(rng, 3, 8) + "گی"
        res = stem_word(word, rs)
        assert res.suffix == "گی"
    report("criterion 4: 1000+ brute-force oracle cases, zero mismatches; longer ending always wins")


def test_criterion_5_round_trip():
    lexicon = parse_lexicon_file(data.read_text(data.GROUP1_LEXICON))
    assert len(lexicon) >= 50
    gold = generate_gold(lexicon)
    rs = data.load_rules(data.PARADIGM_RULES)
    identity = non_identity = 0
    for entry in gold:
        res = stem_word(entry.word, rs)
        if entry.word == entry.expected_stem:
            identity += 1
            assert res.stem == entry.word and res.suffix is None
        else:
            non_identity += 1
            assert res.stem == entry.expected_stem
            assert res.suffix == entry.expected_suffix
    assert identity == 2 * len(lexicon) and non_identity == 4 * len(lexicon)
    report(f"criterion 5: {len(lexicon)}-lemma round trip, 100% recovery")


def test_criterion_6_pass_through_totality():
    rng = random.Random(6)
    rs = data.load_rules(data.DEFAULT_RULES)
    for _ in range(100_000):
        word = random_word(rng, 1, 12)
        res = stem_word(word, rs)  # must never raise
        floor = min(gcount(word), rs.default_min_stem)
        assert gcount(res.stem) >= floor
        if not res.applied and not res.exception_hit:
            assert res.stem == word and res.prefix is None and res.suffix is None
    report("criterion 6: 10^5-word fuzz, no errors, min-stem floor held")


def test_criterion_7_rule_file_round_trip(capsys, tmp_path):
    shipped = data.read_text(data.DEFAULT_RULES)
    rs = parse_rule_file(shipped)
    assert parse_rule_file(serialize_rule_set(rs)) == rs
    assert serialize_rule_set(parse_rule_file(serialize_rule_set(rs))) == serialize_rule_set(rs)

    bad = tmp_path / "bad.rules"
    bad.write_text("S\tی\tیاں\n", encoding="utf-8")
    assert main(["rules", "validate", "--rules", str(bad)]) == 1
    dup = tmp_path / "dup.rules"
    dup.write_text("S\tوں\nS\tوں\tہ\n", encoding="utf-8")
    assert main(["rules", "validate", "--rules", str(dup)]) == 1
    capsys.readouterr()
    report("criterion 7: shipped rule file is a parse/serialize fixpoint; validator exit codes hold")


def test_criterion_8_normalization_idempotence():
    rng = random.Random(8)
    diacritics = "ًٌٍَُِّْٰ"
    pool = URDU_LETTERS + diacritics + " يكهة‌123.،۔"
    for _ in range(10_000):
        text = "".join(rng.choice(pool) for _ in range(rng.randint(0, 30)))
        once = normalize(text)
        assert normalize(once) == once
        assert unicodedata.is_normalized("NFC", once)
    report("criterion 8: normalize is a fixpoint across 10^4 fuzz strings")
