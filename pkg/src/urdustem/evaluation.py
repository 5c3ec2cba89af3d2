"""Accuracy metric and error taxonomy for stemmer output.

Accuracy is ``correct / total * 100`` in exact rational arithmetic;
wrong answers are classified as over-stemming (the system removed stem
material), under-stemming (affix material was left on the stem) or other
(orthogonal mismatch, e.g. a recoding divergence).
"""

import unicodedata
from dataclasses import dataclass
from fractions import Fraction
from enum import Enum

from urdustem import graphemes
from urdustem.stemmer import StemResult


class GoldFileError(ValueError):
    """A malformed gold-corpus line."""

    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


class EvalError(ValueError):
    """Results and gold entries that cannot be evaluated together."""


@dataclass(frozen=True)
class GoldEntry:
    """A word with its expected decomposition."""

    word: str
    expected_stem: str
    expected_prefix: str | None = None
    expected_suffix: str | None = None

    def __post_init__(self) -> None:
        if not self.word or not self.expected_stem:
            raise ValueError("gold word and expected_stem must be non-empty")


class ErrorClass(Enum):
    CORRECT = "correct"
    OVER_STEMMING = "over-stemming"
    UNDER_STEMMING = "under-stemming"
    OTHER = "other"


@dataclass(frozen=True)
class EvalReport:
    """Counts and exact accuracy for one evaluation run."""

    total_words: int
    correct: int
    wrong: int
    unique_correct: int
    pass_through_count: int
    accuracy_percent: Fraction
    over_count: int
    under_count: int
    other_count: int
    min_word_len: int
    max_word_len: int


def _is_correct(result: StemResult, gold: GoldEntry, stem_only: bool) -> bool:
    if result.stem != gold.expected_stem:
        return False
    if stem_only:
        return True
    return result.prefix == gold.expected_prefix and result.suffix == gold.expected_suffix


def _proper_substring(needle: str, haystack: str) -> bool:
    """True when *needle* occurs contiguously in *haystack*, grapheme-wise,
    and is strictly shorter."""
    n = graphemes.split(needle)
    h = graphemes.split(haystack)
    if len(n) >= len(h):
        return False
    return any(h[i : i + len(n)] == n for i in range(len(h) - len(n) + 1))


def _proper_subsequence(needle: str, haystack: str) -> bool:
    """True when *needle*'s graphemes occur in order (with gaps allowed)
    inside *haystack* and *needle* is strictly shorter."""
    n = graphemes.split(needle)
    h = graphemes.split(haystack)
    if len(n) >= len(h):
        return False
    it = iter(h)
    return all(g in it for g in n)


def classify_error(result: StemResult, gold: GoldEntry, stem_only: bool = False) -> ErrorClass:
    """Classify one (result, gold) pair.

    Under-stemming: the expected stem survives inside the produced stem
    (too little was removed).  Over-stemming: the produced stem is a
    fragment of the expected stem -- checked first contiguously, then as
    an in-order grapheme subsequence so that stems mangled by dropping an
    interior letter still count as over-stemming rather than "other".
    """
    if result.word != gold.word:
        raise EvalError(f"result word {result.word!r} does not match gold word {gold.word!r}")
    if _is_correct(result, gold, stem_only):
        return ErrorClass.CORRECT
    if _proper_substring(gold.expected_stem, result.stem):
        return ErrorClass.UNDER_STEMMING
    if _proper_substring(result.stem, gold.expected_stem):
        return ErrorClass.OVER_STEMMING
    if _proper_subsequence(gold.expected_stem, result.stem):
        return ErrorClass.UNDER_STEMMING
    if _proper_subsequence(result.stem, gold.expected_stem):
        return ErrorClass.OVER_STEMMING
    return ErrorClass.OTHER


def evaluate(results, gold, stem_only: bool = False) -> EvalReport:
    """Score aligned stemmer output against gold decompositions."""
    results = list(results)
    gold = list(gold)
    if len(results) != len(gold):
        raise EvalError(f"{len(results)} results vs {len(gold)} gold entries")
    if not gold:
        raise EvalError("accuracy is undefined for an empty evaluation set")
    for i, (r, g) in enumerate(zip(results, gold)):
        if r.word != g.word:
            raise EvalError(f"entry {i}: result word {r.word!r} != gold word {g.word!r}")

    correct = 0
    over = under = other = 0
    correct_types: set[str] = set()
    pass_through = 0
    for r, g in zip(results, gold):
        cls = classify_error(r, g, stem_only)
        if cls is ErrorClass.CORRECT:
            correct += 1
            correct_types.add(g.word)
            if r.is_pass_through:
                pass_through += 1
        elif cls is ErrorClass.OVER_STEMMING:
            over += 1
        elif cls is ErrorClass.UNDER_STEMMING:
            under += 1
        else:
            other += 1

    lengths = [graphemes.count(g.word) for g in gold]
    total = len(gold)
    return EvalReport(
        total_words=total,
        correct=correct,
        wrong=total - correct,
        unique_correct=len(correct_types),
        pass_through_count=pass_through,
        accuracy_percent=Fraction(correct, total) * 100,
        over_count=over,
        under_count=under,
        other_count=other,
        min_word_len=min(lengths),
        max_word_len=max(lengths),
    )


def format_percent(value: Fraction) -> str:
    """Render an exact percentage to one decimal place, half-up."""
    tenths = value * 10
    whole, rem = divmod(tenths.numerator, tenths.denominator)
    if Fraction(rem, tenths.denominator) >= Fraction(1, 2):
        whole += 1
    return f"{whole // 10}.{whole % 10}"


_SUMMARY_ROWS = (
    ("Total Words", "total_words"),
    ("Correct stemmed output", "correct"),
    ("Wrong output", "wrong"),
    ("Unique Words", "unique_correct"),
    ("Min Length", "min_word_len"),
    ("Max Length", "max_word_len"),
    ("Accuracy (%)", None),
    ("Over-stemming errors", "over_count"),
    ("Under-stemming errors", "under_count"),
    ("Other errors", "other_count"),
    ("Pass-through words", "pass_through_count"),
)


def summarize(report: EvalReport) -> str:
    """Plain-text summary table, deterministic."""
    width = max(len(label) for label, _ in _SUMMARY_ROWS)
    lines = []
    for label, attr in _SUMMARY_ROWS:
        value = format_percent(report.accuracy_percent) if attr is None else getattr(report, attr)
        lines.append(f"{label:<{width}}  {value}")
    return "\n".join(lines) + "\n"


def report_kv(report: EvalReport) -> str:
    """Machine-readable key-value block, one ``key<TAB>value`` per line."""
    pairs = [
        ("total_words", report.total_words),
        ("correct", report.correct),
        ("wrong", report.wrong),
        ("unique_correct", report.unique_correct),
        ("pass_through", report.pass_through_count),
        ("accuracy_percent", format_percent(report.accuracy_percent)),
        ("over_stemming", report.over_count),
        ("under_stemming", report.under_count),
        ("other_errors", report.other_count),
        ("min_word_len", report.min_word_len),
        ("max_word_len", report.max_word_len),
    ]
    return "\n".join(f"{k}\t{v}" for k, v in pairs) + "\n"


def parse_gold_file(text: str) -> list[GoldEntry]:
    """Parse a gold-corpus TSV: ``word  stem  [prefix]  [suffix]``.

    Empty affix fields mean "no affix expected".  ``#`` starts a comment.
    """
    text = unicodedata.normalize("NFC", text)
    entries: list[GoldEntry] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) < 2 or len(fields) > 4:
            raise GoldFileError(f"expected 2-4 tab-separated fields, got {len(fields)}", lineno)
        fields += [""] * (4 - len(fields))
        word, stem, prefix, suffix = fields
        try:
            entries.append(GoldEntry(word, stem, prefix or None, suffix or None))
        except ValueError as exc:
            raise GoldFileError(str(exc), lineno) from None
    return entries


def gold_to_tsv(entries) -> str:
    """Render gold entries in the gold-corpus TSV format."""
    lines = [
        "\t".join((e.word, e.expected_stem, e.expected_prefix or "", e.expected_suffix or ""))
        for e in entries
    ]
    return "".join(line + "\n" for line in lines)
