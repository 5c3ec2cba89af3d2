"""Affix stripping by longest-first edge matching.

The engine scans the ordered rule list and detaches the first affix that
matches at the word edge while leaving a long-enough residual stem.  A
word matching nothing is returned unchanged; exception-listed words are
returned verbatim before any rule is consulted.
"""

from dataclasses import dataclass, field

from urdustem import graphemes
from urdustem.rules import AffixKind, AffixRule, RuleSet

MAX_PASSES = 4

SUFFIX_FIRST = "suffix-first"
PREFIX_FIRST = "prefix-first"


class StemError(ValueError):
    """Invalid stemmer input (empty or non-NFC word)."""


@dataclass(frozen=True)
class StemConfig:
    """How many affixes may be detached, and in which order.

    The defaults (one suffix, then one prefix) reproduce the behaviour of
    a single-strip stemmer while still letting words that carry both a
    prefix and a suffix shed both.
    """

    max_suffix_passes: int = 1
    max_prefix_passes: int = 1
    order: str = SUFFIX_FIRST

    def __post_init__(self) -> None:
        for n in (self.max_suffix_passes, self.max_prefix_passes):
            if n < 0 or n > MAX_PASSES:
                raise ValueError(f"passes must be in 0..{MAX_PASSES}, got {n}")
        if self.order not in (SUFFIX_FIRST, PREFIX_FIRST):
            raise ValueError(f"order must be {SUFFIX_FIRST!r} or {PREFIX_FIRST!r}")


DEFAULT_CONFIG = StemConfig()


@dataclass(frozen=True)
class StemResult:
    """The (prefix, stem, suffix) decomposition of one word.

    ``applied`` lists the fired rule ids in application order; it is empty
    for pass-through words and exception hits.
    """

    word: str
    stem: str
    prefix: str | None = None
    suffix: str | None = None
    applied: tuple[str, ...] = field(default_factory=tuple)
    exception_hit: bool = False

    @property
    def is_pass_through(self) -> bool:
        return self.prefix is None and self.suffix is None and not self.exception_hit


def _scan(working: str, rs: RuleSet, kind: AffixKind):
    """First legal rule of *kind* for *working*, or None.

    Returns ``(rule, detached_surface, new_working)``.
    """
    wg = graphemes.split(working)
    for rule in rs.rules:
        if rule.kind is not kind:
            continue
        plen = rule.pattern_length
        if len(wg) - plen < rs.effective_min_stem(rule):
            continue
        if kind is AffixKind.SUFFIX:
            edge = wg[len(wg) - plen :]
            residual = wg[: len(wg) - plen]
        else:
            edge = wg[:plen]
            residual = wg[plen:]
        if "".join(edge) != rule.pattern:
            continue
        if kind is AffixKind.SUFFIX:
            new_working = "".join(residual) + rule.replacement
        else:
            new_working = rule.replacement + "".join(residual)
        return rule, "".join(edge), new_working
    return None


def stem_word(word: str, rs: RuleSet, cfg: StemConfig = DEFAULT_CONFIG) -> StemResult:
    """Decompose one word into (prefix, stem, suffix).

    The word must be non-empty and NFC-normalized (see
    :func:`urdustem.corpus.normalize`).
    """
    if not word:
        raise StemError("cannot stem an empty word")
    if not graphemes.is_nfc(word):
        raise StemError(f"word {word!r} is not NFC; normalize it with urdustem.corpus.normalize")

    if word in rs.exceptions:
        return StemResult(word=word, stem=word, exception_hit=True)

    phases = [
        (AffixKind.SUFFIX, cfg.max_suffix_passes),
        (AffixKind.PREFIX, cfg.max_prefix_passes),
    ]
    if cfg.order == PREFIX_FIRST:
        phases.reverse()

    working = word
    applied: list[str] = []
    prefix_parts: list[str] = []
    suffix_parts: list[str] = []
    for kind, passes in phases:
        for _ in range(passes):
            hit = _scan(working, rs, kind)
            if hit is None:
                break
            rule, surface, working = hit
            applied.append(rule.rule_id)
            if kind is AffixKind.SUFFIX:
                # Later-stripped suffixes sit closer to the stem, i.e.
                # earlier in logical order.
                suffix_parts.insert(0, surface)
            else:
                prefix_parts.append(surface)

    return StemResult(
        word=word,
        stem=working,
        prefix="".join(prefix_parts) or None,
        suffix="".join(suffix_parts) or None,
        applied=tuple(applied),
    )


def stem_batch(words, rs: RuleSet, cfg: StemConfig = DEFAULT_CONFIG) -> list[StemResult]:
    """Stem a sequence of words, order-preserving.

    A per-word error is re-raised with the offending index.
    """
    results: list[StemResult] = []
    for i, word in enumerate(words):
        try:
            results.append(stem_word(word, rs, cfg))
        except StemError as exc:
            raise StemError(f"word {i}: {exc}") from exc
    return results
