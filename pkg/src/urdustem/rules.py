"""Affix-rule data model and the declarative rule-file format.

A rule file is UTF-8 text, one rule per line, tab-separated::

    kind <TAB> pattern [<TAB> replacement] [<TAB> min_stem]

``kind`` is ``P`` (prefix) or ``S`` (suffix).  The pattern is matched at
the word edge; when it matches, the affix is detached and ``replacement``
(empty by default) is substituted in its place on the stem side.  A rule
only fires when the residual stem, before the replacement is appended,
still has at least ``min_stem`` graphemes.

A bare third field made of ASCII digits is read as ``min_stem``; anything
else is a replacement.  Lines starting with ``#`` are comments, except
the directives::

    #!exception <TAB> word        word is returned verbatim, never stemmed
    #!default-min-stem <TAB> n    min_stem used by rules that omit it

Fields are not trimmed: a pattern may legitimately end in a space
(e.g. a prefix that consumes the following separator).  File content is
NFC-normalized on read.
"""

import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

from urdustem import graphemes

DEFAULT_MIN_STEM = 2


class RuleParseError(ValueError):
    """A rule file line that violates the format or the rule invariants."""

    def __init__(self, message: str, line: int, other_line: int | None = None):
        self.line = line
        self.other_line = other_line
        super().__init__(f"line {line}: {message}")


class AffixKind(Enum):
    PREFIX = "P"
    SUFFIX = "S"


@dataclass(frozen=True)
class AffixRule:
    """One prefix/suffix pattern with optional recoding replacement.

    ``min_stem`` of ``None`` defers to the owning rule set's default.
    """

    kind: AffixKind
    pattern: str
    replacement: str = ""
    min_stem: int | None = None

    def __post_init__(self) -> None:
        if graphemes.count(self.pattern) < 1:
            raise ValueError("affix pattern must have at least one grapheme")
        if graphemes.count(self.replacement) > graphemes.count(self.pattern):
            raise ValueError(
                "replacement must not be longer than the pattern "
                f"({self.replacement!r} vs {self.pattern!r})"
            )
        if self.replacement == self.pattern:
            raise ValueError(f"replacement must differ from the pattern ({self.pattern!r})")
        if self.min_stem is not None and self.min_stem < 1:
            raise ValueError("min_stem must be positive")

    @property
    def rule_id(self) -> str:
        return f"{self.kind.value}:{self.pattern}"

    @cached_property
    def pattern_length(self) -> int:
        return graphemes.count(self.pattern)


@dataclass(frozen=True)
class RuleSet:
    """Ordered rule collection plus exception words; immutable.

    Rules are kept sorted by pattern grapheme length, descending, ties in
    source order -- the order the stemmer scans them in.
    """

    rules: tuple[AffixRule, ...]
    exceptions: frozenset[str] = field(default_factory=frozenset)
    default_min_stem: int = DEFAULT_MIN_STEM

    def __post_init__(self) -> None:
        object.__setattr__(self, "rules", tuple(order_rules(self.rules)))
        object.__setattr__(self, "exceptions", frozenset(self.exceptions))
        if self.default_min_stem < 1:
            raise ValueError("default_min_stem must be positive")
        if any(not w for w in self.exceptions):
            raise ValueError("exception words must be non-empty")
        seen: set[tuple[AffixKind, str]] = set()
        for rule in self.rules:
            key = (rule.kind, rule.pattern)
            if key in seen:
                raise ValueError(f"duplicate rule {rule.rule_id}")
            seen.add(key)

    def effective_min_stem(self, rule: AffixRule) -> int:
        return rule.min_stem if rule.min_stem is not None else self.default_min_stem

    def count_by_kind(self, kind: AffixKind) -> int:
        return sum(1 for r in self.rules if r.kind is kind)

    @property
    def suffix_count(self) -> int:
        return self.count_by_kind(AffixKind.SUFFIX)

    @property
    def prefix_count(self) -> int:
        return self.count_by_kind(AffixKind.PREFIX)


def order_rules(rules) -> list[AffixRule]:
    """Sort rules by pattern grapheme length, longest first, stable on ties."""
    return sorted(rules, key=lambda r: -r.pattern_length)


def _split_line(line: str) -> list[str]:
    # Only newline characters are stripped; field content is preserved,
    # including trailing spaces inside a pattern.
    return line.rstrip("\r\n").split("\t")


def parse_rule_file(text: str) -> RuleSet:
    """Parse rule-file content into a :class:`RuleSet`.

    Raises :class:`RuleParseError` with the offending line number; a
    duplicate ``(kind, pattern)`` also carries the first occurrence's line.
    """
    text = unicodedata.normalize("NFC", text)
    rules: list[AffixRule] = []
    first_line: dict[tuple[AffixKind, str], int] = {}
    exceptions: set[str] = set()
    default_min_stem = DEFAULT_MIN_STEM

    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip():
            continue
        if line.startswith("#!"):
            fields = _split_line(line)
            directive = fields[0]
            if directive == "#!exception":
                if len(fields) != 2 or not fields[1]:
                    raise RuleParseError("#!exception needs one non-empty word", lineno)
                exceptions.add(fields[1])
            elif directive == "#!default-min-stem":
                if len(fields) != 2 or not fields[1].isascii() or not fields[1].isdigit():
                    raise RuleParseError("#!default-min-stem needs a positive integer", lineno)
                default_min_stem = int(fields[1])
                if default_min_stem < 1:
                    raise RuleParseError("#!default-min-stem needs a positive integer", lineno)
            else:
                raise RuleParseError(f"unknown directive {directive!r}", lineno)
            continue
        if line.startswith("#"):
            continue

        fields = _split_line(line)
        if len(fields) < 2 or len(fields) > 4:
            raise RuleParseError(f"expected 2-4 tab-separated fields, got {len(fields)}", lineno)
        kind_field, pattern = fields[0], fields[1]
        try:
            kind = AffixKind(kind_field)
        except ValueError:
            raise RuleParseError(f"kind must be P or S, got {kind_field!r}", lineno) from None
        if not pattern:
            raise RuleParseError("empty affix pattern", lineno)

        replacement = ""
        min_stem: int | None = None
        rest = fields[2:]
        if len(rest) == 2:
            replacement = rest[0]
            min_stem = _parse_min_stem(rest[1], lineno)
        elif len(rest) == 1:
            if rest[0].isascii() and rest[0].isdigit():
                min_stem = _parse_min_stem(rest[0], lineno)
            else:
                replacement = rest[0]

        try:
            rule = AffixRule(kind, pattern, replacement, min_stem)
        except ValueError as exc:
            raise RuleParseError(str(exc), lineno) from None

        key = (kind, pattern)
        if key in first_line:
            raise RuleParseError(
                f"duplicate rule {rule.rule_id} (first defined on line {first_line[key]})",
                lineno,
                other_line=first_line[key],
            )
        first_line[key] = lineno
        rules.append(rule)

    return RuleSet(tuple(rules), frozenset(exceptions), default_min_stem)


def _parse_min_stem(text: str, lineno: int) -> int:
    if not text.isascii() or not text.isdigit() or int(text) < 1:
        raise RuleParseError(f"min_stem must be a positive integer, got {text!r}", lineno)
    return int(text)


def serialize_rule_set(rs: RuleSet) -> str:
    """Render a rule set in canonical form.

    ``parse_rule_file(serialize_rule_set(rs))`` equals ``rs``, and the
    output is a fixpoint of serialize-after-parse.
    """
    lines = [
        "# urdustem rule file",
        f"# suffixes: {rs.suffix_count}",
        f"# prefixes: {rs.prefix_count}",
        f"#!default-min-stem\t{rs.default_min_stem}",
    ]
    for word in sorted(rs.exceptions):
        lines.append(f"#!exception\t{word}")
    for rule in rs.rules:
        fields = [rule.kind.value, rule.pattern]
        if rule.min_stem is not None:
            fields += [rule.replacement, str(rule.min_stem)]
        elif rule.replacement:
            fields.append(rule.replacement)
        lines.append("\t".join(fields))
    return "\n".join(lines) + "\n"
