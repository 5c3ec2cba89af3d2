"""Inflection generator for synthesizing gold corpora.

Implements the one fully specified masculine noun paradigm (lemmas ending
in alif, choti he, or ain), the verb causative triple, and adjective
gender/case agreement.  Everything else raises :class:`ParadigmError`
rather than guessing at grammar the generator has no rules for.
"""

import unicodedata
from dataclasses import dataclass
from enum import Enum

from urdustem import graphemes
from urdustem.evaluation import GoldEntry

ALIF = "ا"
CHOTI_HE = "ہ"
AIN = "ع"

YE_BARI = "ے"
WAW = "و"
WAW_NUN_GHUNNA = "وں"
FARSI_YE = "ی"

INFINITIVE = "نا"
DIRECT_CAUSATIVE = "انا"
INDIRECT_CAUSATIVE = "وانا"

GROUP1 = "group1-masc-a/he/ain"


class ParadigmError(ValueError):
    """Inflection requested for a paradigm the generator has no rules for."""


class Case(Enum):
    NOMINATIVE = "nominative"
    OBLIQUE = "oblique"
    VOCATIVE = "vocative"


class Number(Enum):
    SINGULAR = "singular"
    PLURAL = "plural"


class Gender(Enum):
    MASCULINE = "masculine"
    FEMININE = "feminine"


class TerminationClass(Enum):
    ALIF_HE = "alif-he"  # final letter is replaced by the case ending
    AIN = "ain"  # the case ending is appended after the final ain


@dataclass(frozen=True)
class NounFeatures:
    case: Case
    number: Number
    gender: Gender = Gender.MASCULINE


@dataclass(frozen=True)
class ParadigmEntry:
    """A noun lemma (singular nominative) and its inflection group."""

    lemma: str
    termination_class: TerminationClass
    group: str = GROUP1

    def __post_init__(self) -> None:
        last = graphemes.split(self.lemma)[-1] if self.lemma else ""
        if self.termination_class is TerminationClass.ALIF_HE and last not in (ALIF, CHOTI_HE):
            raise ValueError(f"alif-he lemma must end in {ALIF} or {CHOTI_HE}: {self.lemma!r}")
        if self.termination_class is TerminationClass.AIN and last != AIN:
            raise ValueError(f"ain lemma must end in {AIN}: {self.lemma!r}")

    @classmethod
    def from_lemma(cls, lemma: str) -> "ParadigmEntry":
        """Infer the termination class from the lemma's final grapheme."""
        last = graphemes.split(lemma)[-1] if lemma else ""
        if last in (ALIF, CHOTI_HE):
            return cls(lemma, TerminationClass.ALIF_HE)
        if last == AIN:
            return cls(lemma, TerminationClass.AIN)
        raise ParadigmError(
            f"no paradigm specified for lemma {lemma!r} (must end in {ALIF}, {CHOTI_HE} or {AIN})"
        )


@dataclass(frozen=True)
class VerbRoot:
    root: str


@dataclass(frozen=True)
class Adjective:
    lemma: str


# Case ending per (number, case); None = lemma unchanged.
_NOUN_ENDINGS = {
    (Number.SINGULAR, Case.NOMINATIVE): None,
    (Number.SINGULAR, Case.OBLIQUE): YE_BARI,
    (Number.SINGULAR, Case.VOCATIVE): None,
    (Number.PLURAL, Case.NOMINATIVE): YE_BARI,
    (Number.PLURAL, Case.OBLIQUE): WAW_NUN_GHUNNA,
    (Number.PLURAL, Case.VOCATIVE): WAW,
}

# Fixed feature order used by generate_gold.
FEATURE_ORDER = tuple(_NOUN_ENDINGS)


def inflect_noun(entry: ParadigmEntry, f: NounFeatures) -> str:
    """Inflect a group-1 masculine noun for case and number."""
    if entry.group != GROUP1 or f.gender is not Gender.MASCULINE:
        raise ParadigmError(
            f"paradigm not specified for group {entry.group!r} with gender {f.gender.value}"
        )
    ending = _NOUN_ENDINGS[(f.number, f.case)]
    if ending is None:
        return entry.lemma
    if entry.termination_class is TerminationClass.AIN:
        return entry.lemma + ending
    return "".join(graphemes.split(entry.lemma)[:-1]) + ending


def inflect_verb(root: str) -> tuple[str, str, str]:
    """Build the (infinitive, direct causative, indirect causative) triple."""
    if not root:
        raise ParadigmError("verb root must be non-empty")
    return (root + INFINITIVE, root + DIRECT_CAUSATIVE, root + INDIRECT_CAUSATIVE)


def inflect_adjective(lemma: str) -> tuple[str, str]:
    """Masculine-oblique and feminine agreement forms of an alif-final adjective."""
    lg = graphemes.split(lemma)
    if not lg or lg[-1] != ALIF:
        raise ParadigmError(f"paradigm not specified for adjective {lemma!r} (must end in {ALIF})")
    base = "".join(lg[:-1])
    return (base + YE_BARI, base + FARSI_YE)


def _surface_suffix(lemma: str, surface: str) -> str | None:
    """The surface-minus-lemma difference after their common grapheme prefix."""
    lg = graphemes.split(lemma)
    sg = graphemes.split(surface)
    i = 0
    while i < len(lg) and i < len(sg) and lg[i] == sg[i]:
        i += 1
    rest = "".join(sg[i:])
    return rest or None


def generate_gold(lexicon) -> list[GoldEntry]:
    """Expand a lexicon of nouns, verb roots and adjectives into gold entries.

    Output order is lexicon order crossed with the fixed feature order;
    the expected stem is always the citation form (lemma/root).
    """
    entries: list[GoldEntry] = []
    for item in lexicon:
        if isinstance(item, ParadigmEntry):
            for number, case in FEATURE_ORDER:
                surface = inflect_noun(item, NounFeatures(case, number))
                entries.append(
                    GoldEntry(surface, item.lemma, expected_suffix=_surface_suffix(item.lemma, surface))
                )
        elif isinstance(item, VerbRoot):
            for surface in inflect_verb(item.root):
                entries.append(
                    GoldEntry(surface, item.root, expected_suffix=_surface_suffix(item.root, surface))
                )
        elif isinstance(item, Adjective):
            for surface in inflect_adjective(item.lemma):
                entries.append(
                    GoldEntry(surface, item.lemma, expected_suffix=_surface_suffix(item.lemma, surface))
                )
        else:
            raise ParadigmError(f"unsupported lexicon item {item!r}")
    return entries


def parse_lexicon_file(text: str):
    """Parse a lexicon TSV: lines of ``noun|verb|adj <TAB> lemma``.

    Noun termination classes are inferred from the final grapheme.
    ``#`` starts a comment.
    """
    items = []
    for lineno, raw in enumerate(unicodedata.normalize("NFC", text).split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2 or not fields[1]:
            raise ParadigmError(f"line {lineno}: expected 'category<TAB>lemma'")
        category, lemma = fields
        try:
            if category == "noun":
                items.append(ParadigmEntry.from_lemma(lemma))
            elif category == "verb":
                items.append(VerbRoot(lemma))
            elif category == "adj":
                items.append(Adjective(lemma))
            else:
                raise ParadigmError(f"unknown category {category!r}")
        except (ParadigmError, ValueError) as exc:
            raise ParadigmError(f"line {lineno}: {exc}") from None
    return items
