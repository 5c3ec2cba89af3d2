"""Raw-text ingestion: Unicode normalization and tokenization.

Normalization brings text into the same space the rule files live in:
NFC, optionally stripped of Arabic-script diacritics (the harakat
classes), with Arabic presentation letters unified to their Urdu
counterparts per the mapping table shipped in ``data/unify_map.tsv``.
"""

import unicodedata
from dataclasses import dataclass
from enum import Enum
from importlib import resources

from urdustem.graphemes import ZWNJ, ZWJ

# Arabic-script combining marks removed by strip_diacritics: tashkeel
# (fathatan..sukun and the small high marks), Quranic annotation signs,
# plus the tatweel elongation character.
_DIACRITIC_RANGES = (
    (0x064B, 0x065F),
    (0x0610, 0x061A),
    (0x06D6, 0x06DC),
    (0x06DF, 0x06E4),
    (0x06E7, 0x06E8),
    (0x06EA, 0x06ED),
)
_DIACRITICS = frozenset(
    chr(cp) for lo, hi in _DIACRITIC_RANGES for cp in range(lo, hi + 1)
) | {"ـ"}


def _load_unify_map() -> dict[int, str]:
    table: dict[int, str] = {}
    text = resources.files("urdustem").joinpath("data/unify_map.tsv").read_text("utf-8")
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        src, dst = line.split("\t")[:2]
        table[ord(src)] = dst
    return table


_UNIFY = _load_unify_map()


def normalize(text: str, strip_diacritics: bool = True) -> str:
    """Normalize raw text for stemming; idempotent.

    Output is NFC with the letter-unification table applied; when
    *strip_diacritics* is set, combining marks and tatweel are removed.
    """
    text = unicodedata.normalize("NFC", text)
    if strip_diacritics:
        text = "".join(ch for ch in text if ch not in _DIACRITICS)
    text = text.translate(_UNIFY)
    return unicodedata.normalize("NFC", text)


class TokenKind(Enum):
    WORD = "word"
    PUNCT = "punct"
    NUMBER = "number"
    OTHER = "other"


@dataclass(frozen=True)
class Token:
    """One segment of the normalized source, with its UTF-8 byte span."""

    surface: str
    kind: TokenKind
    start: int
    end: int


def _char_class(ch: str) -> TokenKind | None:
    # None = separator (whitespace), never part of a token.
    if ch.isspace():
        return None
    if ch in (ZWNJ, ZWJ):
        return TokenKind.WORD  # word-internal formatting characters
    cat = unicodedata.category(ch)
    if cat.startswith("L") or cat.startswith("M"):
        return TokenKind.WORD
    if cat == "Nd":
        return TokenKind.NUMBER
    if cat.startswith("P"):
        return TokenKind.PUNCT
    return TokenKind.OTHER


def tokenize(text: str) -> list[Token]:
    """Segment normalized text into tokens of maximal same-class runs.

    Whitespace separates tokens and is emitted as no token; concatenating
    token surfaces with the skipped separators reconstructs the input.
    """
    tokens: list[Token] = []
    run: list[str] = []
    run_kind: TokenKind | None = None
    run_start = 0
    offset = 0

    def flush() -> None:
        nonlocal run, run_kind
        if run:
            surface = "".join(run)
            tokens.append(Token(surface, run_kind, run_start, run_start + len(surface.encode())))
            run = []
            run_kind = None

    for ch in text:
        kind = _char_class(ch)
        if kind is None:
            flush()
        elif kind is run_kind:
            run.append(ch)
        else:
            flush()
            run_kind = kind
            run_start = offset
            run.append(ch)
        offset += len(ch.encode())
    flush()
    return tokens
