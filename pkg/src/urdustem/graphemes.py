"""Grapheme-cluster helpers.

All length comparisons in this package are in user-perceived characters,
not code points: an Urdu base letter plus any trailing combining marks
counts as one unit.  The segmentation here is deliberately small -- a
cluster is a base character followed by Unicode mark characters (category
M*) and the zero-width (non-)joiners, which is sufficient for
Perso-Arabic text.
"""

import unicodedata

ZWNJ = "\u200c"
ZWJ = "\u200d"

_EXTENDERS = {ZWNJ, ZWJ}


def split(text: str) -> list[str]:
    """Split *text* into grapheme clusters."""
    clusters: list[str] = []
    for ch in text:
        if clusters and (ch in _EXTENDERS or unicodedata.category(ch).startswith("M")):
            clusters[-1] += ch
        else:
            clusters.append(ch)
    return clusters


def count(text: str) -> int:
    """Number of grapheme clusters in *text*."""
    return len(split(text))


def is_nfc(text: str) -> bool:
    return unicodedata.is_normalized("NFC", text)
