"""Rule-driven affix-stripping stemmer for Urdu (Perso-Arabic script).

Subpackages:

* ``rules``      -- affix-rule data model and the tab-separated rule-file format
* ``stemmer``    -- longest-first edge matching with optional recoding
* ``morphology`` -- inflection generator for synthesizing gold corpora
* ``corpus``     -- Unicode normalization and tokenization of raw text
* ``evaluation`` -- accuracy metric and over-/under-stemming error taxonomy
* ``cli``        -- command-line front end
"""

from urdustem.rules import AffixKind, AffixRule, RuleSet, order_rules, parse_rule_file, serialize_rule_set
from urdustem.stemmer import StemConfig, StemResult, stem_batch, stem_word

__version__ = "0.1.0"

__all__ = [
    "AffixKind",
    "AffixRule",
    "RuleSet",
    "StemConfig",
    "StemResult",
    "order_rules",
    "parse_rule_file",
    "serialize_rule_set",
    "stem_batch",
    "stem_word",
]
