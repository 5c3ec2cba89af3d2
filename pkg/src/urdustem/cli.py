"""Command-line front end.

Subcommands::

    urdustem stem  --rules FILE [INPUT]      stem text, TSV to stdout
    urdustem eval  --rules FILE --gold FILE  score against a gold corpus
    urdustem rules {validate,list} --rules FILE
    urdustem gen   --lexicon FILE            synthesize a gold corpus

Exit codes: 0 success, 1 validation failure (bad rule file), 2
input/alignment error.  Output is buffered and written in one piece, so
error paths never leave partial lines behind.
"""

import argparse
import json
import sys

from urdustem import corpus, evaluation, morphology
from urdustem.evaluation import EvalError, GoldFileError
from urdustem.morphology import ParadigmError
from urdustem.rules import RuleParseError, RuleSet, parse_rule_file
from urdustem.stemmer import (
    PREFIX_FIRST,
    SUFFIX_FIRST,
    StemConfig,
    StemError,
    stem_batch,
)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_INPUT = 2


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _parse_bool(value: str) -> bool:
    if value.lower() in ("true", "1", "yes", "on"):
        return True
    if value.lower() in ("false", "0", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {value!r}")


def _read_input(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.buffer.read().decode("utf-8")
        with open(path, "rb") as f:
            return f.read().decode("utf-8")
    except UnicodeDecodeError as exc:
        raise CliError(f"{path}: invalid UTF-8 at byte {exc.start}", EXIT_INPUT) from exc
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror}", EXIT_INPUT) from exc


def _load_rules(path: str) -> RuleSet:
    try:
        return parse_rule_file(_read_input(path))
    except RuleParseError as exc:
        raise CliError(f"{path}: {exc}", EXIT_VALIDATION) from exc


def _stem_config(args) -> StemConfig:
    try:
        return StemConfig(
            max_suffix_passes=args.suffix_passes,
            max_prefix_passes=args.prefix_passes,
            order=args.order,
        )
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc


def _clean_field(text: str | None) -> str:
    # Display form: separator whitespace captured by a pattern (e.g. a
    # prefix ending in a space) is trimmed from TSV fields.
    return (text or "").strip()


def cmd_stem(args) -> int:
    rs = _load_rules(args.rules)
    cfg = _stem_config(args)
    text = corpus.normalize(_read_input(args.input), strip_diacritics=args.strip_diacritics)
    if args.pretokenized:
        words = [line.strip() for line in text.split("\n") if line.strip()]
    else:
        words = [t.surface for t in corpus.tokenize(text) if t.kind is corpus.TokenKind.WORD]
    try:
        results = stem_batch(words, rs, cfg)
    except StemError as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc

    out = []
    for r in results:
        if args.json:
            out.append(json.dumps(
                {"word": r.word, "prefix": r.prefix, "stem": r.stem, "suffix": r.suffix,
                 "applied": list(r.applied), "exception": r.exception_hit},
                ensure_ascii=False,
            ))
        else:
            out.append("\t".join((r.word, _clean_field(r.prefix), r.stem, _clean_field(r.suffix))))
    sys.stdout.write("".join(line + "\n" for line in out))
    return EXIT_OK


def cmd_eval(args) -> int:
    rs = _load_rules(args.rules)
    cfg = _stem_config(args)
    try:
        gold = evaluation.parse_gold_file(_read_input(args.gold))
    except GoldFileError as exc:
        raise CliError(f"{args.gold}: {exc}", EXIT_INPUT) from exc
    try:
        results = stem_batch([g.word for g in gold], rs, cfg)
        report = evaluation.evaluate(results, gold, stem_only=args.stem_only)
    except (StemError, EvalError) as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc

    if args.json:
        sys.stdout.write(json.dumps(
            {k: (evaluation.format_percent(report.accuracy_percent) if k == "accuracy_percent" else v)
             for k, v in report.__dict__.items()},
            ensure_ascii=False,
        ) + "\n")
    else:
        sys.stdout.write(evaluation.summarize(report) + "\n" + evaluation.report_kv(report))
    return EXIT_OK


def cmd_rules(args) -> int:
    rs = _load_rules(args.rules)
    if args.action == "validate":
        sys.stdout.write(
            f"ok: {rs.suffix_count} suffixes, {rs.prefix_count} prefixes, "
            f"{len(rs.exceptions)} exceptions\n"
        )
        return EXIT_OK
    out = [f"suffixes: {rs.suffix_count}", f"prefixes: {rs.prefix_count}"]
    for rule in rs.rules:
        fields = [rule.kind.value, rule.pattern, rule.replacement,
                  str(rule.min_stem) if rule.min_stem is not None else ""]
        out.append("\t".join(fields))
    sys.stdout.write("".join(line + "\n" for line in out))
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        lexicon = morphology.parse_lexicon_file(_read_input(args.lexicon))
        gold = morphology.generate_gold(lexicon)
    except ParadigmError as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc
    out = []
    if any(isinstance(item, morphology.VerbRoot) for item in lexicon):
        out.append("# provenance: verb forms are pattern-generalized from a single exemplar\n")
    out.append(evaluation.gold_to_tsv(gold))
    sys.stdout.write("".join(out))
    return EXIT_OK


def _add_stem_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--suffix-passes", type=int, default=1, metavar="N")
    p.add_argument("--prefix-passes", type=int, default=1, metavar="N")
    p.add_argument("--order", choices=(SUFFIX_FIRST, PREFIX_FIRST), default=SUFFIX_FIRST)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="urdustem", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stem", help="stem text and print word/prefix/stem/suffix TSV")
    p.add_argument("input", nargs="?", default="-", help="input text file, or - for stdin")
    p.add_argument("--rules", required=True, metavar="PATH")
    p.add_argument("--strip-diacritics", type=_parse_bool, nargs="?", const=True, default=True,
                   metavar="BOOL")
    p.add_argument("--pretokenized", action="store_true",
                   help="treat each input line as one word token (no tokenization)")
    p.add_argument("--json", action="store_true")
    _add_stem_flags(p)
    p.set_defaults(func=cmd_stem)

    p = sub.add_parser("eval", help="stem a gold corpus's words and score the output")
    p.add_argument("--rules", required=True, metavar="PATH")
    p.add_argument("--gold", required=True, metavar="PATH")
    p.add_argument("--stem-only", action="store_true",
                   help="count stem-only matches as correct (ignore gold affix fields)")
    p.add_argument("--json", action="store_true")
    _add_stem_flags(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("rules", help="validate or list a rule file")
    p.add_argument("action", choices=("validate", "list"))
    p.add_argument("--rules", required=True, metavar="PATH")
    p.set_defaults(func=cmd_rules)

    p = sub.add_parser("gen", help="generate a gold corpus from a lexicon")
    p.add_argument("--lexicon", required=True, metavar="PATH")
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"urdustem: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
