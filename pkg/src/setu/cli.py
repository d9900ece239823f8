"""Command-line front end.

    setu translate --from te --to mr < input.txt
    setu pos --lang te
    setu dict lookup --from te --to mr భారత్
    setu proverbs match --from te --to mr
    setu translit --lang te
    setu eval --from te --to mr corpus.tsv --report scores.tsv

Exit status: 0 ok, 1 usage error, 2 bad or missing resource data,
3 unknown words under ``--oov fail``. Results go to stdout, diagnostics
to stderr. Input is read line by line and every line produces output
before the next is read.
"""

from __future__ import annotations

import argparse
import io
import sys

from . import resources as res
from .errors import DataError, SetuError, UnknownWordsError
from .evaluation import evaluate, format_table, format_tsv, load_corpus
from .lexicon import dump_lexicon, lookup_all
from .proverbs import dump_proverbs, find_matches
from .script import normalize, tokenize, words
from .tagger import tag_sentence
from .translator import OovPolicy, translate
from .translit import load_scheme, transliterate

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_TRANSLATION = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _pair_options():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--from", dest="src", required=True, metavar="LANG", help="source language code")
    p.add_argument("--to", dest="tgt", required=True, metavar="LANG", help="target language code")
    return p


def _dict_option():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--dict", metavar="PATH", help="bilingual dictionary TSV (env SETU_DICT)")
    return p


def _proverbs_option():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--proverbs", metavar="PATH", help="proverb TSV (env SETU_PROVERBS)")
    return p


def _oov_option():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--oov", choices=[p.value for p in OovPolicy], default="passthrough",
                   help="unknown-word policy (default: passthrough)")
    return p


def _format_option():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=["text", "tsv"], default="text")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="setu", description="Rule-based direct translation for SOV language pairs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    pair, dict_, prov, oov, fmt = (
        _pair_options(), _dict_option(), _proverbs_option(), _oov_option(), _format_option())

    sub.add_parser("translate", parents=[pair, dict_, prov, oov, fmt],
                   help="translate stdin line by line")

    p = sub.add_parser("pos", help="tag stdin words with parts of speech")
    p.add_argument("--lang", required=True)
    p.add_argument("--pos-dict", metavar="PATH", help="POS TSV (env SETU_POS_DICT)")

    p = sub.add_parser("dict", help="inspect a bilingual dictionary")
    dsub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    dsub.add_parser("check", parents=[pair, dict_], help="validate and summarize")
    dsub.add_parser("list", parents=[pair, dict_], help="print all entries as TSV")
    lk = dsub.add_parser("lookup", parents=[pair, dict_], help="all senses of WORDs (or stdin)")
    lk.add_argument("words", nargs="*")

    p = sub.add_parser("proverbs", help="inspect a proverb list")
    psub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    psub.add_parser("list", parents=[pair, prov])
    psub.add_parser("match", parents=[pair, prov], help="report proverb spans in stdin lines")

    p = sub.add_parser("translit", help="ITRANS roman input to Telugu/Devanagari")
    p.add_argument("--lang", required=True, help="te, mr, telugu or devanagari")

    p = sub.add_parser("eval", parents=[pair, dict_, prov, oov, fmt],
                       help="score translations against a parallel corpus")
    p.add_argument("corpus", help="TSV source<TAB>reference")
    p.add_argument("--report", metavar="PATH", help="also write per-sentence TSV here")
    return parser


class _Context:
    def __init__(self, args, stdin, stdout, stderr, environ):
        self.args = args
        self.stdin = stdin
        self.stdout = stdout
        self.stderr = stderr
        self.environ = environ

    def out(self, line=""):
        self.stdout.write(line + "\n")
        self.stdout.flush()

    def warn(self, resource):
        for w in getattr(resource, "warnings", ()):
            self.stderr.write(f"setu: warning: {w}\n")
        return resource

    def lines(self):
        for line in self.stdin:
            yield line.rstrip("\r\n")

    def lexicon(self):
        a = self.args
        return self.warn(res.find_lexicon(a.src, a.tgt, res.pick(a.dict, res.ENV_DICT, self.environ)))

    def proverbs(self):
        a = self.args
        return self.warn(res.find_proverbs(
            a.src, a.tgt, res.pick(a.proverbs, res.ENV_PROVERBS, self.environ)))


def cmd_translate(ctx):
    lex, store = ctx.lexicon(), ctx.proverbs()
    tsv = ctx.args.format == "tsv"
    first = True
    for line in ctx.lines():
        try:
            result = translate(lex, store, line, ctx.args.oov)
        except UnknownWordsError as exc:
            ctx.stderr.write(f"setu: {exc}\n")
            return EXIT_TRANSLATION
        if not tsv:
            ctx.out(result.output_text)
            continue
        if not first:
            ctx.out()
        first = False
        for u in result.units:
            ctx.out(f"{u.source_text}\t{u.pos}\t{u.target_text}\t{u.mechanism.value}")
    return EXIT_OK


def cmd_pos(ctx):
    a = ctx.args
    plex = ctx.warn(res.find_pos_lexicon(a.lang, res.pick(a.pos_dict, res.ENV_POS_DICT, ctx.environ)))
    first = True
    for line in ctx.lines():
        if not first:
            ctx.out()
        first = False
        for tt in tag_sentence(plex, tokenize(normalize(line))):
            ctx.out(f"{tt.token.surface}\t{tt.tag}")
    return EXIT_OK


def cmd_dict(ctx):
    lex = ctx.lexicon()
    action = ctx.args.action
    if action == "check":
        ctx.out(f"ok\t{len(lex)} entries\t{len(lex.entries)} headwords\t{len(lex.warnings)} warnings")
    elif action == "list":
        ctx.stdout.write(dump_lexicon(lex))
    else:
        queries = ctx.args.words or ctx.lines()
        for q in queries:
            q = normalize(q.strip())
            senses = lookup_all(lex, q)
            if not senses:
                ctx.stderr.write(f"setu: not found: {q}\n")
            for e in senses:
                ctx.out(f"{e.source}\t{e.target}\t{e.pos}")
    return EXIT_OK


def cmd_proverbs(ctx):
    store = ctx.proverbs()
    if ctx.args.action == "list":
        ctx.stdout.write(dump_proverbs(store))
        return EXIT_OK
    for line in ctx.lines():
        found = find_matches(store, words(tokenize(normalize(line))))
        ctx.out("\t".join(f"{m.start}-{m.end}:{m.entry.target_text}" for m in found))
    return EXIT_OK


def cmd_translit(ctx):
    try:
        scheme = load_scheme(ctx.args.lang)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for line in ctx.lines():
        if not line.isascii():
            ctx.stderr.write("setu: translit input must be ASCII; line copied unchanged\n")
            ctx.out(line)
            continue
        ctx.out(transliterate(scheme, line))
    return EXIT_OK


def cmd_eval(ctx):
    a = ctx.args
    lex, store = ctx.lexicon(), ctx.proverbs()
    try:
        with open(a.corpus, encoding="utf-8") as f:
            corpus = load_corpus(f, a.src, a.tgt)
    except OSError as exc:
        raise DataError(f"cannot read {a.corpus}: {exc.strerror}") from None
    try:
        report = evaluate(lex, store, a.oov, corpus)
    except UnknownWordsError as exc:
        ctx.stderr.write(f"setu: {exc}\n")
        return EXIT_TRANSLATION
    ctx.stdout.write(format_tsv(report) if a.format == "tsv" else format_table(report, corpus))
    if a.report:
        with open(a.report, "w", encoding="utf-8") as f:
            f.write(format_tsv(report))
    return EXIT_OK


COMMANDS = {
    "translate": cmd_translate,
    "pos": cmd_pos,
    "dict": cmd_dict,
    "proverbs": cmd_proverbs,
    "translit": cmd_translit,
    "eval": cmd_eval,
}


def run(argv, stdin=None, stdout=None, stderr=None, environ=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        # argparse prints --help output to sys.stdout directly
        saved = sys.stdout, sys.stderr
        sys.stdout, sys.stderr = stdout, stderr
        try:
            args = parser.parse_args(argv)
        finally:
            sys.stdout, sys.stderr = saved
        if getattr(args, "src", None) is not None and args.src == args.tgt:
            raise UsageError("setu: --from and --to must differ")
        return COMMANDS[args.command](_Context(args, stdin, stdout, stderr, environ))
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except SetuError as exc:
        stderr.write(f"setu: error: {exc}\n")
        return EXIT_DATA


def main():
    stdin = io.TextIOWrapper(sys.stdin.buffer, encoding="utf-8", errors="strict")
    stdout = io.TextIOWrapper(sys.stdout.buffer, encoding="utf-8", newline="\n", line_buffering=True)
    stderr = io.TextIOWrapper(sys.stderr.buffer, encoding="utf-8", newline="\n", line_buffering=True)
    sys.exit(run(sys.argv[1:], stdin, stdout, stderr))


if __name__ == "__main__":
    main()
