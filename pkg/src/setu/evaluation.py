"""Parallel-corpus scoring: sentence exact match, positional token accuracy, OOV rate."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import DataError, EmptyCorpusError, LanguageMismatchError
from .lexicon import Lexicon
from .proverbs import ProverbStore
from .script import normalize, tokenize, words
from .translator import OovPolicy, check_pair, translate
from .tsvio import read_rows


@dataclass(frozen=True)
class ParallelCorpus:
    rows: tuple[tuple[str, str], ...]
    src_lang: str
    tgt_lang: str

    def __len__(self):
        return len(self.rows)


@dataclass(frozen=True)
class SentenceScore:
    exact: bool
    matched_tokens: int
    reference_tokens: int
    output_tokens: int
    source_tokens: int
    unknowns: int
    output_text: str

    @property
    def token_accuracy(self) -> Fraction:
        denom = max(self.output_tokens, self.reference_tokens)
        return Fraction(self.matched_tokens, denom) if denom else Fraction(1)


@dataclass(frozen=True)
class EvalReport:
    sentence_exact_rate: Fraction
    token_accuracy: Fraction
    oov_rate: Fraction
    per_sentence: tuple[SentenceScore, ...]


def load_corpus(stream: Iterable[str], src_lang: str, tgt_lang: str) -> ParallelCorpus:
    name = getattr(stream, "name", None)
    rows = []
    for lineno, (source, reference) in read_rows(stream, 2, name):
        if not source.strip():
            raise DataError("empty source sentence", lineno, name)
        rows.append((source, reference))
    return ParallelCorpus(tuple(rows), src_lang, tgt_lang)


def collapse(text: str) -> str:
    return re.sub(r"\s+", " ", normalize(text)).strip()


def _words(text: str) -> list[str]:
    return words(tokenize(normalize(text)))


def score_sentence(output: str, reference: str, source_tokens: int, unknowns: int) -> SentenceScore:
    out_w = _words(output)
    ref_w = _words(reference)
    matched = sum(a == b for a, b in zip(out_w, ref_w))
    return SentenceScore(
        exact=collapse(output) == collapse(reference),
        matched_tokens=matched,
        reference_tokens=len(ref_w),
        output_tokens=len(out_w),
        source_tokens=source_tokens,
        unknowns=unknowns,
        output_text=output,
    )


def aggregate(scores: Iterable[SentenceScore]) -> EvalReport:
    """Combine per-sentence scores. Exact rate and token accuracy are
    means over sentences; OOV rate is pooled over all source words."""
    scores = tuple(scores)
    if not scores:
        raise EmptyCorpusError("empty corpus")
    n = len(scores)
    total_src = sum(s.source_tokens for s in scores)
    return EvalReport(
        sentence_exact_rate=Fraction(sum(s.exact for s in scores), n),
        token_accuracy=sum((s.token_accuracy for s in scores), Fraction(0)) / n,
        oov_rate=Fraction(sum(s.unknowns for s in scores), total_src) if total_src else Fraction(0),
        per_sentence=scores,
    )


def evaluate(
    lex: Lexicon,
    store: ProverbStore,
    policy: OovPolicy | str,
    corpus: ParallelCorpus,
) -> EvalReport:
    check_pair(lex, store)
    if (corpus.src_lang, corpus.tgt_lang) != (lex.src_lang, lex.tgt_lang):
        raise LanguageMismatchError(
            f"corpus is {corpus.src_lang}->{corpus.tgt_lang}, "
            f"dictionary is {lex.src_lang}->{lex.tgt_lang}")
    if not corpus.rows:
        raise EmptyCorpusError("empty corpus")
    scores = []
    for source, reference in corpus.rows:
        result = translate(lex, store, source, policy)
        scores.append(score_sentence(
            result.output_text, reference, len(_words(source)), result.unknown_count))
    return aggregate(scores)


def format_table(report: EvalReport, corpus: ParallelCorpus) -> str:
    lines = [f"{'#':>3}  {'exact':5}  {'tok_acc':>7}  {'oov':>3}  source"]
    for i, ((source, _), s) in enumerate(zip(corpus.rows, report.per_sentence), 1):
        lines.append(
            f"{i:>3}  {'yes' if s.exact else 'no':5}  {float(s.token_accuracy):7.3f}  "
            f"{s.unknowns:>3}  {source}")
    lines.append("")
    lines.append(f"sentence_exact_rate  {float(report.sentence_exact_rate):.4f}")
    lines.append(f"token_accuracy       {float(report.token_accuracy):.4f}")
    lines.append(f"oov_rate             {float(report.oov_rate):.4f}")
    return "\n".join(lines) + "\n"


TSV_HEADER = "row\texact\tmatched_tokens\treference_tokens\toutput_tokens\tsource_tokens\tunknowns\ttoken_accuracy\toutput\n"


def format_tsv(report: EvalReport) -> str:
    out = [TSV_HEADER]
    for i, s in enumerate(report.per_sentence, 1):
        out.append(
            f"{i}\t{int(s.exact)}\t{s.matched_tokens}\t{s.reference_tokens}\t{s.output_tokens}\t"
            f"{s.source_tokens}\t{s.unknowns}\t{float(s.token_accuracy):.6f}\t{collapse(s.output_text)}\n")
    return "".join(out)
