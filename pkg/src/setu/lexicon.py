"""Directed bilingual word dictionaries.

A :class:`Lexicon` maps a source surface form to every target rendering
known for it. Translation always takes the first sense listed in the file,
so dictionary authors control disambiguation by line order.

File format (UTF-8, one entry per line)::

    # comment
    source<TAB>target<TAB>POS
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import DataError
from .script import has_delimiter, has_whitespace
from .tsvio import read_rows

log = logging.getLogger(__name__)

UNKNOWN_TAG = "UNK"
PUNCT_TAG = "PUNCT"

_POS_RE = re.compile(r"[A-Z0-9_\-]{1,8}")


def is_valid_pos(tag: str) -> bool:
    return bool(_POS_RE.fullmatch(tag))


@dataclass(frozen=True)
class LexEntry:
    source: str
    target: str
    pos: str
    rank: int


@dataclass(frozen=True)
class Lexicon:
    src_lang: str
    tgt_lang: str
    entries: Mapping[str, tuple[LexEntry, ...]] = field(default_factory=dict)
    warnings: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.src_lang == self.tgt_lang:
            raise ValueError(f"source and target language are both {self.src_lang!r}")

    def __len__(self):
        return sum(len(v) for v in self.entries.values())

    def __iter__(self):
        """Entries in rank order."""
        return iter(sorted((e for v in self.entries.values() for e in v), key=lambda e: e.rank))

    def __contains__(self, surface):
        return surface in self.entries

    @classmethod
    def from_pairs(cls, src_lang, tgt_lang, triples: Iterable[tuple[str, str, str]]):
        """Build a lexicon from ``(source, target, pos)`` triples in rank order."""
        builder = _Builder()
        for source, target, pos in triples:
            builder.add(source, target, pos)
        return builder.build(src_lang, tgt_lang)


class _Builder:
    def __init__(self):
        self.entries: dict[str, list[LexEntry]] = {}
        self.seen: set[tuple[str, str, str]] = set()
        self.warnings: list[str] = []
        self.rank = 0

    def add(self, source, target, pos, where=""):
        key = (source, target, pos)
        if key in self.seen:
            msg = f"{where}duplicate entry {source!r} -> {target!r} ({pos}) dropped"
            log.warning(msg)
            self.warnings.append(msg)
            return
        self.seen.add(key)
        self.entries.setdefault(source, []).append(LexEntry(source, target, pos, self.rank))
        self.rank += 1

    def build(self, src_lang, tgt_lang):
        return Lexicon(
            src_lang,
            tgt_lang,
            {k: tuple(v) for k, v in self.entries.items()},
            tuple(self.warnings),
        )


def load_lexicon(stream: Iterable[str], src_lang: str, tgt_lang: str) -> Lexicon:
    """Read a three-column dictionary TSV.

    Exact duplicate lines are dropped (recorded in ``Lexicon.warnings``);
    a source listed with several different targets keeps all of them.
    Raises :class:`DataError` naming the offending line for anything
    malformed.
    """
    name = getattr(stream, "name", None)
    builder = _Builder()
    for lineno, (source, target, pos) in read_rows(stream, 3, name):
        if not source:
            raise DataError("empty source field", lineno, name)
        if not target.strip():
            raise DataError("empty target field", lineno, name)
        if has_whitespace(source):
            raise DataError(f"source {source!r} contains whitespace", lineno, name)
        if has_delimiter(source):
            raise DataError(f"source {source!r} contains a punctuation delimiter", lineno, name)
        if not is_valid_pos(pos):
            raise DataError(f"invalid POS tag {pos!r}", lineno, name)
        builder.add(source, target, pos, f"line {lineno}: ")
    return builder.build(src_lang, tgt_lang)


def dump_lexicon(lex: Lexicon) -> str:
    """Serialize ``lex`` to the TSV format read by :func:`load_lexicon`."""
    return "".join(f"{e.source}\t{e.target}\t{e.pos}\n" for e in lex)


def lookup(lex: Lexicon, surface: str) -> LexEntry | None:
    senses = lex.entries.get(surface)
    return senses[0] if senses else None


def lookup_all(lex: Lexicon, surface: str) -> list[LexEntry]:
    return list(lex.entries.get(surface, ()))


def reverse(lex: Lexicon) -> Lexicon:
    """Swap the direction of ``lex``.

    Targets that cannot serve as a single-word key (they contain spaces or
    punctuation delimiters) are skipped with a warning. Rank order of the
    original is kept.
    """
    builder = _Builder()
    for e in lex:
        if has_delimiter(e.target):
            msg = f"target {e.target!r} of {e.source!r} is not a single word; not reversible"
            log.warning(msg)
            builder.warnings.append(msg)
            continue
        builder.add(e.target, e.source, e.pos)
    return builder.build(lex.tgt_lang, lex.src_lang)
