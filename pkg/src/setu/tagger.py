"""Part-of-speech tagging by dictionary lookup."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import DataError
from .lexicon import PUNCT_TAG, UNKNOWN_TAG, is_valid_pos
from .script import Token, TokenKind, has_delimiter
from .tsvio import read_rows

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class PosLexicon:
    lang: str
    entries: Mapping[str, str] = field(default_factory=dict)
    warnings: tuple[str, ...] = field(default=(), compare=False)

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class TaggedToken:
    token: Token
    tag: str


def load_pos_lexicon(stream: Iterable[str], lang: str) -> PosLexicon:
    """Read a ``word<TAB>POS`` file. The first tag seen for a word wins."""
    name = getattr(stream, "name", None)
    entries: dict[str, str] = {}
    warnings = []
    for lineno, (word, tag) in read_rows(stream, 2, name):
        if not word:
            raise DataError("empty word field", lineno, name)
        if has_delimiter(word):
            raise DataError(f"word {word!r} contains a delimiter", lineno, name)
        if not is_valid_pos(tag):
            raise DataError(f"invalid POS tag {tag!r}", lineno, name)
        if word in entries:
            if entries[word] == tag:
                msg = f"line {lineno}: duplicate entry {word!r} ({tag}) dropped"
            else:
                msg = f"line {lineno}: {word!r} already tagged {entries[word]}, ignoring {tag}"
            log.warning(msg)
            warnings.append(msg)
            continue
        entries[word] = tag
    return PosLexicon(lang, entries, tuple(warnings))


def tag_sentence(plex: PosLexicon, tokens: Iterable[Token]) -> list[TaggedToken]:
    """Tag word and punct tokens; separators are dropped from the output."""
    out = []
    for tok in tokens:
        if tok.kind is TokenKind.SEPARATOR:
            continue
        if tok.kind is TokenKind.PUNCT:
            out.append(TaggedToken(tok, PUNCT_TAG))
        else:
            out.append(TaggedToken(tok, plex.entries.get(tok.surface, UNKNOWN_TAG)))
    return out
