"""Proverb and idiom store.

Proverbs do not survive word-for-word translation, so they are stored as
whole units: a source word sequence paired with a target rendering that is
emitted verbatim. Matching works on word tokens (punctuation is ignored on
both sides), leftmost-longest and non-overlapping.

File format::

    source proverb words<TAB>target rendering
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DataError
from .script import normalize, tokenize, words
from .tsvio import read_rows

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProverbEntry:
    source_words: tuple[str, ...]
    target_text: str
    rank: int

    @property
    def source_text(self) -> str:
        return " ".join(self.source_words)


@dataclass(frozen=True)
class ProverbMatch:
    start: int
    end: int
    entry: ProverbEntry


class _Node:
    __slots__ = ("children", "entry")

    def __init__(self):
        self.children: dict[str, _Node] = {}
        self.entry: ProverbEntry | None = None


class ProverbStore:
    """Immutable collection of proverb entries with a word-level trie index."""

    def __init__(self, src_lang, tgt_lang, entries: Iterable[ProverbEntry] = (), warnings=()):
        if src_lang == tgt_lang:
            raise ValueError(f"source and target language are both {src_lang!r}")
        self.src_lang = src_lang
        self.tgt_lang = tgt_lang
        self.entries = tuple(sorted(entries, key=lambda e: e.rank))
        self.warnings = tuple(warnings)
        self._root = _Node()
        self.max_len = 0
        for entry in self.entries:
            node = self._root
            for w in entry.source_words:
                node = node.children.setdefault(w, _Node())
            # equal word sequences: lowest rank keeps the slot
            if node.entry is None:
                node.entry = entry
            self.max_len = max(self.max_len, len(entry.source_words))

    @classmethod
    def from_pairs(cls, src_lang, tgt_lang, pairs: Iterable[tuple[str, str]]):
        """Build a store from ``(source_text, target_text)`` pairs, in rank order."""
        return _build(src_lang, tgt_lang, ((None, s, t) for s, t in pairs))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if not isinstance(other, ProverbStore):
            return NotImplemented
        return (self.src_lang, self.tgt_lang, self.entries) == (
            other.src_lang, other.tgt_lang, other.entries)

    def __repr__(self):
        return f"ProverbStore({self.src_lang!r}, {self.tgt_lang!r}, {len(self.entries)} entries)"

    def longest_at(self, words: Sequence[str], i: int) -> ProverbEntry | None:
        """Longest entry whose source words equal ``words[i:i+k]``."""
        node = self._root
        best = None
        for j in range(i, len(words)):
            node = node.children.get(words[j])
            if node is None:
                break
            if node.entry is not None:
                best = node.entry
        return best


def split_proverb(text: str) -> tuple[str, ...]:
    """Word sequence of a proverb; punctuation and spacing are dropped."""
    return tuple(words(tokenize(normalize(text))))


def _build(src_lang, tgt_lang, rows, name=None):
    entries = []
    seen = set()
    warnings = []
    for lineno, source, target in rows:
        source_words = split_proverb(source)
        if not source_words:
            raise DataError("empty proverb source", lineno, name)
        target = normalize(target)
        if not target.strip():
            raise DataError("empty proverb target", lineno, name)
        if source_words in seen:
            where = f"line {lineno}: " if lineno is not None else ""
            msg = f"{where}duplicate proverb {' '.join(source_words)!r} dropped"
            log.warning(msg)
            warnings.append(msg)
            continue
        seen.add(source_words)
        entries.append(ProverbEntry(source_words, target, len(entries)))
    return ProverbStore(src_lang, tgt_lang, entries, warnings)


def load_proverbs(stream: Iterable[str], src_lang: str, tgt_lang: str) -> ProverbStore:
    name = getattr(stream, "name", None)
    rows = ((lineno, s, t) for lineno, (s, t) in read_rows(stream, 2, name))
    return _build(src_lang, tgt_lang, rows, name)


def dump_proverbs(store: ProverbStore) -> str:
    return "".join(f"{e.source_text}\t{e.target_text}\n" for e in store)


def find_matches(store: ProverbStore, words: Sequence[str]) -> list[ProverbMatch]:
    """Greedy leftmost-longest, non-overlapping proverb occurrences in ``words``.

    >>> store = ProverbStore.from_pairs("x", "y", [("A B", "X"), ("A B C", "Y"), ("C D", "Z")])
    >>> [(m.start, m.end, m.entry.target_text) for m in find_matches(store, "A B C D".split())]
    [(0, 3, 'Y')]
    """
    matches = []
    i = 0
    n = len(words)
    while i < n:
        entry = store.longest_at(words, i)
        if entry is None:
            i += 1
            continue
        end = i + len(entry.source_words)
        matches.append(ProverbMatch(i, end, entry))
        i = end
    return matches
