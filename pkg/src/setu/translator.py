"""Direct (word-for-word) translation pipeline.

normalize -> tokenize -> proverb pass -> dictionary transfer -> reassembly.

Both languages of a pair are assumed to share constituent order, so units
are emitted strictly in source order. Proverb matches are taken before any
dictionary lookup: a word inside a matched proverb is never translated on
its own.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import lexicon as _lexicon
from .errors import LanguageMismatchError, UnknownWordsError
from .lexicon import PUNCT_TAG, UNKNOWN_TAG, Lexicon
from .proverbs import ProverbStore, find_matches
from .script import Token, TokenKind, normalize, tokenize
from .tagger import PosLexicon, TaggedToken, tag_sentence

MARK_OPEN = "⟦"
MARK_CLOSE = "⟧"


class OovPolicy(str, enum.Enum):
    PASSTHROUGH = "passthrough"
    MARK = "mark"
    FAIL = "fail"


class Mechanism(str, enum.Enum):
    PROVERB = "proverb"
    WORD = "word"
    PASSTHROUGH = "passthrough"
    PUNCT = "punct"


@dataclass(frozen=True)
class TranslationUnit:
    """One aligned piece of a translation.

    ``source_span`` indexes the sentence's non-separator tokens (words and
    punctuation), end exclusive. Only proverb units span more than one
    token; punctuation between the words of a matched proverb belongs to
    the proverb unit.
    """

    source_span: tuple[int, int]
    source_text: str
    target_text: str
    mechanism: Mechanism
    pos: str


@dataclass(frozen=True)
class TranslationResult:
    output_text: str
    units: tuple[TranslationUnit, ...]
    unknown_count: int

    @property
    def unknown_words(self) -> list[str]:
        return [u.source_text for u in self.units if u.mechanism is Mechanism.PASSTHROUGH]


def check_pair(lex: Lexicon, store: ProverbStore) -> None:
    if (lex.src_lang, lex.tgt_lang) != (store.src_lang, store.tgt_lang):
        raise LanguageMismatchError(
            f"dictionary is {lex.src_lang}->{lex.tgt_lang} but proverb store is "
            f"{store.src_lang}->{store.tgt_lang}"
        )


def _gap(tokens: list[Token], lo: int, hi: int) -> str:
    return "".join(t.surface for t in tokens[lo:hi])


def _translate_tokens(lex, store, tokens: list[Token], policy: OovPolicy) -> TranslationResult:
    policy = OovPolicy(policy)
    # positions (into `tokens`) of words and punctuation
    content = [i for i, t in enumerate(tokens) if t.kind is not TokenKind.SEPARATOR]
    word_at = [c for c, i in enumerate(content) if tokens[i].kind is TokenKind.WORD]
    surfaces = [tokens[content[c]].surface for c in word_at]

    proverb_at = {}
    for m in find_matches(store, surfaces):
        proverb_at[word_at[m.start]] = (word_at[m.end - 1] + 1, m)

    units: list[TranslationUnit] = []
    unknown: list[str] = []
    c = 0
    while c < len(content):
        tok = tokens[content[c]]
        if c in proverb_at:
            end, m = proverb_at[c]
            units.append(TranslationUnit(
                (c, end), m.entry.source_text, m.entry.target_text, Mechanism.PROVERB, UNKNOWN_TAG))
            c = end
            continue
        if tok.kind is TokenKind.PUNCT:
            unit = TranslationUnit((c, c + 1), tok.surface, tok.surface, Mechanism.PUNCT, PUNCT_TAG)
        else:
            entry = _lexicon.lookup(lex, tok.surface)
            if entry is not None:
                unit = TranslationUnit((c, c + 1), tok.surface, entry.target, Mechanism.WORD, entry.pos)
            else:
                unknown.append(tok.surface)
                shown = tok.surface
                if policy is OovPolicy.MARK:
                    shown = MARK_OPEN + shown + MARK_CLOSE
                unit = TranslationUnit((c, c + 1), tok.surface, shown, Mechanism.PASSTHROUGH, UNKNOWN_TAG)
        units.append(unit)
        c += 1

    if unknown and policy is OovPolicy.FAIL:
        raise UnknownWordsError(unknown)

    # Reassembly. Gaps are the separator runs between units; a gap touching
    # a proverb unit collapses to a single space (or stays empty).
    parts = []
    prev_tok_end = 0
    prev_proverb = False
    for unit in units:
        first_tok = content[unit.source_span[0]]
        gap = _gap(tokens, prev_tok_end, first_tok)
        if (prev_proverb or unit.mechanism is Mechanism.PROVERB) and gap:
            gap = " "
        parts.append(gap)
        parts.append(unit.target_text)
        prev_tok_end = content[unit.source_span[1] - 1] + 1
        prev_proverb = unit.mechanism is Mechanism.PROVERB
    tail = _gap(tokens, prev_tok_end, len(tokens))
    if prev_proverb and tail:
        tail = " "
    parts.append(tail)

    return TranslationResult("".join(parts), tuple(units), len(unknown))


def translate(
    lex: Lexicon,
    store: ProverbStore,
    text: str,
    policy: OovPolicy | str = OovPolicy.PASSTHROUGH,
) -> TranslationResult:
    """Translate ``text`` from ``lex.src_lang`` to ``lex.tgt_lang``.

    Unknown words are handled according to ``policy``: copied through
    (``passthrough``), copied and bracketed with ``⟦ ⟧`` (``mark``), or
    reported all at once via :class:`UnknownWordsError` (``fail``).
    Either way ``unknown_count`` counts them.
    """
    check_pair(lex, store)
    return _translate_tokens(lex, store, tokenize(normalize(text)), policy)


def translate_tagged(
    lex: Lexicon,
    store: ProverbStore,
    plex: PosLexicon,
    text: str,
    policy: OovPolicy | str = OovPolicy.PASSTHROUGH,
) -> tuple[TranslationResult, list[TaggedToken]]:
    check_pair(lex, store)
    if plex.lang != lex.src_lang:
        raise LanguageMismatchError(
            f"POS dictionary is for {plex.lang!r}, source language is {lex.src_lang!r}")
    tokens = tokenize(normalize(text))
    return _translate_tokens(lex, store, tokens, policy), tag_sentence(plex, tokens)
