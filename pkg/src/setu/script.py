"""Normalization, script detection and lossless tokenization.

Every piece of text entering the system (dictionaries, proverb lists, user
input) goes through :func:`normalize` first, because dictionary matching is
plain string equality and Indic text has several codepoint spellings of the
same glyph sequence.
"""

from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass

# Unicode White_Space property (str.isspace() disagrees on U+001C..U+001F).
WHITESPACE = frozenset(
    "\u0009\u000a\u000b\u000c\u000d\u0020\u0085\u00a0\u1680"
    "\u2000\u2001\u2002\u2003\u2004\u2005\u2006\u2007\u2008\u2009\u200a"
    "\u2028\u2029\u202f\u205f\u3000"
)
PUNCTUATION = frozenset(",.!?;:()\"'\u0964\u0965")
DELIMITERS = WHITESPACE | PUNCTUATION

TELUGU_BLOCK = (0x0C00, 0x0C7F)
DEVANAGARI_BLOCK = (0x0900, 0x097F)


class ScriptTag(str, enum.Enum):
    TELUGU = "telugu"
    DEVANAGARI = "devanagari"
    LATIN = "latin"
    COMMON = "common"
    MIXED = "mixed"
    OTHER = "other"


class TokenKind(str, enum.Enum):
    WORD = "word"
    SEPARATOR = "separator"
    PUNCT = "punct"


@dataclass(frozen=True)
class Token:
    surface: str
    kind: TokenKind
    script: ScriptTag
    span: tuple[int, int]

    @property
    def is_word(self) -> bool:
        return self.kind is TokenKind.WORD


def normalize(text: str) -> str:
    return unicodedata.normalize("NFC", text)


def is_normalized(text: str) -> bool:
    return unicodedata.is_normalized("NFC", text)


def _is_letter(ch: str) -> bool:
    # Dependent vowel signs and virama are marks, but they are part of
    # the written word just like letters.
    return unicodedata.category(ch)[0] in "LM"


def _block_of(ch: str) -> ScriptTag:
    cp = ord(ch)
    if TELUGU_BLOCK[0] <= cp <= TELUGU_BLOCK[1]:
        return ScriptTag.TELUGU
    if DEVANAGARI_BLOCK[0] <= cp <= DEVANAGARI_BLOCK[1]:
        return ScriptTag.DEVANAGARI
    if cp <= 0xFF:
        return ScriptTag.LATIN
    return ScriptTag.OTHER


def detect_script(text: str) -> ScriptTag:
    """Classify ``text`` by the Unicode blocks its letters come from.

    Digits, punctuation, spaces and format characters (ZWJ/ZWNJ) are
    ignored; a string without letters is ``common``.
    """
    blocks = {_block_of(ch) for ch in text if _is_letter(ch)}
    if not blocks:
        return ScriptTag.COMMON
    if len(blocks) > 1:
        return ScriptTag.MIXED
    return blocks.pop()


def _char_class(ch: str) -> TokenKind:
    if ch in WHITESPACE:
        return TokenKind.SEPARATOR
    if ch in PUNCTUATION:
        return TokenKind.PUNCT
    return TokenKind.WORD


def tokenize(text: str) -> list[Token]:
    """Split normalized text into word, separator and punct tokens.

    Word tokens are maximal runs of non-delimiters, separator tokens are
    maximal whitespace runs and every punctuation delimiter is a token of
    its own. Joining the surfaces gives back ``text`` exactly.

    Raises ``ValueError`` if ``text`` is not NFC; normalize first.
    """
    if not is_normalized(text):
        raise ValueError("tokenize() requires NFC input; call normalize() first")
    tokens: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        kind = _char_class(text[i])
        j = i + 1
        if kind is not TokenKind.PUNCT:
            while j < n and _char_class(text[j]) is kind:
                j += 1
        surface = text[i:j]
        tokens.append(Token(surface, kind, detect_script(surface), (i, j)))
        i = j
    return tokens


def words(tokens) -> list[str]:
    """Surfaces of the word tokens, in order."""
    return [t.surface for t in tokens if t.kind is TokenKind.WORD]


def has_delimiter(text: str) -> bool:
    return any(ch in DELIMITERS for ch in text)


def has_whitespace(text: str) -> bool:
    return any(ch in WHITESPACE for ch in text)
