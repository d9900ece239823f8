import unicodedata

import pytest
from hypothesis import given, strategies as st

from setu.script import (
    DELIMITERS,
    PUNCTUATION,
    WHITESPACE,
    ScriptTag,
    TokenKind,
    detect_script,
    normalize,
    tokenize,
)

from conftest import FIG5_TE

# alphabet weighted towards the interesting blocks
indic_text = st.text(
    alphabet=st.one_of(
        st.characters(min_codepoint=0x0C00, max_codepoint=0x0C7F),
        st.characters(min_codepoint=0x0900, max_codepoint=0x097F),
        st.sampled_from(sorted(DELIMITERS) + ["\u200c", "\u200d", "a", "Z", "1"]),
        st.characters(),
    ),
    max_size=40,
)


def test_normalize_empty():
    assert normalize("") == ""


def test_normalize_nfc_unchanged():
    assert normalize("नी") == "नी"


@pytest.mark.parametrize("prefix, composed", [("", "\u0929"), ("\u0c15", "\u0c48")])
def test_normalize_composes(prefix, composed):
    # oracle: canonical decomposition from the Unicode character database
    decomposed = "".join(chr(int(cp, 16)) for cp in unicodedata.decomposition(composed).split())
    assert len(decomposed) == 2
    assert normalize(prefix + decomposed) == prefix + composed


@given(indic_text)
def test_normalize_idempotent(s):
    assert normalize(normalize(s)) == normalize(s)


@pytest.mark.parametrize("text, tag", [
    ("నేను", ScriptTag.TELUGU),
    ("मी", ScriptTag.DEVANAGARI),
    ("రాము123 कर", ScriptTag.MIXED),
    ("Ramu", ScriptTag.LATIN),
    ("123, !", ScriptTag.COMMON),
    ("", ScriptTag.COMMON),
    ("Ελλάδα", ScriptTag.OTHER),
    ("క్\u200cష", ScriptTag.TELUGU),
])
def test_detect_script(text, tag):
    assert detect_script(text) is tag


def test_tokenize_figure5_sentence():
    toks = tokenize(FIG5_TE)
    wordtoks = [t for t in toks if t.kind is TokenKind.WORD]
    seps = [t for t in toks if t.kind is TokenKind.SEPARATOR]
    assert len(wordtoks) == 9 and len(seps) == 8
    assert [t.surface for t in wordtoks] == [
        "సచిన్", "టెండూల్కర్", "కి", "భారత్", "రత్న", "పురస్కారం", "తో", "సన్మానం", "చేశారు"]
    assert all(t.script is ScriptTag.TELUGU for t in wordtoks)


def test_tokenize_empty():
    assert tokenize("") == []


def test_tokenize_punct():
    toks = tokenize("मी, जेवन")
    assert [(t.surface, t.kind) for t in toks] == [
        ("मी", TokenKind.WORD), (",", TokenKind.PUNCT),
        (" ", TokenKind.SEPARATOR), ("जेवन", TokenKind.WORD)]
    assert [t.span for t in toks] == [(0, 2), (2, 3), (3, 4), (4, 8)]


def test_tokenize_runs_and_danda():
    toks = tokenize("अ  \tब।।")
    assert [t.surface for t in toks] == ["अ", "  \t", "ब", "।", "।"]


def test_zero_width_joiners_are_word_characters():
    toks = tokenize("క\u200dష \u200c")
    assert [t.surface for t in toks] == ["క\u200dష", " ", "\u200c"]
    assert toks[2].kind is TokenKind.WORD


def test_tokenize_rejects_unnormalized():
    with pytest.raises(ValueError):
        tokenize("ऩ")


@given(indic_text)
def test_tokenize_invariants(s):
    text = normalize(s)
    toks = tokenize(text)
    assert "".join(t.surface for t in toks) == text
    pos = 0
    for t in toks:
        assert t.surface and t.span[0] == pos and text[t.span[0]:t.span[1]] == t.surface
        pos = t.span[1]
        if t.kind is TokenKind.SEPARATOR:
            assert all(ch in WHITESPACE for ch in t.surface)
        elif t.kind is TokenKind.PUNCT:
            assert len(t.surface) == 1 and t.surface in PUNCTUATION
        else:
            assert not any(ch in DELIMITERS for ch in t.surface)
    assert pos == len(text)
    assert tokenize(text) == toks


def test_whitespace_set_matches_unicode_white_space():
    # White_Space = Zs + the listed controls + line/paragraph separators
    expected = {chr(c) for c in range(0x110000)
                if unicodedata.category(chr(c)) in ("Zs", "Zl", "Zp")}
    expected |= set("\t\n\x0b\x0c\r\x85")
    assert WHITESPACE == expected
