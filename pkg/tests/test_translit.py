import io
import unicodedata

import pytest
from hypothesis import given, strategies as st

from setu.errors import DataError
from setu.translit import load_scheme, parse_scheme, transliterate


@pytest.fixture(scope="module")
def telugu():
    return load_scheme("telugu")


@pytest.fixture(scope="module")
def devanagari():
    return load_scheme("mr")


@pytest.mark.parametrize("roman, expected", [
    ("ka", "క"),
    ("kA", "కా"),
    ("k", "క్"),
    ("kha", "ఖ"),
    ("a", "అ"),
    ("ai", "ఐ"),
    ("kai", "కై"),
    ("kM", "క్ం"),
    ("k.ha", "క్అ"),
    ("ka1", "క" + "1"),
    # words from the worked examples
    ("nEnu", "నేను"),
    ("annamu", "అన్నము"),
    ("tiMTunnAnu", "తింటున్నాను"),
    ("rAmu", "రాము"),
])
def test_telugu(telugu, roman, expected):
    assert transliterate(telugu, roman) == expected


@pytest.mark.parametrize("roman, expected", [
    ("mI", "मी"),
    ("jevana", "जेवन"),
    ("bhArata", "भारत"),
    ("ratna", "रत्न"),
    ("sachina", "सचिन"),
])
def test_devanagari(devanagari, roman, expected):
    assert transliterate(devanagari, roman) == expected


def test_rejects_non_ascii(telugu):
    with pytest.raises(ValueError):
        transliterate(telugu, "kā")


def test_unknown_scheme():
    with pytest.raises(ValueError):
        load_scheme("tamil")


def test_scheme_needs_virama():
    with pytest.raises(DataError):
        parse_scheme(io.StringIO("k\tC\t0C15\n"), "telugu")


def test_scheme_conflicting_kinds():
    with pytest.raises(DataError):
        parse_scheme(io.StringIO("k\tC\t0C15\nk\tMISC\t0C02\n.h\tMISC\t0C4D\n"), "telugu")


def test_scheme_file_coverage(telugu, devanagari):
    vowels = {"a", "A", "i", "I", "u", "U", "e", "E", "ai", "o", "O", "au"}
    consonants = set("k kh g gh ch Ch j jh T Th D Dh N t th d dh n p ph b bh m y r l v L sh Sh s h".split())
    for scheme, block in ((telugu, 0x0C00), (devanagari, 0x0900)):
        assert vowels <= set(scheme.independent_vowel_map) == set(scheme.vowel_sign_map)
        assert consonants == set(scheme.consonant_map)
        for value in [*scheme.consonant_map.values(), *scheme.independent_vowel_map.values()]:
            assert all(block <= ord(c) <= block + 0x7F for c in value)


roman = st.text(st.sampled_from(list("kgcjTDNtdnpbmyrlvsh aAiIuUeEoOMH.,1")), max_size=30)


@given(roman)
def test_output_alphabet_and_spaces(r):
    for scheme, block in ((load_scheme("te"), 0x0C00), (load_scheme("mr"), 0x0900)):
        out = transliterate(scheme, r)
        assert unicodedata.is_normalized("NFC", out)
        assert all(block <= ord(c) <= block + 0x7F or c in r for c in out)
        assert out.count(" ") == r.count(" ")
        assert transliterate(scheme, r) == out
