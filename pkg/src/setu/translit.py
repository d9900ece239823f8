"""ITRANS-style roman input for Telugu and Devanagari.

A convenience for typing dictionary entries and test sentences on an ASCII
keyboard, e.g. ``transliterate(load_scheme("telugu"), "nEnu") == "నేను"``.
The mapping tables are data files under ``setu/data/translit``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Mapping

from .errors import DataError
from .script import normalize
from .tsvio import read_rows

VIRAMA_KEY = ".h"
SCRIPT_ALIASES = {"te": "telugu", "mr": "devanagari", "hi": "devanagari"}


class Kind(str, enum.Enum):
    CONSONANT = "C"
    VOWEL = "V"
    VOWEL_SIGN = "VS"
    MISC = "MISC"


@dataclass(frozen=True)
class TranslitScheme:
    target_script: str
    consonant_map: Mapping[str, str]
    independent_vowel_map: Mapping[str, str]
    vowel_sign_map: Mapping[str, str]
    misc_map: Mapping[str, str]
    virama: str

    def __post_init__(self):
        if set(self.independent_vowel_map) != set(self.vowel_sign_map):
            raise ValueError("every vowel key needs both an independent form and a sign")
        self.__dict__["_max_key"] = max(map(len, self._keys()), default=0)

    def _keys(self):
        yield from self.consonant_map
        yield from self.independent_vowel_map
        yield from self.misc_map

    def match(self, text: str, i: int) -> tuple[Kind, str] | None:
        """Longest key starting at ``text[i]`` as ``(kind, key)``."""
        for n in range(min(self._max_key, len(text) - i), 0, -1):
            key = text[i:i + n]
            if key in self.consonant_map:
                return Kind.CONSONANT, key
            if key in self.independent_vowel_map:
                return Kind.VOWEL, key
            if key in self.misc_map:
                return Kind.MISC, key
        return None


def _codepoints(field: str) -> str:
    return "".join(chr(int(cp, 16)) for cp in field.split())


def parse_scheme(stream: Iterable[str], target_script: str) -> TranslitScheme:
    name = getattr(stream, "name", None)
    maps = {k: {} for k in Kind}
    for lineno, (key, kind, cps) in read_rows(stream, 3, name):
        try:
            kind = Kind(kind)
            value = _codepoints(cps)
        except ValueError as exc:
            raise DataError(str(exc), lineno, name) from None
        if not key or not key.isascii():
            raise DataError(f"bad roman key {key!r}", lineno, name)
        if not value and kind is not Kind.VOWEL_SIGN:
            raise DataError(f"no codepoints for {key!r}", lineno, name)
        for other in Kind:
            # V and VS share keys by design
            if other is not kind and {kind, other} != {Kind.VOWEL, Kind.VOWEL_SIGN} \
                    and key in maps[other]:
                raise DataError(f"key {key!r} defined as both {other.value} and {kind.value}",
                                lineno, name)
        maps[kind][key] = value
    if VIRAMA_KEY not in maps[Kind.MISC]:
        raise DataError(f"scheme has no virama ({VIRAMA_KEY!r} MISC row)", None, name)
    try:
        return TranslitScheme(
            target_script,
            maps[Kind.CONSONANT],
            maps[Kind.VOWEL],
            maps[Kind.VOWEL_SIGN],
            maps[Kind.MISC],
            maps[Kind.MISC][VIRAMA_KEY],
        )
    except ValueError as exc:
        raise DataError(str(exc), None, name) from None


def load_scheme(script: str) -> TranslitScheme:
    """Bundled scheme for ``telugu`` or ``devanagari`` (``te``/``mr`` accepted)."""
    script = SCRIPT_ALIASES.get(script, script)
    path = resources.files("setu") / "data" / "translit" / f"{script}.tsv"
    if not path.is_file():
        raise ValueError(f"no transliteration scheme for {script!r}")
    with path.open(encoding="utf-8") as f:
        return parse_scheme(f, script)


def transliterate(scheme: TranslitScheme, roman: str) -> str:
    if not roman.isascii():
        raise ValueError("transliterate() takes ASCII input")
    out = []
    pending = False  # last emitted a consonant still waiting for its vowel
    i = 0
    while i < len(roman):
        hit = scheme.match(roman, i)
        if hit is None:
            if pending:
                out.append(scheme.virama)
                pending = False
            out.append(roman[i])
            i += 1
            continue
        kind, key = hit
        i += len(key)
        if kind is Kind.CONSONANT:
            if pending:
                out.append(scheme.virama)
            out.append(scheme.consonant_map[key])
            pending = True
        elif kind is Kind.VOWEL:
            if pending:
                out.append(scheme.vowel_sign_map[key])
                pending = False
            else:
                out.append(scheme.independent_vowel_map[key])
        else:
            if key == VIRAMA_KEY:
                out.append(scheme.virama)
            else:
                if pending:
                    out.append(scheme.virama)
                out.append(scheme.misc_map[key])
            pending = False
    if pending:
        out.append(scheme.virama)
    return normalize("".join(out))
