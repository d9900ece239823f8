"""Locating and loading resource files, bundled or user-supplied."""

from __future__ import annotations

import os
from importlib import resources

from .errors import DataError
from .lexicon import Lexicon, load_lexicon, reverse
from .proverbs import ProverbStore, load_proverbs
from .tagger import PosLexicon, load_pos_lexicon

ENV_DICT = "SETU_DICT"
ENV_POS_DICT = "SETU_POS_DICT"
ENV_PROVERBS = "SETU_PROVERBS"


def bundled(*parts):
    """Path of a bundled data file, or None if it does not exist."""
    path = resources.files("setu").joinpath("data", *parts)
    return path if path.is_file() else None


def _open(path):
    try:
        return open(path, encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc.strerror}") from None


def pick(flag_value, env_var, environ=None):
    environ = os.environ if environ is None else environ
    return flag_value or environ.get(env_var) or None


def read_lexicon(path, src_lang, tgt_lang) -> Lexicon:
    with _open(path) as f:
        return load_lexicon(f, src_lang, tgt_lang)


def read_proverbs(path, src_lang, tgt_lang) -> ProverbStore:
    with _open(path) as f:
        return load_proverbs(f, src_lang, tgt_lang)


def read_pos_lexicon(path, lang) -> PosLexicon:
    with _open(path) as f:
        return load_pos_lexicon(f, lang)


def find_lexicon(src_lang, tgt_lang, path=None) -> Lexicon:
    """Explicit path, else the bundled dictionary for the pair (or its reverse)."""
    if path:
        return read_lexicon(path, src_lang, tgt_lang)
    forward = bundled("dict", f"{src_lang}-{tgt_lang}.tsv")
    if forward is not None:
        with forward.open(encoding="utf-8") as f:
            return load_lexicon(f, src_lang, tgt_lang)
    backward = bundled("dict", f"{tgt_lang}-{src_lang}.tsv")
    if backward is not None:
        with backward.open(encoding="utf-8") as f:
            return reverse(load_lexicon(f, tgt_lang, src_lang))
    raise DataError(f"no dictionary for {src_lang}->{tgt_lang}; pass --dict")


def find_proverbs(src_lang, tgt_lang, path=None) -> ProverbStore:
    """Explicit path, else the bundled list for the pair, else an empty store."""
    if path:
        return read_proverbs(path, src_lang, tgt_lang)
    found = bundled("proverbs", f"{src_lang}-{tgt_lang}.tsv")
    if found is None:
        return ProverbStore(src_lang, tgt_lang)
    with found.open(encoding="utf-8") as f:
        return load_proverbs(f, src_lang, tgt_lang)


def find_pos_lexicon(lang, path=None) -> PosLexicon:
    if path:
        return read_pos_lexicon(path, lang)
    found = bundled("pos", f"{lang}.tsv")
    if found is None:
        raise DataError(f"no POS dictionary for {lang!r}; pass --pos-dict")
    with found.open(encoding="utf-8") as f:
        return load_pos_lexicon(f, lang)
