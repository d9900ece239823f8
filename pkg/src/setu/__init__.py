"""Rule-based direct machine translation for grammatically parallel (SOV) language pairs.

Typical use::

    from setu import find_lexicon, find_proverbs, translate
    lex = find_lexicon("te", "mr")
    store = find_proverbs("te", "mr")
    translate(lex, store, "నేను అన్నము తింటున్నాను").output_text   # 'मी जेवन खातआहे'
"""

from .errors import DataError, EmptyCorpusError, LanguageMismatchError, SetuError, UnknownWordsError
from .evaluation import EvalReport, ParallelCorpus, evaluate, load_corpus
from .lexicon import LexEntry, Lexicon, dump_lexicon, load_lexicon, lookup, lookup_all, reverse
from .proverbs import ProverbEntry, ProverbMatch, ProverbStore, dump_proverbs, find_matches, load_proverbs
from .resources import find_lexicon, find_pos_lexicon, find_proverbs
from .script import ScriptTag, Token, TokenKind, detect_script, normalize, tokenize
from .tagger import PosLexicon, TaggedToken, load_pos_lexicon, tag_sentence
from .translator import (
    Mechanism,
    OovPolicy,
    TranslationResult,
    TranslationUnit,
    translate,
    translate_tagged,
)
from .translit import TranslitScheme, load_scheme, transliterate

__version__ = "0.1.0"
