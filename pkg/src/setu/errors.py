"""Exception types shared across the pipeline."""


class SetuError(Exception):
    pass


class DataError(SetuError):
    """A resource file (dictionary, proverb list, corpus, scheme) is malformed."""

    def __init__(self, message, lineno=None, source=None):
        self.lineno = lineno
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if lineno is not None:
            where += f"line {lineno}: "
        elif where:
            where += " "
        super().__init__(where + message)


class LanguageMismatchError(SetuError):
    pass


class UnknownWordsError(SetuError):
    """Raised under the ``fail`` OOV policy; ``words`` lists every unknown surface."""

    def __init__(self, words):
        self.words = list(words)
        super().__init__("unknown words: " + ", ".join(self.words))


class EmptyCorpusError(SetuError):
    pass
