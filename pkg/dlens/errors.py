"""
Error Hierarchy

All exceptions raised by dlens derive from DlensError so that callers
(the CLI in particular) can separate data errors from programming errors.
"""

from typing import Optional


class DlensError(Exception):
    """Base class for every dlens error"""


class ConfigError(DlensError):
    """Configuration value of the wrong type or outside its allowed range"""


# ---------------------------------------------------------------- frontend

class FrontendError(DlensError):
    """Raised when Java source cannot be tokenized or parsed"""

    def __init__(self, message: str, line: int, column: int, path: Optional[str] = None):
        self.line = line
        self.column = column
        self.path = path
        where = f"{path}:" if path else ""
        super().__init__(f"{where}{line}:{column}: {message}")


class LexError(FrontendError):
    """Unterminated string/char literal, unterminated comment or stray character"""


class ParseError(FrontendError):
    """Malformed compilation unit; carries the first offending position"""


# ---------------------------------------------------------- language model

class LanguageModelError(DlensError):
    """Base class for n-gram model errors"""


class EmptyCorpus(LanguageModelError):
    """Training corpus holds no tokens"""


class VersionMismatch(LanguageModelError):
    """Model file was written by an incompatible format version"""


class CorruptModel(LanguageModelError):
    """Model file is truncated, has a bad header or inconsistent tables"""


# -------------------------------------------------------------- classifier

class ClassifierError(DlensError):
    """Base class for threshold classification and evaluation errors"""


class InvalidThreshold(ClassifierError):
    """Threshold outside the range allowed by its mode"""


class NonPositiveOriginal(ClassifierError):
    """Ratio classification needs a strictly positive original score"""


class LengthMismatch(ClassifierError):
    """Predictions and truths (or pairs and truths) differ in length"""


class EmptyInput(LanguageModelError, ClassifierError):
    """Nothing to score or evaluate"""


# ------------------------------------------------------------------ corpus

class CorpusError(DlensError):
    """Base class for manifest and corpus errors"""


class EmptyManifest(CorpusError):
    """Manifest has a header but no pair rows"""


class MissingLabels(CorpusError):
    """An operation needs ground-truth labels that the manifest lacks"""


class ManifestFormatError(CorpusError):
    """Manifest header or a cell value is malformed"""
