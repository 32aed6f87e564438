"""Exception hierarchy shared across the package."""


class ChemSummError(Exception):
    """Base class for all library errors."""


class EmptyInputError(ChemSummError):
    """Raised when a document contains no usable text."""


class EmptyCorpusError(ChemSummError):
    """Raised when a corpus directory contains no document files."""


class EmptyTokenError(ChemSummError):
    """Raised when a classifier is handed an empty token."""


class EmptyTrainingSetError(ChemSummError):
    """Raised when a classifier training wordlist is empty."""


class FormatError(ChemSummError):
    """Raised when a persisted model or rule file is malformed."""


class EmptyDocumentError(ChemSummError):
    """Raised when no sentence survives preprocessing."""


class UnknownTermError(ChemSummError):
    """Raised when a matrix is built against a term space missing a term."""


class EmptyTitleError(ChemSummError):
    """Raised when a title-based similarity gets an empty title term list."""


class EmptyMetricSetError(ChemSummError):
    """Raised when an ablation run enables no metric at all."""


class OutOfRangeError(ChemSummError):
    """Raised when a sentence ordinal falls outside 1..m."""


class NoReferenceError(ChemSummError):
    """Raised when an evaluation entry has no reference abstract."""


class EmptyListError(ChemSummError):
    """Raised when a normalization gets an empty value list."""
