"""Exception hierarchy shared by every stage of the pipeline."""


class TintError(Exception):
    """Base class for all expected, user-facing failures."""


class DuplicateAnnotator(TintError):
    pass


class UnknownAnnotator(TintError):
    pass


class UnsatisfiedRequirement(TintError):
    def __init__(self, annotator: str, missing: str):
        self.annotator = annotator
        self.missing = missing
        super().__init__(f"annotator {annotator!r} requires {missing!r}, "
                         f"which no earlier annotator provides")


class AnnotatorFailure(TintError):
    def __init__(self, annotator: str, cause: BaseException, document=None):
        self.annotator = annotator
        self.cause = cause
        self.document = document
        super().__init__(f"annotator {annotator!r} failed: {cause}")


class LayerViolation(TintError):
    """An annotator touched a layer outside its declared provides set."""


class MissingPrerequisite(TintError):
    pass


class ResourceLoadError(TintError):
    pass


class MalformedLine(TintError):
    def __init__(self, line_number: int, reason: str = ""):
        self.line_number = line_number
        self.reason = reason
        super().__init__(f"line {line_number}: {reason or 'malformed'}")


class StoreCorrupt(TintError):
    pass


class EmptyCorpus(TintError):
    pass


class MissingGoldTag(TintError):
    def __init__(self, sentence: int, index: int):
        self.sentence = sentence
        self.index = index
        super().__init__(f"sentence {sentence}, token {index}: no gold UPOS")


class UnknownTag(TintError):
    pass


class ModelLoadError(TintError):
    pass


class ParseError(TintError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class OffsetDomainError(TintError):
    pass


class EmptyGold(TintError):
    pass
