"""Exception types shared across the package."""


class OadgError(Exception):
    """Base class for all package errors."""


class MissingFileError(OadgError):
    pass


class MalformedJsonError(OadgError):
    pass


class BoxOutOfBoundsError(OadgError):
    def __init__(self, message: str, sample_id: str | None = None):
        super().__init__(message)
        self.sample_id = sample_id


class UnknownClassIdError(OadgError):
    pass


class DegenerateImageError(OadgError):
    pass


class WrongOpCategoryError(OadgError):
    pass


class UnknownKindError(OadgError):
    pass


class ZeroNormFeatureError(OadgError):
    pass


class EmptyBatchError(OadgError):
    pass


class NotOnSimplexError(OadgError):
    pass


class DimMismatchError(OadgError):
    pass


class PairingMismatchError(OadgError):
    pass


class IncompleteMatrixError(OadgError):
    pass


class EmptyClassError(OadgError):
    pass


class ConfigError(OadgError):
    pass
