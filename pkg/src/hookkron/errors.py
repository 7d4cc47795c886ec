"""Exception types shared across the package."""


class HookkronError(ValueError):
    """Base for all domain errors; deliberately a ValueError subclass."""


class NotContainedError(HookkronError):
    pass


class DuplicateValueError(HookkronError):
    pass


class NotAddableError(HookkronError):
    pass


class NotRemovableError(HookkronError):
    pass


class NotInnerCornerError(HookkronError):
    pass


class InvalidCocornerError(HookkronError):
    pass


class NotRemmelWhitneyError(HookkronError):
    pass


class SizeMismatchError(HookkronError):
    pass


class RangeError(HookkronError):
    """A numeric parameter is outside the operation's domain."""


class TooLargeError(HookkronError):
    """Requested symmetric-group degree exceeds the configured cap."""


class NotHookShapeError(HookkronError):
    pass


class NotCoHookShapeError(HookkronError):
    pass
