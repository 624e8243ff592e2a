"""Exception types raised by the engine."""


class SokobanError(Exception):
    """Base class for all errors raised by this package."""


class LevelError(SokobanError, ValueError):
    """A level string violates the level format or its invariants."""


class EmptyLevelError(LevelError):
    pass


class NoPusherError(LevelError):
    pass


class MultiplePushersError(LevelError):
    pass


class BoxGoalCountMismatchError(LevelError):
    pass


class UnenclosedPlayfieldError(LevelError):
    pass


class OutOfBoundsError(SokobanError, IndexError):
    pass


class IllegalPlacementError(SokobanError, ValueError):
    pass


class IllegalStartError(SokobanError, ValueError):
    pass


class IllegalPushError(SokobanError, ValueError):
    pass


class BoxNotPresentError(SokobanError, ValueError):
    pass


class GridMismatchError(SokobanError, ValueError):
    pass


class InvalidSolutionError(SokobanError, ValueError):
    pass
