"""
Exceptions raised by the saddlecount engine and simulator.
"""
import typing


class SaddleCountError(Exception):
    """
    Base class for every error the engine raises on purpose.

    The command line front end maps these to exit status 3.
    """

    def to_dict(self) -> dict:
        return {"error": type(self).__name__, "message": str(self)}


class OddSum(SaddleCountError):
    pass


class InvalidStratum(SaddleCountError):
    pass


class UnknownComponent(SaddleCountError):
    pass


class NoSpinStructure(SaddleCountError):
    pass


class MissingVolume(SaddleCountError):
    """
    The volume table has no entry for a stratum component that a formula
    needs. Extend the table with ``--volumes FILE``.
    """


class ParseError(SaddleCountError):
    def __init__(
        self,
        message: str,
        offset: typing.Optional[int] = None,
        lineno: typing.Optional[int] = None,
    ):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        if lineno is not None:
            message = f"{message} (on line {lineno})"
        super().__init__(message)
        self.offset = offset
        self.lineno = lineno

    def to_dict(self) -> dict:
        data = super().to_dict()
        if self.offset is not None:
            data["offset"] = self.offset
        if self.lineno is not None:
            data["lineno"] = self.lineno
        return data


class ZeroNotInStratum(SaddleCountError):
    pass


class NotAdmissible(SaddleCountError):
    pass


class MalformedCycle(SaddleCountError):
    pass


class DimensionMismatch(SaddleCountError):
    pass


class BadGluing(SaddleCountError):
    pass


class Reducible(SaddleCountError):
    pass


class SamplingFailure(SaddleCountError):
    pass


class ToleranceBreach(SaddleCountError):
    """
    Two geometric candidates could not be told apart at the configured
    epsilon. The surface is degenerate for the search, draw a new one.
    """


class ConflictWarning(UserWarning):
    pass
