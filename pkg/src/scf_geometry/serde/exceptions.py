import typing

from ..exceptions import DomainError
from .types import JSONValue
from .utils import JSONPointer


class ValidationProblem:
    """
    One problem found while decoding, addressed by a pointer into the payload.
    """

    _pointer: JSONPointer
    _message: str

    @property
    def pointer(self) -> JSONPointer:
        return self._pointer

    @property
    def message(self) -> str:
        return self._message

    def __eq__(self, that: object) -> bool:
        return (
            isinstance(that, ValidationProblem)
            and self._pointer == that._pointer
            and self._message == that._message
        )

    def __str__(self) -> str:
        return f"{self._pointer}: {self._message}"

    def __repr__(self) -> str:
        return f"ValidationProblem({str(self._pointer)!r}, {self._message!r})"

    def __init__(self, pointer: JSONPointer, message: str):
        self._pointer = pointer
        self._message = message


class DeserializationError(DomainError):
    payload: JSONValue
    errors: typing.Sequence[ValidationProblem]

    @property
    def message(self) -> str:
        return "; ".join(str(e) for e in self.errors)

    def __init__(self, payload: JSONValue, errors: typing.Sequence[ValidationProblem]):
        self.payload = payload
        self.errors = errors
