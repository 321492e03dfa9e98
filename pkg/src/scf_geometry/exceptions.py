import abc
import typing


class SCFGeometryException(Exception, metaclass=abc.ABCMeta):
    @property
    @abc.abstractmethod
    def message(self) -> str:
        ...  # pragma: nocover

    def __str__(self) -> str:
        return self.message


class DomainError(SCFGeometryException, metaclass=abc.ABCMeta):
    """
    Raised when an argument lies outside the domain of an operation.
    The command line front end maps it to exit status 2.
    """


class PointOutsideGridError(DomainError):
    k: int
    m: int
    n: int

    @property
    def message(self) -> str:
        return f"point ({self.k}, {self.m}) lies outside the triangular grid of size {self.n}"

    def __init__(self, k: int, m: int, n: int):
        self.k = k
        self.m = m
        self.n = n


class InvalidGridFunctionError(DomainError):
    detail: str

    @property
    def message(self) -> str:
        return f"invalid grid function: {self.detail}"

    def __init__(self, detail: str):
        self.detail = detail


class InvalidABListError(DomainError):
    n: int
    terms: typing.Sequence[int]
    detail: str

    @property
    def message(self) -> str:
        terms = ",".join(str(t) for t in self.terms)
        return f"({terms}) is not an {{a,b}}-list for n={self.n}: {self.detail}"

    def __init__(self, n: int, terms: typing.Sequence[int], detail: str):
        self.n = n
        self.terms = tuple(terms)
        self.detail = detail


class InvalidQuotaSequenceError(DomainError):
    n: int
    quotas: typing.Sequence[int]
    detail: str

    @property
    def message(self) -> str:
        quotas = ",".join(str(k) for k in self.quotas)
        return f"({quotas}) is not an up-and-down quota sequence for n={self.n}: {self.detail}"

    def __init__(self, n: int, quotas: typing.Sequence[int], detail: str):
        self.n = n
        self.quotas = tuple(quotas)
        self.detail = detail


class InvalidProfileError(DomainError):
    detail: str

    @property
    def message(self) -> str:
        return f"invalid profile: {self.detail}"

    def __init__(self, detail: str):
        self.detail = detail


class NotDuallyMonotoneError(DomainError):
    k: int
    m: int

    @property
    def message(self) -> str:
        return f"grid function is not dually monotone (violated at ({self.k}, {self.m}))"

    def __init__(self, k: int, m: int):
        self.k = k
        self.m = m


class InvariantViolation(SCFGeometryException):
    """
    Raised when a fact that always holds for these rules turns out false at run time.
    This always indicates a bug; the command line front end exits with status 3.
    """

    detail: str

    @property
    def message(self) -> str:
        return f"internal invariant violated: {self.detail}"

    def __init__(self, detail: str):
        self.detail = detail


class ResourceLimitExceeded(SCFGeometryException):
    what: str
    requested: int
    limit: int

    @property
    def message(self) -> str:
        return f"{self.what}: {self.requested} exceeds the configured limit of {self.limit}"

    def __init__(self, what: str, requested: int, limit: int):
        self.what = what
        self.requested = requested
        self.limit = limit


class QuotaOutOfRangeError(DomainError):
    k: int
    n: int

    @property
    def message(self) -> str:
        return f"quota {self.k} lies outside [0, {self.n + 1}]"

    def __init__(self, k: int, n: int):
        self.k = k
        self.n = n


class InvalidSocietySizeError(DomainError):
    n: int

    @property
    def message(self) -> str:
        return f"society size must be nonnegative, got {self.n}"

    def __init__(self, n: int):
        self.n = n
