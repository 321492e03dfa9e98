"""
:py:mod:`scf_geometry.profiles` deals with concrete ballot profiles: the anonymity
quotient onto the grid, evaluation of a grid function as a social choice function,
and brute-force oracles for anonymity and strategy-proofness.

The oracles sweep all ``3**n`` profiles when ``n`` is within
:py:attr:`scf_geometry.config.Limits.exhaustive_profile_n` and otherwise draw a
seeded sample of profiles.
"""

import dataclasses
import enum
import itertools
import logging
import typing

import numpy

from .config import DEFAULT_LIMITS, Limits
from .exceptions import InvalidProfileError, ResourceLimitExceeded
from .grid import Alternative, Grid, GridFunction, GridPoint

logger = logging.getLogger(__name__)


class Ballot(enum.Enum):
    A = "a"
    B = "b"
    AB = "-"

    def prefers(self, alt: Alternative) -> bool:
        return self.value == alt.value

    def __str__(self) -> str:
        return self.value


BALLOTS: typing.Tuple[Ballot, ...] = (Ballot.AB, Ballot.A, Ballot.B)


class Profile(typing.Tuple[Ballot, ...]):
    """
    One ballot per voter, voter ``0`` first. The text form uses one character per
    voter: ``a``, ``b`` or ``-`` for indifference.
    """

    @property
    def n(self) -> int:
        return len(self)

    def swap(self, i: int, j: int) -> "Profile":
        ballots = list(self)
        ballots[i], ballots[j] = ballots[j], ballots[i]
        return Profile(ballots)

    def __str__(self) -> str:
        return "".join(b.value for b in self)

    def __repr__(self) -> str:
        return f"Profile({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Profile":
        try:
            return cls(Ballot(c) for c in text)
        except ValueError:
            raise InvalidProfileError(f'ballots must be drawn from "ab-", got {text!r}')


@dataclasses.dataclass(frozen=True)
class ScfOracle:
    """
    An opaque social choice function under test, total on profiles of length ``n``.
    """

    n: int
    choose: typing.Callable[[Profile], Alternative]

    def __call__(self, p: Profile) -> Alternative:
        return self.choose(p)


@dataclasses.dataclass(frozen=True)
class Manipulation:
    """
    A profitable unilateral deviation: at ``profile`` the ``voter`` obtains an
    alternative sincerely preferred to ``truthful_outcome`` by declaring ``declared``.
    """

    profile: Profile
    voter: int
    declared: Ballot
    truthful_outcome: Alternative
    manipulated_outcome: Alternative


@dataclasses.dataclass(frozen=True)
class GridManipulation:
    point: GridPoint
    sincere: Ballot
    declared: Ballot
    destination: GridPoint


def tally(p: Profile) -> GridPoint:
    return GridPoint(
        sum(1 for b in p if b is Ballot.A),
        sum(1 for b in p if b is Ballot.B),
    )


def canonical_profile(pt: typing.Tuple[int, int], g: Grid) -> Profile:
    """
    Returns ``P(k, m)``: the first ``n-k-m`` voters indifferent, the next ``k``
    preferring ``a`` and the last ``m`` preferring ``b``.
    """
    k, m = g.require(pt)
    return Profile(
        itertools.chain(
            itertools.repeat(Ballot.AB, g.n - k - m),
            itertools.repeat(Ballot.A, k),
            itertools.repeat(Ballot.B, m),
        )
    )


def eval_scf(f: GridFunction, p: Profile) -> Alternative:
    if len(p) != f.n:
        raise InvalidProfileError(f"profile has {len(p)} ballots where {f.n} are expected")
    return f(tally(p))


def oracle_from_function(f: GridFunction) -> ScfOracle:
    return ScfOracle(f.n, lambda p: eval_scf(f, p))


def function_from_oracle(o: ScfOracle) -> GridFunction:
    g = Grid(o.n)
    return GridFunction.from_callable(g, lambda pt: o(canonical_profile(pt, g)))


Mode = typing.Literal["auto", "exhaustive", "sampled"]


def _profile_codes(n: int, mode: Mode, limits: Limits, what: str) -> typing.Sequence[int]:
    total = 3 ** n
    if mode not in ("auto", "exhaustive", "sampled"):
        raise ValueError(f"unknown sweep mode: {mode}")
    exhaustive = mode == "exhaustive" or (mode == "auto" and n <= limits.exhaustive_profile_n)
    if exhaustive:
        if n > limits.exhaustive_profile_n:
            raise ResourceLimitExceeded(
                f"{what} over all profiles", n, limits.exhaustive_profile_n
            )
        logger.debug("%s: exhaustive sweep over %d profiles", what, total)
        return range(total)
    rng = numpy.random.default_rng(limits.seed)
    size = min(limits.sample_size, total)
    logger.debug("%s: sampling %d of %d profiles (seed=%d)", what, size, total, limits.seed)
    return [int(c) for c in rng.integers(0, total, size=size)]


def _decode(code: int, n: int) -> Profile:
    ballots = []
    for _ in range(n):
        code, digit = divmod(code, 3)
        ballots.append(BALLOTS[digit])
    return Profile(ballots)


def is_anonymous(
    o: ScfOracle, mode: Mode = "auto", limits: typing.Optional[Limits] = None
) -> bool:
    """
    Checks ``choose(p) == choose(p o sigma)`` for every adjacent transposition
    ``sigma``; adjacent transpositions generate all permutations of the voters.
    """
    limits = DEFAULT_LIMITS if limits is None else limits
    for code in _profile_codes(o.n, mode, limits, "anonymity"):
        p = _decode(code, o.n)
        outcome = o(p)
        for i in range(o.n - 1):
            if p[i] is p[i + 1]:
                continue
            if o(p.swap(i, i + 1)) is not outcome:
                logger.debug("not anonymous: %s vs. swap(%d, %d)", p, i, i + 1)
                return False
    return True


def find_manipulation(
    o: ScfOracle, mode: Mode = "auto", limits: typing.Optional[Limits] = None
) -> typing.Optional[Manipulation]:
    """
    Searches for a voter who gains by a unilateral misreport.

    A deviation is profitable only when the voter sincerely prefers an alternative,
    the truthful outcome is the other one, and the deviation yields the preferred one;
    an indifferent voter never gains.

    :return: a witness, or :py:const:`None` if no profitable deviation exists among
        the profiles visited.
    """
    limits = DEFAULT_LIMITS if limits is None else limits
    n = o.n
    codes = _profile_codes(n, mode, limits, "manipulation search")
    outcomes: typing.Dict[int, Alternative] = {}

    def outcome(code: int) -> Alternative:
        try:
            return outcomes[code]
        except KeyError:
            v = outcomes[code] = o(_decode(code, n))
            return v

    powers = [3 ** v for v in range(n)]
    for code in codes:
        truthful = outcome(code)
        for v in range(n):
            digit = code // powers[v] % 3
            sincere = BALLOTS[digit]
            if sincere is Ballot.AB or sincere.prefers(truthful):
                continue
            for declared_digit in range(3):
                if declared_digit == digit:
                    continue
                deviated = outcome(code + (declared_digit - digit) * powers[v])
                if sincere.prefers(deviated):
                    witness = Manipulation(
                        profile=_decode(code, n),
                        voter=v,
                        declared=BALLOTS[declared_digit],
                        truthful_outcome=truthful,
                        manipulated_outcome=deviated,
                    )
                    logger.debug("manipulation found: %s", witness)
                    return witness
    return None


# (sincere ballot, declared ballot, displacement of the tally)
_GRID_MOVES: typing.Sequence[typing.Tuple[Ballot, Ballot, int, int]] = (
    (Ballot.A, Ballot.AB, -1, 0),
    (Ballot.A, Ballot.B, -1, 1),
    (Ballot.B, Ballot.AB, 0, -1),
    (Ballot.B, Ballot.A, 1, -1),
    (Ballot.AB, Ballot.A, 1, 0),
    (Ballot.AB, Ballot.B, 0, 1),
)


def find_grid_manipulation(f: GridFunction) -> typing.Optional[GridManipulation]:
    """
    Looks for a profitable unilateral move directly on the grid: at ``(k, m)``
    a voter with the given sincere ballot exists when the corresponding count is
    positive, and moving changes the tally by one of six displacements.
    """
    g = f.grid
    for pt, truthful in f.items():
        counts = {Ballot.A: pt.k, Ballot.B: pt.m, Ballot.AB: pt.indifferent(g.n)}
        for sincere, declared, dk, dm in _GRID_MOVES:
            if counts[sincere] == 0 or sincere.prefers(truthful):
                continue
            destination = GridPoint(pt.k + dk, pt.m + dm)
            if sincere.prefers(f(destination)):
                return GridManipulation(pt, sincere, declared, destination)
    return None


def grid_manipulation_check(f: GridFunction) -> bool:
    """
    Returns :py:const:`True` iff no voter can profitably deviate at the grid level.
    """
    return find_grid_manipulation(f) is None
