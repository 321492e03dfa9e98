"""
:py:mod:`scf_geometry.ablist` names every dually monotone grid function by its
{a,b}-list ``q = (q_1, ..., q_s)``: ``q_1`` horizontal rows of ``a`` of maximum
length, then ``q_2`` vertical columns of ``b``, then ``q_3`` rows of ``a`` and so on
until the grid is filled.

Synopsis
--------

.. code-block:: python

   from scf_geometry.ablist import ABList, build_f_from_q, decompose

   q = ABList.parse("5,3,2,6,1,4", n=20)
   f = build_f_from_q(q)
   assert decompose(f) == q
"""

import dataclasses
import typing

from .exceptions import InvalidABListError, InvariantViolation, NotDuallyMonotoneError
from .grid import (
    Alternative,
    Cone,
    Grid,
    GridFunction,
    GridPoint,
    Segment,
    cone_shift,
    first_violation,
    grid_points,
)


@dataclasses.dataclass(frozen=True)
class ABList:
    """
    :param int n: the society size.
    :param Sequence[int] terms: ``q_1 >= 0``, every further term ``>= 1``, summing to ``n + 1``.
    """

    n: int
    terms: typing.Tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.terms)

    @property
    def grid(self) -> Grid:
        return Grid(self.n)

    @property
    def selects_a_on_indifference(self) -> bool:
        return self.terms[0] > 0

    def __str__(self) -> str:
        return ",".join(str(t) for t in self.terms)

    def __iter__(self) -> typing.Iterator[int]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, i: int) -> int:
        return self.terms[i]

    @classmethod
    def parse(cls, text: str, n: int) -> "ABList":
        try:
            terms = [int(t) for t in text.split(",")]
        except ValueError:
            raise InvalidABListError(n, (), f"cannot parse {text!r} as comma-separated integers")
        return cls(n, tuple(terms))

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(self.terms))
        if self.n < 0:
            raise InvalidABListError(self.n, self.terms, "society size must be nonnegative")
        if not self.terms:
            raise InvalidABListError(self.n, self.terms, "the list is empty")
        if self.terms[0] < 0:
            raise InvalidABListError(self.n, self.terms, "q_1 must be nonnegative")
        for i, t in enumerate(self.terms[1:], 2):
            if t < 1:
                raise InvalidABListError(self.n, self.terms, f"q_{i} must be positive")
        if sum(self.terms) != self.n + 1:
            raise InvalidABListError(
                self.n, self.terms, f"terms sum to {sum(self.terms)}, not {self.n + 1}"
            )


@dataclasses.dataclass(frozen=True)
class AnchorSets:
    """
    ``qa + C_a`` is the ``a``-region and ``qb + C_b`` the ``b``-region of ``f_q``.
    """

    qa: typing.FrozenSet[GridPoint]
    qb: typing.FrozenSet[GridPoint]


def _groups(q: ABList) -> typing.Iterator[typing.Tuple[Alternative, int, int, int]]:
    """
    Yields ``(alternative, term, E, O)`` per term, where ``E`` and ``O`` are the
    sums of the even- and odd-indexed terms before it.
    """
    evens = odds = 0
    for i, t in enumerate(q.terms):
        if i % 2 == 0:
            yield Alternative.A, t, evens, odds
            odds += t
        else:
            yield Alternative.B, t, evens, odds
            evens += t


def anchors(q: ABList) -> AnchorSets:
    qa: typing.Set[GridPoint] = set()
    qb: typing.Set[GridPoint] = set()
    for alt, t, evens, odds in _groups(q):
        if alt is Alternative.A:
            # an empty first group has no vertex inside G
            if odds + t >= 1:
                qa.add(GridPoint(evens, odds + t - 1))
        else:
            qb.add(GridPoint(evens + t - 1, odds))
    return AnchorSets(frozenset(qa), frozenset(qb))


def build_f_from_q(q: ABList) -> GridFunction:
    g = q.grid
    anchor_sets = anchors(q)
    a_region = cone_shift(anchor_sets.qa, Cone.A, g)
    b_region = cone_shift(anchor_sets.qb, Cone.B, g)
    overlap = a_region & b_region
    if overlap:
        raise InvariantViolation(f"a- and b-regions of f_q for q=({q}) meet at {min(overlap)}")
    if len(a_region) + len(b_region) != g.size:
        raise InvariantViolation(f"a- and b-regions of f_q for q=({q}) do not cover G")
    return GridFunction(
        g.n, (Alternative.A if pt in a_region else Alternative.B for pt in grid_points(g))
    )


def decompose(f: GridFunction) -> ABList:
    """
    Reads the {a,b}-list off a dually monotone function by alternately measuring
    the maximal run of ``a`` up the current column and of ``b`` along the current
    row, starting at the origin.

    :raises NotDuallyMonotoneError: if ``f`` is not dually monotone.
    """
    violation = first_violation(f)
    if violation is not None:
        raise NotDuallyMonotoneError(violation.k, violation.m)

    n = f.n
    k = m = 0
    terms: typing.List[int] = []
    while k + m < n + 1:
        count = 0
        if len(terms) % 2 == 0:
            while m + count <= n - k and f.at(k, m + count) is Alternative.A:
                count += 1
            m += count
        else:
            while k + count <= n - m and f.at(k + count, m) is Alternative.B:
                count += 1
            k += count
        if count == 0 and terms:
            raise InvariantViolation(f"greedy scan stalled at ({k}, {m}) after ({terms})")
        terms.append(count)

    q = ABList(n, tuple(terms))
    if build_f_from_q(q) != f:
        raise InvariantViolation(f"q=({q}) read off the table does not rebuild it")
    return q


def count_ablists(g: Grid) -> int:
    return 1 << (g.n + 1)


def _compositions_count(total: int) -> int:
    return 1 if total == 0 else 1 << (total - 1)


def _compositions(total: int) -> typing.Iterator[typing.Tuple[int, ...]]:
    for first in range(1, total + 1):
        if first == total:
            yield (first,)
        else:
            for rest in _compositions(total - first):
                yield (first,) + rest


def enumerate_ablists(g: Grid) -> typing.Iterator[ABList]:
    """
    Yields all ``2**(n+1)`` {a,b}-lists of the grid in lexicographic order.
    """
    total = g.n + 1
    for q1 in range(total + 1):
        if q1 == total:
            yield ABList(g.n, (q1,))
        else:
            for rest in _compositions(total - q1):
                yield ABList(g.n, (q1,) + rest)


def rank_ablist(q: ABList) -> int:
    """
    The position of ``q`` in :py:func:`enumerate_ablists` order.
    """
    rank = 0
    remaining = q.n + 1
    for i, t in enumerate(q.terms):
        for smaller in range(0 if i == 0 else 1, t):
            rank += _compositions_count(remaining - smaller)
        remaining -= t
    return rank


def unrank_ablist(g: Grid, rank: int) -> ABList:
    if not 0 <= rank < count_ablists(g):
        raise IndexError(f"rank {rank} out of range for n={g.n}")
    terms: typing.List[int] = []
    remaining = g.n + 1
    while remaining > 0:
        t = 0 if not terms else 1
        while True:
            block = _compositions_count(remaining - t)
            if rank < block:
                break
            rank -= block
            t += 1
        terms.append(t)
        remaining -= t
    return ABList(g.n, tuple(terms))


def mirror_ablist(q: ABList) -> ABList:
    """
    The list of the rule obtained by reflecting ``f_q`` across ``k = m`` and swapping
    the alternatives: rows of ``a`` become columns of ``b`` and vice versa.
    """
    if q.terms[0] > 0:
        return ABList(q.n, (0,) + q.terms)
    else:
        return ABList(q.n, q.terms[1:])


def segment_groups(q: ABList) -> typing.List[typing.List[Segment]]:
    """
    The reading of ``f_q`` as groups of maximal segments, one group per term:
    ``q_i`` horizontal ``a``-segments for odd ``i``, ``q_i`` vertical ``b``-segments
    for even ``i``.
    """
    n = q.n
    groups: typing.List[typing.List[Segment]] = []
    for alt, t, evens, odds in _groups(q):
        if alt is Alternative.A:
            groups.append(
                [
                    Segment(alt, GridPoint(evens, m), n - m - evens + 1)
                    for m in range(odds, odds + t)
                ]
            )
        else:
            groups.append(
                [
                    Segment(alt, GridPoint(k, odds), n - k - odds + 1)
                    for k in range(evens, evens + t)
                ]
            )
    return groups
