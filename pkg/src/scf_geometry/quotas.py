"""
:py:mod:`scf_geometry.quotas` relates {a,b}-lists to up-and-down sequences of
majority quotas ``k = (k_0, ..., k_r)`` describing the same rule.

The terminal quota ``k_r`` is ``0`` when the rule selects ``a`` for a unanimously
indifferent society and ``n + 1`` when it selects ``b``. Interior quotas fan out
around ``k_0``: each one lies beyond all previous ones, alternately above and below.

Conversion in both directions is available as explicit difference / partial-sum
formulas and as products with the lower-triangular matrix ``T`` or its inverse.

.. code-block:: python

   from scf_geometry.quotas import QuotaSequence, q_from_quotas

   ks = QuotaSequence.parse("8,14,7,19,3,21", n=20)
   assert str(q_from_quotas(ks)) == "0,3,2,4,5,1,6"
"""

import dataclasses
import typing

import numpy

from .ablist import ABList, enumerate_ablists
from .exceptions import InvalidQuotaSequenceError, InvariantViolation, QuotaOutOfRangeError
from .grid import Alternative, Grid, GridFunction


@dataclasses.dataclass(frozen=True)
class QuotaSequence:
    """
    :param int n: the society size.
    :param Sequence[int] quotas: ``(k_0, ..., k_r)``; use :py:func:`validate_quota_sequence`
        to check the up-and-down conditions.
    """

    n: int
    quotas: typing.Tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.quotas) - 1

    @property
    def terminal(self) -> int:
        return self.quotas[-1]

    @property
    def grid(self) -> Grid:
        return Grid(self.n)

    @property
    def selects_a_on_indifference(self) -> bool:
        return self.terminal == 0

    def __str__(self) -> str:
        return ",".join(str(k) for k in self.quotas)

    def __getitem__(self, i: int) -> int:
        return self.quotas[i]

    def __len__(self) -> int:
        return len(self.quotas)

    @classmethod
    def parse(cls, text: str, n: int) -> "QuotaSequence":
        try:
            quotas = tuple(int(k) for k in text.split(","))
        except ValueError:
            raise InvalidQuotaSequenceError(
                n, (), f"cannot parse {text!r} as comma-separated integers"
            )
        return cls(n, quotas)

    def __post_init__(self) -> None:
        object.__setattr__(self, "quotas", tuple(self.quotas))
        if self.n < 0:
            raise InvalidQuotaSequenceError(self.n, self.quotas, "society size must be nonnegative")
        if not self.quotas:
            raise InvalidQuotaSequenceError(self.n, self.quotas, "the sequence is empty")


def dual_quota(k: int, g: Grid) -> int:
    """
    ``k° = n + 1 - k``; an order-reversing involution of ``[0, n + 1]``.
    """
    if not 0 <= k <= g.n + 1:
        raise QuotaOutOfRangeError(k, g.n)
    return g.n + 1 - k


def dualize(ks: QuotaSequence) -> QuotaSequence:
    return QuotaSequence(ks.n, tuple(dual_quota(k, ks.grid) for k in ks.quotas))


def quota_sequence_problem(ks: QuotaSequence) -> typing.Optional[str]:
    """
    Describes why ``ks`` is not an up-and-down sequence, or returns :py:const:`None`.
    """
    top = ks.n + 1
    k = ks.quotas
    for i, v in enumerate(k):
        if not 0 <= v <= top:
            return f"k_{i}={v} lies outside [0, {top}]"
    if ks.terminal not in (0, top):
        return f"the terminal quota k_{ks.r}={ks.terminal} must be 0 or {top}"
    for i, v in enumerate(k[:-1]):
        if not 0 < v < top:
            return f"the interior quota k_{i}={v} must lie strictly between 0 and {top}"
    lo = hi = k[0]
    previous: typing.Optional[bool] = None
    for i in range(1, len(k)):
        if k[i] > hi:
            upward = True
            hi = k[i]
        elif k[i] < lo:
            upward = False
            lo = k[i]
        else:
            return f"k_{i}={k[i]} does not lie beyond k_0..k_{i - 1}"
        if previous is upward:
            return f"k_{i - 1} and k_{i} lie on the same side of k_0"
        previous = upward
    return None


def validate_quota_sequence(ks: QuotaSequence) -> bool:
    return quota_sequence_problem(ks) is None


def _require_valid(ks: QuotaSequence) -> None:
    problem = quota_sequence_problem(ks)
    if problem is not None:
        raise InvalidQuotaSequenceError(ks.n, ks.quotas, problem)


@dataclasses.dataclass(frozen=True)
class ConversionMatrix:
    """
    ``forward`` is ``T``: unit diagonal and ``-1`` two places below it.
    ``inverse`` is ``T^-1``: ones at every second place from the diagonal downward.
    """

    order: int
    forward: numpy.ndarray
    inverse: numpy.ndarray


def build_T(r: int) -> ConversionMatrix:
    if r < 1:
        raise ValueError(f"the conversion matrix needs order >= 1, got {r}")
    forward = numpy.eye(r, dtype=numpy.int64)
    inverse = numpy.zeros((r, r), dtype=numpy.int64)
    for i in range(r):
        if i >= 2:
            forward[i, i - 2] = -1
        inverse[i, i % 2 : i + 1 : 2] = 1
    forward.setflags(write=False)
    inverse.setflags(write=False)
    return ConversionMatrix(r, forward, inverse)


def _plain_on_odd(ks: QuotaSequence) -> bool:
    # in the n+1-terminal case y = (k_{r-1}, k°_{r-2}, k_{r-3}, ...), otherwise the duals lead
    return ks.terminal != 0


def _y_vector(ks: QuotaSequence) -> typing.List[int]:
    """
    ``y_i`` for ``i = 1..r``: ``k_{r-i}`` or its dual, alternating.
    """
    g = ks.grid
    plain_on_odd = _plain_on_odd(ks)
    y = []
    for i in range(1, ks.r + 1):
        v = ks[ks.r - i]
        plain = plain_on_odd if i % 2 == 1 else not plain_on_odd
        y.append(v if plain else dual_quota(v, g))
    return y


def _complete(ks: QuotaSequence, x: typing.Sequence[int]) -> ABList:
    head = [] if ks.selects_a_on_indifference else [0]
    terms = head + list(x)
    terms.append(ks.n + 1 - sum(terms))
    return ABList(ks.n, tuple(terms))


def q_from_quotas(ks: QuotaSequence) -> ABList:
    """
    Converts an up-and-down sequence to the {a,b}-list of the same rule.

    With ``k_r = 0`` the list is ``(q_1, ..., q_{r+1})`` with ``q_1 = k°_{r-1}``,
    ``q_2 = k_{r-2}``, ``q_i = k°_{r-i} - k°_{r-i+2}`` for odd ``i >= 3`` and
    ``q_i = k_{r-i} - k_{r-i+2}`` for even ``i >= 4``. With ``k_r = n + 1`` it is
    ``(0, q_2, ..., q_{r+2})`` with the roles of plain and dual quotas exchanged.
    The last term completes the sum to ``n + 1``.

    :raises InvalidQuotaSequenceError: if ``ks`` is not up and down.
    """
    _require_valid(ks)
    y = _y_vector(ks)
    x = [y[i] - y[i - 2] if i >= 2 else y[i] for i in range(len(y))]
    return _complete(ks, x)


def q_from_quotas_via_matrix(ks: QuotaSequence) -> ABList:
    _require_valid(ks)
    if ks.r == 0:
        return _complete(ks, ())
    x = build_T(ks.r).forward @ numpy.array(_y_vector(ks), dtype=numpy.int64)
    return _complete(ks, [int(v) for v in x])


def _split(q: ABList) -> typing.Tuple[int, typing.Sequence[int], bool]:
    """
    Returns ``(r, x, plain_on_odd)`` for the reverse conversion.
    """
    if q.selects_a_on_indifference:
        r = q.s - 1
        return r, q.terms[:r], False
    else:
        r = q.s - 2
        return r, q.terms[1 : 1 + r], True


def _assemble(q: ABList, r: int, y: typing.Sequence[int], plain_on_odd: bool) -> QuotaSequence:
    g = q.grid
    k = [0] * (r + 1)
    k[r] = g.n + 1 if plain_on_odd else 0
    for i in range(1, r + 1):
        plain = plain_on_odd if i % 2 == 1 else not plain_on_odd
        k[r - i] = y[i - 1] if plain else dual_quota(y[i - 1], g)
    ks = QuotaSequence(q.n, tuple(k))
    problem = quota_sequence_problem(ks)
    if problem is not None:
        raise InvariantViolation(
            f"quotas ({ks}) derived from q=({q}) are not up and down: {problem}"
        )
    return ks


def quotas_from_q(q: ABList) -> QuotaSequence:
    """
    Converts an {a,b}-list to the up-and-down sequence of the same rule, through the
    alternating partial sums ``q_1``, ``q_2``, ``q_1 + q_3``, ``q_2 + q_4``, ...
    """
    r, x, plain_on_odd = _split(q)
    y = list(x)
    for i in range(2, r):
        y[i] += y[i - 2]
    return _assemble(q, r, y, plain_on_odd)


def quotas_from_q_via_matrix(q: ABList) -> QuotaSequence:
    r, x, plain_on_odd = _split(q)
    if r == 0:
        return _assemble(q, 0, (), plain_on_odd)
    y = build_T(r).inverse @ numpy.array(x, dtype=numpy.int64)
    return _assemble(q, r, [int(v) for v in y], plain_on_odd)


def _high_parity(ks: QuotaSequence) -> int:
    if ks.r == 0:
        return 1 if ks[0] == 0 else 0
    return 1 if ks[1] > ks[0] else 0


def eval_quota_regions(ks: QuotaSequence, pt: typing.Tuple[int, int]) -> Alternative:
    """
    Evaluates the quota rule at a tally directly from its box decomposition.

    Let ``p`` be the parity of the indices whose quotas lie above ``k_0``. Then ``a``
    is chosen at ``(k, m)`` iff ``k >= k_{u+1}`` and ``m < k°_u`` for some ``u``
    of parity ``p`` (``u = -1`` meaning the half-plane ``k >= k_0``), and ``b`` iff
    ``k < k_{v-1}`` and ``m >= k°_v`` for some ``v >= 0`` of parity ``p`` (``v = 0``
    meaning the half-plane ``m >= k°_0``).
    """
    _require_valid(ks)
    g = ks.grid
    k, m = g.require(pt)
    p = _high_parity(ks)
    a_hit = any(
        k >= ks[u + 1] and (u == -1 or m < dual_quota(ks[u], g))
        for u in range(-1, ks.r)
        if (u - p) % 2 == 0
    )
    b_hit = any(
        (v == 0 or k < ks[v - 1]) and m >= dual_quota(ks[v], g)
        for v in range(0, ks.r + 1)
        if (v - p) % 2 == 0
    )
    if a_hit == b_hit:
        raise InvariantViolation(
            f"quota boxes of ({ks}) {'overlap' if a_hit else 'leave a gap'} at ({k}, {m})"
        )
    return Alternative.A if a_hit else Alternative.B


def quota_rule_function(ks: QuotaSequence) -> GridFunction:
    _require_valid(ks)
    return GridFunction.from_callable(ks.grid, lambda pt: eval_quota_regions(ks, pt))


def enumerate_quota_sequences(g: Grid) -> typing.Iterator[QuotaSequence]:
    for q in enumerate_ablists(g):
        yield quotas_from_q(q)


__all__ = [
    "ConversionMatrix",
    "QuotaSequence",
    "build_T",
    "dual_quota",
    "dualize",
    "enumerate_quota_sequences",
    "eval_quota_regions",
    "q_from_quotas",
    "q_from_quotas_via_matrix",
    "quota_rule_function",
    "quota_sequence_problem",
    "quotas_from_q",
    "quotas_from_q_via_matrix",
    "validate_quota_sequence",
]
