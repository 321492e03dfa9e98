"""
:py:mod:`scf_geometry.grid` holds the integer triangular grid ``G``, the two cones
``C_a`` and ``C_b``, comprehension of point sets by a cone, and dually monotone
grid functions.

A grid function is stored as a dense table whose cells follow the canonical
row-major order (``m`` ascending, then ``k`` ascending), so its text form is stable:

.. code-block:: python

   from scf_geometry.grid import Grid, GridFunction, is_dually_monotone

   f = GridFunction.from_cells(1, "aba")  # f(0,0)=a, f(1,0)=b, f(0,1)=a
   assert not is_dually_monotone(f)
"""

import enum
import itertools
import typing

from .exceptions import (
    InvalidGridFunctionError,
    InvalidSocietySizeError,
    PointOutsideGridError,
)


class Alternative(enum.Enum):
    A = "a"
    B = "b"

    @property
    def other(self) -> "Alternative":
        return Alternative.B if self is Alternative.A else Alternative.A

    def __str__(self) -> str:
        return self.value


class Cone(enum.Enum):
    """
    ``A`` is the cone of displacements ``(alpha, beta)`` with ``alpha >= 0`` and
    ``beta <= 0``; ``B`` is its opposite.
    """

    A = "a"
    B = "b"

    def contains(self, alpha: int, beta: int) -> bool:
        if self is Cone.A:
            return alpha >= 0 and beta <= 0
        else:
            return alpha <= 0 and beta >= 0


class GridPoint(typing.NamedTuple):
    k: int
    m: int

    def indifferent(self, n: int) -> int:
        return n - self.k - self.m


class Grid:
    """
    The triangular grid of tallies for a society of ``n`` voters.

    :param int n: the society size.
    """

    n: int

    @property
    def size(self) -> int:
        return (self.n + 1) * (self.n + 2) // 2

    def __contains__(self, pt: typing.Tuple[int, int]) -> bool:
        k, m = pt
        return k >= 0 and m >= 0 and k + m <= self.n

    def require(self, pt: typing.Tuple[int, int]) -> GridPoint:
        if pt not in self:
            raise PointOutsideGridError(pt[0], pt[1], self.n)
        return GridPoint(*pt)

    def index(self, pt: typing.Tuple[int, int]) -> int:
        k, m = self.require(pt)
        return m * (self.n + 1) - m * (m - 1) // 2 + k

    def __iter__(self) -> typing.Iterator[GridPoint]:
        return grid_points(self)

    def __len__(self) -> int:
        return self.size

    def __eq__(self, that: object) -> bool:
        return isinstance(that, Grid) and self.n == that.n

    def __hash__(self) -> int:
        return hash((Grid, self.n))

    def __repr__(self) -> str:
        return f"Grid({self.n})"

    def __init__(self, n: int):
        if n < 0:
            raise InvalidSocietySizeError(n)
        self.n = n


def grid_points(g: Grid) -> typing.Iterator[GridPoint]:
    for m in range(g.n + 1):
        for k in range(g.n - m + 1):
            yield GridPoint(k, m)


def grid_index(g: Grid, pt: typing.Tuple[int, int]) -> int:
    return g.index(pt)


class GridFunction:
    """
    A total map from the grid of size ``n`` to :py:class:`Alternative`.
    Instances are immutable and compare by table.

    :param int n: the society size.
    :param Iterable[Alternative] table: the values in canonical grid order.
    """

    grid: Grid
    _table: typing.Tuple[Alternative, ...]

    @property
    def n(self) -> int:
        return self.grid.n

    @property
    def table(self) -> typing.Tuple[Alternative, ...]:
        return self._table

    @property
    def cells(self) -> str:
        """
        The table as a string over ``"ab"`` in canonical order.
        """
        return "".join(alt.value for alt in self._table)

    def at(self, k: int, m: int) -> Alternative:
        return self._table[self.grid.index((k, m))]

    def __call__(self, pt: typing.Tuple[int, int]) -> Alternative:
        return self.at(pt[0], pt[1])

    def items(self) -> typing.Iterator[typing.Tuple[GridPoint, Alternative]]:
        return zip(grid_points(self.grid), self._table)

    def region(self, alt: Alternative) -> typing.FrozenSet[GridPoint]:
        """
        The inverse image ``{f = alt}``.
        """
        return frozenset(pt for pt, v in self.items() if v is alt)

    def __eq__(self, that: object) -> bool:
        return isinstance(that, GridFunction) and self.n == that.n and self._table == that._table

    def __hash__(self) -> int:
        return hash((self.n, self._table))

    def __repr__(self) -> str:
        return f"GridFunction({self.n}, {self.cells!r})"

    @classmethod
    def from_cells(cls, n: int, cells: str) -> "GridFunction":
        try:
            table = [Alternative(c) for c in cells]
        except ValueError:
            raise InvalidGridFunctionError(f'cells must be drawn from "ab", got {cells!r}')
        return cls(n, table)

    @classmethod
    def from_callable(
        cls, g: Grid, fn: typing.Callable[[GridPoint], Alternative]
    ) -> "GridFunction":
        return cls(g.n, (fn(pt) for pt in grid_points(g)))

    @classmethod
    def constant(cls, g: Grid, alt: Alternative) -> "GridFunction":
        return cls(g.n, itertools.repeat(alt, g.size))

    def __init__(self, n: int, table: typing.Iterable[Alternative]):
        self.grid = Grid(n)
        self._table = tuple(table)
        if len(self._table) != self.grid.size:
            raise InvalidGridFunctionError(
                f"a table for n={n} needs {self.grid.size} cells, got {len(self._table)}"
            )


def all_grid_functions(g: Grid) -> typing.Iterator[GridFunction]:
    """
    Yields all ``2**|G|`` grid functions; bit ``i`` of the running mask set
    means cell ``i`` takes ``b``.
    """
    size = g.size
    for mask in range(1 << size):
        yield GridFunction(
            g.n, (Alternative.B if mask >> i & 1 else Alternative.A for i in range(size))
        )


def cone_shift(
    h: typing.Iterable[typing.Tuple[int, int]], c: Cone, g: Grid
) -> typing.Set[GridPoint]:
    """
    Computes ``H + C`` intersected with ``G``.

    :param Iterable h: points of ``G``.
    :param Cone c: the cone to comprehend ``h`` with.
    :param Grid g: the grid.
    :return: the comprehension, a superset of ``h``.
    """
    anchors = [g.require(pt) for pt in h]
    result: typing.Set[GridPoint] = set()
    if not anchors:
        return result
    n = g.n
    if c is Cone.A:
        # row m' is covered from the least k among anchors with m >= m'
        least: typing.Optional[int] = None
        by_m = sorted(anchors, key=lambda pt: -pt.m)
        i = 0
        for m in range(n, -1, -1):
            while i < len(by_m) and by_m[i].m >= m:
                least = by_m[i].k if least is None else min(least, by_m[i].k)
                i += 1
            if least is not None:
                result.update(GridPoint(k, m) for k in range(least, n - m + 1))
    else:
        # row m' is covered up to the greatest k among anchors with m <= m'
        greatest: typing.Optional[int] = None
        by_m = sorted(anchors, key=lambda pt: pt.m)
        i = 0
        for m in range(n + 1):
            while i < len(by_m) and by_m[i].m <= m:
                greatest = by_m[i].k if greatest is None else max(greatest, by_m[i].k)
                i += 1
            if greatest is not None:
                result.update(GridPoint(k, m) for k in range(0, min(greatest, n - m) + 1))
    return result


def _implication_holds(
    f: GridFunction, alt: Alternative, steps: typing.Sequence[typing.Tuple[int, int]]
) -> bool:
    g = f.grid
    for (k, m), v in f.items():
        if v is not alt:
            continue
        for dk, dm in steps:
            nxt = (k + dk, m + dm)
            if nxt in g and f(nxt) is not alt:
                return False
    return True


def first_violation(f: GridFunction) -> typing.Optional[GridPoint]:
    """
    Returns a point ``(k, m)`` with ``f(k, m) = a`` while ``f(k+1, m)`` or
    ``f(k, m-1)`` is ``b``, or :py:const:`None` if ``f`` is dually monotone.
    """
    g = f.grid
    for pt, v in f.items():
        if v is not Alternative.A:
            continue
        k, m = pt
        for nxt in ((k + 1, m), (k, m - 1)):
            if nxt in g and f(nxt) is Alternative.B:
                return pt
    return None


def is_dually_monotone(f: GridFunction) -> bool:
    return first_violation(f) is None


def _is_comprehensive(f: GridFunction, alt: Alternative, c: Cone) -> bool:
    region = f.region(alt)
    return cone_shift(region, c, f.grid) <= region


def tfae_check(f: GridFunction) -> typing.Tuple[bool, bool, bool, bool]:
    """
    Evaluates the four equivalent characterizations of dual monotonicity
    independently:

    1. ``f(k,m)=a`` implies ``f(k+1,m)=f(k,m-1)=a``;
    2. ``f(k,m)=b`` implies ``f(k-1,m)=f(k,m+1)=b``;
    3. ``{f=a}`` is comprehensive with respect to ``C_a``;
    4. ``{f=b}`` is comprehensive with respect to ``C_b``.
    """
    return (
        _implication_holds(f, Alternative.A, ((1, 0), (0, -1))),
        _implication_holds(f, Alternative.B, ((-1, 0), (0, 1))),
        _is_comprehensive(f, Alternative.A, Cone.A),
        _is_comprehensive(f, Alternative.B, Cone.B),
    )


def mirror_function(f: GridFunction) -> GridFunction:
    """
    Reflects ``f`` across the diagonal ``k = m`` and swaps the alternatives.
    """
    return GridFunction.from_callable(f.grid, lambda pt: f.at(pt.m, pt.k).other)


class Segment(typing.NamedTuple):
    """
    A maximal monochrome run of grid points: horizontal (``k`` increasing from
    ``start``) for ``a``, vertical (``m`` increasing from ``start``) for ``b``.
    """

    alternative: Alternative
    start: GridPoint
    length: int

    @property
    def end(self) -> GridPoint:
        if self.alternative is Alternative.A:
            return GridPoint(self.start.k + self.length - 1, self.start.m)
        else:
            return GridPoint(self.start.k, self.start.m + self.length - 1)

    def points(self) -> typing.Iterator[GridPoint]:
        for i in range(self.length):
            if self.alternative is Alternative.A:
                yield GridPoint(self.start.k + i, self.start.m)
            else:
                yield GridPoint(self.start.k, self.start.m + i)
