"""
:py:mod:`scf_geometry.render` draws grid functions.

The text form has one line per row, top row ``m = n`` first, each row ``m`` holding
the ``n - m + 1`` glyphs ``a``/``b`` for ``k = 0..n - m``; lines carry no trailing
blanks and the text ends with a newline. :py:func:`parse_ascii` reads it back.

The SVG form draws ``a`` as horizontal and ``b`` as vertical segments, one
``<line>`` per maximal run, over the grid lines and the diagonal ``k + m = n``.
A dually monotone function is drawn term by term of its {a,b}-list, one
``<g id="q_i">`` per nonzero term; any other function as a single ``<g id="runs">``.
"""

import typing

from .ablist import decompose, segment_groups
from .config import DEFAULT_LIMITS, Limits
from .exceptions import InvalidGridFunctionError, ResourceLimitExceeded
from .grid import Alternative, Grid, GridFunction, GridPoint, Segment, is_dually_monotone


def render_ascii(f: GridFunction, limits: typing.Optional[Limits] = None) -> str:
    limits = DEFAULT_LIMITS if limits is None else limits
    if f.n > limits.ascii_width:
        raise ResourceLimitExceeded("ascii rendering width", f.n, limits.ascii_width)
    lines = []
    for m in range(f.n, -1, -1):
        lines.append("".join(f.at(k, m).value for k in range(f.n - m + 1)))
    return "\n".join(lines) + "\n"


def parse_ascii(text: str) -> GridFunction:
    rows = text.rstrip("\n").split("\n")
    n = len(rows) - 1
    by_m: typing.Dict[int, str] = {}
    for i, row in enumerate(rows):
        m = n - i
        row = row.rstrip()
        if len(row) != n - m + 1:
            raise InvalidGridFunctionError(
                f"row m={m} of a drawing for n={n} needs {n - m + 1} glyphs, got {len(row)}"
            )
        by_m[m] = row
    return GridFunction.from_cells(n, "".join(by_m[m] for m in range(n + 1)))


def runs(f: GridFunction) -> typing.List[Segment]:
    """
    Decomposes ``f`` into maximal horizontal runs of ``a`` (row by row, ``m``
    ascending) followed by maximal vertical runs of ``b`` (column by column, ``k``
    ascending). Every grid point lies on exactly one run.
    """
    n = f.n
    result: typing.List[Segment] = []
    for m in range(n + 1):
        start: typing.Optional[int] = None
        for k in range(n - m + 2):
            inside = k <= n - m and f.at(k, m) is Alternative.A
            if inside and start is None:
                start = k
            elif not inside and start is not None:
                result.append(Segment(Alternative.A, GridPoint(start, m), k - start))
                start = None
    for k in range(n + 1):
        start = None
        for m in range(n - k + 2):
            inside = m <= n - k and f.at(k, m) is Alternative.B
            if inside and start is None:
                start = m
            elif not inside and start is not None:
                result.append(Segment(Alternative.B, GridPoint(k, start), m - start))
                start = None
    return result


def _groups(f: GridFunction) -> typing.Iterator[typing.Tuple[str, typing.List[Segment]]]:
    if not is_dually_monotone(f):
        yield "runs", runs(f)
        return
    for i, group in enumerate(segment_groups(decompose(f)), 1):
        if group:
            yield f"q_{i}", group


_PREAMBLE = """\
<?xml version="1.0" standalone="no"?>
<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN"
"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">
<svg width="%(size)d" height="%(size)d" viewBox="0 0 %(size)d %(size)d" version="1.1" \
xmlns="http://www.w3.org/2000/svg">
"""

_POSTAMBLE = "</svg>\n"

_LINE = (
    '<line x1="%(x1)d" y1="%(y1)d" x2="%(x2)d" y2="%(y2)d" '
    'stroke="%(color)s" stroke-width="%(width)s"%(extra)s/>'
)


class SVGRenderer:
    """
    Renders a :py:class:`GridFunction` as an SVG 1.1 document with the origin at the
    bottom left.

    :param int cell: pixel pitch between neighbouring grid points.
    :param int margin: blank border around the grid.
    :param str a_color: stroke of the horizontal ``a`` runs.
    :param str b_color: stroke of the vertical ``b`` runs.
    :param str grid_color: stroke of the grid lines and the diagonal.
    :param float run_width: stroke width of the runs; grid lines use one pixel.
    """

    _cell: int = 20
    _margin: int = 20
    _a_color: str = "magenta"
    _b_color: str = "blue"
    _grid_color: str = "#cccccc"
    _run_width: float = 6

    def _xy(self, g: Grid, pt: typing.Tuple[int, int]) -> typing.Tuple[int, int]:
        k, m = pt
        return self._margin + k * self._cell, self._margin + (g.n - m) * self._cell

    def _line(
        self,
        g: Grid,
        start: typing.Tuple[int, int],
        end: typing.Tuple[int, int],
        color: str,
        width: typing.Union[int, float],
        extra: str = "",
    ) -> str:
        x1, y1 = self._xy(g, start)
        x2, y2 = self._xy(g, end)
        return _LINE % locals()

    def _gridlines(self, g: Grid) -> typing.Iterator[str]:
        n = g.n
        for i in range(n + 1):
            yield self._line(g, (0, i), (n - i, i), self._grid_color, 1)
            yield self._line(g, (i, 0), (i, n - i), self._grid_color, 1)
        yield self._line(g, (0, n), (n, 0), self._grid_color, 1)

    def render(self, f: GridFunction) -> str:
        g = f.grid
        size = 2 * self._margin + g.n * self._cell
        out = [_PREAMBLE % {"size": size}]
        out.extend(line + "\n" for line in self._gridlines(g))
        for name, group in _groups(f):
            out.append('<g id="%s">\n' % name)
            for run in group:
                color = self._a_color if run.alternative is Alternative.A else self._b_color
                out.append(
                    self._line(
                        g, run.start, run.end, color, self._run_width, ' stroke-linecap="round" '
                    )
                    + "\n"
                )
            out.append("</g>\n")
        out.append(_POSTAMBLE)
        return "".join(out)

    def __init__(
        self,
        cell: int = 20,
        margin: int = 20,
        a_color: str = "magenta",
        b_color: str = "blue",
        grid_color: str = "#cccccc",
        run_width: float = 6,
    ):
        if cell < 1 or margin < 0:
            raise ValueError("cell pitch must be positive and margin nonnegative")
        self._cell = cell
        self._margin = margin
        self._a_color = a_color
        self._b_color = b_color
        self._grid_color = grid_color
        self._run_width = run_width


def render_svg(f: GridFunction, renderer: typing.Optional[SVGRenderer] = None) -> str:
    return (SVGRenderer() if renderer is None else renderer).render(f)
