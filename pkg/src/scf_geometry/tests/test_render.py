import pathlib

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

DATA = pathlib.Path(__file__).parent / "data"


@pytest.mark.parametrize(
    ("q", "golden"),
    [
        ("5,3,2,6,1,4", "a_first_n20.txt"),
        ("0,3,2,4,5,1,6", "b_first_n20.txt"),
    ],
)
def test_render_ascii_golden(q, golden):
    from ..ablist import ABList, build_f_from_q
    from ..render import parse_ascii, render_ascii

    f = build_f_from_q(ABList.parse(q, 20))
    expected = (DATA / golden).read_text()
    assert render_ascii(f) == expected
    assert parse_ascii(expected) == f


def test_render_ascii_small():
    from ..grid import Alternative, Grid, GridFunction
    from ..render import render_ascii

    assert render_ascii(GridFunction.constant(Grid(1), Alternative.A)) == "a\naa\n"
    assert render_ascii(GridFunction.from_cells(2, "aaabab")) == "b\nba\naaa\n"


def test_render_ascii_width_cap():
    from ..config import Limits
    from ..exceptions import ResourceLimitExceeded
    from ..grid import Alternative, Grid, GridFunction
    from ..render import render_ascii

    f = GridFunction.constant(Grid(4), Alternative.B)
    with pytest.raises(ResourceLimitExceeded):
        render_ascii(f, Limits(ascii_width=3))
    assert render_ascii(f, Limits(ascii_width=4)).count("\n") == 5


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_parse_ascii_round_trip(data):
    from ..grid import GridFunction
    from ..render import parse_ascii, render_ascii

    n = data.draw(st.integers(min_value=0, max_value=15))
    size = (n + 1) * (n + 2) // 2
    f = GridFunction.from_cells(n, data.draw(st.text(alphabet="ab", min_size=size, max_size=size)))
    assert parse_ascii(render_ascii(f)) == f


@pytest.mark.parametrize("text", ["", "a\na\n", "b\nbbb\n", "c\naa\n"])
def test_parse_ascii_invalid(text):
    from ..exceptions import InvalidGridFunctionError
    from ..render import parse_ascii

    with pytest.raises(InvalidGridFunctionError):
        parse_ascii(text)


class TestRuns:
    def test_constant_b(self):
        from ..grid import Alternative, Grid, GridFunction
        from ..render import runs

        rs = runs(GridFunction.constant(Grid(2), Alternative.B))
        assert [(r.alternative, r.start, r.length) for r in rs] == [
            (Alternative.B, (0, 0), 3),
            (Alternative.B, (1, 0), 2),
            (Alternative.B, (2, 0), 1),
        ]

    def test_a_first_n20(self):
        from ..ablist import ABList, build_f_from_q
        from ..grid import Alternative
        from ..render import runs

        rs = runs(build_f_from_q(ABList.parse("5,3,2,6,1,4", 20)))
        a_runs = [r for r in rs if r.alternative is Alternative.A]
        assert [r.length for r in a_runs[:5]] == [21, 20, 19, 18, 17]
        assert len(a_runs) == 5 + 2 + 1
        assert len(rs) - len(a_runs) == 3 + 6 + 4

    @pytest.mark.parametrize("n", range(6))
    def test_partition(self, n):
        from ..ablist import build_f_from_q, enumerate_ablists
        from ..grid import Alternative, Grid
        from ..render import runs

        for q in enumerate_ablists(Grid(n)):
            f = build_f_from_q(q)
            rs = runs(f)
            points = [pt for r in rs for pt in r.points()]
            assert sorted(points) == sorted(f.grid)
            assert all(f(pt) is r.alternative for r in rs for pt in r.points())
            assert sum(1 for r in rs if r.alternative is Alternative.A) == sum(q.terms[0::2])
            assert sum(1 for r in rs if r.alternative is Alternative.B) == sum(q.terms[1::2])

    def test_non_monotone_rows(self):
        from ..grid import GridFunction
        from ..render import runs

        # row 0 reads "aba"
        rs = runs(GridFunction.from_cells(2, "abaaab"))
        assert [(r.alternative.value, r.start, r.length) for r in rs] == [
            ("a", (0, 0), 1),
            ("a", (2, 0), 1),
            ("a", (0, 1), 2),
            ("b", (0, 2), 1),
            ("b", (1, 0), 1),
        ]


class TestSVG:
    def test_constant_b(self):
        from ..grid import Alternative, Grid, GridFunction
        from ..render import render_svg

        svg = render_svg(GridFunction.constant(Grid(2), Alternative.B))
        assert svg.startswith("<?xml")
        assert svg.endswith("</svg>\n")
        assert svg.count('stroke="blue"') == 3
        assert svg.count('stroke="magenta"') == 0
        assert svg.count("<line ") == 3 + 2 * 3 + 1

    def test_a_first_n20(self):
        from ..ablist import ABList, build_f_from_q
        from ..render import SVGRenderer, render_svg

        f = build_f_from_q(ABList.parse("5,3,2,6,1,4", 20))
        svg = render_svg(f)
        assert svg == render_svg(f)
        assert svg.count('stroke="magenta"') == 8
        assert svg.count('stroke="blue"') == 13
        assert 'width="440" height="440"' in svg
        # the longest a-run lies on the bottom row
        assert '<line x1="20" y1="420" x2="420" y2="420" stroke="magenta"' in svg

        svg = SVGRenderer(cell=10, margin=5, a_color="red").render(f)
        assert 'width="210"' in svg
        assert svg.count('stroke="red"') == 8

    def test_groups_follow_list_terms(self):
        from ..ablist import ABList, build_f_from_q
        from ..grid import GridFunction
        from ..render import render_svg

        svg = render_svg(build_f_from_q(ABList.parse("0,3,2,4,5,1,6", 20)))
        ids = [line.split('"')[1] for line in svg.splitlines() if line.startswith("<g ")]
        assert ids == ["q_2", "q_3", "q_4", "q_5", "q_6", "q_7"]
        group = svg.split('<g id="q_3">\n', 1)[1].split("</g>", 1)[0]
        assert group.count('stroke="magenta"') == 2
        assert 'stroke="blue"' not in group

        svg = render_svg(GridFunction.from_cells(1, "aba"))
        assert svg.count("<g ") == 1
        assert '<g id="runs">' in svg
        assert svg.count('stroke="magenta"') == 2

    def test_invalid_options(self):
        from ..render import SVGRenderer

        with pytest.raises(ValueError):
            SVGRenderer(cell=0)
