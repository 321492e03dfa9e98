import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

A_FIRST = "5,3,2,6,1,4"
B_FIRST = "0,3,2,4,5,1,6"


class TestABList:
    def test_parse(self):
        from ..ablist import ABList

        q = ABList.parse(A_FIRST, 20)
        assert q.terms == (5, 3, 2, 6, 1, 4)
        assert q.s == len(q) == 6
        assert q[3] == 6
        assert str(q) == A_FIRST
        assert q.selects_a_on_indifference
        assert not ABList.parse(B_FIRST, 20).selects_a_on_indifference

    @pytest.mark.parametrize(
        ("text", "n", "detail"),
        [
            ("5,3", 20, "terms sum to 8, not 21"),
            ("2,0,2", 3, "q_2 must be positive"),
            ("-1,3,2", 3, "q_1 must be nonnegative"),
            ("0", 0, "terms sum to 0, not 1"),
        ],
    )
    def test_invalid(self, text, n, detail):
        from ..ablist import ABList
        from ..exceptions import InvalidABListError

        with pytest.raises(InvalidABListError) as e:
            ABList.parse(text, n)
        assert e.value.detail == detail

    def test_unparsable(self):
        from ..ablist import ABList
        from ..exceptions import InvalidABListError

        with pytest.raises(InvalidABListError):
            ABList.parse("", 3)
        with pytest.raises(InvalidABListError):
            ABList.parse("1,x", 3)


@pytest.mark.parametrize(
    ("text", "qa", "qb"),
    [
        (A_FIRST, {(0, 4), (3, 6), (9, 7)}, {(2, 5), (8, 7), (12, 8)}),
        (B_FIRST, {(3, 1), (7, 6), (8, 12)}, {(2, 0), (6, 2), (7, 7)}),
    ],
)
def test_anchors(text, qa, qb):
    from ..ablist import ABList, anchors

    a = anchors(ABList.parse(text, 20))
    assert a.qa == qa
    assert a.qb == qb


class TestBuild:
    def test_constant(self):
        from ..ablist import ABList, build_f_from_q
        from ..grid import Alternative, Grid, GridFunction

        assert build_f_from_q(ABList.parse("1", 0)) == GridFunction.from_cells(0, "a")
        assert build_f_from_q(ABList.parse("0,3", 2)) == GridFunction.constant(
            Grid(2), Alternative.B
        )

    def test_spot_cells(self):
        from ..ablist import ABList, build_f_from_q
        from ..grid import Alternative

        f = build_f_from_q(ABList.parse(A_FIRST, 20))
        assert f.at(0, 0) is Alternative.A
        assert f.at(12, 8) is Alternative.B
        assert all(f.at(0, m) is Alternative.B for m in range(5, 21))

        f = build_f_from_q(ABList.parse(B_FIRST, 20))
        assert f.at(0, 0) is Alternative.B
        assert f.at(8, 12) is Alternative.A
        assert all(f.at(k, m) is Alternative.B for k in range(3) for m in range(21 - k))

    @pytest.mark.parametrize("n", range(9))
    def test_round_trip_every_list(self, n):
        from ..ablist import build_f_from_q, decompose, enumerate_ablists
        from ..grid import Grid, is_dually_monotone

        for q in enumerate_ablists(Grid(n)):
            f = build_f_from_q(q)
            assert is_dually_monotone(f)
            assert decompose(f) == q

    @pytest.mark.parametrize("n", range(4))
    def test_round_trip_every_function(self, n):
        from ..ablist import build_f_from_q, decompose
        from ..grid import Grid, all_grid_functions, is_dually_monotone

        for f in all_grid_functions(Grid(n)):
            if is_dually_monotone(f):
                assert build_f_from_q(decompose(f)) == f

    def test_decompose_rejects(self):
        from ..ablist import decompose
        from ..exceptions import NotDuallyMonotoneError
        from ..grid import GridFunction

        with pytest.raises(NotDuallyMonotoneError) as e:
            decompose(GridFunction.from_cells(1, "aba"))
        assert (e.value.k, e.value.m) == (0, 0)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_round_trip_random_list(data):
    from ..ablist import build_f_from_q, count_ablists, decompose, unrank_ablist
    from ..grid import Grid

    g = Grid(data.draw(st.integers(min_value=0, max_value=30)))
    q = unrank_ablist(g, data.draw(st.integers(min_value=0, max_value=count_ablists(g) - 1)))
    assert decompose(build_f_from_q(q)) == q


class TestEnumeration:
    @pytest.mark.parametrize("n", range(15))
    def test_count(self, n):
        from ..ablist import count_ablists, enumerate_ablists
        from ..grid import Grid

        g = Grid(n)
        assert count_ablists(g) == 2 ** (n + 1)
        assert sum(1 for _ in enumerate_ablists(g)) == 2 ** (n + 1)

    def test_order(self):
        from ..ablist import enumerate_ablists
        from ..grid import Grid

        terms = [q.terms for q in enumerate_ablists(Grid(2))]
        assert terms == [
            (0, 1, 1, 1),
            (0, 1, 2),
            (0, 2, 1),
            (0, 3),
            (1, 1, 1),
            (1, 2),
            (2, 1),
            (3,),
        ]

    @pytest.mark.parametrize("n", range(7))
    def test_rank(self, n):
        from ..ablist import enumerate_ablists, rank_ablist, unrank_ablist
        from ..grid import Grid

        g = Grid(n)
        for i, q in enumerate(enumerate_ablists(g)):
            assert rank_ablist(q) == i
            assert unrank_ablist(g, i) == q

    def test_unrank_out_of_range(self):
        from ..ablist import unrank_ablist
        from ..grid import Grid

        with pytest.raises(IndexError):
            unrank_ablist(Grid(2), 8)
        with pytest.raises(IndexError):
            unrank_ablist(Grid(2), -1)


class TestMirror:
    @pytest.mark.parametrize(
        ("text", "expected"),
        [
            (A_FIRST, "0,5,3,2,6,1,4"),
            (B_FIRST, "3,2,4,5,1,6"),
            ("21", "0,21"),
        ],
    )
    def test_mirror_ablist(self, text, expected):
        from ..ablist import ABList, mirror_ablist

        assert str(mirror_ablist(ABList.parse(text, 20))) == expected

    @pytest.mark.parametrize("n", range(6))
    def test_mirror_commutes_with_build(self, n):
        from ..ablist import build_f_from_q, enumerate_ablists, mirror_ablist
        from ..grid import Grid, mirror_function

        for q in enumerate_ablists(Grid(n)):
            assert build_f_from_q(mirror_ablist(q)) == mirror_function(build_f_from_q(q))
            assert mirror_ablist(mirror_ablist(q)) == q


def test_segment_groups():
    from ..ablist import ABList, build_f_from_q, segment_groups
    from ..grid import Alternative

    q = ABList.parse(A_FIRST, 20)
    groups = segment_groups(q)
    assert [len(g) for g in groups] == list(q.terms)
    assert [s.length for s in groups[0]] == [21, 20, 19, 18, 17]
    assert all(s.alternative is Alternative.A for s in groups[0])
    assert all(s.alternative is Alternative.B for s in groups[1])
    assert [s.start for s in groups[1]] == [(0, 5), (1, 5), (2, 5)]

    f = build_f_from_q(q)
    covered = [pt for g in groups for s in g for pt in s.points()]
    assert sorted(covered) == sorted(pt for pt, _ in f.items())
    for g in groups:
        for s in g:
            assert all(f(pt) is s.alternative for pt in s.points())
