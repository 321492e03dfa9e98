import json
import pathlib

import pytest

DATA = pathlib.Path(__file__).parent / "data"


def run(capsys, *argv):
    from ..cli import main

    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


class TestBuild:
    def test_trivial(self, capsys):
        assert run(capsys, "build", "--n", "0", "--q", "1")[:2] == (0, '{"n":0,"cells":"a"}\n')

    def test_a_first_n20(self, capsys):
        status, out, _ = run(capsys, "build", "--n", "20", "--q", "5,3,2,6,1,4")
        assert status == 0
        doc = json.loads(out)
        assert doc["n"] == 20
        assert len(doc["cells"]) == 231

    def test_from_quotas(self, capsys):
        _, by_q, _ = run(capsys, "build", "--n", "20", "--q", "0,3,2,4,5,1,6")
        _, by_k, _ = run(capsys, "build", "--n", "20", "--k", "8,14,7,19,3,21")
        assert by_q == by_k

    def test_invalid_list(self, capsys):
        status, out, err = run(capsys, "build", "--n", "20", "--q", "5,3")
        assert status == 2
        assert out == ""
        assert "terms sum to 8, not 21" in err

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "table.json"
        status, out, _ = run(capsys, "build", "--n", "1", "--q", "1,1", "--out", str(path))
        assert (status, out) == (0, "")
        assert json.loads(path.read_text()) == {"n": 1, "cells": "aab"}


class TestConvert:
    def test_quotas_to_list(self, capsys):
        status, out, _ = run(capsys, "convert", "--n", "20", "--k", "8,14,7,19,3,21")
        assert status == 0
        lines = out.splitlines()
        assert lines[0] == "q = 0,3,2,4,5,1,6"
        assert lines[1].startswith("verified: pointwise equal on all 231 grid points")

    def test_list_to_quotas(self, capsys):
        status, out, _ = run(capsys, "convert", "--n", "20", "--q", "0,3,2,4,5,1,6")
        assert status == 0
        assert out.splitlines()[0] == "k = 8,14,7,19,3,21"

    def test_invalid(self, capsys):
        status, _, err = run(capsys, "convert", "--n", "20", "--k", "1,2,3")
        assert status == 2
        assert err.startswith("error: (1,2,3) is not an up-and-down quota sequence")


class TestEval:
    def test_indifferent_society(self, capsys):
        argv = ("eval", "--n", "20", "--q", "5,3,2,6,1,4", "--profile", "-" * 20)
        assert run(capsys, *argv)[:2] == (0, "a\n")

    def test_constant_b(self, capsys):
        assert run(capsys, "eval", "--n", "3", "--q", "0,4", "--profile", "aab")[:2] == (0, "b\n")

    @pytest.mark.parametrize(
        ("profile", "expected"),
        [
            ("-aab" + "-" * 16, "a\n"),
            ("-bbbbb" + "-" * 14, "b\n"),
            ("a" + "-" * 19, "a\n"),
        ],
    )
    def test_leading_indifferent_voter(self, capsys, profile, expected):
        argv = ("eval", "--n", "20", "--q", "5,3,2,6,1,4", "--profile", profile)
        assert run(capsys, *argv)[:2] == (0, expected)

    def test_length_mismatch(self, capsys):
        assert run(capsys, "eval", "--n", "3", "--q", "0,4", "--profile", "ab")[0] == 2

    def test_profile_missing(self, capsys):
        with pytest.raises(SystemExit) as e:
            run(capsys, "eval", "--n", "3", "--q", "0,4", "--profile")
        assert e.value.code == 2


class TestDecompose:
    def test_file(self, capsys, tmp_path):
        path = tmp_path / "table.json"
        path.write_text('{"n": 1, "cells": "bab"}')
        status, out, _ = run(capsys, "decompose", str(path))
        assert status == 0
        assert json.loads(out) == {"n": 1, "q": [0, 1, 1]}

    def test_stdin(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO('{"n": 2, "cells": "aaaaab"}'))
        status, out, _ = run(capsys, "decompose")
        assert status == 0
        assert json.loads(out) == {"n": 2, "q": [2, 1]}

    def test_not_dually_monotone(self, capsys, tmp_path):
        path = tmp_path / "table.json"
        path.write_text('{"n": 1, "cells": "aba"}')
        status, _, err = run(capsys, "decompose", str(path))
        assert status == 2
        assert "not dually monotone" in err

    def test_malformed(self, capsys, tmp_path):
        path = tmp_path / "table.json"
        path.write_text('{"n": "1", "cells": "abx", "extra": 0}')
        status, _, err = run(capsys, "decompose", str(path))
        assert status == 2
        assert "error: /n: expected an integer" in err
        assert "error: /extra: unexpected member" in err
        assert "error: /cells: unexpected character(s)" in err

    def test_not_json(self, capsys, tmp_path):
        path = tmp_path / "table.json"
        path.write_text("{")
        status, _, err = run(capsys, "decompose", str(path))
        assert status == 2
        assert "malformed JSON" in err

    def test_not_utf8(self, capsys, tmp_path):
        path = tmp_path / "table.json"
        path.write_bytes(b"\xff\xfe{")
        status, out, err = run(capsys, "decompose", str(path))
        assert (status, out) == (2, "")
        assert "malformed JSON" in err

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "decompose", str(tmp_path / "nowhere.json"))[0] == 2


def test_enumerate(capsys):
    status, out, _ = run(capsys, "enumerate", "--n", "2")
    assert status == 0
    docs = [json.loads(line) for line in out.splitlines()]
    assert len(docs) == 8
    assert docs[0] == {"q": [0, 1, 1, 1], "k": [2, 1, 3]}
    assert docs[-1] == {"q": [3], "k": [0]}


def test_enumerate_cap(capsys):
    assert run(capsys, "enumerate", "--n", "17")[0] == 4


class TestVerify:
    def test_full(self, capsys):
        status, out, _ = run(capsys, "verify", "--n", "3", "--mode", "full")
        assert status == 0
        assert out.startswith("dually-monotone count 16/1024; ")
        assert "SP-equivalence OK" in out

    def test_lists(self, capsys):
        status, out, _ = run(capsys, "verify", "--n", "8", "--mode", "lists")
        assert status == 0
        assert out.startswith("lists enumerated 2^9 = 512; ")

    def test_tfae(self, capsys):
        argv = ("verify", "--n", "6", "--mode", "tfae", "--samples", "50", "--seed", "7")
        assert run(capsys, *argv)[:2] == (0, "TFAE agreement OK\n")

    def test_cap(self, capsys):
        status, out, err = run(capsys, "verify", "--n", "30", "--mode", "full")
        assert status == 4
        assert out == ""
        assert "exceeds the configured limit" in err

    @pytest.mark.parametrize(
        "argv",
        [
            ("--n", "10000", "--mode", "tfae"),
            ("--n", "6", "--mode", "tfae", "--samples", "100001"),
        ],
    )
    def test_tfae_cap(self, capsys, argv):
        status, out, err = run(capsys, "verify", *argv)
        assert (status, out) == (4, "")
        assert "random table" in err


class TestRender:
    @pytest.mark.parametrize(
        ("q", "golden"),
        [
            ("5,3,2,6,1,4", "a_first_n20.txt"),
            ("0,3,2,4,5,1,6", "b_first_n20.txt"),
        ],
    )
    def test_ascii(self, capsys, q, golden):
        status, out, _ = run(capsys, "render", "--n", "20", "--q", q)
        assert status == 0
        assert out == (DATA / golden).read_text()

    def test_svg(self, capsys):
        status, out, _ = run(capsys, "render", "--n", "2", "--q", "0,3", "--format", "svg")
        assert status == 0
        assert out.count('stroke="blue"') == 3

    def test_table(self, capsys, tmp_path):
        path = tmp_path / "table.json"
        path.write_text('{"n": 1, "cells": "aba"}')
        assert run(capsys, "render", "--table", str(path))[:2] == (0, "a\nab\n")

    def test_n_required(self, capsys):
        with pytest.raises(SystemExit) as e:
            run(capsys, "render", "--q", "1")
        assert e.value.code == 2


def test_usage_errors(capsys):
    from ..cli import main

    for argv in (["build", "--q", "1"], ["build", "--n", "-1", "--q", "1"], ["frobnicate"]):
        with pytest.raises(SystemExit) as e:
            main(argv)
        assert e.value.code == 2
