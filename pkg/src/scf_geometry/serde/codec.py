"""
JSON wire formats::

    {"n": 2, "cells": "aaabab"}           # grid function, cells in canonical order
    {"n": 20, "q": [5, 3, 2, 6, 1, 4]}    # {a,b}-list
    {"n": 20, "k": [8, 14, 7, 19, 3, 21]} # up-and-down quota sequence

Decoders check every member and raise a single :py:class:`DeserializationError`
listing all problems found.
"""

import typing

from ..ablist import ABList
from ..exceptions import DomainError
from ..grid import Alternative, Grid, GridFunction
from ..quotas import QuotaSequence, quota_sequence_problem
from .exceptions import DeserializationError, ValidationProblem
from .types import ABListDocument, FunctionDocument, JSONValue, QuotasDocument
from .utils import JSONPointer, english_enumerate
from .utils.formatting import quoted

T = typing.TypeVar("T")


class _Collector:
    payload: JSONValue
    problems: typing.List[ValidationProblem]

    def report(self, pointer: JSONPointer, message: str) -> None:
        self.problems.append(ValidationProblem(pointer, message))

    def raise_if_any(self) -> None:
        if self.problems:
            raise DeserializationError(self.payload, self.problems)

    def __init__(self, payload: JSONValue):
        self.payload = payload
        self.problems = []


def _is_int(v: typing.Any) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def _members(
    c: _Collector, payload: JSONValue, keys: typing.Sequence[str]
) -> typing.Optional[typing.Mapping[str, typing.Any]]:
    root = JSONPointer()
    if not isinstance(payload, typing.Mapping):
        c.report(root, f"expected an object with members {english_enumerate(quoted(keys))}")
        return None
    missing = [k for k in keys if k not in payload]
    if missing:
        c.report(root, f"missing member(s) {english_enumerate(quoted(missing))}")
    for k in payload:
        if k not in keys:
            c.report(root / k, "unexpected member")
    return payload


def _society_size(c: _Collector, obj: typing.Mapping[str, typing.Any]) -> typing.Optional[int]:
    if "n" not in obj:
        return None
    n = obj["n"]
    if not _is_int(n):
        c.report(JSONPointer("/n"), "expected an integer")
        return None
    if n < 0:
        c.report(JSONPointer("/n"), "society size must be nonnegative")
        return None
    return n


def _int_array(
    c: _Collector, obj: typing.Mapping[str, typing.Any], key: str
) -> typing.Optional[typing.List[int]]:
    if key not in obj:
        return None
    pointer = JSONPointer() / key
    value = obj[key]
    if not isinstance(value, typing.Sequence) or isinstance(value, str):
        c.report(pointer, "expected an array of integers")
        return None
    ok = True
    for i, v in enumerate(value):
        if not _is_int(v):
            c.report(pointer / i, "expected an integer")
            ok = False
    if not value:
        c.report(pointer, "expected a nonempty array")
        ok = False
    return list(value) if ok else None


def encode_function(f: GridFunction) -> FunctionDocument:
    return {"n": f.n, "cells": f.cells}


def decode_function(payload: JSONValue) -> GridFunction:
    c = _Collector(payload)
    obj = _members(c, payload, ("n", "cells"))
    if obj is not None:
        n = _society_size(c, obj)
        cells = obj.get("cells")
        if "cells" in obj and not isinstance(cells, str):
            c.report(JSONPointer("/cells"), "expected a string")
        elif isinstance(cells, str):
            glyphs = {alt.value for alt in Alternative}
            bad = sorted({ch for ch in cells if ch not in glyphs})
            if bad:
                c.report(
                    JSONPointer("/cells"),
                    f"unexpected character(s) {english_enumerate(quoted(bad))}",
                )
            if n is not None and len(cells) != Grid(n).size:
                c.report(
                    JSONPointer("/cells"),
                    f"a table for n={n} needs {Grid(n).size} cells, got {len(cells)}",
                )
    c.raise_if_any()
    return GridFunction.from_cells(payload["n"], payload["cells"])  # type: ignore


def encode_ablist(q: ABList) -> ABListDocument:
    return {"n": q.n, "q": list(q.terms)}


def _construct(
    c: _Collector, pointer: JSONPointer, factory: typing.Callable[..., T], *args: typing.Any
) -> typing.Optional[T]:
    try:
        return factory(*args)
    except DomainError as e:
        c.report(pointer, e.message)
        return None


def decode_ablist(payload: JSONValue) -> ABList:
    c = _Collector(payload)
    obj = _members(c, payload, ("n", "q"))
    result: typing.Optional[ABList] = None
    if obj is not None:
        n = _society_size(c, obj)
        terms = _int_array(c, obj, "q")
        if terms is not None:
            for i, t in enumerate(terms):
                if i == 0 and t < 0:
                    c.report(JSONPointer("/q/0"), "q_1 must be nonnegative")
                elif i > 0 and t < 1:
                    c.report(JSONPointer("/q") / i, f"q_{i + 1} must be positive")
        if n is not None and terms is not None and not c.problems:
            result = _construct(c, JSONPointer("/q"), ABList, n, tuple(terms))
    c.raise_if_any()
    assert result is not None
    return result


def encode_quotas(ks: QuotaSequence) -> QuotasDocument:
    return {"n": ks.n, "k": list(ks.quotas)}


def decode_quotas(payload: JSONValue) -> QuotaSequence:
    c = _Collector(payload)
    obj = _members(c, payload, ("n", "k"))
    result: typing.Optional[QuotaSequence] = None
    if obj is not None:
        n = _society_size(c, obj)
        quotas = _int_array(c, obj, "k")
        if n is not None and quotas is not None:
            result = _construct(c, JSONPointer("/k"), QuotaSequence, n, tuple(quotas))
            if result is not None:
                problem = quota_sequence_problem(result)
                if problem is not None:
                    c.report(JSONPointer("/k"), problem)
    c.raise_if_any()
    assert result is not None
    return result
