"""
Shapes of the documents the codecs read and write.
"""

import typing

JSONValue = typing.Union[
    None, bool, int, float, str, typing.Sequence[typing.Any], typing.Mapping[str, typing.Any]
]


class FunctionDocument(typing.TypedDict):
    n: int
    cells: str


class ABListDocument(typing.TypedDict):
    n: int
    q: typing.List[int]


class QuotasDocument(typing.TypedDict):
    n: int
    k: typing.List[int]
