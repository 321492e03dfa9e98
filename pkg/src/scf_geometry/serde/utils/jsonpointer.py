"""
RFC 6901 pointers naming the offending member of a decoded document.
"""

import itertools
import typing

JSONPointerComponent = typing.Union[str, int]


def _unescape(token: str) -> JSONPointerComponent:
    token = token.replace("~1", "/").replace("~0", "~")
    return int(token) if token.isdigit() else token


def _escape(component: JSONPointerComponent) -> str:
    return str(component).replace("~", "~0").replace("/", "~1")


class JSONPointer:
    path: typing.Tuple[JSONPointerComponent, ...]

    def __eq__(self, that: object) -> bool:
        return isinstance(that, JSONPointer) and self.path == that.path

    def __hash__(self) -> int:
        return hash(self.path)

    def __truediv__(
        self, components: typing.Union[JSONPointerComponent, typing.Iterable[JSONPointerComponent]]
    ) -> "JSONPointer":
        if isinstance(components, (str, int)):
            components = (components,)
        return self.__class__(itertools.chain(self.path, components))

    def __getitem__(self, index: JSONPointerComponent) -> "JSONPointer":
        return self / index

    def __iter__(self) -> typing.Iterator[JSONPointerComponent]:
        return iter(self.path)

    def __len__(self) -> int:
        return len(self.path)

    def __str__(self) -> str:
        return "/" + "/".join(_escape(c) for c in self.path)

    def __repr__(self) -> str:
        return f"JSONPointer({str(self)!r})"

    def __init__(self, arg: typing.Union[str, typing.Iterable[JSONPointerComponent]] = ()):
        if isinstance(arg, str):
            tokens = arg.split("/")
            if tokens and tokens[0] == "":
                tokens = tokens[1:]
            if tokens and tokens[-1] == "":
                tokens = tokens[:-1]
            self.path = tuple(_unescape(t) for t in tokens)
        else:
            self.path = tuple(arg)
