import typing


def english_enumerate(items: typing.Iterable[str], conj: str = " and ") -> str:
    """
    Joins ``items`` as an English list: ``"x"``, ``"x and y"``, ``"x, y and z"``.
    """
    words = list(items)
    if len(words) <= 1:
        return "".join(words)
    return ", ".join(words[:-1]) + conj + words[-1]


def quoted(items: typing.Iterable[str]) -> typing.Iterator[str]:
    for item in items:
        yield f'"{item}"'
