import pathlib
import typing

VERSION: typing.Final[typing.Text] = (
    pathlib.Path(__file__).with_name("VERSION").read_text(encoding="utf-8").strip()
)
VERSION_INFO: typing.Final[typing.Tuple[int, ...]] = tuple(
    int(part) for part in VERSION.split(".")
)
