import pathlib
import typing

# Root of every `chromapoly.*` logger; the CLI installs its handler here.
LOGGER_NAME: typing.Final[typing.Text] = (
    pathlib.Path(__file__).with_name("LOGGER_NAME").read_text(encoding="utf-8").strip()
)
