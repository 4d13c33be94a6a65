import typing


class DummyCache:
    """Stand-in for `diskcache.Cache` when no persistent store is configured."""

    def __init__(self, *args, **kwargs):
        pass

    def set(
        self,
        key: typing.Text | bytes,
        value: typing.Any,
        expire: typing.Optional[int] = None,
        *args,
        **kwargs
    ) -> bool:
        return False

    def get(
        self, key: typing.Text | bytes, default=None, *args, **kwargs
    ) -> typing.Any:
        return default

    def delete(self, key: typing.Text | bytes, *args, **kwargs) -> bool:
        return False

    def close(self) -> None:
        pass
