import typing

# Deterministic certificate bytes; equal exactly for isomorphic graphs.
CanonicalKey = typing.NewType("CanonicalKey", bytes)
