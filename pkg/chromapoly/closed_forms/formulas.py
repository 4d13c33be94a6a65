"""Closed-form chromatic polynomials of the standard families."""

import logging
import typing

from chromapoly.exceptions import FamilyParameterError, NotATreeError
from chromapoly.graph.structure import is_connected
from chromapoly.types.family import FAMILY_MINIMUM, Family, FamilyMatch
from chromapoly.types.graph import Graph
from chromapoly.types.polynomial import Polynomial, falling_factorial

logger = logging.getLogger(__name__)

InterlockingVariant = typing.Literal["statement", "proof"]

# Sign convention checked against the deletion-contraction oracle.
INTERLOCKING_VARIANT: typing.Final[InterlockingVariant] = "statement"

T = Polynomial.t()


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _require(family: Family, *values: int) -> None:
    minimum = FAMILY_MINIMUM[family]
    if any(v < minimum for v in values):
        raise FamilyParameterError(
            f"{family.value} requires parameters >= {minimum}, got {values}"
        )


def chrom_edgeless(n: int) -> Polynomial:
    _require(Family.EDGELESS, n)
    return Polynomial.monomial(n)


def chrom_path(n: int) -> Polynomial:
    _require(Family.PATH, n)
    return T * Polynomial.linear(1) ** (n - 1)


def chrom_tree(g: Graph) -> Polynomial:
    if g.n == 0 or g.number_of_edges != g.n - 1 or not is_connected(g):
        raise NotATreeError(
            f"Graph with {g.n} vertices and {g.number_of_edges} edges is not a tree"
        )
    return T * Polynomial.linear(1) ** (g.n - 1)


def chrom_cycle(n: int) -> Polynomial:
    _require(Family.CYCLE, n)
    return Polynomial.linear(1) ** n + _sign(n) * Polynomial.linear(1)


def chrom_complete(n: int) -> Polynomial:
    _require(Family.COMPLETE, n)
    return falling_factorial(n)


def chrom_wheel(n: int) -> Polynomial:
    _require(Family.WHEEL, n)
    t2 = Polynomial.linear(2)
    return T * (t2 ** (n - 1) + _sign(n - 1) * t2)


def chrom_broken_wheel(n: int) -> Polynomial:
    """`n` counts the broken wheel's vertices."""
    _require(Family.BROKEN_WHEEL, n)
    return T * Polynomial.linear(1) * Polynomial.linear(2) ** (n - 2)


def interlocking_formula(
    m: int, n: int, variant: InterlockingVariant = INTERLOCKING_VARIANT
) -> Polynomial:
    """The interlocking-wheels expression, without its parameter range guard."""
    if m < 4 or n < 4:
        raise FamilyParameterError("Exponents need m, n >= 4")
    t2 = Polynomial.linear(2)
    t3 = Polynomial.linear(3)

    if variant == "statement":
        first = (t2 ** (n - 3) + _sign(n)) * (t2 ** (m - 3) + _sign(m))
        second = (t2 ** (n - 4) + _sign(n - 1)) * (t2 ** (m - 4) + _sign(m - 1))
    elif variant == "proof":
        first = (t2 ** (n - 3) - _sign(n - 1)) * (t2 ** (m - 3) - _sign(m - 1))
        second = (t2 ** (n - 4) - _sign(n - 2)) * (t2 ** (m - 4) - _sign(m - 2))
    else:
        raise ValueError(f"Unknown variant {variant!r}")

    bracket = T * t2 * t3 * first + T * t2**3 * second
    return bracket.exact_div(Polynomial.linear(1))


def chrom_interlocking(
    m: int, n: int, variant: InterlockingVariant = INTERLOCKING_VARIANT
) -> Polynomial:
    _require(Family.INTERLOCKING, m, n)
    if m + n < 9:
        raise FamilyParameterError(f"Interlocking wheels need m + n >= 9, got {m}+{n}")
    return interlocking_formula(m, n, variant)


def closed_form(match: FamilyMatch) -> Polynomial:
    family, params = match.family, match.parameters
    if family == Family.EDGELESS:
        return chrom_edgeless(params[0])
    if family == Family.PATH:
        return chrom_path(params[0])
    if family == Family.TREE:
        _require(Family.TREE, params[0])
        return T * Polynomial.linear(1) ** (params[0] - 1)
    if family == Family.CYCLE:
        return chrom_cycle(params[0])
    if family == Family.COMPLETE:
        return chrom_complete(params[0])
    if family == Family.WHEEL:
        return chrom_wheel(params[0])
    if family == Family.BROKEN_WHEEL:
        return chrom_broken_wheel(params[0])
    if family == Family.INTERLOCKING:
        return chrom_interlocking(params[0], params[1])
    raise FamilyParameterError(f"No closed form for {family}")
