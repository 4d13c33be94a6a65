"""Deliberate corruptions of a polynomial, one per structural check."""

import typing

from chromapoly.types.polynomial import Polynomial
from chromapoly.types.report import CheckName

_T = Polynomial.t()


def _sign(power: int, degree: int) -> int:
    return 1 if (degree - power) % 2 == 0 else -1


def inject_fault(p: Polynomial, check: CheckName, components: int) -> Polynomial:
    """A polynomial that `check` rejects for a graph with `components` components."""
    n = p.degree
    if check == CheckName.DEGREE:
        return p * _T
    if check == CheckName.MONIC:
        return p * 2
    if check == CheckName.EDGE_COEFFICIENT:
        return p + Polynomial.monomial(max(n - 1, 0), -1)
    if check == CheckName.CONSTANT_TERM:
        return p + _sign(0, n)
    if check == CheckName.ALTERNATING_SIGNS:
        for power in range(n - 1, -1, -1):
            c = p.coefficient(power)
            if c != 0:
                return p - Polynomial.monomial(power, 2 * c)
        if n >= 1:
            return p + Polynomial.monomial(n - 1, 1)
        return p - 2
    if check == CheckName.LOWEST_POWER:
        if components == 0:
            return p * _T
        power = components - 1
        return p + Polynomial.monomial(power, _sign(power, n))
    if check == CheckName.COEFFICIENT_SUM:
        power = p.lowest_power() or 0
        return p + Polynomial.monomial(power, _sign(power, n))
    raise ValueError(f"No fault defined for {check}")


FAULTS: typing.Final[typing.Tuple[typing.Text, ...]] = tuple(c.value for c in CheckName)
