"""
Necessary conditions every chromatic polynomial satisfies.

A polynomial that fails any applicable check cannot be the chromatic
polynomial of the graph; passing all of them is evidence, not proof.
"""

import logging
import typing

from chromapoly.graph.structure import connected_components
from chromapoly.types.graph import Graph
from chromapoly.types.polynomial import Polynomial
from chromapoly.types.report import (
    CheckName,
    CheckResult,
    CheckStatus,
    VerificationReport,
)

if typing.TYPE_CHECKING:
    from chromapoly.engine import ChromaticEngine

logger = logging.getLogger(__name__)

PASS, FAIL, NA = CheckStatus.PASS, CheckStatus.FAIL, CheckStatus.NOT_APPLICABLE


def _result(
    name: CheckName,
    ok: bool,
    description: typing.Text,
    *,
    expected: typing.Any = None,
    actual: typing.Any = None,
    witness: int | None = None,
) -> CheckResult:
    return CheckResult(
        name=name,
        status=PASS if ok else FAIL,
        description=description,
        expected=None if expected is None else str(expected),
        actual=None if actual is None else str(actual),
        witness=None if ok else witness,
    )


def _alternating(p: Polynomial, components: int) -> typing.Tuple[bool, int | None]:
    # sign(a_{n-k}) = (-1)^k wherever a_{n-k} != 0, and no zero between t^n
    # and t^components.
    if p.is_zero():
        return False, None
    top = p.degree
    for power in range(top, -1, -1):
        c = p.coefficient(power)
        if c == 0:
            if power >= components:
                return False, power
            continue
        expected_sign = 1 if (top - power) % 2 == 0 else -1
        if (c > 0) != (expected_sign > 0):
            return False, power
    return True, None


def verify_structure(g: Graph, p: Polynomial) -> VerificationReport:
    n, m = g.n, g.number_of_edges
    components = len(connected_components(g))
    checks: typing.List[CheckResult] = []

    checks.append(
        _result(
            CheckName.DEGREE,
            p.degree == n,
            "degree equals the number of vertices",
            expected=n,
            actual=p.degree,
            witness=p.degree,
        )
    )
    checks.append(
        _result(
            CheckName.MONIC,
            p.leading_coefficient == 1,
            "leading coefficient is 1",
            expected=1,
            actual=p.leading_coefficient,
            witness=p.degree,
        )
    )

    if n >= 1:
        checks.append(
            _result(
                CheckName.EDGE_COEFFICIENT,
                p.coefficient(n - 1) == -m,
                f"coefficient of t^{n - 1} is -|E|",
                expected=-m,
                actual=p.coefficient(n - 1),
                witness=n - 1,
            )
        )
        checks.append(
            _result(
                CheckName.CONSTANT_TERM,
                p.coefficient(0) == 0,
                "constant term is zero",
                expected=0,
                actual=p.coefficient(0),
                witness=0,
            )
        )
    else:
        for name, description in (
            (CheckName.EDGE_COEFFICIENT, "coefficient of t^(n-1) is -|E|"),
            (CheckName.CONSTANT_TERM, "constant term is zero"),
        ):
            checks.append(CheckResult(name=name, status=NA, description=description))

    ok, witness = _alternating(p, components)
    checks.append(
        _result(
            CheckName.ALTERNATING_SIGNS,
            ok,
            "coefficients alternate in sign down to the lowest nonzero term",
            witness=witness,
        )
    )

    lowest = p.lowest_power()
    checks.append(
        _result(
            CheckName.LOWEST_POWER,
            lowest == components,
            "lowest nonzero power equals the number of components",
            expected=components,
            actual=lowest,
            witness=lowest,
        )
    )

    if m >= 1:
        checks.append(
            _result(
                CheckName.COEFFICIENT_SUM,
                p.coefficient_sum() == 0,
                "coefficients sum to zero",
                expected=0,
                actual=p.coefficient_sum(),
            )
        )
    else:
        checks.append(
            CheckResult(
                name=CheckName.COEFFICIENT_SUM,
                status=NA,
                description="coefficients sum to zero (graph has no edges)",
            )
        )

    report = VerificationReport(
        vertices=n, edges=m, components=components, checks=checks
    )
    for failure in report.failures():
        logger.debug(f"Check '{failure.name.value}' failed: {failure.model_dump()}")
    return report


def chromatic_number(p: Polynomial) -> int:
    """Smallest non-negative integer t with p(t) > 0."""
    # A chromatic polynomial of degree n is positive at t = n.
    for t in range(0, max(p.degree, 0) + 2):
        if p.eval(t) > 0:
            return t
    raise ValueError(f"{p} is not positive at any t <= {max(p.degree, 0) + 1}")


def chromatically_equivalent(
    g1: Graph, g2: Graph, engine: "ChromaticEngine | None" = None
) -> bool:
    """Whether the two graphs share a chromatic polynomial."""
    from chromapoly.engine import ChromaticEngine

    engine = engine or ChromaticEngine()
    return (
        engine.chromatic(g1).polynomial == engine.chromatic(g2).polynomial
    )
