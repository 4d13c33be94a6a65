"""
The 48 contiguous states. The printed 48-term polynomial and the two printed
totals at t=4 disagree; the computed polynomial decides between them.
"""

import pytest

from chromapoly.cli import _Input, build_document
from chromapoly.datasets import dataset
from chromapoly.engine import ChromaticEngine, EngineConfig
from chromapoly.types.document import ClaimOutcome
from chromapoly.types.polynomial import Polynomial
from chromapoly.verifier import chromatic_number, verify_structure

pytestmark = pytest.mark.slow

CHECKLIST_TOTAL = 12811591729152


@pytest.fixture(scope="module")
def usa_result(deps_settings):
    engine = ChromaticEngine(
        EngineConfig.from_settings(deps_settings, trace_enabled=False)
    )
    return engine.chromatic(dataset("usa").graph)


def test_structure(usa_result):
    report = verify_structure(dataset("usa").graph, usa_result.polynomial)
    assert report.passed
    assert chromatic_number(usa_result.polynomial) == 4
    assert usa_result.polynomial.eval(3) == 0


def test_matches_printed_coefficients(usa_result):
    expected = dataset("usa").expected
    assert expected is not None and expected.coefficients is not None
    assert usa_result.polynomial == Polynomial.from_descending(expected.coefficients)


def test_claim_verdict(usa_result):
    usa = dataset("usa")
    doc = build_document(
        _Input(usa.name, usa.graph, usa.expected), usa_result, strategy="auto"
    )
    assert usa_result.polynomial.eval(4) == CHECKLIST_TOTAL

    [verdict] = doc.claim_verdicts
    assert verdict.t == 4
    assert verdict.computed == str(CHECKLIST_TOTAL)
    assert verdict.outcome == ClaimOutcome.MATCHES_CLAIM
    assert verdict.matched_source == "total stated in the closing checklist"

    matches = {c.value: c.matches for c in doc.paper_claims}
    assert matches == {"12811729152": False, str(CHECKLIST_TOTAL): True}

    assert doc.reference is not None
    assert doc.reference.coefficients_match
    assert doc.reference.printed_evaluations == {"4": str(CHECKLIST_TOTAL)}
