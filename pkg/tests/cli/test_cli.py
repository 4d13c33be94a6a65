import json
import pathlib
import typing

import pytest

from chromapoly.cli import main
from chromapoly.datasets import dataset, parse_edge_list


def _json(capsys: pytest.CaptureFixture[str]) -> typing.Any:
    # Log records may precede the document on stdout.
    out = capsys.readouterr().out
    start = min(
        i
        for i in (out.find("\n{"), out.find("\n["), 0 if out[:1] in "{[" else -1)
        if i >= 0
    )
    return json.JSONDecoder().raw_decode(out[start:].lstrip())[0]


def _last_line(capsys: pytest.CaptureFixture[str]) -> str:
    return capsys.readouterr().out.strip().splitlines()[-1]


def test_poly_canada(capsys: pytest.CaptureFixture[str]):
    assert main(["poly", "--dataset", "canada", "--eval", "3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert "3: 576" in lines
    assert any(line.startswith("t^12 - 15t^11 + ") for line in lines)


def test_poly_france(capsys: pytest.CaptureFixture[str]):
    args = ["poly", "--dataset", "france", "--format", "json"]
    for t in (1, 2, 3, 4):
        args += ["--eval", str(t)]
    assert main(args) == 0

    doc = _json(capsys)
    assert doc["graph"] == {
        "name": "france",
        "vertices": 12,
        "edges": 23,
        "components": 1,
    }
    assert doc["strategy"] == "auto"
    assert doc["evaluations"] == {"1": "0", "2": "0", "3": "0", "4": "5184"}
    assert doc["polynomial"][:3] == ["1", "-23", "241"]
    assert doc["polynomial"][-1] == "0"
    assert doc["reference"]["coefficients_match"] is True
    assert doc["report"] is None and doc["trace"] is None


def test_poly_trace(capsys: pytest.CaptureFixture[str]):
    assert main(["poly", "--dataset", "canada", "--trace", "--format", "json"]) == 0
    trace = _json(capsys)["trace"]
    assert trace["nodes"] >= 1
    assert set(trace["counts"]) == {
        "component_split",
        "clique_split",
        "delete_contract",
        "closed_form",
        "memo_hit",
    }
    assert trace["counts"]["clique_split"] >= 1


def test_poly_from_file(tmp_path: pathlib.Path, capsys: pytest.CaptureFixture[str]):
    edges = tmp_path.joinpath("triangle.edges")
    edges.write_text("# a triangle\nx y\ny z\nz x\nlonely\n")
    assert main(["poly", str(edges), "--format", "json"]) == 0

    doc = _json(capsys)
    assert doc["graph"]["name"] == "triangle"
    assert doc["graph"]["components"] == 2
    assert doc["polynomial"] == ["1", "-3", "2", "0", "0"]
    assert doc["text"] == "t^4 - 3t^3 + 2t^2"
    assert doc["paper_claims"] == [] and doc["reference"] is None


@pytest.mark.parametrize("strategy", ["auto", "naive", "memo_only"])
def test_poly_strategies(tmp_path: pathlib.Path, capsys, strategy: str):
    edges = tmp_path.joinpath("c5.edges")
    edges.write_text("a b\nb c\nc d\nd e\ne a\n")
    args = ["poly", str(edges), "--strategy", strategy, "--format", "json"]
    assert main(args) == 0

    doc = _json(capsys)
    assert doc["strategy"] == strategy
    assert doc["polynomial"] == ["1", "-5", "10", "-10", "4", "0"]


def test_json_is_deterministic(capsys: pytest.CaptureFixture[str]):
    docs = []
    for _ in range(2):
        assert main(["poly", "--dataset", "canada", "--format", "json"]) == 0
        doc = _json(capsys)
        assert doc.pop("timing")["seconds"] >= 0
        docs.append(doc)
    assert docs[0] == docs[1]


def test_count(capsys: pytest.CaptureFixture[str]):
    assert main(["count", "--dataset", "canada", "-k", "3"]) == 0
    assert _last_line(capsys) == "576"

    assert main(["count", "--dataset", "canada", "-k", "0"]) == 0
    assert _last_line(capsys) == "0"

    assert main(["count", "--dataset", "canada-13", "-k", "3", "--format", "json"]) == 0
    assert _json(capsys) == {"t": 3, "count": "1728"}

    assert main(["count", "--dataset", "canada", "-k", "-1"]) == 2


def test_verify(capsys: pytest.CaptureFixture[str]):
    assert main(["verify", "--dataset", "france", "--format", "json"]) == 0
    report = _json(capsys)["report"]
    assert {c["status"] for c in report["checks"]} == {"pass"}
    assert report["components"] == 1

    assert main(["verify", "--dataset", "canada-13"]) == 0
    assert "13 vertices, 15 edges, 2 component(s)" in capsys.readouterr().out


@pytest.mark.parametrize(
    "fault",
    [
        "degree",
        "monic",
        "edge_coefficient",
        "constant_term",
        "alternating_signs",
        "lowest_power",
        "coefficient_sum",
    ],
)
def test_verify_injected_fault(capsys: pytest.CaptureFixture[str], fault: str):
    args = ["verify", "--dataset", "canada", "--inject-fault", fault]
    assert main(args + ["--format", "json"]) == 1

    checks = {c["name"]: c["status"] for c in _json(capsys)["report"]["checks"]}
    assert checks[fault] == "fail"


def test_input_errors(tmp_path: pathlib.Path, capsys: pytest.CaptureFixture[str]):
    assert main(["poly", "--dataset", "atlantis"]) == 2
    assert "Unknown dataset 'atlantis'" in capsys.readouterr().err

    bad = tmp_path.joinpath("loop.edges")
    bad.write_text("a b\nb b\n")
    assert main(["poly", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().err

    assert main(["poly", str(tmp_path.joinpath("missing.edges"))]) == 2
    assert main(["poly"]) == 2

    with pytest.raises(SystemExit) as exc_info:
        main(["poly", "--dataset", "canada", "--budget", "0"])
    assert exc_info.value.code == 2


def test_budget_exceeded(capsys: pytest.CaptureFixture[str]):
    assert main(["poly", "--dataset", "france", "--budget", "3"]) == 3
    assert "Node budget of 3 exceeded" in capsys.readouterr().err


def test_datasets(capsys: pytest.CaptureFixture[str]):
    assert main(["datasets", "--format", "json"]) == 0
    rows = _json(capsys)
    assert [(r["name"], r["vertices"], r["edges"]) for r in rows] == [
        ("canada", 12, 15),
        ("canada-13", 13, 15),
        ("france", 12, 23),
        ("usa", 48, 105),
        ("usa-full", 50, 105),
    ]

    assert main(["datasets"]) == 0
    assert "Embedded datasets" in capsys.readouterr().out


def test_export(tmp_path: pathlib.Path, capsys: pytest.CaptureFixture[str]):
    target = tmp_path.joinpath("canada.edges")
    assert main(["export", "--dataset", "canada", "-o", str(target)]) == 0
    assert parse_edge_list(target.read_text()) == dataset("canada").graph

    assert main(["export", "--dataset", "usa-full"]) == 0
    exported = parse_edge_list(capsys.readouterr().out)
    assert exported == dataset("usa-full").graph
    assert exported.labels == dataset("usa-full").graph.labels


def test_theorem(capsys: pytest.CaptureFixture[str]):
    assert main(["theorem", "--max", "6", "--format", "json"]) == 0
    doc = _json(capsys)
    assert doc["all_match"] is True
    assert [(r["m"], r["n"]) for r in doc["rows"]] == [
        (4, 5),
        (4, 6),
        (5, 5),
        (5, 6),
        (6, 6),
        (4, 4),
    ]


@pytest.mark.slow
def test_count_usa(capsys: pytest.CaptureFixture[str]):
    assert main(["count", "--dataset", "usa", "-k", "2"]) == 0
    assert _last_line(capsys) == "0"


@pytest.mark.slow
def test_usa_full_is_usa_times_t_squared(capsys: pytest.CaptureFixture[str]):
    assert main(["count", "--dataset", "usa-full", "-k", "4"]) == 0
    assert _last_line(capsys) == str(16 * 12811591729152)


def test_version(capsys: pytest.CaptureFixture[str]):
    with pytest.raises(SystemExit) as exc_info:
        main(["--version"])
    assert exc_info.value.code == 0
    assert capsys.readouterr().out.strip() == "chromapoly 0.1.0"
