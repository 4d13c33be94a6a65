import pytest

from chromapoly.datasets import dataset, parse_edge_list, serialize_edge_list
from chromapoly.exceptions import EdgeListParseError
from chromapoly.types.graph import Graph


def test_parse_path():
    g = parse_edge_list("a b\nb c\n")
    assert g.n == 3
    assert g.labels == ("a", "b", "c")
    assert [tuple(e) for e in g.sorted_edges()] == [(0, 1), (1, 2)]


def test_parse_comments_and_isolated():
    text = """
    # header line
    x y   # trailing comment
    z
    y w
    """
    g = parse_edge_list(text)
    assert g.labels == ("x", "y", "z", "w")
    assert g.number_of_edges == 2
    assert g.degree(g.index_of("z")) == 0


def test_parse_empty():
    assert parse_edge_list("") == Graph(0)
    assert parse_edge_list("# nothing here\n\n").n == 0


@pytest.mark.parametrize(
    "text, line_number",
    [
        ("a a\n", 1),
        ("a b\nb c\nb a\n", 3),
        ("a b\n\nc d e\n", 3),
    ],
    ids=["self-loop", "duplicate", "malformed"],
)
def test_parse_errors(text: str, line_number: int):
    with pytest.raises(EdgeListParseError) as exc_info:
        parse_edge_list(text)
    assert exc_info.value.line_number == line_number
    assert exc_info.value.exit_code == 2
    assert str(exc_info.value).startswith(f"line {line_number}:")


def test_serialize_keeps_ids_and_labels():
    g = parse_edge_list("a b\nlonely\nb c\nc a\n")
    text = serialize_edge_list(g, header=["triangle plus one"])
    assert text.startswith("# triangle plus one\n")
    assert "lonely\n" in text

    again = parse_edge_list(text)
    assert again == g
    assert again.labels == g.labels


def test_serialize_dataset():
    canada = dataset("canada-13").graph
    assert parse_edge_list(serialize_edge_list(canada)) == canada


def test_serialize_rejects_bad_names():
    with pytest.raises(ValueError):
        serialize_edge_list(Graph(2, [(0, 1)], labels=["two words", "b"]))
    with pytest.raises(ValueError):
        serialize_edge_list(Graph(1, labels=["#hash"]))
