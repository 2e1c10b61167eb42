import json
from fractions import Fraction

import pyarrow.parquet as pq
import pytest
from sympy import Poly

from twolift import (
    FamilyBase,
    FormatError,
    Graph,
    IntPoly,
    PartialSigning,
    Signing,
    build_path_tree,
    complete_bipartite,
    family_summary_table,
    format_edge_list,
    format_polynomial,
    format_signing,
    matching_counts,
    parse_edge_list,
    parse_polynomial,
    parse_signing,
    read_edge_list,
    read_signing,
    run_family,
    write_edge_list,
    write_family_summary,
    write_signing,
)
from twolift._poly.intpoly import X
from twolift._serialization import format_path_labels, matching_counts_to_json


def test_edge_list_format():
    g = complete_bipartite(1, 2)
    assert format_edge_list(g) == "3 2\n0 1\n0 2\n"
    assert parse_edge_list(format_edge_list(g)) == g


def test_edge_list_keeps_edge_order():
    g = parse_edge_list("4 3\n2 3\n\n1 0\n0 3\n")
    assert g.edges == ((2, 3), (0, 1), (0, 3))
    assert g.vertex_count == 4


def test_edge_list_file(tmp_path):
    g = complete_bipartite(3, 3)
    path = tmp_path / "k33.el"
    write_edge_list(g, path)
    assert read_edge_list(path) == g


@pytest.mark.parametrize(
    "text,line,match",
    [
        ("", 0, "empty edge list"),
        ("3\n", 1, "expected 2 integers"),
        ("3 2\n0 1\n", 1, "header announces 2 edges but 1"),
        ("3 2\n0 1\n1 1\n", 3, "self-loop at vertex 1"),
        ("3 2\n0 1\n1 0\n", 3, "duplicate edge"),
        ("3 1\n0 3\n", 2, "outside of 0..2"),
        ("3 1\n0 x\n", 2, "expected integers"),
    ],
)
def test_edge_list_errors(text, line, match):
    with pytest.raises(FormatError, match=match) as excinfo:
        parse_edge_list(text, source="bad.el")
    assert excinfo.value.line == line
    assert str(excinfo.value).startswith("bad.el")


def test_error_location_prefix():
    with pytest.raises(FormatError, match=r"^bad.el:3: self-loop"):
        parse_edge_list("3 2\n0 1\n1 1\n", source="bad.el")


def test_signing_format(tmp_path):
    signing = Signing(signs=[1, -1, -1])
    assert format_signing(signing) == "+1\n-1\n-1\n"
    assert parse_signing("+1\n1\n-1\n") == Signing(signs=[1, 1, -1])

    path = tmp_path / "s.sign"
    write_signing(signing, path)
    assert read_signing(path) == signing


def test_partial_signing_format():
    partial = parse_signing("+1\n0\n-1\n", partial=True)
    assert partial == PartialSigning(assignments=[1, 0, -1])
    assert format_signing(partial) == "+1\n0\n-1\n"


def test_signing_errors():
    with pytest.raises(FormatError, match="expected \\+1 or -1, got '0'") as excinfo:
        parse_signing("+1\n-1\n0\n")
    assert excinfo.value.line == 3

    with pytest.raises(FormatError, match="expected \\+1, -1 or 0"):
        parse_signing("+1\n2\n", partial=True)


def test_polynomial_format():
    f = IntPoly([-6, 0, 18, 0, -9, 0, 1])
    text = format_polynomial(f, "matching polynomial of K_3_3")
    assert text == "# matching polynomial of K_3_3\n-6 0 18 0 -9 0 1\n"
    assert parse_polynomial(text) == f
    assert format_polynomial(IntPoly()) == "0\n"


def test_rational_polynomial_is_scaled():
    text = format_polynomial(Poly(X**2 / 2 - 1, X))
    assert text == "# scaled by 2\n-2 0 1\n"
    assert parse_polynomial(text) == IntPoly([-2, 0, 1])


def test_polynomial_errors():
    with pytest.raises(FormatError, match="one line of coefficients, got 2"):
        parse_polynomial("1 2\n3 4\n")

    with pytest.raises(FormatError, match="expected integers") as excinfo:
        parse_polynomial("# comment\n1 1/2\n")
    assert excinfo.value.line == 2


def test_path_labels():
    triangle = Graph(vertex_count=3, edges=[(0, 1), (1, 2), (0, 2)])
    labels = format_path_labels(build_path_tree(triangle, 0))
    assert labels == "0: 0\n1: 0,1\n2: 0,1,2\n3: 0,2\n4: 0,2,1\n"


def test_matching_counts_json():
    counts = matching_counts(complete_bipartite(3, 3))
    data = json.loads(matching_counts_to_json(counts))
    assert data == {"n": 6, "counts": [1, 9, 18, 6]}


def test_family_summary(tmp_path):
    run = run_family(FamilyBase.regular(3), 0)
    table = family_summary_table(run)
    assert table.column_names == [
        "step",
        "vertices",
        "edges",
        "verdict",
        "lambda_max_lo",
        "lambda_max_hi",
    ]
    row = table.to_pylist()[0]
    assert row["step"] == 0
    assert row["vertices"] == 6
    assert row["edges"] == 9
    assert row["verdict"] == "ALL_BELOW"
    assert Fraction(row["lambda_max_lo"]) <= 0 <= Fraction(row["lambda_max_hi"])

    path = tmp_path / "summary.parquet"
    write_family_summary(run, path)
    assert pq.read_table(path).equals(table)
