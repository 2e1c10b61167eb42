"""Text, JSON and Parquet forms of graphs, signings, polynomials and certificates
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import TYPE_CHECKING, Iterator, List, Optional, Tuple, Union

import pyarrow as pa
import pyarrow.parquet as pq
from sympy import Poly

from twolift._certificate import Certificate
from twolift._errors import FormatError
from twolift._graph import Graph, PartialSigning, Signing
from twolift._matching import MatchingCounts
from twolift._path_tree import PathTree
from twolift._poly import IntPoly
from twolift._utils import format_rational

if TYPE_CHECKING:
    from twolift._family import FamilyRun

DEFAULT_PARQUET_COMPRESSION = "ZSTD"
DEFAULT_PARQUET_COMPRESSION_LEVEL = 7

PathLike = Union[str, Path]


def _lines(text: str) -> Iterator[Tuple[int, str]]:
    """Non-blank lines with their 1-based line numbers."""
    for number, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            yield number, line.strip()


def _parse_ints(
    line: str, count: Optional[int], source: str, number: int
) -> List[int]:
    fields = line.split()
    if count is not None and len(fields) != count:
        raise FormatError(
            f"expected {count} integers, got {len(fields)}", source=source, line=number
        )
    try:
        return [int(field) for field in fields]
    except ValueError:
        raise FormatError(
            f"expected integers, got {line!r}", source=source, line=number
        ) from None


def format_edge_list(g: Graph) -> str:
    """`"n m"` on the first line, then one `"u v"` line per edge in edge order."""
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, *, source: PathLike = "<string>") -> Graph:
    """Parse the edge-list format.

    Raises:
        FormatError: with the offending line number.
    """
    source = str(source)
    lines = list(_lines(text))
    if not lines:
        raise FormatError(
            "empty edge list, expected a header line 'n m'", source=source
        )

    number, header = lines[0]
    n, m = _parse_ints(header, 2, source, number)
    if n < 0 or m < 0:
        raise FormatError(
            "vertex and edge counts must be non-negative", source=source, line=number
        )
    if len(lines) - 1 != m:
        raise FormatError(
            f"header announces {m} edges but {len(lines) - 1} edge lines follow",
            source=source,
            line=number,
        )

    edges = []
    seen = set()
    for number, line in lines[1:]:
        u, v = _parse_ints(line, 2, source, number)
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", source=source, line=number)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(
                f"edge ({u}, {v}) has an endpoint outside of 0..{n - 1}",
                source=source,
                line=number,
            )
        edge = (min(u, v), max(u, v))
        if edge in seen:
            raise FormatError(f"duplicate edge {edge}", source=source, line=number)
        seen.add(edge)
        edges.append(edge)

    return Graph(vertex_count=n, edges=edges)


def read_edge_list(path: PathLike) -> Graph:
    return parse_edge_list(Path(path).read_text(), source=path)


def write_edge_list(g: Graph, path: PathLike) -> None:
    Path(path).write_text(format_edge_list(g))


def format_signing(s: Union[Signing, PartialSigning]) -> str:
    """One line per edge: `"+1"`, `"-1"`, or `"0"` for an unfixed edge."""
    values = s.signs if isinstance(s, Signing) else s.assignments
    names = {1: "+1", -1: "-1", 0: "0"}
    return "".join(names[value] + "\n" for value in values)


def parse_signing(
    text: str, *, partial: bool = False, source: PathLike = "<string>"
) -> Union[Signing, PartialSigning]:
    """Parse the signing format; with `partial=True`, `"0"` marks an unfixed edge.

    Raises:
        FormatError: with the offending line number.
    """
    source = str(source)
    allowed = {"+1": 1, "1": 1, "-1": -1}
    if partial:
        allowed["0"] = 0

    values = []
    for number, line in _lines(text):
        if line not in allowed:
            expected = "+1, -1 or 0" if partial else "+1 or -1"
            raise FormatError(
                f"expected {expected}, got {line!r}", source=source, line=number
            )
        values.append(allowed[line])

    if partial:
        return PartialSigning(assignments=values)
    return Signing(signs=values)


def read_signing(
    path: PathLike, *, partial: bool = False
) -> Union[Signing, PartialSigning]:
    return parse_signing(Path(path).read_text(), partial=partial, source=path)


def write_signing(s: Union[Signing, PartialSigning], path: PathLike) -> None:
    Path(path).write_text(format_signing(s))


def format_polynomial(f: Union[IntPoly, Poly], comment: Optional[str] = None) -> str:
    """Ascending integer coefficients on one line, after optional `#` comment lines.

    A rational sympy polynomial is scaled by a positive integer first, which is
    recorded in a comment.
    """
    lines = []
    if comment:
        lines.extend(f"# {line}" for line in comment.splitlines())
    if isinstance(f, Poly):
        factor, f = IntPoly.clear_denominators(f)
        if factor != 1:
            lines.append(f"# scaled by {factor}")
    coefficients = f.coefficients or (0,)
    lines.append(" ".join(str(c) for c in coefficients))
    return "\n".join(lines) + "\n"


def parse_polynomial(text: str, *, source: PathLike = "<string>") -> IntPoly:
    """Parse the polynomial format.

    Raises:
        FormatError: with the offending line number.
    """
    source = str(source)
    body = [(n, line) for n, line in _lines(text) if not line.startswith("#")]
    if len(body) != 1:
        raise FormatError(
            f"expected one line of coefficients, got {len(body)}",
            source=source,
            line=body[1][0] if len(body) > 1 else 0,
        )
    number, line = body[0]
    return IntPoly(_parse_ints(line, None, source, number))


def read_polynomial(path: PathLike) -> IntPoly:
    return parse_polynomial(Path(path).read_text(), source=path)


def format_path_labels(t: PathTree) -> str:
    """One `"vertex: v0,v1,...,vk"` line per path-tree vertex."""
    return "".join(
        f"{vertex}: {','.join(str(v) for v in label)}\n"
        for vertex, label in enumerate(t.labels)
    )


def matching_counts_to_json(counts: MatchingCounts) -> str:
    return json.dumps({"n": counts.vertex_count, "counts": list(counts.counts)})


def certificate_to_json(certificate: Certificate) -> str:
    return json.dumps(certificate.to_dict(), indent=2)


def write_certificate(certificate: Certificate, path: PathLike) -> None:
    Path(path).write_text(certificate_to_json(certificate) + "\n")


def _largest_nontrivial(
    certificate: Certificate,
) -> Tuple[Optional[str], Optional[str]]:
    nontrivial = [e for e in certificate.eigenvalues if not e.trivial]
    if not nontrivial:
        return None, None
    top = nontrivial[-1]
    return format_rational(top.lo), format_rational(top.hi)


def family_summary_table(run: FamilyRun) -> pa.Table:
    """One row per graph of a family run.

    `lambda_max_lo` and `lambda_max_hi` bound the largest non-trivial eigenvalue as
    `"num/den"` strings; they are null when every eigenvalue is trivial.
    """
    columns = {
        "step": [],
        "vertices": [],
        "edges": [],
        "verdict": [],
        "lambda_max_lo": [],
        "lambda_max_hi": [],
    }
    for step in run.steps:
        lo, hi = _largest_nontrivial(step.certificate)
        columns["step"].append(step.index)
        columns["vertices"].append(step.graph.vertex_count)
        columns["edges"].append(step.graph.edge_count)
        columns["verdict"].append(step.certificate.verdict.value)
        columns["lambda_max_lo"].append(lo)
        columns["lambda_max_hi"].append(hi)

    schema = pa.schema(
        [
            pa.field("step", pa.int32()),
            pa.field("vertices", pa.int64()),
            pa.field("edges", pa.int64()),
            pa.field("verdict", pa.string()),
            pa.field("lambda_max_lo", pa.string()),
            pa.field("lambda_max_hi", pa.string()),
        ]
    )
    return pa.table(columns, schema=schema)


def write_family_summary(run: FamilyRun, path: PathLike) -> None:
    pq.write_table(
        family_summary_table(run),
        str(path),
        compression=DEFAULT_PARQUET_COMPRESSION,
        compression_level=DEFAULT_PARQUET_COMPRESSION_LEVEL,
    )
