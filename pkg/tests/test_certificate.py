import json
from fractions import Fraction

from twolift import (
    COMPARISON,
    METHOD,
    VERDICT,
    EigenvalueInterval,
    GraphSummary,
    TrailStep,
    certify_ramanujan,
    complete_bipartite,
    find_good_signing,
    regular_bound,
)
from twolift._certificate import bound_to_dict
from twolift._serialization import certificate_to_json


def test_graph_summary():
    summary = GraphSummary.of(complete_bipartite(2, 3))
    assert summary.to_dict() == {
        "n": 5,
        "m": 6,
        "degrees": {"2": 3, "3": 2},
        "bipartite": True,
        "components": 1,
    }


def test_eigenvalue_interval():
    interval = EigenvalueInterval(Fraction(-7, 4), Fraction(-3, 2), 2)
    assert interval.to_dict() == {
        "lo": "-7/4",
        "hi": "-3/2",
        "multiplicity": 2,
        "trivial": False,
    }


def test_trail_step():
    step = TrailStep(
        edge=3,
        endpoints=(1, 4),
        choice=-1,
        comparison=COMPARISON.GREATER,
        descent=COMPARISON.LESS,
    )
    assert step.to_dict() == {
        "edge": 3,
        "endpoints": [1, 4],
        "choice": -1,
        "comparison": "GREATER",
        "descent": "LESS",
    }
    checked = TrailStep(3, (1, 4), 1, COMPARISON.LESS, COMPARISON.EQUAL, True)
    assert checked.to_dict()["interlacing"] is True


def test_bound_to_dict():
    data = bound_to_dict(regular_bound(3))
    assert data["kind"] == "regular"
    assert data["parameters"] == [3]
    assert data["minimal_poly"] == [-8, 0, 1]
    assert data["degenerate"] is False
    lo, hi = (Fraction(t) for t in data["interval"])
    assert lo < hi
    assert lo**2 < 8 <= hi**2


def test_signing_certificate_to_dict():
    signing, certificate = find_good_signing(complete_bipartite(3, 3))
    data = certificate.to_dict()
    assert set(data) == {
        "graph",
        "bound",
        "eigenvalues",
        "verdict",
        "method",
        "trail",
        "checks",
        "signing",
        "two_sided",
        "approx",
    }
    assert data["method"] == "greedy"
    assert data["signing"] == list(signing.signs)
    assert len(data["trail"]) == 9
    assert data["checks"][0]["name"] == "cover"
    assert data["bound"]["kind"] == "matching-root"
    for eigenvalue in data["eigenvalues"]:
        assert "/" in eigenvalue["lo"]
        assert "/" in eigenvalue["hi"]


def test_ramanujan_certificate_json():
    certificate = certify_ramanujan(complete_bipartite(3, 3))
    assert certificate.method is METHOD.DIRECT
    data = json.loads(certificate_to_json(certificate))
    assert data["verdict"] == VERDICT.ALL_BELOW.value
    assert data["method"] == "direct"
    assert data["trail"] == []
    assert "signing" not in data
    assert "checks" not in data
    assert data["notes"] == ["trivial eigenvalue 3 on 1 components, -3 on 1"]
    values = [
        (Fraction(e["lo"]), Fraction(e["hi"]), e["trivial"])
        for e in data["eigenvalues"]
    ]
    assert [trivial for _, _, trivial in values] == [True, False, True]
    assert values[0][0] <= -3 <= values[0][1]
    assert values[2][0] <= 3 <= values[2][1]
