import pytest

from twolift import (
    VERDICT,
    BudgetExceededError,
    FamilyBase,
    Graph,
    Settings,
    certify_ramanujan,
    complete_bipartite,
    cover_bound,
    read_edge_list,
    read_signing,
    run_family,
    two_lift,
)


def test_family_bases():
    regular = FamilyBase.regular(3)
    assert regular.graph == complete_bipartite(3, 3)
    assert regular.name == "regular(3)"

    biregular = FamilyBase.biregular(3, 4)
    assert biregular.graph.vertex_count == 7
    assert biregular.name == "biregular(3, 4)"
    assert cover_bound(biregular.graph).parameters == (3, 4)

    custom = FamilyBase.from_graph(complete_bipartite(2, 2), "square")
    assert custom.name == "square"


def test_family_base_validation():
    triangle = Graph(vertex_count=3, edges=[(0, 1), (1, 2), (0, 2)])
    with pytest.raises(ValueError, match="not a regular or biregular bipartite"):
        FamilyBase.from_graph(triangle)

    with pytest.raises(ValueError, match="not a regular or biregular bipartite"):
        FamilyBase.from_graph(Graph(vertex_count=2))

    with pytest.raises(ValueError, match="at least 1"):
        FamilyBase.regular(0)


def test_family_without_lifts():
    run = run_family(FamilyBase.regular(3), 0)
    assert run.passed
    assert [g.vertex_count for g in run.graphs] == [6]
    (step,) = run.steps
    assert step.signing is None
    assert step.certificate.verdict is VERDICT.ALL_BELOW
    assert step.paths == {}
    assert run.out_dir is None


def test_family_step_budget():
    with pytest.raises(BudgetExceededError, match="3 lift steps exceed the budget"):
        run_family(FamilyBase.regular(3), 3)

    with pytest.raises(ValueError, match="non-negative"):
        run_family(FamilyBase.regular(3), -1)


def test_family_accepts_a_graph():
    run = run_family(complete_bipartite(2, 2), 0)
    assert run.base.name == "custom"
    assert run.passed


def test_single_lift(tmp_path):
    run = run_family(FamilyBase.regular(3), 1, tmp_path / "run")
    assert run.passed
    assert [g.vertex_count for g in run.graphs] == [6, 12]
    assert [g.edge_count for g in run.graphs] == [9, 18]
    first, second = run.steps
    assert run.graphs[1] == two_lift(run.graphs[0], first.signing)
    assert first.signing_certificate.passed
    assert second.signing is None
    # every graph of the run certifies on its own
    assert all(certify_ramanujan(g).passed for g in run.graphs)

    out = tmp_path / "run"
    assert sorted(p.name for p in out.iterdir()) == [
        "certificate_0.json",
        "certificate_1.json",
        "descent_0.json",
        "graph_0.el",
        "graph_1.el",
        "signing_0.sign",
        "summary.parquet",
    ]
    assert first.paths["signing"] == out / "signing_0.sign"
    assert read_signing(out / "signing_0.sign") == first.signing


@pytest.mark.slow
def test_regular_tower(tmp_path):
    run = run_family(FamilyBase.regular(3), 2, tmp_path)
    assert run.passed
    assert [g.vertex_count for g in run.graphs] == [6, 12, 24]
    for k in range(3):
        assert (tmp_path / f"graph_{k}.el").exists()
        assert (tmp_path / f"certificate_{k}.json").exists()
        g = read_edge_list(tmp_path / f"graph_{k}.el")
        assert g == run.graphs[k]
        assert certify_ramanujan(g).passed
        assert all(degree == 3 for degree in g.degrees)


@pytest.mark.slow
def test_biregular_tower():
    run = run_family(FamilyBase.biregular(3, 4), 1)
    assert run.passed
    assert [g.vertex_count for g in run.graphs] == [7, 14]
    assert 3.14 < float(run.bound) < 3.15


@pytest.mark.slow
def test_longer_tower_with_raised_budget():
    settings = Settings(max_family_steps=3)
    run = run_family(FamilyBase.regular(2), 3, settings=settings)
    assert [g.vertex_count for g in run.graphs] == [4, 8, 16, 32]
    assert run.passed
