import pytest

import schurlab


def test_count_figure_coloring():
    k = schurlab.count("schur", "R4 B6 R1")
    assert k["total"] == k["mono"] + k["nonmono"] == schurlab.total_count("schur", 11)
    assert schurlab.count("schur", "R3")["mono"] == 2


def test_delta_matches_recount():
    before = schurlab.count("schur", "R5")["mono"]
    after = schurlab.count("schur", "R1 B1 R3")["mono"]
    assert schurlab.mono_delta("schur", "R5", 2, "B") == after - before == -4


def test_exhaustive_and_rainbow():
    rep = schurlab.exhaustive("schur", 12)
    assert rep["explored"] == 2 ** 11
    assert rep["best_value"] <= schurlab.count("schur", schurlab.canonical_coloring("schur", 12))["mono"]
    rb = schurlab.exhaustive("schur", 10, r=3, objective="max-rainbow", threads=2)
    assert rb["best_value"] == 11
    con = schurlab.exhaustive("schur", 12, constraint=[5, 7])
    assert con["explored"] == 792


def test_errors():
    with pytest.raises(ValueError):
        schurlab.count("schur", "R2 X1")
    with pytest.raises(schurlab.BudgetExceeded):
        schurlab.exhaustive("schur", 40, budget=1000)


def test_theory():
    assert schurlab.predicted_min("schur", 22) == pytest.approx(22.0)
    assert schurlab.canonical_coloring("x+ay=z:a=2", 11) == "R3 B7 R1"
    fit = schurlab.verify("schur", [22, 44, 88, 176])
    assert abs(fit["alpha_fit"] - 1 / 22) / (1 / 22) < 0.05


def test_search_modes():
    sweep = schurlab.block_sweep("schur", 110, "RBR")
    assert len(sweep["boundaries"]) == 2
    loc = schurlab.local_search("schur", 20, restarts=3, seed=2)
    assert loc["heuristic"]
