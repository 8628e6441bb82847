import pytest

import lacost


def test_boundary_counts():
    assert lacost.boundary_adjacency_count(lacost.Geometry.SQUARE, 10) == 116
    assert lacost.boundary_adjacency_count(lacost.Geometry.HEXAGONAL, 7) == 54


def test_tally_and_betas():
    t = lacost.tally(lacost.Geometry.HEXAGONAL, 10, "halves")
    assert (t["x_total"], t["dot_total"]) == (78, 38)
    b = lacost.betas_from_counts(116, 108)
    assert b.beta1 == pytest.approx(108 / 224)
    assert b.beta21 + b.beta22 == pytest.approx(b.beta2)


def test_costs():
    assert lacost.paging_cost_cs(10) == pytest.approx(133.98)
    cs = lacost.update_cost_cs(10, lacost.betas_from_counts(116, 108))
    assert lacost.update_cost_as(cs, [0.8, 0.1, 0.05]) == pytest.approx(0.05 * cs)
    assert lacost.paging_cost_as(1, [0.8, 0.1, 0.05]) == pytest.approx(31.0, abs=0.01)
    assert lacost.expected_las_paged([0.2] * 5) == pytest.approx(3.0)


def test_savings_optimum():
    p = lacost.SavingsParams()
    assert lacost.optimum_k(p)[0] == 6
    p.cost_next_paging = 1.5
    assert lacost.optimum_k(p)[0] == 4


def test_simulators():
    sim = lacost.walk_beta1(lacost.Geometry.SQUARE, 10, "quadrants", 200_000, 3)
    assert sim == lacost.walk_beta1(lacost.Geometry.SQUARE, 10, "quadrants", 200_000, 3)
    assert abs(sim["empirical_beta1"] - 108 / 224) < 0.02
    mean, se = lacost.simulate_paging(1, [0.8, 0.1, 0.05], 50_000, 4)
    assert abs(mean - lacost.paging_cost_as(1, [0.8, 0.1, 0.05])) < 4 * se


def test_scenario_commands():
    assert "116" in lacost.run_betas()
    assert lacost.run_figure(8).startswith("#")
    assert "grid.m = 10" in lacost.default_scenario()


def test_errors_map_to_python():
    with pytest.raises(lacost.LacostError):
        lacost.boundary_adjacency_count(lacost.Geometry.SQUARE, 1)
    with pytest.raises(ValueError):
        lacost.run_betas("grid.colour = red\n")
    with pytest.raises(lacost.LacostError):
        lacost.update_cost_as(1.0, [0.5, 0.9])
