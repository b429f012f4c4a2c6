"""Inequality chains, parameter solving, and the end-to-end counterexample."""

import math
from fractions import Fraction

import pytest

from extremal_count import (Graph, complete_bipartite, complete_graph,
                            cycle_graph, edge_bound_check,
                            optimal_Delta_fraction, solve_theorem2_params,
                            theorem2_end_to_end, thm1_chain_check,
                            thm1_coefficient, thm1_sweep)
from extremal_count.bounds import admissible_x, sweep_pairs


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def test_edge_bound_examples():
    report = edge_bound_check(complete_bipartite(2, 3))
    assert (report.edges, report.bound) == (6, 6)
    assert report.holds and report.equality and report.equality_is_complete_bipartite
    report = edge_bound_check(cycle_graph(5))
    assert (report.edges, report.bound) == (5, 6)
    assert report.holds and not report.equality
    report = edge_bound_check(petersen())
    assert (report.edges, report.bound) == (15, 21)
    assert report.holds


def test_edge_bound_rejects_triangles():
    with pytest.raises(ValueError):
        edge_bound_check(complete_graph(3))


def test_thm1_coefficient_values():
    assert thm1_coefficient(2, 0).value == Fraction(1, 2)
    boundary = thm1_coefficient(17, 1)
    assert boundary.exceeds_two_fifths
    violating = thm1_coefficient(5, 3)
    assert violating.value == Fraction(678223072849, 5120000000000)
    assert not violating.exceeds_two_fifths


def test_thm1_coefficient_half_when_defect_zero():
    for x in range(2, 40):
        assert thm1_coefficient(x, 0).value == Fraction(1, 2)


def test_thm1_coefficient_rejects_small_x():
    with pytest.raises(ValueError):
        thm1_coefficient(1, 0)


def test_optimal_delta_values():
    assert optimal_Delta_fraction(2, 0) == Fraction(1, 2)
    assert optimal_Delta_fraction(3, 0) == Fraction(1, 2)
    assert optimal_Delta_fraction(2, 1) == Fraction(3, 4)
    with pytest.raises(ValueError):
        optimal_Delta_fraction(1, 0)


def test_optimal_delta_matches_grid_argmax():
    grid = 10 ** 4
    for x in range(2, 31):
        for d in range(0, 6):
            frac = optimal_Delta_fraction(x, d)
            a, b = 2 * d + x - 1, x - 1
            best_t, best_val = 0, -math.inf
            for i in range(1, grid):
                t = i / grid
                val = a * math.log(t) + (b * math.log(1 - t) if b else 0.0)
                if val > best_val:
                    best_val, best_t = val, t
            assert abs(float(frac) - best_t) <= 1.0 / grid + 1e-12


def test_chain_boundary_pair():
    report = thm1_chain_check(17, 1)
    assert report.hypothesis_ok and report.all_hold
    assert report.expressions[-1] == Fraction(105, 256)
    assert report.expressions[-2] == Fraction(105, 256)  # d^2 = (x-1)/16 exactly


def test_chain_collapses_at_zero_defect():
    report = thm1_chain_check(2, 0)
    assert report.all_hold
    assert all(e == Fraction(1, 2) for e in report.expressions[:6])


def test_chain_large_x():
    report = thm1_chain_check(50, 1)
    assert report.hypothesis_ok and report.all_hold
    assert report.expressions[0] == thm1_coefficient(50, 1).value


def test_chain_reports_violated_hypothesis():
    report = thm1_chain_check(5, 3)
    assert not report.hypothesis_ok
    assert not report.all_hold
    failing = [s.name for s in report.steps if not s.holds]
    assert failing  # the arithmetic shows which steps break


def test_bernoulli_step_under_weak_hypothesis():
    # (1 - d/(x-1))^(2d) >= 1 - 2d^2/(x-1) whenever d <= x-1
    for x in range(2, 40):
        for d in range(0, x):
            r = Fraction(d, x - 1)
            if r > 1:
                continue
            assert (1 - r) ** (2 * d) >= 1 - 2 * Fraction(d * d, x - 1)


def test_sweep_smoke():
    report = thm1_sweep(60)
    assert not report.violations
    assert report.pairs_checked == sum(1 for _ in sweep_pairs(60))


def test_solve_params_lambda_one():
    params = solve_theorem2_params(1)
    assert Fraction(1, 2) < params.a < 1
    assert 0 < params.c < (1 - params.a) / 3
    assert params.b == 1 - params.a - 3 * params.c
    assert params.p_float > 1
    assert params.all_hold
    # direct sanity at a hand-checkable point: 0.36 * 0.4 > 0.125
    a = Fraction(3, 5)
    assert a ** 2 * (1 - a) > Fraction(1, 8)


@pytest.mark.parametrize("lam", [Fraction(1, 2), Fraction(1), Fraction(2)])
def test_solve_params_invariants(lam):
    params = solve_theorem2_params(lam)
    assert params.all_hold
    assert params.x_min >= 1
    u, w = lam.numerator, lam.denominator
    ratio = 2 * params.a * params.b ** 2 / params.c ** 3
    lhs = (params.a ** ((u + w) * params.x_min)
           * params.b ** (w * params.x_min)
           * Fraction(2) ** ((u + 2 * w) * params.x_min))
    assert lhs > ratio ** w


def test_admissible_x_alignment():
    params = solve_theorem2_params(1)
    x = admissible_x(Fraction(1), params.x_min)
    assert x >= params.x_min and (x % 2 == 0)
    assert admissible_x(Fraction(1, 2), 3) == 4  # d = x/4 integer needs x = 4


def test_theorem2_end_to_end_certifies():
    cert = theorem2_end_to_end(1)
    assert cert.holds
    assert cert.d * 2 == cert.x  # lambda = 1
    assert cert.pattern_size == 2 * cert.x + 2 * cert.d
    assert cert.coeff_c5 > cert.coeff_k2
    assert cert.coeff_k2 == 2 * Fraction(1, 2) ** cert.pattern_size
    assert cert.coeff_c5 >= cert.single_hom
    by_name = {c.name: c.holds for c in cert.checks}
    assert by_name["single hom > 2 (1/2)^(2x + lambda x)  [pattern-size exponent]"]
    # the displayed exponent 2x + 2*lambda does not hold at x_min: recorded,
    # not assumed (the two forms only agree when lambda*x = 2*lambda)
    displayed = next(v for k, v in by_name.items() if "displayed exponent" in k)
    assert displayed is False


def test_theorem2_below_threshold_reports_honestly():
    cert = theorem2_end_to_end(1, x=4)
    assert not cert.holds
    assert cert.coeff_c5 < cert.coeff_k2


def test_theorem2_rejects_incompatible_x():
    with pytest.raises(ValueError):
        theorem2_end_to_end(1, x=5)  # lambda*x odd
