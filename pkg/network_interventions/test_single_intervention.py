import math

import numpy as np
import pytest

import network_interventions.netgame as ng
from network_interventions.intervention.single import (
    solve_single, stationarity_residual, shadow_price_limit, equal_payoff_single
)


def random_instance(seed, with_ahat=True):
    """ A random regular game on 3 to 6 players with weights in [0, 1] """
    rng = np.random.default_rng(seed)
    n = int(rng.integers(3, 7))
    w = np.triu(rng.uniform(0, 1, size=(n, n)), k=1)
    phi = float(rng.uniform(-0.9, 0.9)) / (n - 1)
    ahat = rng.uniform(0, 1, size=n) if with_ahat else np.zeros(n)
    cfg = ng.make_config(phi, ahat, w + w.T)
    return cfg, float(rng.uniform(0.1, 5.0)), rng


# solve_single()
@pytest.mark.parametrize('seed', range(50))
def test_shadow_price_with_zero_ahat(seed):
    cfg, c, _ = random_instance(seed, with_ahat=False)
    solution = solve_single(cfg, cfg.ghat, c)
    lam, _ = ng.spectrum(cfg.ghat).principal_pair(cfg.phi)
    assert abs(solution.mu_star - (1 - lam) ** -2) <= 1e-10
    assert solution.value == pytest.approx(c * (1 - lam) ** -2, rel=1e-12)
    assert solution.alignment == pytest.approx(1.0, abs=1e-10)


# solve_single()
@pytest.mark.parametrize('seed', range(20))
def test_budget_binds_and_first_order_conditions(seed):
    cfg, c, _ = random_instance(100 + seed)
    solution = solve_single(cfg, cfg.ghat, c)
    assert np.sum((solution.a_star - cfg.ahat) ** 2) == pytest.approx(c, rel=1e-9)
    assert solution.budget_used == pytest.approx(c, rel=1e-9)
    assert solution.mu_star > shadow_price_limit(cfg, cfg.ghat)
    scale = max(1.0, solution.value)
    assert stationarity_residual(cfg, cfg.ghat, solution) <= 1e-8 * scale
    assert ng.welfare(cfg, solution.a_star, cfg.ghat) == pytest.approx(solution.value, rel=1e-10)


# solve_single()
@pytest.mark.parametrize('seed', range(10))
def test_solution_beats_random_feasible_points(seed):
    cfg, c, rng = random_instance(200 + seed)
    solution = solve_single(cfg, cfg.ghat, c)
    for _ in range(200):
        direction = rng.normal(size=cfg.n)
        a = cfg.ahat + math.sqrt(c) * direction / np.linalg.norm(direction)
        assert ng.welfare(cfg, a, cfg.ghat) <= solution.value + 1e-10


# solve_single()
def test_value_increases_with_budget():
    cfg, _, _ = random_instance(7)
    values = [solve_single(cfg, cfg.ghat, c).value for c in (0.0, 0.5, 1.0, 2.0, 4.0)]
    assert all(later > earlier for earlier, later in zip(values, values[1:]))


# solve_single()
def test_zero_budget_keeps_ahat():
    cfg = ng.make_config(0.2, [0.4, 0.2, 0.6], [[0, .3, .5], [.3, 0, .7], [.5, .7, 0]])
    solution = solve_single(cfg, cfg.ghat, 0.0)
    assert np.allclose(solution.a_star, cfg.ahat, atol=1e-12)
    assert solution.value == pytest.approx(ng.welfare(cfg, cfg.ahat, cfg.ghat))
    assert math.isinf(solution.mu_star)


# solve_single()
def test_phi_zero_and_zero_ahat_targets_first_player():
    cfg = ng.make_config(0.0, [0, 0, 0], [[0, .3, .5], [.3, 0, .7], [.5, .7, 0]])
    solution = solve_single(cfg, cfg.ghat, 4.0)
    assert np.allclose(solution.a_star, [2.0, 0.0, 0.0])
    assert solution.value == pytest.approx(4.0)


# solve_single()
def test_degenerate_top_eigenspace():
    # ahat is orthogonal to the top eigenvector (1, 1, 1) of K3
    cfg = ng.make_config(0.2, [1.0, -1.0, 0.0], ng.make_complete(3, 1.0))
    beta_top = (1 - 0.4) ** -2
    beta_rest = (1 + 0.2) ** -2
    supremum = 2 * beta_rest ** 2 / (beta_top - beta_rest) ** 2

    large = solve_single(cfg, cfg.ghat, 4.0)
    assert large.degenerate_top
    assert large.mu_star == pytest.approx(beta_top)
    assert large.budget_used == pytest.approx(4.0)
    top_component = float(large.a_star @ (np.ones(3) / math.sqrt(3)))
    assert top_component ** 2 == pytest.approx(4.0 - supremum)

    small = solve_single(cfg, cfg.ghat, 0.1)
    assert not small.degenerate_top
    assert small.mu_star > beta_top
    assert small.budget_used == pytest.approx(0.1, rel=1e-9)


# solve_single()
def test_negative_budget_rejected():
    cfg, _, _ = random_instance(1)
    with pytest.raises(ng.PreconditionViolatedError):
        solve_single(cfg, cfg.ghat, -1.0)


# equal_payoff_single()
def test_equal_payoff_single_equalizes_payoffs():
    cfg = ng.make_config(0.15, np.zeros(4), [[0, .1, .4, .2], [.1, 0, .3, .6], [.4, .3, 0, .5], [.2, .6, .5, 0]])
    a, value = equal_payoff_single(cfg, 2.0)
    result = ng.equilibrium(cfg, a, cfg.ghat)
    assert np.allclose(result.payoffs, result.payoffs[0], rtol=1e-12)
    assert float(a @ a) == pytest.approx(2.0)
    assert result.welfare == pytest.approx(value)
    assert value < solve_single(cfg, cfg.ghat, 2.0).value
    with pytest.raises(ng.PreconditionViolatedError):
        equal_payoff_single(ng.make_config(-0.15, np.zeros(4), cfg.ghat), 2.0)


# solve_single()
def test_alignment_rises_with_budget():
    # K3 has a wide gap between β₁ and β₂, so alignment is close to 1 well before c is huge
    cfg = ng.make_config(0.2, [0.4, 0.2, 0.6], ng.make_complete(3, 1.0))
    norm2 = float(cfg.ahat @ cfg.ahat)
    alignments = [solve_single(cfg, cfg.ghat, scale * norm2).alignment
                  for scale in (0.1, 1.0, 10.0, 100.0, 1e3, 1e4)]
    assert all(later > earlier for earlier, later in zip(alignments, alignments[1:]))
    assert alignments[-1] >= 0.999


# solve_single()
def test_value_per_budget_tends_to_shadow_price_limit():
    cfg = ng.make_config(0.2, [0.4, 0.2, 0.6], ng.make_complete(3, 1.0))
    limit = shadow_price_limit(cfg, cfg.ghat)
    assert limit == pytest.approx(1 / 0.36)
    c = 1e6
    assert solve_single(cfg, cfg.ghat, c).value / c == pytest.approx(limit, rel=5e-3)


# solve_single()
@pytest.mark.parametrize('seed', range(5))
def test_zero_ahat_scales_with_square_root_of_budget(seed):
    cfg, c, _ = random_instance(300 + seed, with_ahat=False)
    base = solve_single(cfg, cfg.ghat, c)
    scaled = solve_single(cfg, cfg.ghat, 9 * c)
    assert np.allclose(scaled.a_star, 3 * base.a_star, atol=1e-10)
    assert scaled.value == pytest.approx(9 * base.value, rel=1e-10)
