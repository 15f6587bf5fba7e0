""" Brute-force check of the joint solver on tiny networks """
import itertools
import logging
import math

import numpy as np

from network_interventions.intervention.single import solve_single
from network_interventions.netgame.network import validate_network
from network_interventions.netgame.static import SingularSystemError, TooLargeError

logger = logging.getLogger(__name__)

MAX_ORACLE_N = 4
MIN_REFINE_STEP = 1e-10


def _links(n):
    return list(zip(*np.triu_indices(n, k=1)))


def _network(ghat, links, weights):
    w = ghat.copy()
    for (i, j), weight in zip(links, weights):
        w[i, j] = w[j, i] = weight
    return w


def _score(p, w):
    """ Returns: F(w), or -inf outside the budget or at a singular network """
    remaining = p.C - p.kappa * float(np.sum((w - p.cfg.ghat.w) ** 2))
    if remaining < 0:
        return -math.inf
    try:
        return solve_single(p.cfg, w, remaining).value
    except SingularSystemError:
        return -math.inf


def oracle_joint(p):
    """ Best joint value over a grid of link weights, polished by coordinate search.

    Each free link ranges over options.oracle_grid points between the box bounds and the
    reach of the budget ball around ghat. The grid has oracle_grid^(n(n−1)/2) points, so
    n = 4 is only practical with a coarse grid.

    Args:
        p (JointProblem): The problem, with n <= 4

    Returns: (value, Network)
    """
    cfg = p.cfg
    n, wbar = cfg.n, cfg.wbar
    if n > MAX_ORACLE_N:
        raise TooLargeError(f'The oracle supports n <= {MAX_ORACLE_N}, got {n}')
    ghat = cfg.ghat.w
    if p.C == 0 or n < 2:
        return _score(p, ghat), cfg.ghat
    links = _links(n)
    reach = math.sqrt(p.C / p.kappa)
    grids = [np.linspace(max(0.0, ghat[i, j] - reach), min(wbar, ghat[i, j] + reach), p.options.oracle_grid)
             for i, j in links]
    logger.debug('Oracle grid of %s points over %s links', p.options.oracle_grid ** len(links), len(links))

    best_value, best_weights = _score(p, ghat), [ghat[i, j] for i, j in links]
    for weights in itertools.product(*grids):
        value = _score(p, _network(ghat, links, weights))
        if value > best_value:
            best_value, best_weights = value, list(weights)

    step = max(grid[1] - grid[0] for grid in grids) if p.options.oracle_grid > 1 else wbar
    while step > MIN_REFINE_STEP:
        improved = False
        for k in range(len(links)):
            for direction in (1.0, -1.0):
                candidate = list(best_weights)
                candidate[k] = min(max(candidate[k] + direction * step, 0.0), wbar)
                value = _score(p, _network(ghat, links, candidate))
                if value > best_value:
                    best_value, best_weights, improved = value, candidate, True
        if not improved:
            step /= 2
    return best_value, validate_network(_network(ghat, links, best_weights), wbar)
