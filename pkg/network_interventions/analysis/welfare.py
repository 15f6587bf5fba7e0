""" Large-budget welfare limits and the price of equal payoffs """
import math
from typing import Literal

import numpy as np

from network_interventions.netgame.equilibrium import require_assumption1
from network_interventions.netgame.spectrum import lemma2_bounds, spectrum
from network_interventions.netgame.static import BadSizeError, MissingGhatError, PreconditionViolatedError


def _balanced_product(n):
    return (n // 2) * ((n + 1) // 2)


def welfare_limit(n, phi, wbar, mode: Literal['joint', 'single'], ghat=None):
    """ Limit of V*/C as the budget grows.

    Args:
        n (int): Number of players
        phi (float): Interaction strength
        wbar (float): The box bound
        mode (str): 'joint' or 'single'
        ghat (Network): The initial network, needed for mode='single'

    Returns: (1 − λ₁(φĝ))⁻² for a single intervention; for a joint one (1 − (n−1)φw̄)⁻² if phi > 0
        and (1 + φw̄√(⌊n/2⌋⌈n/2⌉))⁻² if phi < 0
    """
    if mode == 'single':
        if ghat is None:
            raise MissingGhatError('The single-intervention limit needs the initial network')
        lam, _ = spectrum(ghat).principal_pair(phi)
        return (1.0 - lam) ** -2
    if mode != 'joint':
        raise PreconditionViolatedError(f"mode must be 'joint' or 'single', got {mode!r}")
    require_assumption1(phi, n, wbar)
    if phi > 0:
        return (1.0 - (n - 1) * phi * wbar) ** -2
    return (1.0 + phi * wbar * math.sqrt(_balanced_product(n))) ** -2


def welfare_ratio_limit(ghat, phi, wbar):
    """ Returns: The large-budget ratio of joint to single welfare, ((1 − λ₁(φĝ))/(1 − λ₁ of the optimal network))² """
    return welfare_limit(ghat.n, phi, wbar, 'joint') / welfare_limit(ghat.n, phi, wbar, 'single', ghat=ghat)


def lemma3_bound(n, wbar):
    """ Returns: −w̄(n−1)/2, the smallest λₙ among networks whose bottom eigenvector has equal-magnitude entries """
    if n < 5 or n % 2 == 0:
        raise BadSizeError(f'The bound holds for odd n >= 5, got {n}')
    return -wbar * (n - 1) / 2


def welfare_cost_of_equality(n, wbar):
    """ Returns: lemma3_bound / the unconstrained λₙ bound; 1 means equal payoffs cost nothing """
    _, lowest = lemma2_bounds(n, wbar)
    return float(lemma3_bound(n, wbar) / lowest)


def equal_payoff_welfare_bound(ghat, phi, C):
    """ Welfare of the single intervention on ghat that equalizes payoffs: C/‖(I − φĝ)z‖², z = 1/√n """
    if phi <= 0:
        raise PreconditionViolatedError(f'The bound needs strategic complements, got phi={phi}')
    require_assumption1(phi, ghat.n, ghat.wbar)
    n = ghat.n
    v = (np.eye(n) - phi * ghat.w) @ (np.ones(n) / math.sqrt(n))
    return C / float(v @ v)
