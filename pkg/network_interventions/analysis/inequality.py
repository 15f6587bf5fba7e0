""" Payoff inequality: the Theil index and its eigen-centrality limit """
import logging
from dataclasses import dataclass
from typing import Literal

import numpy as np
from scipy.special import xlogy

from network_interventions.netgame.equilibrium import equilibrium
from network_interventions.netgame.spectrum import spectrum
from network_interventions.netgame.static import AllZeroWithoutContextError, PreconditionViolatedError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class InequalityReport:
    """
        The Theil index of a payoff vector and the payoff shares it was computed from.

        convention_used is 'eigencentrality-limit' when every payoff was zero and the shares
        came from the squared principal eigenvector instead.
    """
    theil: float
    payoff_shares: np.ndarray
    convention_used: Literal['direct', 'eigencentrality-limit']


def _entropy(shares):
    """ Returns: Σ sᵢ ln(n sᵢ) with 0·ln 0 = 0, clamped at 0 against roundoff """
    n = len(shares)
    return max(float(np.sum(xlogy(shares, n * shares))), 0.0)


def theil_index(payoffs, fallback_centrality=None):
    """ Theil T index (1/n)Σ (πᵢ/π̄) ln(πᵢ/π̄) of nonnegative payoffs.

    Args:
        payoffs (array-like): Nonnegative payoffs
        fallback_centrality (array-like): Principal eigenvector used when every payoff is zero

    Returns: The InequalityReport
    """
    payoffs = np.asarray(payoffs, dtype=float)
    if np.any(payoffs < 0):
        raise PreconditionViolatedError('Payoffs must be nonnegative')
    total = payoffs.sum()
    if total > 0:
        shares = payoffs / total
        return InequalityReport(theil=_entropy(shares), payoff_shares=shares, convention_used='direct')
    if fallback_centrality is None:
        raise AllZeroWithoutContextError('Every payoff is zero and no eigen-centrality was supplied')
    u = np.asarray(fallback_centrality, dtype=float)
    shares = u ** 2 / float(u @ u)
    return InequalityReport(theil=_entropy(shares), payoff_shares=shares, convention_used='eigencentrality-limit')


def eigencentrality_entropy(g, phi):
    """ Σ (u¹ᵢ)² ln(n(u¹ᵢ)²) for the principal eigenvector u¹ of φg: the large-budget Theil index """
    spec = spectrum(g)
    if not spec.principal_is_simple(phi):
        logger.warning('λ₁(φg) is not simple; the entropy depends on the chosen eigenvector')
    _, u = spec.principal_pair(phi)
    return _entropy(u ** 2)


def payoff_inequality(cfg, a, g):
    """ Theil index of the equilibrium payoffs of (a, g), falling back to the eigen-centrality of g

    Returns: The InequalityReport
    """
    _, u = spectrum(g).principal_pair(cfg.phi)
    return theil_index(equilibrium(cfg, a, g).payoffs, fallback_centrality=u)
