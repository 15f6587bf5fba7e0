""" Structure of optimal link changes when the planner starts from zero marginal utilities """
import logging
from dataclasses import dataclass

import numpy as np

from network_interventions.netgame.spectrum import spectrum
from network_interventions.netgame.static import (
    BOX_TOL, ZERO_MASS_TOL, BoundaryGhatError, DegenerateEigenvalueError, PreconditionViolatedError
)

logger = logging.getLogger(__name__)

SIGN_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class LinkStructureReport:
    """
        How far a joint solution is from changing every link in proportion to u¹ᵢu¹ⱼ.

        For an interior link residuals[i][j] = (g*ᵢⱼ − ĝᵢⱼ) − coefficient·u¹ᵢu¹ⱼ.
        corner_violations holds the violated part of the inequality for links at 0 or wbar.
        sign_pattern_ok is True when every changed interior link moved in the direction of φu¹ᵢu¹ⱼ.
    """
    coefficient: float
    principal_vector: np.ndarray
    changes: np.ndarray
    residuals: np.ndarray
    corner_violations: np.ndarray
    max_residual: float
    sign_pattern_ok: bool

    def ratio(self, i, j, k):
        """ Returns: (g*ᵢⱼ − ĝᵢⱼ)/(g*ᵢₖ − ĝᵢₖ), which should equal u¹ⱼ/u¹ₖ """
        return float(self.changes[i, j] / self.changes[i, k])


def check_theorem1(p, s):
    """ Compares a joint solution against the proportional-change structure of optimal links.

    With ahat = 0 every interior link should satisfy
    g*ᵢⱼ − ĝᵢⱼ = φ‖a*‖²/(κ(1 − λ₁(φg*)))·u¹ᵢu¹ⱼ, links at 0 should have the right side ≤ −ĝᵢⱼ,
    and links at wbar should have it ≥ wbar − ĝᵢⱼ.

    Args:
        p (JointProblem): The problem
        s (JointSolution): Its solution

    Returns: The LinkStructureReport
    """
    cfg = p.cfg
    if np.linalg.norm(cfg.ahat) > ZERO_MASS_TOL:
        raise PreconditionViolatedError('The link structure check needs ahat = 0')
    g = s.g_star.w
    lam, u = spectrum(g).principal_pair(cfg.phi)
    coefficient = cfg.phi * float(s.a_star @ s.a_star) / (p.kappa * (1.0 - lam))
    predicted = coefficient * np.outer(u, u)
    changes = g - cfg.ghat.w
    off = ~np.eye(cfg.n, dtype=bool)
    lower = off & (g <= BOX_TOL)
    upper = off & (g >= cfg.wbar - BOX_TOL)
    interior = off & ~lower & ~upper

    residuals = np.where(interior, changes - predicted, 0.0)
    corners = np.zeros_like(g)
    corners = np.where(lower, np.maximum(predicted - changes, 0.0), corners)
    corners = np.where(upper, np.maximum(changes - predicted, 0.0), corners)
    moved = interior & (np.abs(changes) > SIGN_TOL)
    sign_ok = bool(np.all(np.sign(changes[moved]) == np.sign(cfg.phi * np.outer(u, u)[moved])))
    max_residual = float(max(np.abs(residuals).max(initial=0.0), corners.max(initial=0.0)))
    logger.debug('Link structure: coefficient %s, max residual %s', coefficient, max_residual)
    return LinkStructureReport(coefficient=coefficient, principal_vector=u, changes=changes,
                               residuals=residuals, corner_violations=corners,
                               max_residual=max_residual, sign_pattern_ok=sign_ok)


def small_budget_asymptotics(cfg, kappa):
    """ Limits of the joint intervention as the budget goes to zero, with ahat = 0.

    Args:
        cfg (GameConfig): The game; ghat must be strictly inside the box
        kappa (float): Cost of changing links

    Returns: (γ, link_rates) with γ = φ²(1 − Σu⁴)/(1 − λ₁)² and γ/κ the limit of κ‖g*−ĝ‖²/C²,
        and link_rates[i][j] = φu¹ᵢu¹ⱼ/(κ(1 − λ₁)), the limit of (g*ᵢⱼ − ĝᵢⱼ)/C
    """
    n = cfg.n
    if cfg.phi == 0:
        return 0.0, np.zeros((n, n))
    ghat = cfg.ghat.w
    off = ~np.eye(n, dtype=bool)
    if np.any(ghat[off] <= 0) or np.any(ghat[off] >= cfg.wbar):
        raise BoundaryGhatError('Every link of ghat must lie strictly between 0 and wbar')
    spec = spectrum(ghat)
    if not spec.principal_is_simple(cfg.phi):
        raise DegenerateEigenvalueError('λ₁(φ·ghat) is not simple')
    lam, u = spec.principal_pair(cfg.phi)
    gamma = cfg.phi ** 2 / (1.0 - lam) ** 2 * (1.0 - float(np.sum(u ** 4)))
    rates = cfg.phi * np.outer(u, u) / (kappa * (1.0 - lam))
    np.fill_diagonal(rates, 0.0)
    return gamma, rates
