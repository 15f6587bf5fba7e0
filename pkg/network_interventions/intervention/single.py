""" Optimal intervention on standalone marginal utilities when the network is fixed """
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from network_interventions.netgame.equilibrium import resolvent_solve
from network_interventions.netgame.spectrum import spectrum
from network_interventions.netgame.static import (
    EIGEN_GAP_TOL, SINGULAR_TOL, ZERO_MASS_TOL,
    SingularSystemError, NonConvergenceError, PreconditionViolatedError
)

logger = logging.getLogger(__name__)

MAX_BRACKET_DOUBLINGS = 200
MAX_ROOT_ITERS = 500


@dataclass(frozen=True, eq=False)
class SingleSolution:
    """
        The solution of max aᵀ(I−φg)⁻²a subject to ‖a − ahat‖² ≤ c on a fixed network g.

        mu_star is the shadow price of the budget. It is math.inf when c = 0, where the
        budget does not bind, and the CLI writes it as null. alignment is |⟨a*/‖a*‖, u¹(φg)⟩|, and
        degenerate_top is True when ahat had no mass on the top eigenspace and the
        leftover budget was placed on the principal eigenvector.
    """
    a_star: np.ndarray
    mu_star: float
    value: float
    budget_used: float
    alignment: float
    degenerate_top: bool
    multiplicity_warning: bool = False


def _eigen_terms(cfg, g):
    """ Returns: (spectrum, eigenvalues of φg, the multipliers βˡ = (1 − φλˡ)⁻²) """
    spec = spectrum(g)
    lam_phi = cfg.phi * spec.eigenvalues
    if 1.0 - lam_phi.max() <= SINGULAR_TOL:
        raise SingularSystemError(f'λ₁(φg) = {lam_phi.max()} violates the regularity condition')
    return spec, lam_phi, (1.0 - lam_phi) ** -2


def _shadow_gap(weights, gap, c):
    """ Finds δ ≥ 0 with Σ weightsˡ / (δ + gapˡ)² = c.

    The left side is strictly decreasing in δ, so the root is bracketed between 0 and a
    doubling upper bound. The search runs on 1/√R − 1/√c, which is close to linear in δ.

    Args:
        weights (np.ndarray): (βˡ âˡ)², the squared eigen-components of the numerator
        gap (np.ndarray): β_max − βˡ, all nonnegative
        c (float): The budget, positive

    Returns: δ = μ* − β_max
    """
    def residual(delta):
        with np.errstate(divide='ignore', invalid='ignore'):
            terms = np.where(weights > 0, weights / (delta + gap) ** 2, 0.0)
        total = float(terms.sum())
        return (1.0 / math.sqrt(total) if total > 0 else math.inf) - 1.0 / math.sqrt(c)

    low = residual(0.0)
    if low >= 0:
        return 0.0
    high = max(1.0, 2.0 * math.sqrt(float(weights.sum()) / c))
    for _ in range(MAX_BRACKET_DOUBLINGS):
        if residual(high) > 0:
            break
        high *= 2.0
    else:
        raise NonConvergenceError('Could not bracket the shadow price')
    delta, result = brentq(residual, 0.0, high, xtol=1e-300, rtol=4 * np.finfo(float).eps,
                           maxiter=MAX_ROOT_ITERS, full_output=True, disp=False)
    if not result.converged:
        raise NonConvergenceError(f'Shadow price search stopped after {result.iterations} iterations')
    return float(delta)


def solve_single(cfg, g, c):
    """ Optimal single intervention on the marginal utilities for the fixed network g.

    Works in the eigenbasis of g: with βˡ = (1 − φλˡ)⁻² every component is
    aˡ = âˡ + βˡâˡ/(μ − βˡ), where μ > β_max makes the budget bind.

    Args:
        cfg (GameConfig): Supplies phi and ahat
        g (Network): The fixed network
        c (float): The budget, nonnegative

    Returns: The SingleSolution
    """
    c = float(c)
    if not c >= 0 or not math.isfinite(c):
        raise PreconditionViolatedError(f'The budget must be a finite nonnegative number, got {c}')
    spec, lam_phi, beta = _eigen_terms(cfg, g)
    n = spec.n
    vectors = spec.eigenvectors
    ahat = np.asarray(cfg.ahat, dtype=float)
    ahat_l = vectors.T @ ahat
    beta_max = float(beta.max())
    gap = np.maximum(beta_max - beta, 0.0)
    top = lam_phi >= lam_phi.max() - EIGEN_GAP_TOL
    principal = spec.principal_index(cfg.phi)
    multiplicity = not spec.principal_is_simple(cfg.phi)
    if multiplicity:
        logger.debug('λ₁(φg) is not simple; using the sign-convention eigenvector')

    d = np.zeros(n)
    degenerate = False
    if c == 0:
        mu = beta_max if np.linalg.norm(ahat) <= ZERO_MASS_TOL else math.inf
    elif cfg.phi == 0 and np.linalg.norm(ahat) <= ZERO_MASS_TOL:
        # Every direction is optimal; the first player gets the whole budget
        a = np.zeros(n)
        a[0] = math.sqrt(c)
        u = spec.vector(principal)
        return SingleSolution(a_star=a, mu_star=1.0, value=c, budget_used=c,
                              alignment=float(abs(u[0])), degenerate_top=True,
                              multiplicity_warning=multiplicity)
    else:
        weights = (beta * ahat_l) ** 2
        if np.linalg.norm(ahat_l[top]) > ZERO_MASS_TOL:
            delta = _shadow_gap(weights, gap, c)
            d = beta * ahat_l / (delta + gap)
        else:
            rest = ~top
            weights = np.where(rest, weights, 0.0)
            supremum = float(np.sum(weights[rest] / gap[rest] ** 2))
            if supremum < c:
                delta = 0.0
                d[rest] = beta[rest] * ahat_l[rest] / gap[rest]
                d[principal] = math.sqrt(c - supremum)
                degenerate = True
            else:
                delta = _shadow_gap(weights, gap, c)
                with np.errstate(divide='ignore', invalid='ignore'):
                    d = np.where(rest, beta * ahat_l / (delta + gap), 0.0)
        mu = beta_max + delta

    a_l = ahat_l + d
    a = vectors @ a_l
    norm_a = float(np.linalg.norm(a))
    alignment = abs(float(a @ spec.vector(principal))) / norm_a if norm_a > 0 else 0.0
    return SingleSolution(
        a_star=a,
        mu_star=float(mu),
        value=float(np.sum(beta * a_l ** 2)),
        budget_used=float(np.sum(d ** 2)),
        alignment=min(alignment, 1.0),
        degenerate_top=degenerate,
        multiplicity_warning=multiplicity
    )


def stationarity_residual(cfg, g, solution):
    """ Returns: ‖(I − φg)⁻²a* − μ*(a* − ahat)‖, zero at an optimum """
    if not math.isfinite(solution.mu_star):
        return 0.0
    a = solution.a_star
    lhs = resolvent_solve(cfg, g, resolvent_solve(cfg, g, a))
    return float(np.linalg.norm(lhs - solution.mu_star * (a - cfg.ahat)))


def shadow_price_limit(cfg, g):
    """ Returns: (1 − λ₁(φg))⁻², the limit of the shadow price as the budget grows """
    _, _, beta = _eigen_terms(cfg, g)
    return float(beta.max())


def equal_payoff_single(cfg, c):
    """ The single intervention on ghat that gives every player the same payoff.

    Args:
        cfg (GameConfig): Needs phi > 0 and ahat = 0
        c (float): The budget

    Returns: (a, value) with a = k(I − φĝ)z, z = 1/√n, and value c/‖(I − φĝ)z‖²
    """
    if cfg.phi <= 0:
        raise PreconditionViolatedError(f'Equal payoffs need strategic complements, got phi={cfg.phi}')
    if np.linalg.norm(cfg.ahat) > ZERO_MASS_TOL:
        raise PreconditionViolatedError('Equal payoffs need ahat = 0')
    if c < 0:
        raise PreconditionViolatedError(f'The budget must be nonnegative, got {c}')
    n = cfg.n
    v = (np.eye(n) - cfg.phi * cfg.ghat.w) @ (np.ones(n) / math.sqrt(n))
    norm2 = float(v @ v)
    a = math.sqrt(c / norm2) * v
    return a, c / norm2
