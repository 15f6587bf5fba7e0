import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import solve

from network_interventions.netgame.network import Network, validate_network
from network_interventions.netgame.spectrum import spectrum
from network_interventions.netgame.static import (
    SINGULAR_TOL, SingularSystemError, PhiZeroError, BadSizeError, PreconditionViolatedError
)


@dataclass(frozen=True, eq=False)
class GameConfig:
    """
        A linear-quadratic network game before intervention:
        the interaction strength phi, the standalone marginal utilities ahat and the network ghat.

        phi > 0 are strategic complements, phi < 0 strategic substitutes.
        Construction fails with SingularSystemError unless λ₁(φ·ghat) < 1.
    """
    phi: float
    ahat: np.ndarray = field(repr=False)
    ghat: Network

    def __post_init__(self):
        if not isinstance(self.ghat, Network):
            raise TypeError(f'ghat must be a Network, not {self.ghat.__class__.__name__}')
        ahat = np.array(self.ahat, dtype=float).reshape(-1)
        if ahat.shape[0] != self.ghat.n:
            raise BadSizeError(f'ahat has {ahat.shape[0]} entries but ghat has {self.ghat.n} players')
        ahat.setflags(write=False)
        object.__setattr__(self, 'ahat', ahat)
        object.__setattr__(self, 'phi', float(self.phi))
        margin = regularity_margin(self, self.ghat)
        if margin <= SINGULAR_TOL:
            raise SingularSystemError(f'λ₁(φ·ghat) = {1 - margin} violates the regularity condition λ₁ < 1')

    @property
    def n(self):
        return self.ghat.n

    @property
    def wbar(self):
        return self.ghat.wbar


@dataclass(frozen=True, eq=False)
class EquilibriumResult:
    """ The Nash equilibrium actions x*, payoffs πᵢ* = ½(xᵢ*)², and welfare V = Σ(xᵢ*)² """
    x: np.ndarray
    payoffs: np.ndarray
    welfare: float


def _as_matrix(g):
    return np.asarray(getattr(g, 'w', g), dtype=float)


def _check_regular(cfg, g):
    margin = regularity_margin(cfg, g)
    if margin <= SINGULAR_TOL:
        raise SingularSystemError(f'λ₁(φg) = {1 - margin} is too close to or above 1')


def resolvent_solve(cfg, g, rhs):
    """ Solves (I − φg)x = rhs by dense factorization """
    w = _as_matrix(g)
    return solve(np.eye(w.shape[0]) - cfg.phi * w, rhs, assume_a='sym')


def equilibrium(cfg, a, g):
    """ The equilibrium of the game with marginal utilities a on network g.

    Args:
        cfg (GameConfig): Supplies phi
        a (array-like): Standalone marginal utilities
        g (Network): The network

    Returns: The EquilibriumResult with x* = (I − φg)⁻¹a
    """
    _check_regular(cfg, g)
    x = resolvent_solve(cfg, g, np.asarray(a, dtype=float))
    return EquilibriumResult(x=x, payoffs=0.5 * x ** 2, welfare=float(x @ x))


def welfare(cfg, a, g):
    """ Returns: aᵀ(I − φg)⁻²a, twice the total equilibrium payoff """
    return equilibrium(cfg, a, g).welfare


def regularity_margin(cfg, g):
    """ Returns: 1 − λ₁(φg); positive exactly when the equilibrium is well defined """
    phi = cfg.phi if isinstance(cfg, GameConfig) else float(cfg)
    values = spectrum(_as_matrix(g)).eigenvalues
    return 1.0 - max(phi * values[0], phi * values[-1])


def assumption1_bound(phi, n):
    """ The strict upper bound on wbar that keeps every network in the box regular.

    Args:
        phi (float): Interaction strength, nonzero
        n (int): Number of players, at least 2

    Returns: 1/(φ(n−1)) for φ > 0; 2/(−φn) for φ < 0 and even n; 2/(−φ√(n²−1)) for φ < 0 and odd n
    """
    if phi == 0:
        raise PhiZeroError('The bound is infinite when phi is 0')
    if n < 2:
        raise BadSizeError(f'The bound needs at least 2 players, got {n}')
    if phi > 0:
        return 1.0 / (phi * (n - 1))
    if n % 2 == 0:
        return 2.0 / (-phi * n)
    return 2.0 / (-phi * math.sqrt(n * n - 1))


def satisfies_assumption1(phi, n, wbar):
    """ Returns: True if wbar is strictly below the bound (always true when phi is 0) """
    return phi == 0 or wbar < assumption1_bound(phi, n)


def require_assumption1(phi, n, wbar):
    if not satisfies_assumption1(phi, n, wbar):
        raise PreconditionViolatedError(
            f'wbar={wbar} violates Assumption 1 for phi={phi}, n={n} (bound {assumption1_bound(phi, n)})'
        )


def make_config(phi, ahat, ghat, wbar=1.0):
    """ Builds a GameConfig from raw arrays, validating the network first """
    if not isinstance(ghat, Network):
        ghat = validate_network(ghat, wbar)
    return GameConfig(phi=phi, ahat=ahat, ghat=ghat)
