import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

from network_interventions.netgame.static import (
    SYMMETRY_TOL, BOX_TOL, AsymmetricError, NonzeroDiagonalError, OutOfBoxError, BadSizeError, BadIndexError
)

logger = logging.getLogger(__name__)


def _frozen(array):
    """ Returns a read-only float copy of the array """
    array = np.array(array, dtype=float)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Network:
    """
        A weighted, undirected network of n players:
        a symmetric nonnegative adjacency matrix with zero diagonal, every weight in [0, wbar].

        Build instances through validate_network() or one of the make_* constructors,
        which check the invariants.
    """
    n: int
    w: np.ndarray = field(repr=False)
    wbar: float

    def __post_init__(self):
        object.__setattr__(self, 'w', _frozen(self.w))

    def __eq__(self, other):
        if not isinstance(other, Network):
            return NotImplemented
        return self.n == other.n and self.wbar == other.wbar and np.array_equal(self.w, other.w)

    def __hash__(self):
        return hash((self.n, self.wbar, self.w.tobytes()))

    def upper_triangle(self):
        """ Returns: The free link weights g_ij, i < j, in row-major order """
        return self.w[np.triu_indices(self.n, k=1)].copy()

    def distance2(self, other):
        """ Returns: The squared Frobenius distance ‖self − other‖² """
        return float(np.sum((self.w - np.asarray(getattr(other, 'w', other))) ** 2))

    def is_regular(self, tol=1e-10):
        """ Returns: True if every row sum is the same """
        degrees = self.w.sum(axis=1)
        return bool(np.ptp(degrees) <= tol)


def validate_network(w, wbar):
    """ Validates a weight matrix and returns it as a Network.

    Args:
        w (array-like): An n×n matrix of link weights
        wbar (float): The box bound on every weight

    Returns: The Network, symmetrized as (w + wᵀ)/2
    """
    w = np.asarray(w, dtype=float)
    if w.ndim != 2 or w.shape[0] != w.shape[1] or w.shape[0] < 1:
        raise BadSizeError(f'The weight matrix must be square, got shape {w.shape}')
    if not np.isfinite(w).all():
        raise OutOfBoxError('The weight matrix contains non-finite entries')
    if not wbar > 0:
        raise OutOfBoxError(f'wbar must be positive, got {wbar}')
    asymmetry = np.max(np.abs(w - w.T))
    if asymmetry > SYMMETRY_TOL:
        i, j = np.unravel_index(np.argmax(np.abs(w - w.T)), w.shape)
        raise AsymmetricError(f'w[{i}][{j}]={w[i, j]} but w[{j}][{i}]={w[j, i]}')
    diagonal = np.abs(np.diag(w))
    if np.any(diagonal > 0):
        k = int(np.argmax(diagonal))
        raise NonzeroDiagonalError(f'w[{k}][{k}]={w[k, k]}; self-loops are not allowed')
    if np.any(w < -BOX_TOL) or np.any(w > wbar + BOX_TOL):
        i, j = np.unravel_index(np.argmax(np.maximum(-w, w - wbar)), w.shape)
        raise OutOfBoxError(f'w[{i}][{j}]={w[i, j]} lies outside [0, {wbar}]')
    w = np.clip((w + w.T) / 2, 0.0, wbar)
    np.fill_diagonal(w, 0.0)
    return Network(n=w.shape[0], w=w, wbar=float(wbar))


def make_complete(n, wbar):
    """ Returns: The complete network wbar·Kₙ """
    if n < 1:
        raise BadSizeError(f'n must be positive, got {n}')
    w = wbar * (np.ones((n, n)) - np.eye(n))
    return validate_network(w, wbar)


def make_complete_bipartite(p, q, wbar):
    """ Returns: wbar·K_{p,q}, the first p players on one side and the last q on the other """
    if p < 1 or q < 1:
        raise BadSizeError(f'Both sides need at least one player, got p={p}, q={q}')
    return make_bipartite(range(p), p + q, wbar)


def make_bipartite(side, n, wbar):
    """ Complete bipartite network between side and its complement.

    Args:
        side (iterable[int]): 0-based players on one side
        n (int): Number of players
        wbar (float): Weight of every cross link

    Returns: The Network
    """
    side = sorted(set(int(i) for i in side))
    if any(i < 0 or i >= n for i in side):
        raise BadIndexError(f'Side {side} has players outside 0..{n - 1}')
    mask = np.zeros(n, dtype=bool)
    mask[side] = True
    w = wbar * (mask[:, None] != mask[None, :]).astype(float)
    return validate_network(w, wbar)


def make_lemma3_network(n, wbar):
    """ The equal-eigen-centrality network attaining the smallest λₙ for odd n ≥ 5.

    The first (n+1)/2 players have no links among themselves, every cross link has weight wbar,
    and the last (n−1)/2 players are linked among themselves with weight wbar·2/(n−3).

    Args:
        n (int): Odd number of players, at least 5
        wbar (float): The box bound

    Returns: The Network, with λₙ = −wbar·(n−1)/2
    """
    if n < 5 or n % 2 == 0:
        raise BadSizeError(f'The construction needs an odd n >= 5, got {n}')
    first = (n + 1) // 2
    target = -wbar * (n - 1) / 2
    network = _lemma3_candidate(n, first, wbar, wbar * 2 / (n - 3))
    smallest = np.linalg.eigvalsh(network.w)[0]
    if abs(smallest - target) <= 1e-10 * max(1.0, abs(target)):
        return network
    logger.warning('Within-block weight 2/(n-3) gave λn=%s instead of %s for n=%s; searching numerically',
                   smallest, target, n)
    res = minimize_scalar(
        lambda t: abs(np.linalg.eigvalsh(_lemma3_candidate(n, first, wbar, t).w)[0] - target),
        bounds=(0.0, wbar), method='bounded', options={'xatol': 1e-12}
    )
    return _lemma3_candidate(n, first, wbar, float(res.x))


def _lemma3_candidate(n, first, wbar, within):
    w = wbar * np.ones((n, n))
    w[:first, :first] = 0.0
    w[first:, first:] = within
    np.fill_diagonal(w, 0.0)
    return validate_network(w, wbar)
