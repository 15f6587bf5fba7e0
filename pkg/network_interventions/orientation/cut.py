""" Balanced cuts of a network: the orientation problem for strategic substitutes """
import logging
from dataclasses import dataclass
from itertools import combinations, islice
from math import comb
from typing import Literal

import numpy as np

from network_interventions.netgame.network import make_bipartite
from network_interventions.netgame.spectrum import spectrum
from network_interventions.netgame.static import BadIndexError, BadSizeError, TooLargeError

logger = logging.getLogger(__name__)

MAX_EXACT_N = 22
CHUNK_SIZE = 50000
GAIN_TOL = 1e-12


@dataclass(frozen=True)
class CutResult:
    """
        A balanced bipartition (side, complement) of the players and its cut weight.

        side holds ⌊n/2⌋ players; for even n it is the side that contains player 0.
    """
    side: tuple
    weight: float
    method: Literal['exact', 'heuristic']
    certified: bool


def _matrix(g):
    return np.asarray(getattr(g, 'w', g), dtype=float)


def _mask(side, n):
    side = [int(i) for i in side]
    if any(i < 0 or i >= n for i in side):
        raise BadIndexError(f'Side {sorted(side)} has players outside 0..{n - 1}')
    mask = np.zeros(n, dtype=bool)
    mask[side] = True
    return mask


def _canonical(mask):
    """ Returns: The reported side of the partition given by mask """
    n = len(mask)
    if n % 2:
        if mask.sum() > n // 2:
            mask = ~mask
    elif n and not mask[0]:
        mask = ~mask
    return tuple(int(i) for i in np.flatnonzero(mask))


def cut_weight(g, side):
    """ Total weight of the links between side and its complement.

    Args:
        g (Network|np.ndarray): The network
        side (iterable[int]): 0-based players

    Returns: Σ g_ij over i in side, j outside it
    """
    w = _matrix(g)
    mask = _mask(side, w.shape[0])
    return float(w[np.ix_(mask, ~mask)].sum())


def spectral_side(g):
    """ Returns: The ⌊n/2⌋ players with the most negative entries of uⁿ(g) """
    w = _matrix(g)
    n = w.shape[0]
    _, u = spectrum(w).bottom()
    return tuple(sorted(int(i) for i in np.argsort(u, kind='stable')[:n // 2]))


def balanced_maxcut_exact(g):
    """ Maximum-weight balanced cut by enumeration.

    Ties go to the lexicographically smallest side; for even n only sides containing
    player 0 are enumerated since a side and its complement are the same cut.

    Args:
        g (Network|np.ndarray): The network, n <= 22

    Returns: The certified CutResult
    """
    w = _matrix(g)
    n = w.shape[0]
    if n > MAX_EXACT_N:
        raise TooLargeError(f'Exact enumeration supports n <= {MAX_EXACT_N}, got {n}')
    k = n // 2
    if n % 2 == 0 and n > 0:
        subsets = ((0,) + rest for rest in combinations(range(1, n), k - 1))
        total = comb(n - 1, k - 1)
    else:
        subsets = combinations(range(n), k)
        total = comb(n, k)
    logger.debug('Enumerating %s balanced cuts of an n=%s network', total, n)
    degrees = w.sum(axis=1)
    best_side, best_weight = (), -np.inf
    while True:
        chunk = list(islice(subsets, CHUNK_SIZE))
        if not chunk:
            break
        indicator = np.zeros((len(chunk), n))
        for row, side in enumerate(chunk):
            indicator[row, list(side)] = 1.0
        weights = indicator @ degrees - np.einsum('ij,ij->i', indicator @ w, indicator)
        top = weights.max()
        if top > best_weight + GAIN_TOL:
            index = int(np.flatnonzero(weights >= top - GAIN_TOL)[0])
            best_side, best_weight = tuple(chunk[index]), float(top)
    if not np.isfinite(best_weight):
        best_weight = 0.0
    return CutResult(side=best_side, weight=cut_weight(w, best_side), method='exact', certified=True)


def _local_search(w, mask):
    """ Best-improvement search over swaps of one player from each side """
    while True:
        inside = np.flatnonzero(mask)
        outside = np.flatnonzero(~mask)
        if not len(inside) or not len(outside):
            return mask
        external = w[:, ~mask].sum(axis=1)
        internal = w[:, mask].sum(axis=1)
        d = np.where(mask, external - internal, internal - external)
        gains = -d[inside][:, None] - d[outside][None, :] + 2 * w[np.ix_(inside, outside)]
        i, j = np.unravel_index(np.argmax(gains), gains.shape)
        if gains[i, j] <= GAIN_TOL:
            return mask
        mask = mask.copy()
        mask[inside[i]] = False
        mask[outside[j]] = True


def balanced_maxcut_heuristic(g, seed=0, restarts=8):
    """ Balanced cut by local search from a spectral start and seeded random starts.

    Args:
        g (Network|np.ndarray): The network
        seed (int): Seed for the random starts
        restarts (int): Number of random starts after the spectral one

    Returns: The best CutResult found, not certified
    """
    w = _matrix(g)
    n = w.shape[0]
    k = n // 2
    rng = np.random.default_rng(seed)
    starts = [_mask(spectral_side(w), n)] if n >= 2 else [np.zeros(n, dtype=bool)]
    for _ in range(restarts):
        starts.append(_mask(rng.permutation(n)[:k], n))
    best_side, best_weight = (), -np.inf
    for r, start in enumerate(starts):
        side = _canonical(_local_search(w, start))
        weight = cut_weight(w, side)
        logger.debug('Local search start %s reached weight %s', r, weight)
        if weight > best_weight + GAIN_TOL:
            best_side, best_weight = side, weight
    return CutResult(side=best_side, weight=float(best_weight), method='heuristic', certified=False)


def orient_bipartite(side, n, wbar):
    """ The complete bipartite network between a balanced side and its complement.

    Args:
        side (iterable[int]): ⌊n/2⌋ or ⌈n/2⌉ 0-based players
        n (int): Number of players
        wbar (float): Weight of every cross link

    Returns: The Network
    """
    side = sorted(set(int(i) for i in side))
    if len(side) not in (n // 2, (n + 1) // 2):
        raise BadSizeError(f'A balanced side of {n} players has {n // 2} or {(n + 1) // 2} players, got {len(side)}')
    return make_bipartite(side, n, wbar)


def orientation_cost(g, side, wbar, kappa):
    """ Cost of rewiring g into the bipartite network oriented by side.

    Returns: κ(‖g‖² + 2⌊n/2⌋⌈n/2⌉w̄² − 4w̄·Cut(side)), equal to κ‖orient_bipartite(side) − g‖²
    """
    w = _matrix(g)
    n = w.shape[0]
    orient_bipartite(side, n, wbar)
    squared = float(np.sum(w ** 2))
    return kappa * (squared + 2 * (n // 2) * ((n + 1) // 2) * wbar ** 2 - 4 * wbar * cut_weight(w, side))
