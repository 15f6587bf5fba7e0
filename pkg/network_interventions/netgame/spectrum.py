""" Eigen-decomposition of symmetric matrices with a reproducible sign convention """
import logging
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh

from network_interventions.netgame.static import EIGEN_GAP_TOL, SYMMETRY_TOL, NotSymmetricError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Spectrum:
    """
        Eigenvalues sorted descending (λ₁ ≥ … ≥ λₙ) and the matching unit eigenvectors,
        stored as the columns of `eigenvectors`.

        Every eigenvector is scaled so that its entry of largest magnitude is positive
        (ties go to the lowest index).
    """
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    multiplicity_warning: bool

    @property
    def n(self):
        return len(self.eigenvalues)

    def vector(self, index):
        return self.eigenvectors[:, index].copy()

    def top(self):
        """ Returns: (λ₁, u¹) """
        return float(self.eigenvalues[0]), self.vector(0)

    def bottom(self):
        """ Returns: (λₙ, uⁿ) """
        return float(self.eigenvalues[-1]), self.vector(self.n - 1)

    def principal_index(self, phi):
        """ Returns: The column holding the eigenvector of λ₁(φg) """
        return 0 if phi >= 0 else self.n - 1

    def principal_pair(self, phi):
        """ The largest eigenvalue of φg and its eigenvector.

        Args:
            phi (float): The interaction strength

        Returns: (λ₁(φg), u¹(φg)); the eigenvector is uⁿ(g) when phi is negative
        """
        lam, u = self.top() if phi >= 0 else self.bottom()
        return float(phi * lam), u

    def principal_is_simple(self, phi):
        """ Returns: True if λ₁(φg) is separated from the next eigenvalue by the gap tolerance """
        if self.n < 2:
            return True
        if phi >= 0:
            return bool(self.eigenvalues[0] - self.eigenvalues[1] >= EIGEN_GAP_TOL)
        return bool(self.eigenvalues[-2] - self.eigenvalues[-1] >= EIGEN_GAP_TOL)


def normalize_sign(vector):
    """ Flips the vector so that its entry of largest magnitude is positive; ties go to the lowest index """
    magnitude = np.abs(vector)
    index = int(np.flatnonzero(magnitude >= magnitude.max() - 1e-12)[0])
    return -vector if vector[index] < 0 else vector


def spectrum(g):
    """ Sorted eigen-decomposition of a symmetric matrix.

    Args:
        g (array-like|Network): A symmetric n×n matrix

    Returns: The Spectrum
    """
    g = np.asarray(getattr(g, 'w', g), dtype=float)
    if g.ndim != 2 or g.shape[0] != g.shape[1]:
        raise NotSymmetricError(f'Expected a square matrix, got shape {g.shape}')
    if np.max(np.abs(g - g.T), initial=0.0) > SYMMETRY_TOL:
        raise NotSymmetricError('The matrix is not symmetric')
    values, vectors = eigh((g + g.T) / 2)
    values = values[::-1].copy()
    vectors = vectors[:, ::-1].copy()
    for k in range(vectors.shape[1]):
        vectors[:, k] = normalize_sign(vectors[:, k])
    warning = False
    if len(values) >= 2:
        warning = bool(values[0] - values[1] < EIGEN_GAP_TOL or values[-2] - values[-1] < EIGEN_GAP_TOL)
    if warning:
        logger.debug('Eigenvalue gap below %s at an end of the spectrum: %s', EIGEN_GAP_TOL, values)
    values.setflags(write=False)
    vectors.setflags(write=False)
    return Spectrum(eigenvalues=values, eigenvectors=vectors, multiplicity_warning=warning)


def lemma2_bounds(n, wbar):
    """ Returns: The extremal eigenvalues over all networks with weights in [0, wbar]:
        (wbar·(n−1), −wbar·√(⌊n/2⌋⌈n/2⌉))
    """
    return wbar * (n - 1), -wbar * np.sqrt((n // 2) * ((n + 1) // 2))
