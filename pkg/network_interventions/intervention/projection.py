""" Projection onto the feasible networks: the box [0, wbar] intersected with the budget ball around ghat """
import math

import numpy as np
from scipy.optimize import brentq


def _box(y, wbar):
    """ Entrywise clamp to [0, wbar], symmetrized, zero diagonal """
    y = np.clip((y + y.T) / 2, 0.0, wbar)
    np.fill_diagonal(y, 0.0)
    return y


def _ball(y, center, radius):
    diff = y - center
    norm = np.linalg.norm(diff)
    if norm <= radius:
        return y
    return center + diff * (radius / norm)


def project_feasible(y, ghat, radius, wbar):
    """ Exact Frobenius projection onto box[0, wbar] ∩ {‖g − ghat‖ ≤ radius}.

    Both sets are separable across entries, so the projection is
    clip((y + λ·ghat)/(1 + λ), 0, wbar) for the ball multiplier λ ≥ 0 that puts the
    result on the sphere (or λ = 0 when the clamped point is already inside).

    Args:
        y (np.ndarray): A symmetric matrix
        ghat (np.ndarray): Ball center, inside the box
        radius (float): Ball radius
        wbar (float): The box bound

    Returns: The projected matrix
    """
    ghat = np.asarray(ghat, dtype=float)
    y = (np.asarray(y, dtype=float) + np.asarray(y, dtype=float).T) / 2
    if radius <= 0:
        return ghat.copy()
    clamped = _box(y, wbar)
    if np.linalg.norm(clamped - ghat) <= radius:
        return clamped

    def excess(lam):
        return np.linalg.norm(_box((y + lam * ghat) / (1 + lam), wbar) - ghat) - radius

    high = max(1.0, np.linalg.norm(y - ghat) / radius)
    while excess(high) > 0:
        high *= 2.0
    lam = brentq(excess, 0.0, high, xtol=1e-14, rtol=4 * np.finfo(float).eps, maxiter=500)
    projected = _box((y + lam * ghat) / (1 + lam), wbar)
    # brentq leaves the root within xtol; pull back onto the ball if it landed just outside
    return _ball(projected, ghat, radius) if excess(lam) > 0 else projected


def dykstra_projection(y, ghat, radius, wbar, tol=1e-12, max_iter=100000):
    """ Dykstra's alternating projection onto the same intersection.

    Args:
        y (np.ndarray): A symmetric matrix
        ghat (np.ndarray): Ball center
        radius (float): Ball radius
        wbar (float): The box bound
        tol (float): Stop once successive iterates move less than this
        max_iter (int): Iteration cap

    Returns: The projected matrix
    """
    ghat = np.asarray(ghat, dtype=float)
    x = (np.asarray(y, dtype=float) + np.asarray(y, dtype=float).T) / 2
    p = np.zeros_like(x)
    q = np.zeros_like(x)
    for _ in range(max_iter):
        z = _box(x + p, wbar)
        p = x + p - z
        x_next = _ball(z + q, ghat, radius)
        q = z + q - x_next
        if math.isclose(np.linalg.norm(x_next - x), 0.0, abs_tol=tol):
            return x_next
        x = x_next
    return x
