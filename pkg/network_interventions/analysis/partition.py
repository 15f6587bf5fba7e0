import logging
from dataclasses import dataclass

import numpy as np

from network_interventions.netgame.spectrum import spectrum
from network_interventions.netgame.static import SIGN_ZERO_TOL

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SignPartition:
    """ Players split by the sign of their entry in the bottom eigenvector uⁿ(g) """
    s_plus: tuple
    s_minus: tuple
    zeros: tuple


def _indices(mask):
    return tuple(int(i) for i in np.flatnonzero(mask))


def sign_partition(g, phi):
    """ Splits the players into S⁺ (uⁿᵢ > 0), S⁻ (uⁿᵢ < 0) and the zero entries.

    Args:
        g (Network): The network
        phi (float): Interaction strength, expected negative

    Returns: The SignPartition
    """
    if phi >= 0:
        logger.warning('Sign partitions describe strategic substitutes; got phi=%s', phi)
    _, u = spectrum(g).bottom()
    return SignPartition(s_plus=_indices(u > SIGN_ZERO_TOL), s_minus=_indices(u < -SIGN_ZERO_TOL),
                         zeros=_indices(np.abs(u) <= SIGN_ZERO_TOL))
