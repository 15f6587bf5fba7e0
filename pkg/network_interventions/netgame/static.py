""" Static functionality shared by the network game modules: errors and tolerances """

SYMMETRY_TOL = 1e-12
BOX_TOL = 1e-12
EIGEN_GAP_TOL = 1e-8
SINGULAR_TOL = 1e-10
ZERO_MASS_TOL = 1e-12
SIGN_ZERO_TOL = 1e-10


class NetworkGameError(Exception):
    """ A minimum viable exception for the network game package. """

    def __init__(self, message):
        super().__init__(message)
        self.message = message


class AsymmetricError(NetworkGameError):
    """ The weight matrix is not symmetric """
    pass


class NonzeroDiagonalError(NetworkGameError):
    """ The weight matrix has a self-loop """
    pass


class OutOfBoxError(NetworkGameError):
    """ A link weight lies outside [0, wbar] """
    pass


class SingularSystemError(NetworkGameError):
    """ The regularity condition λ₁(φg) < 1 fails """
    pass


class NotSymmetricError(NetworkGameError):
    pass


class PhiZeroError(NetworkGameError):
    pass


class BadSizeError(NetworkGameError):
    pass


class BadIndexError(NetworkGameError):
    pass


class NonConvergenceError(NetworkGameError):
    """ An iterative routine exceeded its iteration cap """
    pass


class PreconditionViolatedError(NetworkGameError):
    pass


class BudgetExhaustedError(NetworkGameError):
    """ The network change alone costs more than the budget """
    pass


class TooLargeError(NetworkGameError):
    """ The instance is too large for an enumeration routine """
    pass


class DegenerateEigenvalueError(NetworkGameError):
    pass


class BoundaryGhatError(NetworkGameError):
    pass


class AllZeroWithoutContextError(NetworkGameError):
    pass


class MissingGhatError(NetworkGameError):
    pass


class ProblemFileError(NetworkGameError):
    """ A problem file could not be parsed; the message carries the field path or line """
    pass
