from .scripts import cli
from .netgame.static import NetworkGameError, ProblemFileError
from .netgame import Network, GameConfig, validate_network, make_config, spectrum, equilibrium, welfare
from .intervention import SolverOptions, JointProblem, JointSolution, solve_single, solve_joint, oracle_joint
from .analysis import theil_index, eigencentrality_entropy, welfare_limit, welfare_ratio_limit
from .orientation import cut_weight, balanced_maxcut_exact, balanced_maxcut_heuristic, orient_bipartite
