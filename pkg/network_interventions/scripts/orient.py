import logging

from network_interventions.orientation.cut import (
    MAX_EXACT_N, balanced_maxcut_exact, balanced_maxcut_heuristic, orient_bipartite, orientation_cost
)
from network_interventions.scripts.problem_file import read_problem
from network_interventions.scripts.settings import resolve_solver_options
from network_interventions.scripts.solve import print_summary, write_output

logger = logging.getLogger(__name__)


def orient(args):
    """ Finds the balanced cut of the initial network that is cheapest to rewire into a bipartite network

    Args:
        args: The args from the CLI

    Returns: The exit code
    """
    problem_file = read_problem(args.problem_file)
    cfg = problem_file.config()
    if cfg.phi >= 0:
        logger.warning('Orientation targets strategic substitutes; got phi=%s', cfg.phi)
    exact = args.exact or (not args.heuristic and cfg.n <= MAX_EXACT_N)
    if exact:
        result = balanced_maxcut_exact(cfg.ghat)
    else:
        result = balanced_maxcut_heuristic(cfg.ghat, seed=resolve_solver_options(args, problem_file.options).seed)
    network = orient_bipartite(result.side, cfg.n, cfg.wbar) if cfg.n >= 2 else cfg.ghat
    cost = orientation_cost(cfg.ghat, result.side, cfg.wbar, problem_file.kappa) if cfg.n >= 2 else 0.0
    write_output(args, {
        'side': list(result.side),
        'weight': result.weight,
        'method': result.method,
        'certified': result.certified,
        'cost': cost,
        'network': network.w,
    })
    print_summary('Balanced cut', {'side': result.side, 'weight': result.weight,
                                   'method': result.method, 'cost': cost}, network.w)
    return 0
