import logging

from network_interventions.analysis.inequality import payoff_inequality
from network_interventions.analysis.welfare import welfare_ratio_limit
from network_interventions.intervention.joint import solve_joint
from network_interventions.intervention.single import solve_single
from network_interventions.netgame.equilibrium import satisfies_assumption1
from network_interventions.scripts.problem_file import read_problem
from network_interventions.scripts.settings import resolve_solver_options
from network_interventions.scripts.solve import print_summary, write_output

logger = logging.getLogger(__name__)


def compare_interventions(p):
    """ Solves the joint and single interventions of one problem

    Args:
        p (JointProblem): The problem

    Returns: (comparison dict, joint solution)
    """
    cfg = p.cfg
    joint = solve_joint(p)
    single = solve_single(cfg, cfg.ghat, p.C)
    ratio_limit = None
    if cfg.phi != 0 and satisfies_assumption1(cfg.phi, cfg.n, cfg.wbar):
        ratio_limit = welfare_ratio_limit(cfg.ghat, cfg.phi, cfg.wbar)
    else:
        logger.warning('No finite welfare ratio limit for phi=%s, wbar=%s', cfg.phi, cfg.wbar)
    comparison = {
        'C': p.C,
        'value_joint': joint.value,
        'value_single': single.value,
        'ratio': joint.value / single.value if single.value > 0 else None,
        'ratio_limit': ratio_limit,
        'theil_joint': payoff_inequality(cfg, joint.a_star, joint.g_star).theil,
        'theil_single': payoff_inequality(cfg, single.a_star, cfg.ghat).theil,
        'converged': joint.converged,
        'g_star': joint.g_star.w,
    }
    return comparison, joint


def compare(args):
    """ Compares the joint and single interventions of a problem file

    Args:
        args: The args from the CLI

    Returns: The exit code; 2 when the joint solver did not converge
    """
    problem_file = read_problem(args.problem_file)
    options = resolve_solver_options(args, problem_file.options)
    comparison, joint = compare_interventions(problem_file.problem(options, C=args.budget))
    write_output(args, comparison)
    print_summary('Joint vs single intervention',
                  {k: v for k, v in comparison.items() if k != 'g_star'}, joint.g_star.w)
    return 0 if joint.converged else 2
