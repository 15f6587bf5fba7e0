import logging

import pandas as pd

from network_interventions.analysis.inequality import payoff_inequality
from network_interventions.general.funcs import parse_sweep
from network_interventions.intervention.joint import solve_joint
from network_interventions.intervention.single import solve_single
from network_interventions.netgame.static import PreconditionViolatedError
from network_interventions.scripts.problem_file import read_problem
from network_interventions.scripts.settings import resolve_solver_options
from network_interventions.scripts.solve import flat_record, print_summary, write_csv

logger = logging.getLogger(__name__)


def sweep_columns(n):
    """ Returns: The CSV header of a sweep over n players """
    links = [f'g_star_{i}_{j}' for i in range(n) for j in range(i + 1, n)]
    return (['C', 'value_joint', 'value_single', 'theil_joint', 'theil_single', 'budget_on_g']
            + links + [f'a_star_{i}' for i in range(n)])


def sweep_records(problem_file, options, budgets):
    """ Solves the joint and single interventions at every budget, warm-starting from the previous optimum

    Args:
        problem_file (ProblemFile): The problem
        options (SolverOptions): The resolved solver options
        budgets (list): Increasing budgets

    Returns: (records, converged)
    """
    records = []
    converged = True
    previous = None
    base = problem_file.problem(options)
    for C in budgets:
        p = base.with_budget(C)
        cfg = p.cfg
        solution = solve_joint(p, initial_networks=[previous.g_star] if previous is not None else [])
        single = solve_single(cfg, cfg.ghat, C)
        flat = flat_record(solution)
        record = {
            'C': C,
            'value_joint': solution.value,
            'value_single': single.value,
            'theil_joint': payoff_inequality(cfg, solution.a_star, solution.g_star).theil,
            'theil_single': payoff_inequality(cfg, single.a_star, cfg.ghat).theil,
            'budget_on_g': solution.budget_on_g,
        }
        record.update({k: v for k, v in flat.items() if k.startswith(('g_star_', 'a_star_'))})
        records.append(record)
        converged = converged and solution.converged
        logger.info('Sweep point C=%s: joint %s, single %s', C, solution.value, single.value)
        previous = solution
    return records, converged


def sweep(args):
    """ Writes one CSV row per budget of --sweep start:stop:step

    Args:
        args: The args from the CLI

    Returns: The exit code; 2 when any point did not converge
    """
    try:
        budgets = parse_sweep(args.sweep)
    except ValueError as err:
        raise PreconditionViolatedError(str(err)) from err
    problem_file = read_problem(args.problem_file)
    options = resolve_solver_options(args, problem_file.options)
    records, converged = sweep_records(problem_file, options, budgets)
    write_csv(args, pd.DataFrame(records, columns=sweep_columns(problem_file.n)))
    print_summary(f'Budget sweep {args.sweep}', {'points': len(records), 'converged': converged})
    return 0 if converged else 2
