import json
import math
import sys

import pandas as pd
from tabulate import tabulate

from network_interventions.general.cli_styling import Color, Symbol, color_print
from network_interventions.general.funcs import to_jsonable, upper_triangle
from network_interventions.intervention.joint import solve_joint
from network_interventions.scripts.problem_file import read_problem
from network_interventions.scripts.settings import resolve_solver_options


def write_output(args, payload):
    """ Writes a JSON payload to --output, or to stdout

    Args:
        args: The args from the CLI
        payload (dict): The result to write
    """
    text = json.dumps(to_jsonable(payload), indent=2)
    if args.output:
        with open(args.output, 'w', encoding='utf-8') as outfile:
            outfile.write(text + '\n')
    else:
        sys.stdout.write(text + '\n')


def write_csv(args, df):
    """ Writes a DataFrame as CSV with 12 significant digits to --output, or to stdout """
    if args.output:
        df.to_csv(args.output, index=False, float_format='%.12g', encoding='utf-8')
    else:
        df.to_csv(sys.stdout, index=False, float_format='%.12g')


def solution_record(solution):
    """ Returns: The JointSolution as a JSON-ready dict """
    return {
        'value': solution.value,
        'mu_star': solution.mu_star if math.isfinite(solution.mu_star) else None,
        'budget_on_g': solution.budget_on_g,
        'budget_on_a': solution.budget_on_a,
        'converged': solution.converged,
        'multiplicity_warning': solution.multiplicity_warning,
        'a_star': solution.a_star,
        'g_star': solution.g_star.w,
        'restart_values': solution.restart_values,
        'iterations': solution.iterations,
        'kkt': {
            'stationarity_a': solution.kkt.stationarity_a,
            'max_violation': solution.kkt.max_violation,
            'link_residuals': solution.kkt.link_residuals,
        },
    }


def flat_record(solution):
    """ Returns: One CSV row: the scalars, then a_star and the upper triangle of g_star """
    row = {'value': solution.value, 'budget_on_g': solution.budget_on_g, 'budget_on_a': solution.budget_on_a}
    n = solution.g_star.n
    row.update({f'a_star_{i}': float(a) for i, a in enumerate(solution.a_star)})
    links = [(i, j) for i in range(n) for j in range(i + 1, n)]
    row.update({f'g_star_{i}_{j}': w for (i, j), w in zip(links, upper_triangle(solution.g_star.w))})
    return row


def print_summary(title, scalars, matrix=None):
    """ Prints a human readable summary to stderr, keeping stdout for the machine readable result

    Args:
        title (str): The heading
        scalars (dict): Name to value
        matrix (np.ndarray): An optional matrix to print as a table
    """
    color = Color()
    symbol = Symbol()
    print(f'{color.fg_cyan}{title}{color.reset}', file=sys.stderr)
    rows = [[name, value] for name, value in scalars.items()]
    print(tabulate(rows, headers=['field', 'value'], tablefmt='psql', floatfmt='.6g'), file=sys.stderr)
    if matrix is not None:
        df = pd.DataFrame(matrix)
        print(tabulate(df, headers='keys', tablefmt='psql', floatfmt='.4f'), file=sys.stderr)
    if scalars.get('converged') is False:
        color_print(symbol.warning, ' No restart met the gradient tolerance; the best iterate is reported', fg='yellow')


def solve(args):
    """ Solves the joint intervention of a problem file

    Args:
        args: The args from the CLI

    Returns: The exit code; 2 when the solver did not converge
    """
    problem_file = read_problem(args.problem_file)
    options = resolve_solver_options(args, problem_file.options)
    p = problem_file.problem(options, C=args.budget)
    solution = solve_joint(p)

    if args.format == 'csv':
        write_csv(args, pd.DataFrame([{'C': p.C, **flat_record(solution)}]))
    else:
        write_output(args, {'C': p.C, **solution_record(solution)})

    print_summary(f'Joint intervention at C={p.C}', {
        'value': solution.value,
        'budget_on_g': solution.budget_on_g,
        'budget_on_a': solution.budget_on_a,
        'mu_star': solution.mu_star,
        'kkt_max_violation': solution.kkt.max_violation,
        'converged': solution.converged,
    }, solution.g_star.w)
    return 0 if solution.converged else 2
