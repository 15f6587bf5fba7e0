import argparse
import importlib.metadata
import logging
import os
import sys
from argparse import RawTextHelpFormatter

from network_interventions.general.cli_styling import Symbol, color_print
from network_interventions.netgame.static import NetworkGameError
from network_interventions.scripts.compare import compare
from network_interventions.scripts.orient import orient
from network_interventions.scripts.solve import solve
from network_interventions.scripts.sweep import sweep

try:
    __version__ = importlib.metadata.version('network_interventions')
except importlib.metadata.PackageNotFoundError:
    __version__ = 'unknown'

parser = argparse.ArgumentParser(
    prog='network_interventions',
    description='Network Interventions CLI:\n'
                '-Solve joint interventions on marginal utilities and links\n'
                '-Sweep budgets, compare joint and single interventions, orient networks',
    formatter_class=RawTextHelpFormatter
)
parser.add_argument('-v', '--version', action='version', version=f'%(prog)s {__version__}',
                    help='Print the current version of the CLI')
parser.add_argument('-d', '--debugging_logs', action='store_true',
                    help='Print detailed logging to the console to debug CLI')
subparsers = parser.add_subparsers(title="commands", dest="command", help='You must choose a command.', required=True)

# GROUP: SETTINGS YAML
group_settings_yaml = parser.add_argument_group('settings.yaml', 'Solver options in a .yaml file')
group_settings_yaml.add_argument('--settings_path', default='settings.yaml',
                                 help='Path to your local settings.yaml file (See sample_settings.yaml)')

# GROUP: Output
group_output = parser.add_argument_group('output', 'Where and how results are written')
group_output.add_argument('-o', '--output', help='Write the result to this file instead of stdout')
group_output.add_argument('--format', choices=['json', 'csv'],
                          help='Result format; solve defaults to json and sweep always writes csv')

# GROUP: Solver
group_solver = parser.add_argument_group(
    'solver', 'Override the solver options of the problem file, settings YAML and environment'
)
group_solver.add_argument('--budget', type=float, help='The budget C; overrides the problem file')
group_solver.add_argument('--restarts', type=int, help='Number of restarts of the joint solver')
group_solver.add_argument('--max_iters', type=int, help='Iteration cap per restart')
group_solver.add_argument('--tol', type=float, help='Gradient tolerance, relative to max(1, |value|)')
group_solver.add_argument('--seed', type=int, help='Seed of the random restarts')
group_solver.add_argument('--workers', type=int, help='Threads used to run restarts')

# SOLVE
parser_solve = subparsers.add_parser('solve', help='Solve the joint intervention of a problem file')
parser_solve.add_argument('problem_file', help='Path to the problem JSON')
parser_solve.set_defaults(func=solve)

# SWEEP
parser_sweep = subparsers.add_parser('sweep', help='Solve over a range of budgets and write a CSV')
parser_sweep.add_argument('problem_file', help='Path to the problem JSON')
parser_sweep.add_argument('--sweep', required=True, help='Budgets as start:stop:step, stop inclusive')
parser_sweep.set_defaults(func=sweep)

# COMPARE
parser_compare = subparsers.add_parser('compare', help='Compare joint and single interventions')
parser_compare.add_argument('problem_file', help='Path to the problem JSON')
parser_compare.set_defaults(func=compare)

# ORIENT
parser_orient = subparsers.add_parser('orient', help='Find the balanced max cut of the initial network')
parser_orient.add_argument('problem_file', help='Path to the problem JSON')
group_method = parser_orient.add_mutually_exclusive_group()
group_method.add_argument('--exact', action='store_true', help='Enumerate every balanced cut (n <= 22)')
group_method.add_argument('--heuristic', action='store_true', help='Local search from spectral and random starts')
parser_orient.set_defaults(func=orient)


def validate_args(args):
    """ Validate that combinations of args are present """
    if args.command == 'sweep' and args.format == 'json':
        parser.error('sweep writes csv; --format json is not supported')
    if args.command in ('compare', 'orient') and args.format == 'csv':
        parser.error(f'{args.command} writes json; --format csv is not supported')
    if args.budget is not None and args.command == 'sweep':
        parser.error('--budget cannot be combined with --sweep')


def main(argv=None):
    args = parser.parse_args(argv)
    validate_args(args)

    logging.basicConfig(level=logging.DEBUG if args.debugging_logs else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr)

    # Set absolute path of the settings_path, if it exists and is not already absolute
    if not os.path.isabs(args.settings_path) and os.path.exists(args.settings_path):
        args.settings_path = os.path.abspath(args.settings_path)

    symbol = Symbol()
    try:
        return args.func(args)
    except NetworkGameError as err:
        color_print(symbol.fail, f' {err.__class__.__name__}: {err.message}', fg='red')
        return 1


if __name__ == '__main__':
    sys.exit(main())
