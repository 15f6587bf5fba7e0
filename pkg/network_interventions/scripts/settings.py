import os
import sys
from dataclasses import fields

import yaml

from network_interventions.general.cli_styling import Color, Symbol, print_title, print_rule
from network_interventions.intervention.joint import SolverOptions
from network_interventions.netgame.static import ProblemFileError

ENV_VARS = {
    'restarts': 'NETINT_RESTARTS',
    'max_iters': 'NETINT_MAX_ITERS',
    'grad_tol': 'NETINT_GRAD_TOL',
    'step_init': 'NETINT_STEP_INIT',
    'seed': 'NETINT_SEED',
    'oracle_grid': 'NETINT_ORACLE_GRID',
    'workers': 'NETINT_WORKERS',
}


def _coerce(name, value, source):
    """ Converts an option value to the type of its SolverOptions field """
    kind = {f.name: f.type for f in fields(SolverOptions)}[name]
    caster = int if kind in (int, 'int') else float
    try:
        if caster is int and isinstance(value, float) and not value.is_integer():
            raise ValueError(value)
        return caster(value)
    except (TypeError, ValueError) as err:
        raise ProblemFileError(f'{source}: option "{name}" must be {caster.__name__}, got {value!r}') from err


def _report(debug, source, name, value):
    if debug:
        color = Color()
        print(f'  {Symbol().arrow_r} Using {source} option: {name} = {color.fg_cyan}{value}{color.reset}', file=sys.stderr)


def resolve_solver_options(args, file_options=None):
    """ Resolves the solver options from every layer of configuration.

    Options are prioritized by: CLI Arguments > Problem File > Settings YAML > Environment Variables > Defaults

    Args:
        args: The args from the CLI
        file_options (dict): The "options" object of the problem file

    Returns: The SolverOptions
    """
    debug = getattr(args, 'debugging_logs', False)
    yaml_path = getattr(args, 'settings_path', None)
    title = None
    if debug:
        title = print_title(
            f'{Symbol().line * 15} Resolving Solver Options {Symbol().line * 15}',
            ' Options are prioritized by: CLI Arguments > Problem File > Settings YAML > Environment Variables '
        )

    # Set CLI Argument options
    options = {}
    cli_options = {
        'restarts': getattr(args, 'restarts', None),
        'max_iters': getattr(args, 'max_iters', None),
        'grad_tol': getattr(args, 'tol', None),
        'seed': getattr(args, 'seed', None),
        'workers': getattr(args, 'workers', None),
    }
    for name, value in cli_options.items():
        if value is not None:
            options[name] = value
            _report(debug, 'CLI Argument', name, value)

    # Set Problem File options
    for name, value in (file_options or {}).items():
        if value is not None and name not in options:
            options[name] = _coerce(name, value, 'problem file')
            _report(debug, 'Problem File', name, value)

    # Set Settings YAML file options
    if yaml_path and os.path.exists(yaml_path):
        with open(yaml_path, 'r') as f:
            yaml_options = (yaml.safe_load(f) or {}).get('solver_options') or {}
        if debug and not yaml_options:
            print_title('YAML detected, but "solver_options" is not defined', fg='yellow')
        for name, value in yaml_options.items():
            if name not in ENV_VARS:
                raise ProblemFileError(f'{yaml_path}: "solver_options.{name}" is not a solver option')
            if value is not None and name not in options:
                options[name] = _coerce(name, value, yaml_path)
                _report(debug, 'Settings YAML', name, value)

    # Set Environment Variables options
    for name, env_var in ENV_VARS.items():
        value = os.getenv(env_var)
        if value and name not in options:
            options[name] = _coerce(name, value, env_var)
            _report(debug, 'Environment Variable', name, value)

    if debug:
        print_rule(title)
    return SolverOptions(**options)
