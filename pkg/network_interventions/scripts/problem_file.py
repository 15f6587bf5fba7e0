""" Reading and writing problem files: one JSON object describing a game, a cost and a budget """
import json
import math
from dataclasses import dataclass, field

import numpy as np

from network_interventions.intervention.joint import JointProblem, SolverOptions
from network_interventions.netgame.equilibrium import GameConfig
from network_interventions.netgame.network import validate_network
from network_interventions.netgame.static import ProblemFileError

REQUIRED_FIELDS = ['n', 'phi', 'kappa', 'wbar', 'C', 'a_hat', 'g_hat']


@dataclass
class ProblemFile:
    n: int
    phi: float
    kappa: float
    wbar: float
    C: float
    a_hat: list
    g_hat: list
    options: dict = field(default_factory=dict)

    def config(self):
        """ Returns: The validated GameConfig """
        ghat = validate_network(self.g_hat, self.wbar)
        return GameConfig(phi=self.phi, ahat=np.array(self.a_hat, dtype=float), ghat=ghat)

    def problem(self, options=None, C=None):
        """ Builds the JointProblem

        Args:
            options (SolverOptions): Resolved options; defaults to the file's own options
            C (float): A budget overriding the file's
        """
        options = options or SolverOptions(**self.options)
        return JointProblem(cfg=self.config(), kappa=self.kappa, C=self.C if C is None else C, options=options)


def _number(data, name, path):
    value = data[name]
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise ProblemFileError(f'{path}: field "{name}" must be a finite number, got {value!r}')
    return value


def _vector(value, name, n, path):
    if not isinstance(value, list) or len(value) != n:
        raise ProblemFileError(f'{path}: field "{name}" must be a list of {n} numbers')
    for i, entry in enumerate(value):
        if isinstance(entry, bool) or not isinstance(entry, (int, float)) or not math.isfinite(entry):
            raise ProblemFileError(f'{path}: field "{name}[{i}]" must be a finite number, got {entry!r}')
    return [float(entry) for entry in value]


def parse_problem(data, path='<problem>'):
    """ Validates the decoded JSON of a problem file

    Args:
        data (dict): The decoded JSON
        path (str): The file name, used in error messages

    Returns: The ProblemFile
    """
    if not isinstance(data, dict):
        raise ProblemFileError(f'{path}: the problem must be a JSON object')
    for name in REQUIRED_FIELDS:
        if name not in data:
            raise ProblemFileError(f'{path}: missing field "{name}"')
    n = data['n']
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ProblemFileError(f'{path}: field "n" must be a positive integer, got {n!r}')
    g_hat = data['g_hat']
    if not isinstance(g_hat, list) or len(g_hat) != n:
        raise ProblemFileError(f'{path}: field "g_hat" must be a list of {n} rows')
    rows = [_vector(row, f'g_hat[{i}]', n, path) for i, row in enumerate(g_hat)]
    options = data.get('options') or {}
    if not isinstance(options, dict):
        raise ProblemFileError(f'{path}: field "options" must be an object')
    unknown = sorted(set(options) - set(SolverOptions.names()))
    if unknown:
        raise ProblemFileError(f'{path}: field "options.{unknown[0]}" is not a solver option')
    return ProblemFile(
        n=n,
        phi=_number(data, 'phi', path),
        kappa=_number(data, 'kappa', path),
        wbar=_number(data, 'wbar', path),
        C=_number(data, 'C', path),
        a_hat=_vector(data['a_hat'], 'a_hat', n, path),
        g_hat=rows,
        options=dict(options)
    )


def read_problem(file_path):
    """ Reads and validates a problem file

    Args:
        file_path (str): The path of the JSON file
    """
    try:
        with open(file_path, 'r', encoding='utf-8') as infile:
            data = json.load(infile)
    except json.JSONDecodeError as err:
        raise ProblemFileError(f'{file_path}: line {err.lineno}, column {err.colno}: {err.msg}') from err
    except OSError as err:
        raise ProblemFileError(f'{file_path}: {err.strerror}') from err
    return parse_problem(data, file_path)


def serialize_problem(problem_file):
    """ Returns: The problem as a JSON-ready dict, numbers unchanged """
    data = {name: getattr(problem_file, name) for name in REQUIRED_FIELDS}
    if problem_file.options:
        data['options'] = dict(problem_file.options)
    return data


def write_problem(file_path, problem_file):
    with open(file_path, 'w', encoding='utf-8') as outfile:
        json.dump(serialize_problem(problem_file), outfile, indent=2)
