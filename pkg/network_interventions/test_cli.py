import json
import os

import numpy as np
import pandas as pd
import pytest

from network_interventions.general.funcs import parse_sweep, upper_triangle, to_jsonable
from network_interventions.intervention.joint import SolverOptions
from network_interventions.netgame.static import ProblemFileError
from network_interventions.scripts.cli import main, parser
from network_interventions.scripts.problem_file import parse_problem, read_problem, write_problem
from network_interventions.scripts.settings import resolve_solver_options

RESOURCES = os.path.join(os.path.dirname(__file__), 'resources')
COMPLEMENTS3 = os.path.join(RESOURCES, 'complements3.json')
SUBSTITUTES4 = os.path.join(RESOURCES, 'substitutes4.json')
COMPLEMENTS5 = os.path.join(RESOURCES, 'complements5.json')


@pytest.fixture
def no_settings(tmp_path, monkeypatch):
    """ Isolates a test from local settings files and NETINT_* variables """
    for name in ('NETINT_RESTARTS', 'NETINT_MAX_ITERS', 'NETINT_GRAD_TOL', 'NETINT_STEP_INIT',
                 'NETINT_SEED', 'NETINT_ORACLE_GRID', 'NETINT_WORKERS'):
        monkeypatch.delenv(name, raising=False)
    return ['--settings_path', str(tmp_path / 'missing.yaml')]


def problem_data(**overrides):
    with open(SUBSTITUTES4, 'r') as f:
        data = json.load(f)
    data.update(overrides)
    return data


def write_json(path, data):
    with open(path, 'w') as f:
        json.dump(data, f)
    return str(path)


# parse_sweep()
def test_parse_sweep():
    assert parse_sweep('0:1:0.25') == [0.0, 0.25, 0.5, 0.75, 1.0]
    assert parse_sweep('0:0.3:0.1') == [0.0, 0.1, 0.2, 0.3]
    assert parse_sweep('2:1:0.5') == []
    with pytest.raises(ValueError):
        parse_sweep('0:1:0')
    with pytest.raises(ValueError):
        parse_sweep('0:1')


# upper_triangle()
def test_upper_triangle():
    assert upper_triangle([[0, 1, 2], [1, 0, 3], [2, 3, 0]]) == [1.0, 2.0, 3.0]


# to_jsonable()
def test_to_jsonable():
    converted = to_jsonable({'x': np.array([1.0, 2.0]), 'y': np.float64(3.0), 'z': float('inf'), 't': (1, 2)})
    assert converted == {'x': [1.0, 2.0], 'y': 3.0, 'z': None, 't': [1, 2]}
    assert to_jsonable(SolverOptions(restarts=2))['restarts'] == 2


# parser
def test_parser_arguments():
    args = parser.parse_args(['-d', '--restarts', '4', '--tol', '1e-6', '-o', 'out.json', 'solve', 'problem.json'])
    assert args.command == 'solve'
    assert args.problem_file == 'problem.json'
    assert args.debugging_logs
    assert args.restarts == 4
    assert args.tol == pytest.approx(1e-6)
    assert args.output == 'out.json'
    args = parser.parse_args(['orient', '--exact', 'problem.json'])
    assert args.exact and not args.heuristic


# parser
def test_parser_rejects_conflicts():
    with pytest.raises(SystemExit):
        main(['--format', 'json', 'sweep', '--sweep', '0:1:1', SUBSTITUTES4])
    with pytest.raises(SystemExit):
        main(['--budget', '1', 'sweep', '--sweep', '0:1:1', SUBSTITUTES4])
    with pytest.raises(SystemExit):
        main(['--format', 'csv', 'orient', SUBSTITUTES4])
    with pytest.raises(SystemExit):
        main(['orient', '--exact', '--heuristic', SUBSTITUTES4])


# read_problem()
def test_read_problem():
    problem_file = read_problem(SUBSTITUTES4)
    assert problem_file.n == 4
    assert problem_file.phi == -0.2
    assert problem_file.options == {}
    p = problem_file.problem(C=3.0)
    assert p.C == 3.0
    assert p.kappa == 0.5
    assert p.cfg.ghat.w[0, 1] == 0.6


# write_problem()
def test_write_problem_keeps_numbers(tmp_path):
    problem_file = read_problem(COMPLEMENTS5)
    path = str(tmp_path / 'copy.json')
    write_problem(path, problem_file)
    assert read_problem(path) == problem_file


# parse_problem()
@pytest.mark.parametrize('overrides, field', [
    ({'phi': 'strong'}, '"phi"'),
    ({'n': 0}, '"n"'),
    ({'a_hat': [0, 0, 0]}, '"a_hat"'),
    ({'g_hat': [[0, 0.6, 0.7, 0.7], [0.6, 0, 0.7, 0.3], [0.7, 0.7, 0, None], [0.7, 0.3, 0.3, 0]]}, 'g_hat[2][3]'),
    ({'options': {'restart': 4}}, 'options.restart'),
])
def test_parse_problem_names_bad_field(overrides, field):
    with pytest.raises(ProblemFileError) as err:
        parse_problem(problem_data(**overrides), 'p.json')
    assert field in err.value.message


# parse_problem()
def test_parse_problem_missing_field():
    data = problem_data()
    del data['kappa']
    with pytest.raises(ProblemFileError) as err:
        parse_problem(data, 'p.json')
    assert 'missing field "kappa"' in err.value.message


# resolve_solver_options()
def test_solver_options_precedence(tmp_path, monkeypatch, no_settings):
    settings = tmp_path / 'settings.yaml'
    settings.write_text('solver_options:\n  restarts: 3\n  seed: 5\n  max_iters: 50\n')
    monkeypatch.setenv('NETINT_SEED', '9')
    monkeypatch.setenv('NETINT_WORKERS', '2')
    args = parser.parse_args(['--settings_path', str(settings), '--restarts', '7', 'solve', SUBSTITUTES4])
    options = resolve_solver_options(args, {'max_iters': 40})
    assert options.restarts == 7
    assert options.max_iters == 40
    assert options.seed == 5
    assert options.workers == 2
    assert options.grad_tol == SolverOptions().grad_tol


# resolve_solver_options()
def test_solver_options_bad_values(tmp_path, no_settings):
    settings = tmp_path / 'settings.yaml'
    settings.write_text('solver_options:\n  restart: 3\n')
    args = parser.parse_args(['--settings_path', str(settings), 'solve', SUBSTITUTES4])
    with pytest.raises(ProblemFileError):
        resolve_solver_options(args)
    args = parser.parse_args(no_settings + ['solve', SUBSTITUTES4])
    with pytest.raises(ProblemFileError):
        resolve_solver_options(args, {'restarts': 2.5})


# main()
def test_main_solve_writes_json(tmp_path, no_settings):
    out = tmp_path / 'solution.json'
    code = main(no_settings + ['-o', str(out), 'solve', SUBSTITUTES4])
    assert code == 0
    result = json.loads(out.read_text())
    assert result['C'] == 1.5
    assert result['converged']
    g_star = np.array(result['g_star'])
    assert np.allclose(g_star, g_star.T)
    assert 0.5 * np.sum((g_star - np.array(problem_data()['g_hat'])) ** 2) == pytest.approx(result['budget_on_g'])
    assert result['budget_on_g'] + result['budget_on_a'] == pytest.approx(1.5, rel=1e-6)


# main()
def test_main_zero_budget_echoes_initial_point(capsys, no_settings):
    assert main(no_settings + ['--budget', '0', 'solve', COMPLEMENTS3]) == 0
    result = json.loads(capsys.readouterr().out)
    data = read_problem(COMPLEMENTS3)
    assert np.allclose(result['a_star'], data.a_hat, atol=1e-12)
    assert result['g_star'] == data.g_hat
    assert result['budget_on_g'] == 0


# main()
def test_main_solve_is_deterministic(tmp_path, no_settings):
    outputs = []
    for k in range(2):
        out = tmp_path / f'run{k}.json'
        main(no_settings + ['--restarts', '4', '-o', str(out), 'solve', COMPLEMENTS3])
        outputs.append(out.read_text())
    assert outputs[0] == outputs[1]


# main()
def test_main_solve_csv(tmp_path, no_settings):
    out = tmp_path / 'solution.csv'
    assert main(no_settings + ['--format', 'csv', '-o', str(out), 'solve', SUBSTITUTES4]) == 0
    df = pd.read_csv(out)
    assert len(df) == 1
    assert list(df.columns[:4]) == ['C', 'value', 'budget_on_g', 'budget_on_a']
    assert 'g_star_2_3' in df.columns


# main()
def test_main_reports_bad_problem_files(tmp_path, capsys, no_settings):
    broken = tmp_path / 'broken.json'
    broken.write_text('{"n": 2,\n "phi": }')
    assert main(no_settings + ['solve', str(broken)]) == 1
    assert 'line 2' in capsys.readouterr().err

    data = problem_data()
    del data['g_hat']
    assert main(no_settings + ['solve', write_json(tmp_path / 'missing.json', data)]) == 1
    assert 'g_hat' in capsys.readouterr().err

    g_hat = [row[:] for row in problem_data()['g_hat']]
    g_hat[0][1] = 0.5
    assert main(no_settings + ['solve', write_json(tmp_path / 'asym.json', problem_data(g_hat=g_hat))]) == 1
    assert 'AsymmetricError' in capsys.readouterr().err

    assert main(no_settings + ['solve', str(tmp_path / 'absent.json')]) == 1


# main()
def test_main_sweep(tmp_path, no_settings):
    out = tmp_path / 'sweep.csv'
    assert main(no_settings + ['--restarts', '2', '-o', str(out), 'sweep', '--sweep', '0.5:1.5:0.5', SUBSTITUTES4]) == 0
    df = pd.read_csv(out)
    assert df['C'].tolist() == [0.5, 1.0, 1.5]
    assert df['value_joint'].is_monotonic_increasing
    assert (df['value_joint'] >= df['value_single'] - 1e-9).all()
    assert list(df.columns[:6]) == ['C', 'value_joint', 'value_single', 'theil_joint', 'theil_single', 'budget_on_g']
    assert df.columns[-1] == 'a_star_3'


# main()
def test_main_empty_sweep_writes_header(tmp_path, no_settings):
    out = tmp_path / 'sweep.csv'
    assert main(no_settings + ['-o', str(out), 'sweep', '--sweep', '2:1:0.5', SUBSTITUTES4]) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 1
    assert lines[0].startswith('C,value_joint,value_single')


# main()
def test_main_sweep_bad_range(no_settings):
    assert main(no_settings + ['sweep', '--sweep', '0:1:-1', SUBSTITUTES4]) == 1


# main()
def test_main_compare_on_complete_network(tmp_path, capsys, no_settings):
    data = problem_data(phi=0.2, C=2.0, a_hat=[0.1, 0.1, 0.1, 0.1],
                        g_hat=[[0 if i == j else 1.0 for j in range(4)] for i in range(4)])
    assert main(no_settings + ['compare', write_json(tmp_path / 'complete.json', data)]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result['ratio'] == pytest.approx(1.0, abs=1e-9)
    assert result['ratio_limit'] == pytest.approx(1.0)
    assert result['theil_joint'] == pytest.approx(0.0, abs=1e-12)


# main()
def test_main_orient(capsys, no_settings):
    assert main(no_settings + ['orient', SUBSTITUTES4]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result['side'] == [0, 1]
    assert result['weight'] == pytest.approx(2.4)
    assert result['method'] == 'exact'
    assert result['certified']
    assert result['cost'] == pytest.approx(1.21)
    assert result['network'] == [[0, 0, 1, 1], [0, 0, 1, 1], [1, 1, 0, 0], [1, 1, 0, 0]]


# main()
def test_main_solve_not_converged_exits_2(tmp_path, no_settings):
    out = tmp_path / 'solution.json'
    assert main(no_settings + ['--restarts', '1', '--max_iters', '1', '-o', str(out), 'solve', SUBSTITUTES4]) == 2
    result = json.loads(out.read_text())
    assert result['converged'] is False
    assert result['budget_on_g'] + result['budget_on_a'] <= 1.5 + 1e-8


# main()
def test_main_compare_inequality_of_complements5(capsys, no_settings):
    assert main(no_settings + ['compare', COMPLEMENTS5]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result['C'] == 4.0
    assert result['theil_joint'] == pytest.approx(0.00185, abs=1e-4)
    assert result['theil_single'] == pytest.approx(0.00114, abs=5e-5)
    assert result['theil_joint'] > result['theil_single']
    assert result['value_joint'] > result['value_single']


# main()
def test_main_sweep_substitutes_orients_bipartite(tmp_path, no_settings):
    out = tmp_path / 'sweep.csv'
    assert main(no_settings + ['-o', str(out), 'sweep', '--sweep', '2:6:2', SUBSTITUTES4]) == 0
    df = pd.read_csv(out)
    assert df['C'].tolist() == [2.0, 4.0, 6.0]
    last = df.iloc[-1]
    assert last['g_star_0_1'] <= 1e-2 and last['g_star_2_3'] <= 1e-2
    for column in ('g_star_0_2', 'g_star_0_3', 'g_star_1_2', 'g_star_1_3'):
        assert last[column] >= 1 - 1e-2


# main()
def test_main_sweep_complements_links_grow(tmp_path, no_settings):
    out = tmp_path / 'sweep.csv'
    assert main(no_settings + ['-o', str(out), 'sweep', '--sweep', '1:5:1', COMPLEMENTS3]) == 0
    df = pd.read_csv(out)
    assert df['value_joint'].is_monotonic_increasing
    assert (df['value_joint'] >= df['value_single'] - 1e-9).all()
    links = df[['g_star_0_1', 'g_star_0_2', 'g_star_1_2']]
    assert links.iloc[0].mean() < links.iloc[-1].mean()
    assert (links.iloc[-1] >= 1 - 1e-2).all()


# main()
def test_main_orient_heuristic(capsys, no_settings):
    assert main(no_settings + ['orient', '--heuristic', SUBSTITUTES4]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result['side'] == [0, 1]
    assert result['method'] == 'heuristic'
    assert result['certified'] is False
    assert result['cost'] == pytest.approx(1.21)


# main()
def test_main_orient_two_players(tmp_path, capsys, no_settings):
    data = problem_data(n=2, a_hat=[0, 0], g_hat=[[0, 0.4], [0.4, 0]])
    assert main(no_settings + ['orient', write_json(tmp_path / 'pair.json', data)]) == 0
    result = json.loads(capsys.readouterr().out)
    assert result['side'] == [0]
    assert result['weight'] == pytest.approx(0.4)
    assert result['network'] == [[0, 1], [1, 0]]
