import json

import numpy as np
import pytest

import locking_threshold


@pytest.fixture
def eta_file(tmp_path):
    path = tmp_path / 'eta.txt'
    np.savetxt(path, [1., -1.])
    return str(path)


def test_analytic(eta_file, tmp_path, capsys):
    out = str(tmp_path / 'out')
    assert locking_threshold.main(['analytic', '--eta', eta_file, '--lambda-table', '--gnuplot', '--out', out]) == 0
    printed = capsys.readouterr().out
    assert 'chain threshold Γ_C = 1\n' in printed
    assert 'ring upper bound     = 2\n' in printed
    assert (tmp_path / 'out' / 'lambda.csv').exists()
    assert (tmp_path / 'out' / 'lambda.gp').exists()


def test_simulate_ring(eta_file, tmp_path, capsys):
    assert locking_threshold.main(['simulate', '--eta', eta_file, '--topology', 'ring', '--gamma', '1.5',
                                   '--transient', '200', '--observe', '100', '--dump', '--stride', '80',
                                   '--out', str(tmp_path)]) == 0
    printed = capsys.readouterr().out
    assert 'locked = True' in printed
    assert 'winding number = 0' in printed
    assert (tmp_path / 'trajectory.csv').read_text().startswith('time,theta_1,theta_2')


def test_threshold(eta_file, capsys):
    assert locking_threshold.main(['threshold', '--eta', eta_file, '--transient', '500', '--observe', '300',
                                   '--tol', '1e-2']) == 0
    estimate = float(capsys.readouterr().out.split('=')[1].split()[0])
    assert estimate == pytest.approx(1., rel=0.02)


def test_scatter(tmp_path):
    out = str(tmp_path)
    assert locking_threshold.main(['scatter', '--n', '3', '--trials', '2', '--transient', '300', '--observe', '200',
                                   '--tol', '1e-2', '--out', out, '--gnuplot', '--quiet']) == 0
    metadata = json.loads((tmp_path / 'scatter_telescopic_n3.json').read_text())
    assert metadata['trials'] == 2 and metadata['summary']['violations'] == 0
    assert (tmp_path / 'scatter_telescopic_n3.gp').exists()


def test_analytic_convergence(tmp_path, capsys):
    assert locking_threshold.main(['convergence', '--analytic', '--n-values', '8', '16', '32',
                                   '--out', str(tmp_path)]) == 0
    assert 'normalized_residual slope' in capsys.readouterr().out
    assert json.loads((tmp_path / 'convergence_analytic_telescopic.json').read_text())['f'] == '-sin(1)'


def test_counterexample(tmp_path):
    assert locking_threshold.main(['counterexample', '--out', str(tmp_path)]) == 0
    assert json.loads((tmp_path / 'counterexample.json').read_text())['passed'] is True


@pytest.mark.parametrize('argv', [
    ['analytic', '--f', 'tan(1)'],
    ['analytic', '--f', 'sin(1)+2'],
    ['threshold', '--n', '3'],
])
def test_locking_errors_exit_with_two(argv, tmp_path):
    constant = tmp_path / 'constant.txt'
    np.savetxt(constant, [0.3, 0.3, 0.3])
    if argv[0] == 'threshold':
        argv = argv + ['--eta', str(constant)]
    assert locking_threshold.main(argv) == 2


def test_analytic_states(tmp_path, capsys):
    out = str(tmp_path)
    assert locking_threshold.main(['analytic', '--n', '6', '--seed', '4', '--gamma', '0.1', '--states',
                                   '--out', out]) == 0
    assert 'ring approximation residual' in capsys.readouterr().out
    assert (tmp_path / 'chain_state.csv').read_text().startswith('phi_1,phi_2,phi_3,phi_4,phi_5\n')
    metadata = json.loads((tmp_path / 'ring_approximation.json').read_text())
    assert (metadata['seed'], metadata['topology'], metadata['scheme']) == (4, 'ring', 'telescopic')


def test_analytic_states_need_a_width(tmp_path):
    assert locking_threshold.main(['analytic', '--states', '--out', str(tmp_path)]) == 2


def test_analytic_convergence_gnuplot(tmp_path):
    assert locking_threshold.main(['convergence', '--analytic', '--n-values', '8', '16', '--gnuplot',
                                   '--out', str(tmp_path)]) == 0
    script = (tmp_path / 'convergence_analytic_telescopic.gp').read_text()
    assert "using 1:4" in script
    assert "set ylabel 'residual'" in script


def test_convergence_observes_longer():
    args = locking_threshold.build_parser().parse_args(['convergence'])
    assert args.observe == 1_000.
    assert locking_threshold.build_parser().parse_args(['simulate']).observe == 500.
