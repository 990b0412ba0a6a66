import pandas as pd
import pytest

from core.analytic import chain_threshold, ratio_upper_bound
from core.coupling import parse_coupling, profile
from core.experiments import RATIO_SLACK, scatter_experiment
from core.frequencies import cumulative_deviations, sample_uniform
from core.models import Scheme

QUICK = {'rel_tol': 1e-2, 'transient_time': 300., 'observation_time': 200.}


def test_scatter_rows(sine, sine_profile):
    table, summary = scatter_experiment(sine, Scheme.TELESCOPIC, 4, trials=3, seed0=10, **QUICK)
    assert list(table.columns) == ['seed', 'n', 'f', 'scheme', 'gamma_chain', 'gamma_ring', 'analytic_chain',
                                   'ring_bound', 'ratio']
    assert table['seed'].tolist() == [10, 11, 12]
    assert (table['scheme'] == 'telescopic').all() and (table['f'] == 'sin(1)').all()
    for _, row in table.iterrows():
        assert row['analytic_chain'] == chain_threshold(sine_profile, cumulative_deviations(
            sample_uniform(4, int(row['seed']))))
        assert row['ratio'] == pytest.approx(row['gamma_ring'] / row['gamma_chain'])
        assert row['gamma_ring'] <= 1.05 * row['ring_bound']
    assert summary['ratio_bound'] == pytest.approx(2.)
    assert summary['violations'] == 0
    assert summary['max_ratio'] <= 2. + RATIO_SLACK


def test_scatter_is_reproducible(sine):
    first, _ = scatter_experiment(sine, Scheme.STANDARD, 3, trials=2, seed0=4, batch_size=1, **QUICK)
    second, _ = scatter_experiment(sine, Scheme.STANDARD, 3, trials=2, seed0=4, **QUICK)
    pd.testing.assert_frame_equal(first, second)


def test_scatter_needs_trials(sine):
    with pytest.raises(ValueError):
        scatter_experiment(sine, Scheme.TELESCOPIC, 4, trials=0)


@pytest.mark.slow
def test_ratio_bound_is_never_trespassed():
    panels = [('sin(1)', Scheme.TELESCOPIC), ('sin(1)+cos(3)', Scheme.TELESCOPIC),
              ('sin(1,phase=0.6)-c', Scheme.TELESCOPIC), ('sin(1,phase=0.6)-c', Scheme.STANDARD)]
    below_one = 0
    for text, scheme in panels:
        f = parse_coupling(text)
        table, summary = scatter_experiment(f, scheme, 10, trials=30, seed0=0)
        assert summary['violations'] == 0
        assert summary['ratio_bound'] == pytest.approx(ratio_upper_bound(profile(f)))
        below_one += int((table['ratio'] < 1.).sum())
    assert below_one >= 1
