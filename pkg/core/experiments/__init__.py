from .convergence import convergence_experiment, analytic_convergence_experiment, fit_log_slope, \
    DEFAULT_GAMMA_FRACTION, DEFAULT_N_VALUES, CONVERGENCE_OBSERVATION_TIME
from .counterexample import Check, CounterexampleReport, counterexample_experiment
from .output import write_table, write_metadata, write_gnuplot
from .scatter import scatter_experiment, DEFAULT_TRIALS, RATIO_SLACK

__all__ = ['convergence_experiment', 'analytic_convergence_experiment', 'fit_log_slope',
           'DEFAULT_GAMMA_FRACTION', 'DEFAULT_N_VALUES', 'CONVERGENCE_OBSERVATION_TIME', 'Check',
           'CounterexampleReport', 'counterexample_experiment', 'write_table', 'write_metadata', 'write_gnuplot',
           'scatter_experiment', 'DEFAULT_TRIALS', 'RATIO_SLACK']
