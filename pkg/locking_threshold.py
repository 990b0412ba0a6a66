#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import argparse
import logging
import math
import os
import sys
from typing import Dict

import numpy as np

from core.analytic import (chain_locked_state, chain_threshold, locked_state_metadata, locked_state_table,
                           ratio_upper_bound, ring_approximate_state, ring_approximation_metadata,
                           ring_approximation_table, ring_standard_approximate_state, ring_upper_bound,
                           standard_chain_locked_state)
from core.coupling import DEFAULT_GRID_SIZE, lambda_table, parse_coupling, profile
from core.dynamics import (DEFAULT_DT, DEFAULT_LOCK_TOLERANCE, DEFAULT_OBSERVATION_TIME, DEFAULT_TRANSIENT_TIME,
                           PhaseState, SystemConfig, observe_lock, trajectory, winding_number)
from core.errors import LockingError, NotApplicableError
from core.experiments import (CONVERGENCE_OBSERVATION_TIME, DEFAULT_GAMMA_FRACTION, DEFAULT_N_VALUES, DEFAULT_TRIALS,
                              analytic_convergence_experiment, convergence_experiment, counterexample_experiment,
                              scatter_experiment, write_gnuplot, write_metadata, write_table)
from core.frequencies import FrequencyVector, cumulative_deviations, read_frequencies, sample_uniform
from core.models import Scheme, Topology
from core.thresholds import BRACKET_MARGIN, DEFAULT_REL_TOL, STANDARD_BRACKET_EXPANSIONS, bisect_threshold

logger = logging.getLogger('locking_threshold')

DEFAULT_F = 'sin(1)'
DEFAULT_N = 25
DEFAULT_OUT = 'out'
EXIT_CHECK_FAILED = 1
EXIT_LOCKING_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--f', default=DEFAULT_F, help=f'coupling function, e.g. "sin(1)+cos(3)" '
                                                       f'or "sin(1,phase=0.6)-c" (default {DEFAULT_F})')
    common.add_argument('--scheme', choices=[s.value for s in Scheme], default=Scheme.TELESCOPIC.value)
    common.add_argument('--topology', choices=[t.value for t in Topology], default=Topology.CHAIN.value)
    common.add_argument('--n', type=int, default=DEFAULT_N, help='number of oscillators')
    common.add_argument('--seed', type=int, default=0)
    common.add_argument('--eta', help='file with base frequencies, one per line (overrides --n/--seed)')
    common.add_argument('--gamma', type=float, help='width Γ')
    common.add_argument('--dt', type=float, default=DEFAULT_DT)
    common.add_argument('--transient', type=float, default=DEFAULT_TRANSIENT_TIME)
    common.add_argument('--observe', type=float, default=DEFAULT_OBSERVATION_TIME)
    common.add_argument('--lock-tol', type=float, default=DEFAULT_LOCK_TOLERANCE)
    common.add_argument('--tol', type=float, default=DEFAULT_REL_TOL, help='relative bisection tolerance')
    common.add_argument('--trials', type=int, default=DEFAULT_TRIALS)
    common.add_argument('--out', default=DEFAULT_OUT, help='output directory for tables')
    common.add_argument('--gnuplot', action='store_true', help='also write gnuplot scripts next to the tables')
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument('--verbose', action='store_true')
    verbosity.add_argument('--quiet', action='store_true')

    parser = argparse.ArgumentParser(description='Locking thresholds of chains and rings of phase oscillators')
    commands = parser.add_subparsers(dest='command', required=True)

    analytic = commands.add_parser('analytic', parents=[common], help='analytic thresholds and bounds')
    analytic.add_argument('--lambda-table', action='store_true', help='write the Λ table to --out')
    analytic.add_argument('--states', action='store_true',
                          help='write the locked chain state and its ring approximation at --gamma to --out')
    analytic.set_defaults(handler=run_analytic)

    simulate = commands.add_parser('simulate', parents=[common], help='integrate and report the lock verdict')
    simulate.add_argument('--dump', action='store_true', help='write the trajectory to --out')
    simulate.add_argument('--stride', type=int, default=8, help='steps between trajectory samples')
    simulate.set_defaults(handler=run_simulate)

    threshold = commands.add_parser('threshold', parents=[common], help='bisect a single threshold')
    threshold.add_argument('--bracket', type=float, help=f'upper bracket (default {BRACKET_MARGIN} x analytic cap)')
    threshold.set_defaults(handler=run_threshold)

    scatter = commands.add_parser('scatter', parents=[common], help='matched chain/ring thresholds')
    scatter.set_defaults(handler=run_scatter)

    convergence = commands.add_parser('convergence', parents=[common], help='chain vs ring separation against N')
    convergence.add_argument('--n-values', type=int, nargs='+', default=list(DEFAULT_N_VALUES))
    convergence.add_argument('--fraction', type=float, default=DEFAULT_GAMMA_FRACTION, help='Γ / Γ_C')
    convergence.add_argument('--realizations', type=int, default=1)
    convergence.add_argument('--analytic', action='store_true', help='use the constructed ring approximation')
    convergence.set_defaults(handler=run_convergence, f='-sin(1)', observe=CONVERGENCE_OBSERVATION_TIME)

    counterexample = commands.add_parser('counterexample', parents=[common], help='chain locks, ring cannot')
    counterexample.set_defaults(handler=run_counterexample)
    return parser


def settings(args) -> Dict:
    return {'dt': args.dt, 'transient_time': args.transient, 'observation_time': args.observe,
            'lock_tolerance': args.lock_tol}


def frequencies(args) -> FrequencyVector:
    return read_frequencies(args.eta) if args.eta else sample_uniform(args.n, args.seed)


def run_analytic(args) -> int:
    f = parse_coupling(args.f)
    p = profile(f, DEFAULT_GRID_SIZE)
    cd = cumulative_deviations(frequencies(args))

    print(f'f = {f}')
    print(f'max f = {p.f_upper:.12g}, min f = {p.f_lower:.12g}, max |f\'| = {p.max_abs_derivative:.12g}')
    print(f'positive-slope zero x0 = {p.positive_slope_zero:.12g}')
    print('Λ = ' + ' ∪ '.join(f'({a:.6g}, {b:.6g})' for a, b in p.lambda_branches))
    print(f'D_u = {cd.d_upper:.12g}, D_l = {cd.d_lower:.12g}')
    print(f'chain threshold Γ_C = {chain_threshold(p, cd):.12g}')
    print(f'ring upper bound     = {ring_upper_bound(p, cd):.12g}')
    print(f'ratio upper bound    = {ratio_upper_bound(p):.12g}')

    if args.lambda_table:
        write_table(lambda_table(f, p), args.out, 'lambda', {'f': f.spec, 'branches': list(p.lambda_branches)})
        if args.gnuplot:
            write_gnuplot('lambda', args.out, 'lambda')
    if args.states:
        write_states(args, f, p)
    return 0


def write_states(args, f, p):
    if args.gamma is None:
        raise NotApplicableError('--states needs a width --gamma')
    fv = frequencies(args)
    seed = None if args.eta else args.seed
    if Scheme(args.scheme) == Scheme.TELESCOPIC:
        chain = chain_locked_state(f, p, cumulative_deviations(fv), args.gamma)
        ring = ring_approximate_state(f, p, chain)
    else:
        chain = standard_chain_locked_state(f, p, fv, args.gamma)
        ring = ring_standard_approximate_state(f, p, chain)

    write_table(locked_state_table(chain), args.out, 'chain_state', locked_state_metadata(chain, f, seed))
    write_table(ring_approximation_table(ring), args.out, 'ring_approximation',
                ring_approximation_metadata(ring, chain, f, seed))
    print(f'chain state Ω = {chain.omega:.12g} (stable={chain.stable}), '
          f'ring approximation residual {float(ring.residual.max()):.3g} <= {ring.residual_bound:.3g}')


def run_simulate(args) -> int:
    fv = frequencies(args)
    cfg = SystemConfig(parse_coupling(args.f), fv, args.gamma or 0., Topology(args.topology), Scheme(args.scheme),
                       **settings(args))
    s0 = PhaseState.zeros(fv.n)
    verdict, final = observe_lock(cfg, s0)

    print(f'locked = {verdict.locked}')
    print(f'max frequency spread = {verdict.max_frequency_spread:.6g}')
    print(f'max phase drift = {verdict.max_phase_drift:.6g}')
    print(f'Ω̂ = {verdict.omega_hat:.12g}')
    if cfg.topology == Topology.RING:
        print(f'winding number = {winding_number(final.theta)}')

    if args.dump:
        write_table(trajectory(cfg, s0, cfg.transient_time + cfg.observation_time, args.stride), args.out,
                    'trajectory')
    return 0


def run_threshold(args) -> int:
    f = parse_coupling(args.f)
    fv = frequencies(args)
    topology = Topology(args.topology)
    bracket = args.bracket
    if bracket is None:
        p = profile(f)
        cd = cumulative_deviations(fv)
        cap = chain_threshold(p, cd) if topology == Topology.CHAIN else ring_upper_bound(p, cd)
        if math.isinf(cap):
            raise NotApplicableError('Analytic cap is infinite (constant frequencies): every width locks')
        bracket = BRACKET_MARGIN * cap

    scheme = Scheme(args.scheme)
    expansions = STANDARD_BRACKET_EXPANSIONS if args.bracket is None and scheme == Scheme.STANDARD else 0
    cfg = SystemConfig(f, fv, 0., topology, scheme, **settings(args))
    estimate = bisect_threshold(cfg, bracket, args.tol, expansions)
    print(f'empirical threshold = {estimate.estimate:.9g} in [{estimate.gamma_low:.9g}, {estimate.gamma_high:.9g}] '
          f'after {estimate.iterations} probes')
    return 0


def run_scatter(args) -> int:
    f = parse_coupling(args.f)
    scheme = Scheme(args.scheme)
    table, summary = scatter_experiment(f, scheme, args.n, args.trials, args.seed, args.tol, **settings(args))

    name = f'scatter_{scheme.value}_n{args.n}'
    write_table(table, args.out, name, {'f': f.spec, 'scheme': scheme.value, 'n': args.n, 'trials': args.trials,
                                        'seed': args.seed, 'rel_tol': args.tol, 'summary': summary,
                                        **settings(args)})
    if args.gnuplot:
        write_gnuplot('scatter', args.out, name, ratio_bound=summary['ratio_bound'])

    for key, value in summary.items():
        print(f'{key} = {value}')
    return 0


def run_convergence(args) -> int:
    f = parse_coupling(args.f)
    if args.analytic:
        table, slopes = analytic_convergence_experiment(f, args.fraction, args.n_values, args.seed,
                                                        args.realizations, Scheme(args.scheme))
        name = f'convergence_analytic_{args.scheme}'
        write_table(table, args.out, name, {'f': f.spec, 'fraction': args.fraction, 'seed': args.seed,
                                            'realizations': args.realizations, 'slopes': slopes})
        if args.gnuplot:
            write_convergence_gnuplot(args.out, name, table, 'residual')
        for key, value in slopes.items():
            print(f'{key} slope = {value}')
        return 0

    table, slope = convergence_experiment(f, args.fraction, args.n_values, args.seed, args.realizations,
                                          args.dt, args.transient, args.observe)
    name = 'convergence'
    write_table(table, args.out, name, {'f': f.spec, 'fraction': args.fraction, 'seed': args.seed,
                                        'realizations': args.realizations, 'observation_time': args.observe,
                                        'slope': slope})
    if args.gnuplot:
        write_convergence_gnuplot(args.out, name, table, 'separation')
    print(f'slope = {slope}')
    return 0


def write_convergence_gnuplot(directory: str, name: str, table, column: str):
    # the N^-1 guide passes through the mean value at the smallest N
    first = table[table['n'] == table['n'].min()]
    write_gnuplot('convergence', directory, name, ylabel=column, column=table.columns.get_loc(column) + 1,
                  scale=float(np.mean(first[column] * first['n'])))


def run_counterexample(args) -> int:
    report = counterexample_experiment(Scheme(args.scheme), **settings(args))
    os.makedirs(args.out, exist_ok=True)
    write_metadata(report.to_dict(), os.path.join(args.out, 'counterexample.json'))
    for check in report.checks:
        print(f'[{"ok" if check.passed else "FAILED"}] {check.name}: {check.detail}')
    return 0 if report.passed else EXIT_CHECK_FAILED


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format='%(asctime)s %(levelname)s %(name)s: %(message)s')

    try:
        return args.handler(args)
    except LockingError as e:
        logger.error('%s: %s', type(e).__name__, e)
        return EXIT_LOCKING_ERROR


if __name__ == '__main__':
    sys.exit(main())
