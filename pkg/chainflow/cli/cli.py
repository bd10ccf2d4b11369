#!/usr/bin/env python
# -*- coding: utf-8 -*-

# #########################################################################
# Copyright (c) 2015, UChicago Argonne, LLC. All rights reserved.         #
# Distributed under the BSD-3 license, see LICENSE.txt for details.       #
# #########################################################################

"""
Module for the ``chainflow`` command line.

Exit codes: 0 on success, 1 for invalid input or configuration, 2 for a
numerical failure.
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import argparse
import logging
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace

import numpy as np

from chainflow.cli.config import RunConfig, load_config, save_config
from chainflow.eos.state import FluidState
from chainflow.eos.vdw import maxwell_equilibrium, spinodal_bounds
from chainflow.kirkwood.kirkwood import write_track_csv
from chainflow.macrosolver.front import run, write_mesh_csv, write_report_csv
from chainflow.microsolver.micro import RiemannInput, solve_micro_riemann
from chainflow.misc.misc import allocate_mpi_subsets, get_comm, thread_count
from chainflow.surrogate.kernel import Sample, initial_state
from chainflow.surrogate.store import append_store, load_store, save_store
from chainflow.util.errors import ChainflowError, NumericalError, ValidationError
from chainflow.util.util import read_table, write_table

logger = logging.getLogger(__name__)

__author__ = "Chainflow developers"
__credits__ = "Rafael Vescovi, Ming Du"
__copyright__ = "Copyright (c) 2015, UChicago Argonne, LLC."
__docformat__ = 'restructuredtext en'
__all__ = ['cmd_maxwell',
           'cmd_micro',
           'cmd_macro',
           'cmd_sample_table',
           'read_inputs',
           'main']

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_NUMERICAL = 2

RESPONSE_HEADER = ['s', 'rho_sL', 'm_sL', 'rho_sR', 'm_sR', 'rh_mass_res', 'rh_mom_res', 'flagged']
INPUT_HEADER = ['rho_L', 'm_L', 'rho_R', 'm_R']


def cmd_maxwell(cfg):
    """
    Print the equilibrium and spinodal states of the configured EOS.

    Returns
    -------
    MaxwellStates
    """
    params = cfg.eos.params()
    eq = maxwell_equilibrium(params)
    bounds = spinodal_bounds(params)
    print('T_ref         {:.6f}'.format(params.T_ref))
    print('T_c           {:.6f}'.format(params.T_c))
    print('rho_liq       {:.6f}'.format(eq.rho_liq))
    print('rho_vap       {:.6f}'.format(eq.rho_vap))
    print('tau_liq_eq    {:.6f}'.format(eq.tau_liq_eq))
    print('tau_vap_eq    {:.6f}'.format(eq.tau_vap_eq))
    print('p_star        {:.6f}'.format(eq.p_star))
    print('tau_liq_max   {:.6f}'.format(bounds.tau_liq_max))
    print('tau_vap_min   {:.6f}'.format(bounds.tau_vap_min))
    return eq


def cmd_micro(cfg, rho_L, v_L, rho_R, v_R, out_dir=None, dump_fields=False):
    """
    Solve one microscale Riemann problem and write ``micro_response.csv``.

    With ``dump_fields`` the averaged field of every snapshot and the
    interface track go to ``<out_dir>/fields``.
    """
    out_dir = out_dir or cfg.io.out_dir
    params = cfg.eos.params()
    micro = cfg.micro
    if dump_fields or cfg.io.dump_fields:
        micro = replace(micro, dump_dir=os.path.join(out_dir, 'fields'))
    inp = RiemannInput(FluidState.from_velocity(rho_L, v_L), FluidState.from_velocity(rho_R, v_R))
    resp = solve_micro_riemann(inp, micro, params)
    print('s             {:.6f}'.format(resp.s))
    print('u*_L          ({:.6f}, {:.6f})'.format(resp.u_star_L.rho, resp.u_star_L.momentum))
    print('u*_R          ({:.6f}, {:.6f})'.format(resp.u_star_R.rho, resp.u_star_R.momentum))
    print('rh_mass_res   {:.3e}'.format(resp.rh_mass_res))
    print('rh_mom_res    {:.3e}'.format(resp.rh_mom_res))
    if resp.flagged:
        print('flagged       response exceeds the Rankine-Hugoniot bound')
    values = list(resp.as_vector()) + [resp.rh_mass_res, resp.rh_mom_res, int(resp.flagged)]
    write_table(os.path.join(out_dir, 'micro_response.csv'), RESPONSE_HEADER, [[v] for v in values])
    return resp


def cmd_macro(cfg, out_dir=None, store=None):
    """
    Run the multiscale solver.

    Writes one mesh CSV per stored time under ``<out_dir>/trajectory``, the
    per-step ``report.csv``, the interface ``track.csv`` and ``times.csv``,
    and saves the grown sample set to the store.

    Returns
    -------
    MacroRun
    """
    out_dir = out_dir or cfg.io.out_dir
    store = _store_path(cfg, out_dir, store)
    params = cfg.eos.params()
    sample_set = load_store(store, scaling=cfg.gate.resolved_scaling(params), radius=cfg.gate.duplicate_radius)
    state = initial_state(cfg.gate, params, sample_set)
    traj_dir = os.path.join(out_dir, 'trajectory')
    times = []

    def observer(t, mesh):
        write_mesh_csv(mesh, os.path.join(traj_dir, 'mesh_{:05d}.csv'.format(len(times))))
        times.append(t)

    result = run(cfg.macro, params, state=state, observer=observer)
    write_table(os.path.join(out_dir, 'times.csv'), ['index', 't'], [np.arange(len(times)), times])
    write_report_csv(result.report, os.path.join(out_dir, 'report.csv'))
    write_track_csv(result.track, os.path.join(out_dir, 'track.csv'))
    save_store(result.state.sample_set, store)
    save_config(cfg, os.path.join(out_dir, 'run_config.json'))
    totals = result.totals
    print('steps         {:d}'.format(totals['steps']))
    print('micro_calls   {:d}'.format(totals['micro_calls']))
    print('samples       {:d}'.format(totals['samples']))
    print('wall_ms       bulk {:.1f}, micro {:.1f}, surrogate {:.1f}'.format(
        totals['wall_ms_bulk'], totals['wall_ms_micro'], totals['wall_ms_surrogate']))
    return result


def _store_path(cfg, out_dir, store=None):
    return store or cfg.io.store or os.path.join(out_dir, 'samples.csv')


def _evaluate(task):
    index, x, params, micro = task
    t0 = time.time()
    try:
        resp = solve_micro_riemann(RiemannInput.from_vector(x), micro, params)
    except ChainflowError as exc:
        return index, None, str(exc), time.time() - t0
    return index, resp, None, time.time() - t0


def read_inputs(fname=None, values=None):
    """
    Riemann inputs from a CSV with header rho_L,m_L,rho_R,m_R and/or a flat
    list of numbers taken four at a time.

    Returns
    -------
    ndarray
        Shape (n, 4).
    """
    rows = []
    if fname:
        header, data = read_table(fname)
        if header != INPUT_HEADER:
            raise ValidationError('Input table {} must have header {}.'.format(fname, ','.join(INPUT_HEADER)))
        rows.extend(data.tolist())
    if values:
        if len(values) % 4:
            raise ValidationError('Inputs come in groups of four numbers, got {:d}.'.format(len(values)))
        rows.extend(np.reshape(np.asarray(values, dtype=float), (-1, 4)).tolist())
    return np.array(rows, dtype=float).reshape(-1, 4)


def cmd_sample_table(cfg, inputs, out_dir=None, store=None):
    """
    Evaluate the microscale solver for a batch of inputs and append the
    results to the sample store.

    Inputs are dealt round-robin over MPI ranks; each rank evaluates its
    share in a process pool of ``CHAINFLOW_THREADS`` workers. Failed rows are
    logged and skipped. Rank 0 appends the results in input order.

    Returns
    -------
    int
        Number of rows appended (on rank 0; 0 elsewhere).
    """
    store = _store_path(cfg, out_dir or cfg.io.out_dir, store)
    inputs = np.asarray(inputs, dtype=float).reshape(-1, 4)
    comm = get_comm()
    rank, size = comm.Get_rank(), comm.Get_size()
    params = cfg.eos.params()
    mine = allocate_mpi_subsets(len(inputs), size)[rank]
    tasks = [(i, inputs[i], params, cfg.micro) for i in mine]
    n_workers = min(thread_count(), max(len(tasks), 1))
    if n_workers > 1:
        with ProcessPoolExecutor(max_workers=n_workers) as executor:
            results = list(executor.map(_evaluate, tasks))
    else:
        results = [_evaluate(task) for task in tasks]
    for index, resp, error, seconds in results:
        if error is None:
            logger.info('Rank: {:d}; Sample {:d}; micro solve in {:.2f} s.'.format(rank, index, seconds))
        else:
            logger.warning('Rank: {:d}; Sample {:d}; skipped: {}'.format(rank, index, error))

    gathered = comm.gather(results, root=0)
    if rank != 0:
        return 0
    done = sorted((r for part in gathered for r in part), key=lambda r: r[0])
    count = 0
    for index, resp, error, _ in done:
        if resp is not None:
            append_store(Sample.from_response(inputs[index], resp), store)
            count += 1
    print('appended      {:d} of {:d} samples to {}'.format(count, len(inputs), store))
    return count


def _parser():
    parser = argparse.ArgumentParser(prog='chainflow',
                                     description='Multiscale liquid-vapor flow with a particle-chain interface solver.')
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='JSON configuration file; defaults apply when omitted.')
    common.add_argument('--out', help='Output directory, overrides io.out_dir.')
    common.add_argument('--store', help='Sample store CSV, overrides io.store.')
    common.add_argument('--dump-fields', action='store_true', help='Write averaged fields of every snapshot.')
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument('--quiet', action='store_true', help='Only log warnings and errors.')
    verbosity.add_argument('--verbose', action='store_true', help='Log debug messages.')

    sub = parser.add_subparsers(dest='command')
    sub.required = True
    sub.add_parser('maxwell', parents=[common], help='Maxwell equilibrium and spinodal bounds.')
    micro = sub.add_parser('micro', parents=[common], help='Solve one microscale Riemann problem.')
    for name in ('rho_L', 'v_L', 'rho_R', 'v_R'):
        micro.add_argument(name, type=float)
    sub.add_parser('macro', parents=[common], help='Run the multiscale solver.')
    table = sub.add_parser('sample-table', parents=[common], help='Pre-compute microscale samples.')
    table.add_argument('--inputs', help='CSV with header rho_L,m_L,rho_R,m_R.')
    table.add_argument('values', nargs='*', type=float, help='Inputs as rho_L m_L rho_R m_R quadruples.')
    return parser


def _configure_logging(args):
    level = logging.INFO
    if args.quiet:
        level = logging.WARNING
    elif args.verbose:
        level = logging.DEBUG
    logging.getLogger().setLevel(level)
    logging.captureWarnings(True)


def main(argv=None):
    """Command line entry point; returns the exit code."""
    args = _parser().parse_args(argv)
    _configure_logging(args)
    try:
        cfg = load_config(args.config) if args.config else RunConfig()
        if args.command == 'maxwell':
            cmd_maxwell(cfg)
        elif args.command == 'micro':
            cmd_micro(cfg, args.rho_L, args.v_L, args.rho_R, args.v_R, args.out, args.dump_fields)
        elif args.command == 'macro':
            cmd_macro(cfg, args.out, args.store)
        else:
            cmd_sample_table(cfg, read_inputs(args.inputs, args.values), args.out, args.store)
    except ValidationError as exc:
        logger.error(str(exc))
        return EXIT_VALIDATION
    except NumericalError as exc:
        logger.error(str(exc))
        return EXIT_NUMERICAL
    except ChainflowError as exc:
        # domain errors reaching the top are input problems
        logger.error(str(exc))
        return EXIT_VALIDATION
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
