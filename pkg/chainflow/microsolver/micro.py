#!/usr/bin/env python
# -*- coding: utf-8 -*-

# #########################################################################
# Copyright (c) 2015, UChicago Argonne, LLC. All rights reserved.         #
# Distributed under the BSD-3 license, see LICENSE.txt for details.       #
# #########################################################################

"""
Module for the microscale Riemann solver: a particle chain is set up from
two macroscale states, integrated, and measured to give the phase boundary
speed and the plateau states on both sides of it.
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import logging
import os
import time
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from chainflow.eos.state import FluidState
from chainflow.eos.vdw import classify_phase, is_admissible, pressure, sound_speed_sq
from chainflow.kirkwood.kirkwood import (BinGrid, InterfaceTrack, bin_fields, detect_interface,
                                         estimate_speed, extract_states, write_field_csv,
                                         write_track_csv)
from chainflow.mdchain.chain import default_time_step, init_riemann_chain, run_chain
from chainflow.util.errors import DomainError, ExtractionError, ValidationError

logger = logging.getLogger(__name__)

__author__ = "Chainflow developers"
__credits__ = "Rafael Vescovi, Ming Du"
__copyright__ = "Copyright (c) 2015, UChicago Argonne, LLC."
__docformat__ = 'restructuredtext en'
__all__ = ['MicroConfig',
           'RiemannInput',
           'RiemannResponse',
           'MicroOracle',
           'validate_input',
           'rankine_hugoniot_residuals',
           'reflection_time_limit',
           'solve_micro_riemann',
           'mirror',
           'shift',
           'micro_oracle']


@dataclass
class MicroConfig(object):
    """
    Settings of one microscale Riemann solve.

    Length scales (bins, averaging windows) are given in units of the mean
    initial particle spacing; each averaging window also spans at least
    ``window_spacings`` particles of its own side. ``None`` requests a value
    derived from the Riemann data. The plateau states are averaged over the
    last ``state_fraction`` of the snapshots with a tracked interface.
    """

    N: int = 16000
    m: float = 1.
    dt: Optional[float] = None
    courant: float = 0.1
    t_end: Optional[float] = None
    reflection_safety: float = 0.9
    allow_reflections: bool = False
    n_snapshots: int = 100
    snapshot_stride: Optional[int] = None
    bin_spacings: float = 20.
    window_spacings: float = 50.
    offset_spacings: float = 25.
    fit_fraction: float = 0.5
    state_fraction: float = 0.1
    search_window: Tuple[float, float] = (0.25, 0.75)
    refine: bool = True
    rh_bound: float = 0.05
    dump_dir: Optional[str] = None

    def __post_init__(self):
        self.search_window = tuple(float(w) for w in self.search_window)
        if int(self.N) != self.N or self.N < 4 or self.N % 2:
            raise ValidationError('micro.N must be an even integer >= 4, got {}.'.format(self.N))
        self.N = int(self.N)
        positive = ['m', 'courant', 'bin_spacings', 'window_spacings', 'rh_bound']
        for name in positive:
            if not getattr(self, name) > 0:
                raise ValidationError('micro.{} must be positive, got {}.'.format(name, getattr(self, name)))
        for name in ('dt', 't_end'):
            value = getattr(self, name)
            if value is not None and not value > 0:
                raise ValidationError('micro.{} must be positive or null, got {}.'.format(name, value))
        if self.offset_spacings < 0:
            raise ValidationError('micro.offset_spacings must be nonnegative.')
        if not 0 < self.reflection_safety <= 1:
            raise ValidationError('micro.reflection_safety must lie in (0, 1].')
        if not 0 < self.fit_fraction <= 1:
            raise ValidationError('micro.fit_fraction must lie in (0, 1].')
        if not 0 < self.state_fraction <= 1:
            raise ValidationError('micro.state_fraction must lie in (0, 1].')
        if self.n_snapshots < 2:
            raise ValidationError('micro.n_snapshots must be at least 2.')
        if self.snapshot_stride is not None and (int(self.snapshot_stride) != self.snapshot_stride
                                                 or self.snapshot_stride < 1):
            raise ValidationError('micro.snapshot_stride must be a positive integer or null.')
        lo, hi = self.search_window
        if not 0 <= lo < hi <= 1:
            raise ValidationError('micro.search_window must satisfy 0 <= lo < hi <= 1.')


@dataclass(frozen=True)
class RiemannInput(object):
    u_L: FluidState
    u_R: FluidState

    def as_vector(self):
        return np.array([self.u_L.rho, self.u_L.momentum, self.u_R.rho, self.u_R.momentum])

    @classmethod
    def from_vector(cls, x):
        x = np.asarray(x, dtype=float)
        if x.shape != (4,):
            raise ValidationError('A Riemann input has 4 components, got shape {}.'.format(x.shape))
        return cls(FluidState(x[0], x[1]), FluidState(x[2], x[3]))


@dataclass(frozen=True)
class RiemannResponse(object):
    """
    Interface speed and adjacent plateau states, with the Rankine-Hugoniot
    residuals of the measurement.
    """

    s: float
    u_star_L: FluidState
    u_star_R: FluidState
    rh_mass_res: float = float('nan')
    rh_mom_res: float = float('nan')
    flagged: bool = False

    def as_vector(self):
        return np.array([self.s, self.u_star_L.rho, self.u_star_L.momentum,
                         self.u_star_R.rho, self.u_star_R.momentum])

    @classmethod
    def from_vector(cls, y, rh_mass_res=float('nan'), rh_mom_res=float('nan'), flagged=False):
        y = np.asarray(y, dtype=float)
        if y.shape != (5,):
            raise ValidationError('A Riemann response has 5 components, got shape {}.'.format(y.shape))
        return cls(float(y[0]), FluidState(y[1], y[2]), FluidState(y[3], y[4]),
                   float(rh_mass_res), float(rh_mom_res), bool(flagged))


def validate_input(inp, params):
    """
    Check that one side is liquid and the other vapor, both admissible.

    Returns
    -------
    tuple of str
        Phase labels of the left and right states.
    """
    phases = []
    for side, u in (('left', inp.u_L), ('right', inp.u_R)):
        if not is_admissible(u.tau, params):
            raise ValidationError('The {} state rho = {} is not admissible (hard core or spinodal).'.format(
                side, u.rho))
        phases.append(classify_phase(u.tau, params))
    if sorted(phases) != ['liquid', 'vapor']:
        raise ValidationError('A microscale Riemann problem needs one liquid and one vapor state, got {}.'.format(
            tuple(phases)))
    return tuple(phases)


def rankine_hugoniot_residuals(s, u_star_L, u_star_R, params):
    """
    Mass and momentum jump balances across a discontinuity moving at s.

    Returns
    -------
    mass_res, mom_res : float
        |[rho (v - s)]| and |[rho (v - s) v + p]|; the momentum residual is
        infinite if a state lies in the hard core.
    """
    flux = []
    for u in (u_star_L, u_star_R):
        v = u.velocity
        mass = u.rho * (v - s)
        try:
            mom = mass * v + pressure(u.tau, params)
        except DomainError:
            mom = float('inf')
        flux.append((mass, mom))
    return abs(flux[0][0] - flux[1][0]), abs(flux[0][1] - flux[1][1])


def _scales(inp, cfg):
    spacing_L = cfg.m / inp.u_L.rho
    spacing_R = cfg.m / inp.u_R.rho
    mean = 0.5 * (spacing_L + spacing_R)
    half = cfg.N // 2
    return spacing_L, spacing_R, mean, min(half * spacing_L, half * spacing_R)


def _windows(inp, cfg):
    spacing_L, spacing_R, mean, _ = _scales(inp, cfg)
    window = (cfg.window_spacings * max(mean, spacing_L), cfg.window_spacings * max(mean, spacing_R))
    return window, cfg.offset_spacings * mean


def reflection_time_limit(inp, cfg, params):
    """
    Latest time before a signal from a free chain end can reach the far
    edge of the averaging windows.

    Each end sends its signal inward at |v| + c of its side; the measured
    region on each side reaches ``offset + window`` from the initial jump.
    """
    spacing_L, spacing_R, _, _ = _scales(inp, cfg)
    window, offset = _windows(inp, cfg)
    half = cfg.N // 2
    limits = []
    for u, spacing, width in ((inp.u_L, spacing_L, window[0]), (inp.u_R, spacing_R, window[1])):
        c = np.sqrt(sound_speed_sq(u.rho, params))
        limits.append((half * spacing - offset - width) / (abs(u.velocity) + c))
    limit = min(limits)
    if not limit > 0:
        raise ValidationError('N = {:d} is too small for the averaging windows; no time fits before '
                              'the end waves arrive.'.format(cfg.N))
    return limit


def solve_micro_riemann(inp, cfg, params):
    """
    Solve one microscale Riemann problem.

    The chain is integrated with periodic snapshots; every snapshot is
    averaged onto a symmetric bin grid and the interface is tracked. The
    speed is the least-squares slope over the last ``fit_fraction`` of the
    track. The plateau states are averaged next to the tracked interface on
    the final snapshots, the last ``state_fraction`` of the track. If the
    interface is lost in the final snapshot, extraction ends at the last
    snapshot where it was found.

    Parameters
    ----------
    inp : RiemannInput
    cfg : MicroConfig
    params : VdwParams

    Returns
    -------
    RiemannResponse

    Raises
    ------
    ValidationError
        For single-phase or inadmissible input, or an end time that lets
        end waves into the measurement.
    ExtractionError
        If the interface cannot be tracked or a plateau window is empty.
    HardCoreViolation
        If the time step is too large for the chain.
    """
    t0 = time.time()
    validate_input(inp, params)
    spacing_L, spacing_R, mean, half_width = _scales(inp, cfg)
    dt = cfg.dt if cfg.dt is not None else default_time_step(np.array([spacing_L, spacing_R]),
                                                             params, cfg.m, cfg.courant)
    limit = reflection_time_limit(inp, cfg, params)
    if cfg.t_end is None:
        t_end = cfg.reflection_safety * limit
    else:
        t_end = cfg.t_end
        if t_end > limit:
            if not cfg.allow_reflections:
                raise ValidationError('micro.t_end = {} exceeds the reflection limit {:.4g}; increase N, '
                                      'shorten t_end or set allow_reflections.'.format(t_end, limit))
            logger.warning('micro.t_end = {} exceeds the reflection limit {:.4g}; end waves will '
                           'reach the measured region.'.format(t_end, limit))
    n_steps = int(np.ceil(t_end / dt * (1. - 1e-12)))
    stride = cfg.snapshot_stride or max(n_steps // cfg.n_snapshots, 1)

    grid = BinGrid.from_width(-half_width, half_width, cfg.bin_spacings * mean)
    window, offset = _windows(inp, cfg)
    times, positions, fields = [], [], []
    last = {'count': 0, 'time': None}

    def observe(snapshot):
        field = bin_fields(snapshot, grid)
        previous = positions[-1] if positions else None
        try:
            pos = detect_interface(field, window=cfg.search_window, previous=previous, refine=cfg.refine)
        except ExtractionError as e:
            logger.debug('No interface at t = {:.3f}: {}'.format(snapshot.time, e))
        else:
            times.append(snapshot.time)
            positions.append(pos)
            fields.append(field)
        last['time'] = field.time
        if cfg.dump_dir is not None:
            write_field_csv(field, os.path.join(cfg.dump_dir, 'field_{:05d}.csv'.format(last['count'])))
        last['count'] += 1

    chain = init_riemann_chain(inp.u_L, inp.u_R, cfg.N, cfg.m, params)
    run_chain(chain, dt, t_end, observer=observe, stride=stride)

    if len(times) < 2:
        raise ExtractionError('The interface was detected in {:d} snapshots; at least 2 are needed.'.format(
            len(times)))
    track = InterfaceTrack(times, positions)
    if cfg.dump_dir is not None:
        write_track_csv(track, os.path.join(cfg.dump_dir, 'track.csv'))
    if times[-1] != last['time']:
        logger.warning('The interface was lost in the final snapshot at t = {:.3f}; extracting up to '
                       't = {:.3f}.'.format(last['time'], times[-1]))
    s = estimate_speed(track, cfg.fit_fraction)
    k = max(int(np.ceil(cfg.state_fraction * len(track))), 1)
    states = [extract_states(f, x, window, offset) for f, x in zip(fields[-k:], positions[-k:])]
    u_star_L, u_star_R = [FluidState(np.mean([u.rho for u in side]), np.mean([u.momentum for u in side]))
                          for side in zip(*states)]
    mass_res, mom_res = rankine_hugoniot_residuals(s, u_star_L, u_star_R, params)
    flagged = not mass_res <= cfg.rh_bound
    response = RiemannResponse(s, u_star_L, u_star_R, mass_res, mom_res, flagged)
    if flagged:
        logger.warning('Flagged response for input {}: RH mass residual {:.3e} above {:.3e}.'.format(
            inp.as_vector(), mass_res, cfg.rh_bound))
    logger.info('Micro solve N = {:d}, t_end = {:.1f}: s = {:.5f}, rho* = ({:.4f}, {:.4f}) in {:.2f} s.'.format(
        cfg.N, t_end, s, u_star_L.rho, u_star_R.rho, time.time() - t0))
    return response


def mirror(obj):
    """
    Reflect x -> -x: sides swap, velocities and the speed change sign.

    Accepts a RiemannInput or a RiemannResponse.
    """
    if isinstance(obj, RiemannInput):
        return RiemannInput(obj.u_R.mirrored(), obj.u_L.mirrored())
    if isinstance(obj, RiemannResponse):
        return RiemannResponse(-obj.s, obj.u_star_R.mirrored(), obj.u_star_L.mirrored(),
                               obj.rh_mass_res, obj.rh_mom_res, obj.flagged)
    raise TypeError('mirror expects a RiemannInput or RiemannResponse, got {}.'.format(type(obj).__name__))


def shift(obj, w):
    """Add the velocity w to every state (and to the speed of a response)."""
    if isinstance(obj, RiemannInput):
        return RiemannInput(obj.u_L.shifted(w), obj.u_R.shifted(w))
    if isinstance(obj, RiemannResponse):
        return RiemannResponse(obj.s + w, obj.u_star_L.shifted(w), obj.u_star_R.shifted(w),
                               obj.rh_mass_res, obj.rh_mom_res, obj.flagged)
    raise TypeError('shift expects a RiemannInput or RiemannResponse, got {}.'.format(type(obj).__name__))


class MicroOracle(object):
    """
    Picklable callable mapping an input 4-vector to a RiemannResponse.
    """

    def __init__(self, params, cfg):
        self.params = params
        self.cfg = cfg
        self.calls = 0

    def __call__(self, x):
        self.calls += 1
        return solve_micro_riemann(RiemannInput.from_vector(x), self.cfg, self.params)


def micro_oracle(params, cfg):
    return MicroOracle(params, cfg)
