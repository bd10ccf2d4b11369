#!/usr/bin/env python
# -*- coding: utf-8 -*-

# #########################################################################
# Copyright (c) 2015, UChicago Argonne, LLC. All rights reserved.         #
# Distributed under the BSD-3 license, see LICENSE.txt for details.       #
# #########################################################################

"""
Module for the nearest-neighbor particle chain: Riemann initialization,
forces, velocity Verlet time stepping and conservation diagnostics.
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import logging
import time
from dataclasses import dataclass

import numpy as np

from chainflow.eos.vdw import VdwParams, potential, potential_deriv, potential_deriv2
from chainflow.util.errors import DomainError, HardCoreViolation, NumericalError, ValidationError

logger = logging.getLogger(__name__)

__author__ = "Chainflow developers"
__credits__ = "Rafael Vescovi, Ming Du"
__copyright__ = "Copyright (c) 2015, UChicago Argonne, LLC."
__docformat__ = 'restructuredtext en'
__all__ = ['ParticleChain',
           'ChainObservables',
           'ChainSnapshot',
           'init_riemann_chain',
           'accelerations',
           'verlet_step',
           'run_chain',
           'observables',
           'default_time_step']


def _frozen(arr):
    arr = np.array(arr, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class ParticleChain(object):
    """
    Ordered 1D chain of equal-mass particles with free ends.

    Attributes
    ----------
    positions : ndarray
        Strictly increasing positions, length N >= 2.
    velocities : ndarray
        Velocities, length N.
    mass : float
        Uniform particle mass.
    params : VdwParams
        Constants of the pair potential.
    """

    positions: np.ndarray
    velocities: np.ndarray
    mass: float
    params: VdwParams

    def __post_init__(self):
        x = _frozen(self.positions)
        v = _frozen(self.velocities)
        if x.ndim != 1 or x.shape != v.shape:
            raise ValidationError('positions and velocities must be 1D arrays of equal length.')
        if len(x) < 2:
            raise ValidationError('A chain needs at least 2 particles, got {:d}.'.format(len(x)))
        if not self.mass > 0:
            raise ValidationError('Particle mass must be positive, got {}.'.format(self.mass))
        gaps = np.diff(x)
        if not np.all(gaps > self.params.b):
            i = int(np.argmin(gaps))
            raise HardCoreViolation('Gap {:d} = {} is not above the covolume {}.'.format(i, gaps[i], self.params.b))
        object.__setattr__(self, 'positions', x)
        object.__setattr__(self, 'velocities', v)
        object.__setattr__(self, 'mass', float(self.mass))

    @property
    def N(self):
        return len(self.positions)

    @property
    def gaps(self):
        return np.diff(self.positions)


@dataclass(frozen=True)
class ChainObservables(object):
    total_mass: float
    total_momentum: float
    total_energy: float


@dataclass(frozen=True, eq=False)
class ChainSnapshot(object):
    """Read-only view handed to run observers."""

    time: float
    positions: np.ndarray
    velocities: np.ndarray
    mass: float
    params: VdwParams


def init_riemann_chain(u_L, u_R, N, m, params):
    """
    Lay out the chain for a Riemann problem with the jump at x = 0.

    The left N/2 particles are spaced m/rho_L apart and move with v_L, the
    right N/2 are spaced m/rho_R apart and move with v_R. The two particles
    next to the jump sit half a spacing away from it, at -m/(2 rho_L) and
    m/(2 rho_R). No random perturbation is applied.

    Parameters
    ----------
    u_L, u_R : FluidState
        Left and right states.
    N : int
        Even number of particles.
    m : float
        Particle mass.
    params : VdwParams

    Returns
    -------
    ParticleChain
    """
    if int(N) != N or N < 2 or N % 2:
        raise ValidationError('N must be an even integer >= 2, got {}.'.format(N))
    N = int(N)
    spacing_L = m / u_L.rho
    spacing_R = m / u_R.rho
    for side, spacing in (('left', spacing_L), ('right', spacing_R)):
        if not spacing > params.b:
            raise ValidationError('The {} spacing m/rho = {} lies inside the hard core b = {}.'.format(
                side, spacing, params.b))
    half = N // 2
    j = np.arange(half)
    x = np.concatenate((-(half - 0.5 - j) * spacing_L, (j + 0.5) * spacing_R))
    v = np.concatenate((np.full(half, u_L.velocity), np.full(half, u_R.velocity)))
    return ParticleChain(x, v, m, params)


def _accelerations(x, m, params):
    # pair term phi'(r) pulls i to the right and i+1 to the left
    try:
        d = potential_deriv(np.diff(x), params)
    except DomainError as e:
        raise HardCoreViolation('Particle gap inside the hard core: {}'.format(e))
    a = np.zeros_like(x)
    a[:-1] += d
    a[1:] -= d
    return a / m


def accelerations(chain):
    """
    Nearest-neighbor accelerations with free ends.

    a_i = (phi'(x_{i+1} - x_i) - phi'(x_i - x_{i-1})) / m; the end particles
    only feel their single neighbor.
    """
    return _accelerations(chain.positions, chain.mass, chain.params)


def _verlet(x, v, a, dt, m, params):
    x_new = x + dt * v + 0.5 * dt * dt * a
    a_new = _accelerations(x_new, m, params)
    v_new = v + 0.5 * dt * (a + a_new)
    return x_new, v_new, a_new


def verlet_step(chain, dt, cached_accel=None):
    """
    One velocity Verlet step.

    Parameters
    ----------
    chain : ParticleChain
    dt : float
        Time step.
    cached_accel : ndarray, optional
        Accelerations of ``chain``; computed when not given.

    Returns
    -------
    chain : ParticleChain
        Updated chain.
    accel : ndarray
        Accelerations at the new positions, for reuse in the next step.

    Raises
    ------
    HardCoreViolation
        If any updated gap is at or below the covolume.
    """
    if not dt > 0:
        raise ValidationError('dt must be positive, got {}.'.format(dt))
    a = accelerations(chain) if cached_accel is None else np.asarray(cached_accel, dtype=float)
    x, v, a_new = _verlet(chain.positions, chain.velocities, a, dt, chain.mass, chain.params)
    return ParticleChain(x, v, chain.mass, chain.params), a_new


def run_chain(chain, dt, t_end, observer=None, stride=1):
    """
    Integrate the chain up to ``t_end``.

    Performs ceil(t_end/dt) velocity Verlet steps. The observer is called
    with a :class:`ChainSnapshot` at t = 0, every ``stride`` steps and after
    the last step.

    Parameters
    ----------
    chain : ParticleChain
    dt : float
        Time step.
    t_end : float
        End time; 0 returns the input chain.
    observer : callable, optional
        Called as ``observer(snapshot)``.
    stride : int
        Observer period in steps.

    Returns
    -------
    ParticleChain
    """
    if not dt > 0:
        raise ValidationError('dt must be positive, got {}.'.format(dt))
    if t_end < 0:
        raise ValidationError('t_end must be nonnegative, got {}.'.format(t_end))
    if int(stride) != stride or stride < 1:
        raise ValidationError('stride must be a positive integer, got {}.'.format(stride))
    stride = int(stride)
    n_steps = int(np.ceil(t_end / dt * (1. - 1e-12))) if t_end > 0 else 0
    m, params = chain.mass, chain.params
    x = chain.positions
    v = chain.velocities
    a = _accelerations(x, m, params)

    def emit(step):
        if observer is not None:
            observer(ChainSnapshot(step * dt, _frozen(x), _frozen(v), m, params))

    emit(0)
    t0 = time.time()
    report = max(n_steps // 10, 1)
    for step in range(1, n_steps + 1):
        try:
            x, v, a = _verlet(x, v, a, dt, m, params)
        except HardCoreViolation as e:
            raise HardCoreViolation('Step {:d} (t = {:.4f}): {}; reduce dt.'.format(step, step * dt, e))
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(v))):
            raise NumericalError('Non-finite particle state at step {:d} (t = {:.4f}).'.format(step, step * dt))
        if step % stride == 0 or step == n_steps:
            emit(step)
        if step % report == 0:
            logger.debug('Step {:d}/{:d}; t = {:.2f}; {:.2f} s elapsed.'.format(step, n_steps, step * dt,
                                                                               time.time() - t0))
    if n_steps > 0:
        logger.debug('N = {:d}: {:d} steps in {:.2f} s.'.format(len(x), n_steps, time.time() - t0))
    return ParticleChain(x, v, m, params) if n_steps > 0 else chain


def observables(chain):
    """
    Total mass, momentum and energy (kinetic plus pair potential).
    """
    m = chain.mass
    v = chain.velocities
    kinetic = 0.5 * m * np.sum(v * v)
    return ChainObservables(total_mass=chain.N * m,
                            total_momentum=m * np.sum(v),
                            total_energy=kinetic + np.sum(potential(chain.gaps, chain.params)))


def default_time_step(spacings, params, m=1., courant=0.1):
    """
    Time step with dt * sqrt(max|phi''| / m) = courant over the given
    spacings (or the gaps of a chain).
    """
    if isinstance(spacings, ParticleChain):
        m = spacings.mass
        spacings = spacings.gaps
    stiffness = np.max(np.abs(potential_deriv2(np.atleast_1d(spacings), params)))
    return courant / np.sqrt(stiffness / m)
