#!/usr/bin/env python
# -*- coding: utf-8 -*-

# #########################################################################
# Copyright (c) 2015, UChicago Argonne, LLC. All rights reserved.         #
# Distributed under the BSD-3 license, see LICENSE.txt for details.       #
# #########################################################################

"""
Module for Irving-Kirkwood averaging of particle chains into continuum
fields, and for interface tracking and plateau extraction on those fields.
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import logging
from dataclasses import dataclass

import numpy as np

from chainflow.eos.state import FluidState
from chainflow.eos.vdw import potential_deriv
from chainflow.util.errors import ExtractionError, ValidationError
from chainflow.util.util import write_table

logger = logging.getLogger(__name__)

__author__ = "Chainflow developers"
__credits__ = "Rafael Vescovi, Ming Du"
__copyright__ = "Copyright (c) 2015, UChicago Argonne, LLC."
__docformat__ = 'restructuredtext en'
__all__ = ['BinGrid',
           'AveragedField',
           'InterfaceTrack',
           'bin_fields',
           'detect_interface',
           'estimate_speed',
           'extract_states',
           'write_field_csv',
           'write_track_csv']


@dataclass(frozen=True)
class BinGrid(object):
    """
    Uniform bins of width h = (x_max - x_min) / n_bins.
    """

    x_min: float
    x_max: float
    n_bins: int

    def __post_init__(self):
        if not self.x_min < self.x_max:
            raise ValidationError('BinGrid needs x_min < x_max, got [{}, {}].'.format(self.x_min, self.x_max))
        if int(self.n_bins) != self.n_bins or self.n_bins < 4:
            raise ValidationError('BinGrid needs at least 4 bins, got {}.'.format(self.n_bins))
        object.__setattr__(self, 'x_min', float(self.x_min))
        object.__setattr__(self, 'x_max', float(self.x_max))
        object.__setattr__(self, 'n_bins', int(self.n_bins))

    @classmethod
    def from_width(cls, x_min, x_max, h):
        """Grid on [x_min, x_max] with bins as close to width h as fits."""
        return cls(x_min, x_max, max(int(round((x_max - x_min) / h)), 4))

    @property
    def h(self):
        return (self.x_max - self.x_min) / self.n_bins

    @property
    def edges(self):
        return np.linspace(self.x_min, self.x_max, self.n_bins + 1)

    @property
    def centers(self):
        e = self.edges
        return 0.5 * (e[1:] + e[:-1])


@dataclass(frozen=True, eq=False)
class AveragedField(object):
    """
    Binned continuum fields. ``velocity`` is 0 in empty bins.
    """

    grid: BinGrid
    rho: np.ndarray
    momentum: np.ndarray
    velocity: np.ndarray
    pressure: np.ndarray
    time: float = 0.


@dataclass(frozen=True, eq=False)
class InterfaceTrack(object):
    times: np.ndarray
    positions: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.times, dtype=float)
        x = np.asarray(self.positions, dtype=float)
        if t.shape != x.shape or t.ndim != 1:
            raise ValidationError('Track times and positions must be 1D and of equal length.')
        if np.any(np.diff(t) < 0):
            raise ValidationError('Track times must be nondecreasing.')
        object.__setattr__(self, 'times', t)
        object.__setattr__(self, 'positions', x)

    def __len__(self):
        return len(self.times)


def bin_fields(chain, grid, params=None):
    """
    Irving-Kirkwood density, momentum and pressure averaged over bins.

    The kinetic pressure uses velocities relative to the mean velocity of
    each particle's bin. The pair virial -phi'(r) of every neighbor segment
    is deposited in proportion to the overlap of the segment with each bin,
    which integrates the line kernel between the two particles exactly.

    Parameters
    ----------
    chain : ParticleChain or ChainSnapshot
        Particle positions, velocities and mass.
    grid : BinGrid
    params : VdwParams, optional
        Defaults to ``chain.params``.

    Returns
    -------
    AveragedField
    """
    params = chain.params if params is None else params
    x = np.asarray(chain.positions, dtype=float)
    v = np.asarray(chain.velocities, dtype=float)
    m = chain.mass
    n, h = grid.n_bins, grid.h

    idx = np.floor((x - grid.x_min) / h).astype(int)
    inside = (idx >= 0) & (idx < n)
    idx_in, v_in = idx[inside], v[inside]

    mass = m * np.bincount(idx_in, minlength=n).astype(float)
    mom = m * np.bincount(idx_in, weights=v_in, minlength=n)
    occupied = mass > 0
    velocity = np.zeros(n)
    velocity[occupied] = mom[occupied] / mass[occupied]

    v_rel = v_in - velocity[idx_in]
    kinetic = m * np.bincount(idx_in, weights=v_rel * v_rel, minlength=n)

    # cumulative virial along the chain, linear between particles
    gaps = np.diff(x)
    c = -potential_deriv(gaps, params)
    cum = np.concatenate(([0.], np.cumsum(c * gaps)))
    virial = np.diff(np.interp(grid.edges, x, cum))

    return AveragedField(grid=grid,
                         rho=mass / h,
                         momentum=mom / h,
                         velocity=velocity,
                         pressure=(kinetic + virial) / h,
                         time=float(getattr(chain, 'time', 0.)))


def _refine(rho, edges, j):
    # mass balance over bins j, j+1 with bins j-1, j+2 as plateaus
    if j < 1 or j + 2 >= len(rho):
        return edges[j + 1]
    rho_l, rho_r = rho[j - 1], rho[j + 2]
    if rho_l == rho_r:
        return edges[j + 1]
    h = edges[j + 1] - edges[j]
    mass = (rho[j] + rho[j + 1]) * h
    x = edges[j] + (mass - 2. * h * rho_r) / (rho_l - rho_r)
    return float(np.clip(x, edges[j], edges[j + 2]))


def _contrast(rho, j, block):
    # plateaus beside the jump, skipping the two bins that may hold the front
    left = rho[max(j - block, 0):j] if j > 0 else rho[:1]
    right = rho[j + 2:j + 2 + block] if j + 2 < len(rho) else rho[-1:]
    diff = abs(left.mean() - right.mean())
    err = np.sqrt(np.var(left) / left.size + np.var(right) / right.size)
    return diff, err


def detect_interface(field, window=(0.25, 0.75), previous=None, refine=False, noise_factor=10., block=5):
    """
    Locate the phase boundary at the largest density jump between
    neighboring bins.

    Parameters
    ----------
    field : AveragedField
    window : tuple of float
        Search range as fractions of the grid extent.
    previous : float, optional
        Earlier detection; ties go to the candidate closest to it, else to
        the one closest to x = 0.
    refine : bool
        Move the position inside the two bins next to the jump so that a
        step between the outer plateaus holds the measured mass.
    noise_factor : float
        The mean densities of the ``block`` bins on either side of the jump
        must differ by more than this multiple of their standard error.
    block : int
        Bins per side in the contrast test. The two bins at the jump are
        left out, so a half-filled front bin does not count as noise.

    Returns
    -------
    float

    Raises
    ------
    ExtractionError
        If no jump stands out above the noise floor.
    """
    grid = field.grid
    rho = np.asarray(field.rho, dtype=float)
    edges = grid.edges
    jumps = np.abs(np.diff(rho))
    inner = edges[1:-1]
    lo = grid.x_min + window[0] * (grid.x_max - grid.x_min)
    hi = grid.x_min + window[1] * (grid.x_max - grid.x_min)
    in_window = (inner >= lo) & (inner <= hi)
    if not np.any(in_window):
        raise ValidationError('Search window {} holds no bin edge.'.format(window))
    if int(block) != block or block < 1:
        raise ValidationError('block must be a positive integer, got {}.'.format(block))
    biggest = jumps[in_window].max()
    if biggest == 0:
        raise ExtractionError('The density field is flat inside the search window.')
    candidates = np.nonzero(in_window & (jumps == biggest))[0]
    target = 0. if previous is None else previous
    j = candidates[np.argmin(np.abs(inner[candidates] - target))]
    diff, err = _contrast(rho, j, int(block))
    if not diff > noise_factor * err:
        raise ExtractionError('No density jump above the noise floor (contrast {:.3e} <= {:.3g} x {:.3e}).'.format(
            diff, noise_factor, err))
    if refine:
        return _refine(rho, edges, j)
    return float(inner[j])


def estimate_speed(track, fit_fraction=1.):
    """
    Least-squares slope of interface position against time over the last
    ``fit_fraction`` of the track.

    Examples
    --------
    >>> estimate_speed(InterfaceTrack([0., 1., 2.], [1., 1.5, 2.]))
    0.5
    """
    n = len(track)
    if n < 2:
        raise ValidationError('Speed estimation needs at least 2 samples, got {:d}.'.format(n))
    if not 0 < fit_fraction <= 1:
        raise ValidationError('fit_fraction must lie in (0, 1], got {}.'.format(fit_fraction))
    k = max(int(np.ceil(fit_fraction * n)), 2)
    t = track.times[-k:]
    x = track.positions[-k:]
    dt = t - t.mean()
    denom = np.sum(dt * dt)
    if denom == 0:
        raise ValidationError('All track times are equal; the speed is undefined.')
    return float(np.sum(dt * (x - x.mean())) / denom)


def _window_average(field, lo, hi):
    edges = field.grid.edges
    overlap = np.clip(np.minimum(hi, edges[1:]) - np.maximum(lo, edges[:-1]), 0., None)
    mass = np.sum(field.rho * overlap)
    if not mass > 0:
        raise ExtractionError('Averaging window [{:.4g}, {:.4g}] contains no mass.'.format(lo, hi))
    width = hi - lo
    return FluidState(mass / width, np.sum(field.momentum * overlap) / width)


def extract_states(field, interface_pos, window, offset):
    """
    Plateau states on both sides of the interface.

    Averages density and momentum over [pos - offset - window, pos - offset]
    and [pos + offset, pos + offset + window].

    Parameters
    ----------
    field : AveragedField
    interface_pos : float
    window : float or (float, float)
        Window width, or separate widths for the left and right side.
    offset : float
        Gap between the interface and each window.

    Returns
    -------
    u_star_L, u_star_R : FluidState

    Raises
    ------
    ExtractionError
        If a window leaves the grid or holds no mass.
    """
    window_L, window_R = np.broadcast_to(np.asarray(window, dtype=float), (2,))
    if not (window_L > 0 and window_R > 0 and offset >= 0):
        raise ValidationError('window must be positive and offset nonnegative.')
    grid = field.grid
    left = (interface_pos - offset - window_L, interface_pos - offset)
    right = (interface_pos + offset, interface_pos + offset + window_R)
    if left[0] < grid.x_min or right[1] > grid.x_max:
        raise ExtractionError('Averaging windows [{:.4g}, {:.4g}] leave the grid [{:.4g}, {:.4g}].'.format(
            left[0], right[1], grid.x_min, grid.x_max))
    return _window_average(field, *left), _window_average(field, *right)


def write_field_csv(field, fname):
    return write_table(fname, ['x', 'rho', 'v', 'p'],
                       [field.grid.centers, field.rho, field.velocity, field.pressure])


def write_track_csv(track, fname):
    return write_table(fname, ['t', 'pos'], [track.times, track.positions])
