#!/usr/bin/env python
# -*- coding: utf-8 -*-

# #########################################################################
# Copyright (c) 2015, UChicago Argonne, LLC. All rights reserved.         #
# Distributed under the BSD-3 license, see LICENSE.txt for details.       #
# #########################################################################

"""
Module for van der Waals thermodynamics and the consistent pair potential.

All functions accept scalars or numpy arrays of specific volume ``tau``
(or spacing ``r``) and return the same shape.
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import optimize

from chainflow.util.errors import ConvergenceError, DomainError, ValidationError

logger = logging.getLogger(__name__)

__author__ = "Chainflow developers"
__credits__ = "Rafael Vescovi, Ming Du"
__copyright__ = "Copyright (c) 2015, UChicago Argonne, LLC."
__docformat__ = 'restructuredtext en'
__all__ = ['VdwParams',
           'PhaseBounds',
           'MaxwellStates',
           'default_params',
           'critical_temperature',
           'pressure',
           'pressure_deriv',
           'sound_speed_sq',
           'potential',
           'potential_deriv',
           'potential_deriv2',
           'spinodal_bounds',
           'classify_phase',
           'is_admissible',
           'maxwell_equilibrium',
           'calibrate_temperature',
           'stationary_spacing']

ROOT_TOL = 1e-13
DEFAULT_T_REF = 0.85


@dataclass(frozen=True)
class VdwParams(object):
    """
    Van der Waals constants shared by the equation of state and the pair
    potential.

    Attributes
    ----------
    a : float
        Attraction constant.
    b : float
        Covolume; the hard-core floor for specific volume and spacing.
    R : float
        Gas constant.
    T_ref : float
        Fixed reference temperature.
    """

    a: float = 3.
    b: float = 1. / 3.
    R: float = 8. / 3.
    T_ref: float = DEFAULT_T_REF

    def __post_init__(self):
        for name in ('a', 'b', 'R', 'T_ref'):
            value = float(getattr(self, name))
            if not np.isfinite(value) or value <= 0:
                raise ValidationError('VdwParams.{} must be a positive number, got {}.'.format(name, value))
            object.__setattr__(self, name, value)

    @classmethod
    def two_phase(cls, a=3., b=1. / 3., R=8. / 3., T_ref=DEFAULT_T_REF):
        """
        Build parameters for two-phase use; rejects T_ref at or above the
        critical temperature.
        """
        params = cls(a, b, R, T_ref)
        if not params.is_two_phase:
            raise ValidationError('T_ref = {} is not below the critical temperature T_c = {}; '
                                  'there is no liquid-vapor coexistence.'.format(params.T_ref, params.T_c))
        return params

    @property
    def T_c(self):
        return critical_temperature(self)

    @property
    def RT(self):
        return self.R * self.T_ref

    @property
    def is_two_phase(self):
        return self.T_ref < self.T_c

    def with_temperature(self, T_ref):
        return VdwParams(self.a, self.b, self.R, T_ref)


@dataclass(frozen=True)
class PhaseBounds(object):
    """Spinodal specific volumes: p'(tau) = 0 at both values."""

    tau_liq_max: float
    tau_vap_min: float


@dataclass(frozen=True)
class MaxwellStates(object):
    """Equal-area coexistence states and their common pressure."""

    tau_liq_eq: float
    tau_vap_eq: float
    p_star: float

    @property
    def rho_liq(self):
        return 1. / self.tau_liq_eq

    @property
    def rho_vap(self):
        return 1. / self.tau_vap_eq


def default_params():
    """
    Reduced parameter set with T_c = 1 and T_ref = 0.85, whose Maxwell
    densities are close to 1.804 (liquid) and 0.317 (vapor).
    """
    return VdwParams.two_phase()


def _as_float_array(x):
    arr = np.asarray(x, dtype=float)
    return arr, arr.ndim == 0


def _out(arr, scalar):
    return float(arr) if scalar else arr


def _check_above_covolume(tau, params, what='tau'):
    if not np.all(tau > params.b):
        bad = np.atleast_1d(tau)[~(np.atleast_1d(tau) > params.b)][0]
        raise DomainError('{} = {} is not above the covolume b = {}.'.format(what, bad, params.b))


def critical_temperature(params):
    """
    Critical temperature T_c = 8a/(27Rb).

    Examples
    --------
    >>> print("{:.6f}".format(critical_temperature(VdwParams(a=3., b=1./3., R=8./3., T_ref=0.5))))
    1.000000
    """
    return 8. * params.a / (27. * params.R * params.b)


def pressure(tau, params):
    """
    Van der Waals pressure p(tau) = R*T_ref/(tau - b) - a/tau**2.

    Parameters
    ----------
    tau : float or ndarray
        Specific volume, strictly above ``params.b``.
    params : VdwParams

    Returns
    -------
    float or ndarray
    """
    tau, scalar = _as_float_array(tau)
    _check_above_covolume(tau, params)
    return _out(params.RT / (tau - params.b) - params.a / tau ** 2, scalar)


def pressure_deriv(tau, params):
    """dp/dtau."""
    tau, scalar = _as_float_array(tau)
    _check_above_covolume(tau, params)
    return _out(-params.RT / (tau - params.b) ** 2 + 2. * params.a / tau ** 3, scalar)


def sound_speed_sq(rho, params):
    """
    dp/drho = -tau**2 dp/dtau, strictly positive on the admissible set.

    Raises
    ------
    DomainError
        If rho is not positive, 1/rho is at or below the covolume, or 1/rho
        lies strictly inside the spinodal interval.
    """
    rho, scalar = _as_float_array(rho)
    if not np.all(rho > 0):
        raise DomainError('Density must be positive.')
    tau = 1. / rho
    _check_above_covolume(tau, params)
    if params.is_two_phase:
        bounds = spinodal_bounds(params)
        inside = (tau > bounds.tau_liq_max * (1. + 1e-12)) & (tau < bounds.tau_vap_min * (1. - 1e-12))
        if np.any(inside):
            bad = np.atleast_1d(tau)[np.atleast_1d(inside)][0]
            raise DomainError('tau = {} lies in the spinodal interval ({}, {}).'.format(
                bad, bounds.tau_liq_max, bounds.tau_vap_min))
    c2 = tau ** 2 * (params.RT / (tau - params.b) ** 2 - 2. * params.a / tau ** 3)
    # root tolerance at the spinodal bounds
    return _out(np.maximum(c2, 0.), scalar)


def potential(r, params):
    """
    Pair potential phi(r) = -a/r - R*T_ref*ln(r - b), consistent with
    p(tau) = -phi'(tau).
    """
    r, scalar = _as_float_array(r)
    _check_above_covolume(r, params, what='r')
    return _out(-params.a / r - params.RT * np.log(r - params.b), scalar)


def potential_deriv(r, params):
    """phi'(r) = a/r**2 - R*T_ref/(r - b)."""
    r, scalar = _as_float_array(r)
    _check_above_covolume(r, params, what='r')
    return _out(params.a / r ** 2 - params.RT / (r - params.b), scalar)


def potential_deriv2(r, params):
    """phi''(r) = -2a/r**3 + R*T_ref/(r - b)**2."""
    r, scalar = _as_float_array(r)
    _check_above_covolume(r, params, what='r')
    return _out(-2. * params.a / r ** 3 + params.RT / (r - params.b) ** 2, scalar)


def _spinodal_poly(tau, params):
    # sign of -p'(tau) * tau**3 * (tau - b)**2
    return 2. * params.a * (tau - params.b) ** 2 - params.RT * tau ** 3


@lru_cache(maxsize=64)
def spinodal_bounds(params):
    """
    Stationary points of p(tau) for tau > b.

    The liquid root lies in (b, 3b) and the vapor root in (3b, 2a/(R*T_ref)).

    Parameters
    ----------
    params : VdwParams

    Returns
    -------
    PhaseBounds

    Raises
    ------
    ValidationError
        If T_ref >= T_c.
    """
    if not params.is_two_phase:
        raise ValidationError('No spinodal region: T_ref = {} >= T_c = {}.'.format(params.T_ref, params.T_c))
    b = params.b
    mid = 3. * b
    upper = 2. * params.a / params.RT
    try:
        tau_l = optimize.brentq(_spinodal_poly, b, mid, args=(params,), xtol=ROOT_TOL)
        tau_v = optimize.brentq(_spinodal_poly, mid, upper, args=(params,), xtol=ROOT_TOL)
    except (ValueError, RuntimeError) as e:
        raise ConvergenceError('Spinodal root search failed: {}'.format(e))
    return PhaseBounds(tau_liq_max=tau_l, tau_vap_min=tau_v)


def classify_phase(tau, params):
    """
    Tag specific volumes as 'liquid', 'vapor' or 'spinodal'.

    Above the critical temperature every state is tagged 'vapor'.
    """
    tau, scalar = _as_float_array(tau)
    _check_above_covolume(tau, params)
    if not params.is_two_phase:
        labels = np.full(tau.shape, 'vapor', dtype=object)
    else:
        bounds = spinodal_bounds(params)
        labels = np.where(tau <= bounds.tau_liq_max, 'liquid',
                          np.where(tau >= bounds.tau_vap_min, 'vapor', 'spinodal')).astype(object)
    return str(labels[()]) if scalar else labels


def is_admissible(tau, params, phase=None):
    """
    Boolean mask of states in the admissible set, i.e. above the covolume
    and outside the spinodal interval.

    Parameters
    ----------
    tau : float or ndarray
    params : VdwParams
    phase : {None, 'liquid', 'vapor'}
        Restrict to the admissible part of one phase.
    """
    allowed = (None, 'liquid', 'vapor')
    if phase not in allowed:
        raise ValueError('phase must be one of {}.'.format(allowed))
    tau, scalar = _as_float_array(tau)
    ok = np.isfinite(tau) & (tau > params.b)
    if params.is_two_phase:
        bounds = spinodal_bounds(params)
        liquid = ok & (tau <= bounds.tau_liq_max)
        vapor = ok & (tau >= bounds.tau_vap_min)
    else:
        liquid = np.zeros_like(ok)
        vapor = ok
    if phase == 'liquid':
        mask = liquid
    elif phase == 'vapor':
        mask = vapor
    else:
        mask = liquid | vapor
    return bool(mask) if scalar else mask


def _equal_area(p_star, params, bounds, tau_far):
    b, RT, a = params.b, params.RT, params.a
    g = lambda tau: RT / (tau - b) - a / tau ** 2 - p_star
    tau_l = optimize.brentq(g, b * (1. + 1e-15), bounds.tau_liq_max, xtol=ROOT_TOL)
    hi = bounds.tau_vap_min
    far = max(tau_far, 2. * hi)
    while g(far) > 0:
        far *= 2.
    tau_v = optimize.brentq(g, bounds.tau_vap_min, far, xtol=ROOT_TOL)
    area = RT * np.log((tau_v - b) / (tau_l - b)) + a * (1. / tau_v - 1. / tau_l) - p_star * (tau_v - tau_l)
    return area, tau_l, tau_v


@lru_cache(maxsize=64)
def maxwell_equilibrium(params):
    """
    Equal-area (Maxwell) construction.

    Finds p* such that p(tau_l) = p(tau_v) = p* and the integral of
    p - p* over [tau_l, tau_v] vanishes. The integral uses the closed-form
    antiderivative R*T_ref*ln(tau - b) + a/tau.

    Parameters
    ----------
    params : VdwParams

    Returns
    -------
    MaxwellStates

    Raises
    ------
    ValidationError
        If T_ref >= T_c.
    ConvergenceError
        If the nested root searches do not converge.
    """
    bounds = spinodal_bounds(params)
    p_min = pressure(bounds.tau_liq_max, params)
    p_max = pressure(bounds.tau_vap_min, params)
    lo = max(p_min, 1e-9 * p_max)
    hi = p_max
    tau_far = params.RT / lo
    f = lambda p: _equal_area(p, params, bounds, tau_far)[0]
    try:
        p_star, info = optimize.brentq(f, lo, hi, xtol=1e-15, full_output=True, disp=False)
    except (ValueError, RuntimeError) as e:
        raise ConvergenceError('Maxwell construction failed: {}'.format(e))
    if not info.converged:
        raise ConvergenceError('Maxwell construction did not converge after {:d} iterations.'.format(info.iterations))
    _, tau_l, tau_v = _equal_area(p_star, params, bounds, tau_far)
    logger.debug('Maxwell states at T_ref = {}: rho_l = {:.6f}, rho_v = {:.6f}, p* = {:.6f}.'.format(
        params.T_ref, 1. / tau_l, 1. / tau_v, p_star))
    return MaxwellStates(tau_liq_eq=tau_l, tau_vap_eq=tau_v, p_star=p_star)


def calibrate_temperature(rho_liq=1.804, rho_vap=0.317, a=3., b=1. / 3., R=8. / 3., bracket=None):
    """
    Reference temperature whose Maxwell densities best match the targets.

    Minimises the squared density mismatch with a bounded scalar search.

    Parameters
    ----------
    rho_liq, rho_vap : float
        Target coexistence densities.
    a, b, R : float
        Remaining van der Waals constants.
    bracket : tuple of float, optional
        Search interval, in units of T_c. Defaults to (0.5, 0.99).

    Returns
    -------
    float
    """
    t_c = 8. * a / (27. * R * b)
    lo, hi = bracket if bracket is not None else (0.5, 0.99)

    def mismatch(T):
        states = maxwell_equilibrium(VdwParams(a, b, R, T))
        return (states.rho_liq - rho_liq) ** 2 + (states.rho_vap - rho_vap) ** 2

    res = optimize.minimize_scalar(mismatch, bounds=(lo * t_c, hi * t_c), method='bounded',
                                   options={'xatol': 1e-10})
    if not res.success:
        raise ConvergenceError('Temperature calibration failed: {}'.format(res.message))
    logger.info('Calibrated T_ref = {:.8f} (density mismatch {:.3e}).'.format(res.x, np.sqrt(res.fun)))
    return float(res.x)


def stationary_spacing(params):
    """
    Stable stationary spacing r* of the pair potential, the smaller root of
    R*T_ref*r**2 - a*r + a*b = 0.

    Raises
    ------
    ConvergenceError
        If phi' has no root, i.e. T_ref >= a/(4Rb).
    """
    a, b, RT = params.a, params.b, params.RT
    disc = a * a - 4. * RT * a * b
    if disc <= 0:
        raise ConvergenceError('phi\' has no root for T_ref = {} (needs T_ref < {}).'.format(
            params.T_ref, a / (4. * params.R * b)))
    return 2. * a * b / (a + np.sqrt(disc))
