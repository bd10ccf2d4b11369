#!/usr/bin/env python
# -*- coding: utf-8 -*-

# #########################################################################
# Copyright (c) 2015, UChicago Argonne, LLC. All rights reserved.         #
# Distributed under the BSD-3 license, see LICENSE.txt for details.       #
# #########################################################################

"""
Module for numerical fluxes of the isothermal Euler equations.

States are passed as arrays whose last axis holds (rho, rho*v), or as
FluidState objects.
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import logging

import numpy as np

from chainflow.eos.state import FluidState
from chainflow.eos.vdw import is_admissible, pressure, sound_speed_sq
from chainflow.util.errors import DomainError

logger = logging.getLogger(__name__)

__author__ = "Chainflow developers"
__credits__ = "Rafael Vescovi, Ming Du"
__copyright__ = "Copyright (c) 2015, UChicago Argonne, LLC."
__docformat__ = 'restructuredtext en'
__all__ = ['euler_flux',
           'wave_speed',
           'lax_friedrichs_flux',
           'interface_flux']


def _as_states(u):
    if isinstance(u, FluidState):
        return u.as_array()
    return np.asarray(u, dtype=float)


def _check_admissible(U, params):
    rho = U[..., 0]
    ok = np.isfinite(rho) & (rho > 0)
    tau = np.where(ok, 1. / np.where(ok, rho, 1.), np.nan)
    ok &= is_admissible(tau, params)
    if not np.all(ok):
        bad = np.atleast_1d(rho)[~np.atleast_1d(ok)]
        raise DomainError('Flux requested for inadmissible densities {}.'.format(bad[:5]))
    return tau


def euler_flux(u, params):
    """
    Physical flux f(u) = (m, m**2/rho + p(1/rho)).

    Parameters
    ----------
    u : FluidState or ndarray
        One state or an array of shape (..., 2).
    params : VdwParams

    Returns
    -------
    ndarray
        Same shape as ``u``.
    """
    U = _as_states(u)
    tau = _check_admissible(U, params)
    rho, m = U[..., 0], U[..., 1]
    return np.stack([m, m * m / rho + pressure(tau, params)], axis=-1)


def wave_speed(u, params):
    """Largest characteristic speed |v| + c of each state."""
    U = _as_states(u)
    _check_admissible(U, params)
    rho, m = U[..., 0], U[..., 1]
    return np.abs(m / rho) + np.sqrt(sound_speed_sq(rho, params))


def lax_friedrichs_flux(u_l, u_r, alpha, params):
    """
    Local Lax-Friedrichs flux
    0.5*(f(u_l) + f(u_r)) - 0.5*alpha*(u_r - u_l).

    Parameters
    ----------
    u_l, u_r : ndarray
        States of shape (..., 2) on both sides of each edge.
    alpha : float or ndarray
        Dissipation speed per edge, usually the larger wave speed of the
        two neighbours.
    params : VdwParams
    """
    u_l = _as_states(u_l)
    u_r = _as_states(u_r)
    alpha = np.asarray(alpha, dtype=float)[..., None] if np.ndim(alpha) else float(alpha)
    return 0.5 * (euler_flux(u_l, params) + euler_flux(u_r, params)) - 0.5 * alpha * (u_r - u_l)


def interface_flux(resp, params):
    """
    Flux across a phase interface moving with speed s, in the frame of the
    interface:

    g = 0.5*(f(u*_L) + f(u*_R)) - 0.5*s*(u*_L + u*_R)

    Parameters
    ----------
    resp : RiemannResponse
    params : VdwParams

    Returns
    -------
    g : ndarray
        Flux vector of length 2.
    s : float
        Interface speed.
    """
    u_l = resp.u_star_L.as_array()
    u_r = resp.u_star_R.as_array()
    s = float(resp.s)
    g = 0.5 * (euler_flux(u_l, params) + euler_flux(u_r, params)) - 0.5 * s * (u_l + u_r)
    return g, s
