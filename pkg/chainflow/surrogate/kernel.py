#!/usr/bin/env python
# -*- coding: utf-8 -*-

# #########################################################################
# Copyright (c) 2015, UChicago Argonne, LLC. All rights reserved.         #
# Distributed under the BSD-3 license, see LICENSE.txt for details.       #
# #########################################################################

"""
Module for the kernel surrogate of the microscale Riemann solver and its
distance-gated sampling.

The surrogate is a kernel ridge expansion f(x) = c + sum_i alpha_i k(x_i, x)
with the Gaussian kernel k(x, x') = exp(-gamma_k |x - x'|^2) on scaled
inputs. The offset c is zero ('none') or the sample mean ('mean').
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np
from scipy import linalg
from scipy.spatial import distance

from chainflow.eos.vdw import maxwell_equilibrium, sound_speed_sq
from chainflow.util.errors import IllConditionedError, UntrainedError, ValidationError

logger = logging.getLogger(__name__)

__author__ = "Chainflow developers"
__credits__ = "Rafael Vescovi, Ming Du"
__copyright__ = "Copyright (c) 2015, UChicago Argonne, LLC."
__docformat__ = 'restructuredtext en'
__all__ = ['Sample',
           'SampleSet',
           'GateConfig',
           'SurrogateState',
           'kernel',
           'kernel_matrix',
           'train',
           'initial_state',
           'predict',
           'score',
           'sample',
           'evaluate_gated',
           'default_input_scaling']

N_IN = 4
N_OUT = 5
allowed_offsets = ('none', 'mean')


def _scaling(scaling):
    if scaling is None:
        return np.ones(N_IN)
    scaling = np.asarray(scaling, dtype=float)
    if scaling.shape != (N_IN,) or not np.all(scaling > 0):
        raise ValidationError('input_scaling must be {:d} positive numbers, got {}.'.format(N_IN, scaling))
    return scaling


@dataclass(frozen=True)
class Sample(object):
    """
    One microscale evaluation: input (rho_L, m_L, rho_R, m_R) and response
    (s, rho*_L, m*_L, rho*_R, m*_R).
    """

    x: Tuple[float, ...]
    y: Tuple[float, ...]
    rh_mass_res: float = float('nan')
    rh_mom_res: float = float('nan')

    def __post_init__(self):
        x = tuple(float(v) for v in np.ravel(self.x))
        y = tuple(float(v) for v in np.ravel(self.y))
        if len(x) != N_IN or len(y) != N_OUT:
            raise ValidationError('A sample needs {:d} inputs and {:d} outputs, got {:d} and {:d}.'.format(
                N_IN, N_OUT, len(x), len(y)))
        object.__setattr__(self, 'x', x)
        object.__setattr__(self, 'y', y)
        object.__setattr__(self, 'rh_mass_res', float(self.rh_mass_res))
        object.__setattr__(self, 'rh_mom_res', float(self.rh_mom_res))

    @classmethod
    def from_response(cls, x, response):
        """Build a sample from a RiemannResponse or a plain 5-vector."""
        if hasattr(response, 'as_vector'):
            return cls(x, response.as_vector(), response.rh_mass_res, response.rh_mom_res)
        return cls(x, response)


@dataclass(frozen=True)
class SampleSet(object):
    """
    Immutable sample collection D_n without duplicate inputs.
    """

    samples: Tuple[Sample, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'samples', tuple(self.samples))

    def __len__(self):
        return len(self.samples)

    def __iter__(self):
        return iter(self.samples)

    @property
    def X(self):
        return np.array([s.x for s in self.samples], dtype=float).reshape(-1, N_IN)

    @property
    def Y(self):
        return np.array([s.y for s in self.samples], dtype=float).reshape(-1, N_OUT)

    def add(self, new, scaling=None, radius=1e-12):
        """
        Return a new set with ``new`` appended, or replacing the sample whose
        scaled input lies within ``radius`` of it.
        """
        samples = list(self.samples)
        if samples:
            d = distance.cdist(self.X / _scaling(scaling), np.asarray(new.x)[None, :] / _scaling(scaling))[:, 0]
            i = int(np.argmin(d))
            if d[i] <= radius:
                logger.debug('Replacing duplicate sample {:d} at x = {}.'.format(i, new.x))
                samples[i] = new
                return SampleSet(samples)
        samples.append(new)
        return SampleSet(samples)


@dataclass
class GateConfig(object):
    """
    Surrogate and sampling settings.

    ``input_scaling`` normalizes (rho_L, m_L, rho_R, m_R) in the distance
    used by both the kernel and the score; ``None`` requests
    :func:`default_input_scaling`. ``offset='none'`` is the plain kernel
    expansion, which decays to 0 away from the samples. The multiscale
    driver defaults to ``'mean'`` so that a lone sample predicts its own
    output nearby.
    """

    epsilon_model: float = 0.5
    input_scaling: Optional[Tuple[float, float, float, float]] = None
    gamma_k: float = 10.
    lambda_reg: float = 1e-10
    offset: str = 'none'
    duplicate_radius: float = 1e-12

    def __post_init__(self):
        if not self.epsilon_model > 0:
            raise ValidationError('gate.epsilon_model must be positive, got {}.'.format(self.epsilon_model))
        if not self.gamma_k > 0:
            raise ValidationError('gate.gamma_k must be positive, got {}.'.format(self.gamma_k))
        if not self.lambda_reg >= 0:
            raise ValidationError('gate.lambda_reg must be nonnegative, got {}.'.format(self.lambda_reg))
        if self.offset not in allowed_offsets:
            raise ValidationError('gate.offset must be one of {}, got {!r}.'.format(allowed_offsets, self.offset))
        if self.input_scaling is not None:
            self.input_scaling = tuple(float(v) for v in _scaling(self.input_scaling))

    def resolved_scaling(self, params=None):
        if self.input_scaling is not None:
            return np.asarray(self.input_scaling)
        if params is None:
            raise ValidationError('gate.input_scaling is null and no EOS parameters were given to derive it.')
        return default_input_scaling(params)


@dataclass(frozen=True, eq=False)
class SurrogateState(object):
    """
    Sample set plus the trained expansion coefficients.

    The coefficients are valid iff ``trained_on == len(sample_set)``.
    """

    sample_set: SampleSet
    kernel_width: float
    regularization: float
    scaling: np.ndarray
    offset: str = 'none'
    coefficients: Optional[np.ndarray] = None
    y_offset: np.ndarray = field(default_factory=lambda: np.zeros(N_OUT))
    trained_on: int = 0

    @property
    def is_trained(self):
        return self.coefficients is not None and self.trained_on == len(self.sample_set)


def kernel_matrix(A, B, gamma_k, scaling=None):
    """Gaussian kernel values between the rows of A and B."""
    scaling = _scaling(scaling)
    A = np.atleast_2d(np.asarray(A, dtype=float)) / scaling
    B = np.atleast_2d(np.asarray(B, dtype=float)) / scaling
    return np.exp(-gamma_k * distance.cdist(A, B, 'sqeuclidean'))


def kernel(x, x2, gamma_k, scaling=None):
    """
    k(x, x2) = exp(-gamma_k |x/scaling - x2/scaling|^2), in (0, 1].

    Examples
    --------
    >>> kernel([1., 2., 3., 4.], [1., 2., 3., 4.], 10.)
    1.0
    """
    return float(kernel_matrix(x, x2, gamma_k, scaling)[0, 0])


def train(sample_set, gamma_k, lambda_reg, scaling=None, offset='none'):
    """
    Fit the kernel expansion to every output component.

    Solves (K + lambda_reg I) alpha = Y - c with a single Cholesky
    factorization shared by the five components.

    Parameters
    ----------
    sample_set : SampleSet
        At least one sample.
    gamma_k : float
        Kernel width.
    lambda_reg : float
        Ridge regularization, >= 0.
    scaling : array_like, optional
        Input scaling; ones by default.
    offset : {'none', 'mean'}
        Constant added to the expansion.

    Returns
    -------
    SurrogateState

    Raises
    ------
    IllConditionedError
        If K + lambda_reg I is not numerically positive definite.
    """
    if offset not in allowed_offsets:
        raise ValidationError('offset must be one of {}.'.format(allowed_offsets))
    if len(sample_set) < 1:
        raise ValidationError('Training needs at least one sample.')
    scaling = _scaling(scaling)
    X, Y = sample_set.X, sample_set.Y
    K = kernel_matrix(X, X, gamma_k, scaling)
    K[np.diag_indices_from(K)] += lambda_reg
    y_offset = Y.mean(axis=0) if offset == 'mean' else np.zeros(N_OUT)
    try:
        factor = linalg.cho_factor(K, lower=True)
        alpha = linalg.cho_solve(factor, Y - y_offset)
    except linalg.LinAlgError as e:
        raise IllConditionedError('Kernel matrix of {:d} samples is not positive definite: {}'.format(len(X), e))
    rcond = 1. / np.linalg.cond(K)
    if rcond < np.finfo(float).eps:
        logger.warning('Kernel matrix is ill-conditioned. RCOND: {:.3e}'.format(rcond))
    return SurrogateState(sample_set=sample_set, kernel_width=gamma_k, regularization=lambda_reg,
                          scaling=scaling, offset=offset, coefficients=alpha, y_offset=y_offset,
                          trained_on=len(sample_set))


def initial_state(gate, params=None, sample_set=None):
    """
    Surrogate state for a gate configuration, trained on ``sample_set``
    when it holds samples.
    """
    sample_set = SampleSet() if sample_set is None else sample_set
    scaling = gate.resolved_scaling(params)
    if len(sample_set) == 0:
        return SurrogateState(sample_set=sample_set, kernel_width=gate.gamma_k, regularization=gate.lambda_reg,
                              scaling=scaling, offset=gate.offset)
    return train(sample_set, gate.gamma_k, gate.lambda_reg, scaling, gate.offset)


def predict(state, x):
    """
    Evaluate the surrogate at one input point.

    Returns
    -------
    ndarray
        (s, rho*_L, m*_L, rho*_R, m*_R).
    """
    if not state.is_trained:
        raise UntrainedError('The surrogate holds {:d} samples but was trained on {:d}.'.format(
            len(state.sample_set), state.trained_on))
    k = kernel_matrix(state.sample_set.X, x, state.kernel_width, state.scaling)[:, 0]
    return state.y_offset + k.dot(state.coefficients)


def score(x, sample_set, scaling=None):
    """
    Scaled distance from x to the nearest stored input; inf for an empty set.
    """
    if len(sample_set) == 0:
        return float('inf')
    scaling = _scaling(scaling)
    d = distance.cdist(sample_set.X / scaling, np.asarray(x, dtype=float).reshape(1, N_IN) / scaling)
    return float(d.min())


def sample(x, state, micro, gate):
    """
    Evaluate the oracle at x, add the result to the sample set and retrain.

    Returns
    -------
    y : ndarray
        The oracle's response vector.
    state : SurrogateState
        The retrained state; the input state is left untouched.
    response
        Whatever the oracle returned.
    """
    response = micro(np.asarray(x, dtype=float))
    new = Sample.from_response(x, response)
    sample_set = state.sample_set.add(new, state.scaling, gate.duplicate_radius)
    retrained = train(sample_set, state.kernel_width, state.regularization, state.scaling, state.offset)
    return np.array(new.y), retrained, response


def evaluate_gated(x, state, gate, micro):
    """
    Answer from the surrogate when x lies within ``epsilon_model`` of a
    stored sample, otherwise sample the oracle.

    Parameters
    ----------
    x : array_like
        Input point (rho_L, m_L, rho_R, m_R).
    state : SurrogateState
    gate : GateConfig
    micro : callable
        Oracle mapping x to a RiemannResponse or a 5-vector.

    Returns
    -------
    y : ndarray
        Prediction, or the fresh oracle response when sampled.
    state : SurrogateState
        Unchanged on the surrogate path, retrained after sampling.
    sampled : bool
    """
    if score(x, state.sample_set, state.scaling) < gate.epsilon_model:
        return predict(state, x), state, False
    y, state, _ = sample(x, state, micro, gate)
    return y, state, True


def default_input_scaling(params):
    """
    (rho_l, rho_l c_l, rho_l, rho_l c_l) from the Maxwell liquid density and
    its sound speed.
    """
    rho_l = maxwell_equilibrium(params).rho_liq
    c_l = np.sqrt(sound_speed_sq(rho_l, params))
    return np.array([rho_l, rho_l * c_l, rho_l, rho_l * c_l])
