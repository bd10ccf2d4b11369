#!/usr/bin/env python
# -*- coding: utf-8 -*-

# #########################################################################
# Copyright (c) 2015, UChicago Argonne, LLC. All rights reserved.         #
# Distributed under the BSD-3 license, see LICENSE.txt for details.       #
# #########################################################################

"""
Module for the conservative fluid state shared by the micro and macro scales.
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import logging
from dataclasses import dataclass

import numpy as np

from chainflow.util.errors import ValidationError

logger = logging.getLogger(__name__)

__author__ = "Chainflow developers"
__credits__ = "Rafael Vescovi, Ming Du"
__copyright__ = "Copyright (c) 2015, UChicago Argonne, LLC."
__docformat__ = 'restructuredtext en'
__all__ = ['FluidState']


@dataclass(frozen=True)
class FluidState(object):
    """
    Conservative isothermal state (rho, rho*v).

    Attributes
    ----------
    rho : float
        Mass density, strictly positive.
    momentum : float
        Momentum density rho*v.
    """

    rho: float
    momentum: float

    def __post_init__(self):
        rho = float(self.rho)
        momentum = float(self.momentum)
        if not np.isfinite(rho) or not np.isfinite(momentum):
            raise ValidationError('FluidState entries must be finite, got ({}, {}).'.format(rho, momentum))
        if rho <= 0:
            raise ValidationError('FluidState density must be positive, got {}.'.format(rho))
        object.__setattr__(self, 'rho', rho)
        object.__setattr__(self, 'momentum', momentum)

    @classmethod
    def from_velocity(cls, rho, v):
        return cls(rho, rho * v)

    @property
    def velocity(self):
        return self.momentum / self.rho

    @property
    def tau(self):
        return 1. / self.rho

    def as_array(self):
        return np.array([self.rho, self.momentum])

    def mirrored(self):
        """State seen through x -> -x."""
        return FluidState(self.rho, -self.momentum)

    def shifted(self, w):
        """State seen from a frame moving with velocity -w."""
        return FluidState(self.rho, self.momentum + self.rho * w)
