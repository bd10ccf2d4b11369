#!/usr/bin/env python
# -*- coding: utf-8 -*-

# #########################################################################
# Copyright (c) 2015, UChicago Argonne, LLC. All rights reserved.         #
# Distributed under the BSD-3 license, see LICENSE.txt for details.       #
# #########################################################################

"""
Exception types shared by all chainflow modules.
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import logging

logger = logging.getLogger(__name__)

__author__ = "Chainflow developers"
__credits__ = "Rafael Vescovi, Ming Du"
__copyright__ = "Copyright (c) 2015, UChicago Argonne, LLC."
__docformat__ = 'restructuredtext en'
__all__ = ['ChainflowError',
           'ValidationError',
           'DomainError',
           'NumericalError',
           'ConvergenceError',
           'HardCoreViolation',
           'ExtractionError',
           'IllConditionedError',
           'UntrainedError',
           'StepRejected']


class ChainflowError(Exception):
    """Base class of every error raised by chainflow."""


class ValidationError(ChainflowError, ValueError):
    """Invalid input data or configuration."""


class DomainError(ChainflowError, ValueError):
    """A thermodynamic function was evaluated outside of its domain."""


class NumericalError(ChainflowError, RuntimeError):
    """A numerical procedure failed."""


class ConvergenceError(NumericalError):
    pass


class HardCoreViolation(NumericalError):
    """Two neighboring particles came closer than the covolume."""


class ExtractionError(NumericalError):
    """Interface or plateau states could not be measured."""


class IllConditionedError(NumericalError):
    pass


class UntrainedError(NumericalError):
    pass


class StepRejected(NumericalError):
    """A macroscale step failed even after repeated time step halving."""
