#!/usr/bin/env python
# -*- coding: utf-8 -*-

# #########################################################################
# Copyright (c) 2015, UChicago Argonne, LLC. All rights reserved.         #
# Distributed under the BSD-3 license, see LICENSE.txt for details.       #
# #########################################################################

"""
Module for persisting sample sets as CSV.
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import logging
import os

import numpy as np

from chainflow.surrogate.kernel import Sample, SampleSet
from chainflow.util.errors import ValidationError
from chainflow.util.util import append_rows, read_table, write_table

logger = logging.getLogger(__name__)

__author__ = "Chainflow developers"
__credits__ = "Rafael Vescovi, Ming Du"
__copyright__ = "Copyright (c) 2015, UChicago Argonne, LLC."
__docformat__ = 'restructuredtext en'
__all__ = ['STORE_HEADER',
           'save_store',
           'load_store',
           'append_store']

STORE_HEADER = ['rho_L', 'm_L', 'rho_R', 'm_R',
                's', 'rho_sL', 'm_sL', 'rho_sR', 'm_sR',
                'rh_mass_res', 'rh_mom_res']


def _columns(samples):
    rows = np.array([s.x + s.y + (s.rh_mass_res, s.rh_mom_res) for s in samples], dtype=float)
    rows = rows.reshape(-1, len(STORE_HEADER))
    return [rows[:, i] for i in range(len(STORE_HEADER))]


def save_store(sample_set, fname):
    """
    Write every sample as one row with 17 significant digits, so that a
    reloaded set reproduces predictions bit for bit.
    """
    write_table(fname, STORE_HEADER, _columns(sample_set.samples))
    logger.info('Saved {:d} samples to {:s}.'.format(len(sample_set), fname))
    return fname


def append_store(new, fname):
    """Append one sample, creating the file with its header if needed."""
    return append_rows(fname, STORE_HEADER, _columns([new]))


def load_store(fname, missing_ok=True, scaling=None, radius=1e-12):
    """
    Read a sample store.

    Parameters
    ----------
    fname : str
    missing_ok : bool
        Return an empty set when the file does not exist.
    scaling : array_like, optional
        Input scaling of the duplicate test; pass the gate's own so that
        reloading keeps the samples the gate kept.
    radius : float
        Scaled distance below which a later row replaces an earlier one.

    Returns
    -------
    SampleSet
    """
    if not os.path.exists(fname):
        if missing_ok:
            return SampleSet()
        raise ValidationError('Sample store {:s} does not exist.'.format(fname))
    header, data = read_table(fname)
    if header != STORE_HEADER:
        raise ValidationError('Sample store {:s} has header {} instead of {}.'.format(fname, header, STORE_HEADER))
    sample_set = SampleSet()
    for row in data:
        # later rows replace earlier ones with the same input
        sample_set = sample_set.add(Sample(row[:4], row[4:9], row[9], row[10]), scaling, radius)
    logger.info('Loaded {:d} samples from {:s}.'.format(len(sample_set), fname))
    return sample_set
