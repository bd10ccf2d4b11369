#!/usr/bin/env python
# -*- coding: utf-8 -*-

# #########################################################################
# Copyright (c) 2015, UChicago Argonne, LLC. All rights reserved.         #
# Distributed under the BSD-3 license, see LICENSE.txt for details.       #
# #########################################################################

"""
Module for task distribution and wall-clock bookkeeping.
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import logging
import os
import time

import numpy as np

from chainflow.util.pseudo import pseudo_comm

logger = logging.getLogger(__name__)

__author__ = "Chainflow developers"
__credits__ = ["Rafael Vescovi", "Ming Du"]
__copyright__ = "Copyright (c) 2015, UChicago Argonne, LLC."
__docformat__ = 'restructuredtext en'
__all__ = ['get_comm',
           'allocate_mpi_subsets',
           'thread_count',
           'Stopwatch']


def get_comm():
    """
    Return the MPI world communicator, or a size-one stand-in when mpi4py is
    not installed.
    """
    try:
        from mpi4py import MPI
        return MPI.COMM_WORLD
    except ImportError:
        return pseudo_comm()


def allocate_mpi_subsets(n_task, size, task_list=None):
    """
    Deal tasks round-robin over ``size`` ranks.

    Examples
    --------
    >>> allocate_mpi_subsets(5, 2)
    [[0, 2, 4], [1, 3]]
    """
    if task_list is None:
        task_list = list(range(n_task))
    sets = []
    for i in range(size):
        selection = list(range(i, n_task, size))
        sets.append(np.take(task_list, selection).tolist() if selection else [])
    return sets


def thread_count(default=1):
    """
    Number of worker processes requested through ``CHAINFLOW_THREADS``.
    """
    value = os.environ.get('CHAINFLOW_THREADS')
    if value is None or value.strip() == '':
        return default
    try:
        n = int(value)
    except ValueError:
        logger.warning('Ignoring CHAINFLOW_THREADS={:s}; not an integer.'.format(value))
        return default
    return max(n, 1)


class Stopwatch(object):
    """
    Accumulating wall-clock timer, used as a context manager.

    Examples
    --------
    >>> sw = Stopwatch()
    >>> with sw:
    ...     pass
    >>> sw.ms >= 0
    True
    """

    def __init__(self):
        self.ms = 0.0
        self._t0 = None

    def __enter__(self):
        self._t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms += (time.perf_counter() - self._t0) * 1000.
        self._t0 = None
        return False
