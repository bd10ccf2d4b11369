#!/usr/bin/env python
# -*- coding: utf-8 -*-

# #########################################################################
# Copyright (c) 2015, UChicago Argonne, LLC. All rights reserved.         #
# Distributed under the BSD-3 license, see LICENSE.txt for details.       #
# #########################################################################

"""
Module for plain-text input and output of chainflow tables
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import logging
import os

import numpy as np

logger = logging.getLogger(__name__)

__author__ = "Chainflow developers"
__credits__ = "Rafael Vescovi, Ming Du"
__copyright__ = "Copyright (c) 2015, UChicago Argonne, LLC."
__docformat__ = 'restructuredtext en'
__all__ = ['ensure_folder',
           'format_value',
           'write_table',
           'append_rows',
           'read_table']


def ensure_folder(folder):
    if folder and not os.path.exists(folder):
        try:
            os.makedirs(folder)
        except OSError:
            # another rank created it first
            if not os.path.isdir(folder):
                raise
    return folder


def format_value(value):
    """
    Format one table entry. Floats are written with 17 significant digits so
    that a written table reads back bit for bit.
    """
    if isinstance(value, (str, bytes)):
        return value if isinstance(value, str) else value.decode()
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return '{:d}'.format(int(value))
    return '{:.17g}'.format(float(value))


def _check_header(header, columns):
    if len(header) != len(columns):
        raise ValueError('Header has {:d} names for {:d} columns.'.format(len(header), len(columns)))


def _rows(columns):
    columns = [np.atleast_1d(np.asarray(c)) for c in columns]
    n_rows = len(columns[0]) if columns else 0
    for c in columns:
        if len(c) != n_rows:
            raise ValueError('All columns must have the same length.')
    for i in range(n_rows):
        yield ','.join(format_value(c[i].item() if hasattr(c[i], 'item') else c[i])
                       for c in columns)


def write_table(fname, header, columns):
    """
    Write a comma separated table.

    Parameters
    ----------
    fname : str
        Output file name. Missing folders are created.
    header : list of str
        Column names.
    columns : list of array_like
        One sequence per column, all of equal length. Entries may be numbers
        or strings.
    """
    _check_header(header, columns)
    ensure_folder(os.path.dirname(fname))
    with open(fname, 'w') as outfile:
        outfile.write(','.join(header) + '\n')
        for line in _rows(columns):
            outfile.write(line + '\n')
    return fname


def append_rows(fname, header, columns):
    """
    Append rows to a table, writing the header first if the file is new.
    """
    _check_header(header, columns)
    new_file = not os.path.exists(fname) or os.path.getsize(fname) == 0
    ensure_folder(os.path.dirname(fname))
    with open(fname, 'a') as outfile:
        if new_file:
            outfile.write(','.join(header) + '\n')
        for line in _rows(columns):
            outfile.write(line + '\n')
    return fname


def read_table(fname):
    """
    Read a numeric comma separated table written by :func:`write_table`.

    Returns
    -------
    header : list of str
    data : ndarray
        2D array with one row per line; shape (0, n_columns) for an empty table.
    """
    with open(fname, 'r') as infile:
        header = infile.readline().strip().split(',')
    data = np.loadtxt(fname, delimiter=',', skiprows=1, ndmin=2)
    if data.size == 0:
        data = np.zeros((0, len(header)))
    return header, data
