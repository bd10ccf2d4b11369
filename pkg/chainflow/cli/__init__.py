#!/usr/bin/env python
# -*- coding: utf-8 -*-

# #########################################################################
# Copyright (c) 2015, UChicago Argonne, LLC. All rights reserved.         #
# Distributed under the BSD-3 license, see LICENSE.txt for details.       #
# #########################################################################

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

from .config import *
from .cli import *
