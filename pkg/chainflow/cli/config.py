#!/usr/bin/env python
# -*- coding: utf-8 -*-

# #########################################################################
# Copyright (c) 2015, UChicago Argonne, LLC. All rights reserved.         #
# Distributed under the BSD-3 license, see LICENSE.txt for details.       #
# #########################################################################

"""
Module for run configuration files.

A configuration is a JSON object with the sections ``eos``, ``micro``,
``gate``, ``macro`` and ``io``. Missing keys take their defaults, unknown
keys are rejected and ``null`` requests a derived value.
"""

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import json
import logging
import os
from dataclasses import dataclass, field, fields
from typing import Optional

from chainflow.eos.vdw import VdwParams, calibrate_temperature
from chainflow.macrosolver.front import DRIVER_GATE, MacroConfig, driver_gate
from chainflow.microsolver.micro import MicroConfig
from chainflow.surrogate.kernel import GateConfig
from chainflow.util.errors import ValidationError
from chainflow.util.util import ensure_folder

logger = logging.getLogger(__name__)

__author__ = "Chainflow developers"
__credits__ = "Rafael Vescovi, Ming Du"
__copyright__ = "Copyright (c) 2015, UChicago Argonne, LLC."
__docformat__ = 'restructuredtext en'
__all__ = ['EosConfig',
           'IoConfig',
           'RunConfig',
           'load_config',
           'save_config']


@dataclass
class EosConfig(object):
    """
    Van der Waals constants. ``T_ref = None`` selects the temperature whose
    Maxwell densities best match ``rho_liq_target`` and ``rho_vap_target``.
    """

    a: float = 3.
    b: float = 1. / 3.
    R: float = 8. / 3.
    T_ref: Optional[float] = None
    rho_liq_target: float = 1.804
    rho_vap_target: float = 0.317

    def __post_init__(self):
        for name in ('a', 'b', 'R', 'rho_liq_target', 'rho_vap_target'):
            if not getattr(self, name) > 0:
                raise ValidationError('eos.{} must be positive, got {}.'.format(name, getattr(self, name)))
        if self.T_ref is not None and not self.T_ref > 0:
            raise ValidationError('eos.T_ref must be positive or null, got {}.'.format(self.T_ref))

    def params(self):
        """Two-phase VdwParams, calibrating the temperature when needed."""
        T_ref = self.T_ref
        if T_ref is None:
            T_ref = calibrate_temperature(self.rho_liq_target, self.rho_vap_target, self.a, self.b, self.R)
        return VdwParams.two_phase(self.a, self.b, self.R, T_ref)


@dataclass
class IoConfig(object):
    """
    Output locations. Every command is deterministic; ``deterministic`` only
    documents that and must stay true.
    """

    out_dir: str = 'chainflow_out'
    store: Optional[str] = None
    dump_fields: bool = False
    deterministic: bool = True

    def __post_init__(self):
        if not self.deterministic:
            raise ValidationError('io.deterministic cannot be switched off.')
        if not self.out_dir:
            raise ValidationError('io.out_dir must not be empty.')


def _plain(value):
    if isinstance(value, tuple):
        return [_plain(v) for v in value]
    return value


def _section_dict(obj, skip=()):
    return {f.name: _plain(getattr(obj, f.name)) for f in fields(obj) if f.name not in skip}


def _build(cls, section, values, defaults=None, **extra):
    if values is None:
        values = {}
    if not isinstance(values, dict):
        raise ValidationError('Section {} must be an object.'.format(section))
    values = dict(defaults or {}, **values)
    known = set(f.name for f in fields(cls)) - set(extra)
    unknown = sorted(set(values) - known)
    if unknown:
        raise ValidationError('Unknown keys in section {}: {}.'.format(section, ', '.join(unknown)))
    try:
        return cls(**dict(values, **extra))
    except (TypeError, ValueError) as exc:
        raise ValidationError('Section {}: {}'.format(section, exc))


@dataclass
class RunConfig(object):
    eos: EosConfig = field(default_factory=EosConfig)
    micro: MicroConfig = field(default_factory=MicroConfig)
    gate: GateConfig = field(default_factory=driver_gate)
    macro: MacroConfig = field(default_factory=MacroConfig)
    io: IoConfig = field(default_factory=IoConfig)

    sections = ('eos', 'micro', 'gate', 'macro', 'io')

    def __post_init__(self):
        # the macro solver samples with the run's own gate and micro settings
        self.macro.gate = self.gate
        self.macro.micro = self.micro

    @classmethod
    def from_dict(cls, tree):
        """
        Build a configuration from a parsed JSON tree.

        Raises
        ------
        ValidationError
            For unknown sections or keys and for invalid values.
        """
        if not isinstance(tree, dict):
            raise ValidationError('A configuration must be a JSON object.')
        unknown = sorted(set(tree) - set(cls.sections))
        if unknown:
            raise ValidationError('Unknown configuration sections: {}.'.format(', '.join(unknown)))
        micro = _build(MicroConfig, 'micro', tree.get('micro'))
        gate = _build(GateConfig, 'gate', tree.get('gate'), defaults=DRIVER_GATE)
        return cls(eos=_build(EosConfig, 'eos', tree.get('eos')),
                   micro=micro,
                   gate=gate,
                   macro=_build(MacroConfig, 'macro', tree.get('macro'), gate=gate, micro=micro),
                   io=_build(IoConfig, 'io', tree.get('io')))

    def to_dict(self):
        return {'eos': _section_dict(self.eos),
                'micro': _section_dict(self.micro),
                'gate': _section_dict(self.gate),
                'macro': _section_dict(self.macro, skip=('gate', 'micro')),
                'io': _section_dict(self.io)}


def load_config(fname):
    """Read a RunConfig from a JSON file."""
    try:
        with open(fname, 'r') as infile:
            tree = json.load(infile)
    except (IOError, OSError) as exc:
        raise ValidationError('Cannot read configuration {}: {}'.format(fname, exc))
    except ValueError as exc:
        raise ValidationError('Configuration {} is not valid JSON: {}'.format(fname, exc))
    return RunConfig.from_dict(tree)


def save_config(cfg, fname):
    ensure_folder(os.path.dirname(fname))
    with open(fname, 'w') as outfile:
        json.dump(cfg.to_dict(), outfile, indent=2, sort_keys=True)
        outfile.write('\n')
    return fname
