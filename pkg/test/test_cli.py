#!/usr/bin/env python
# -*- coding: utf-8 -*-

# #########################################################################
# Copyright (c) 2015, UChicago Argonne, LLC. All rights reserved.         #
# Distributed under the BSD-3 license, see LICENSE.txt for details.       #
# #########################################################################

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import contextlib
import io
import json
import os
import shutil
import tempfile
import unittest

import numpy as np
from numpy.testing import assert_allclose, assert_array_equal

from chainflow.cli import *
from chainflow.eos import maxwell_equilibrium
from chainflow.surrogate import Sample, SampleSet, load_store, save_store
from chainflow.util.errors import ValidationError
from chainflow.util.util import read_table

SMALL_MICRO = {'N': 400, 'bin_spacings': 2., 'window_spacings': 5., 'offset_spacings': 3., 'n_snapshots': 20}


def quietly(func, *args, **kwargs):
    with contextlib.redirect_stdout(io.StringIO()) as out:
        result = func(*args, **kwargs)
    return result, out.getvalue()


class ConfigTest(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_defaults(self):
        cfg = RunConfig()
        self.assertIsNone(cfg.eos.T_ref)
        self.assertIs(cfg.macro.gate, cfg.gate)
        self.assertIs(cfg.macro.micro, cfg.micro)
        self.assertTrue(cfg.io.deterministic)

    def test_gate_offset(self):
        self.assertEqual(RunConfig().gate.offset, 'mean')
        self.assertEqual(RunConfig.from_dict({}).gate.offset, 'mean')
        self.assertEqual(RunConfig.from_dict({'gate': {'epsilon_model': 0.1}}).gate.offset, 'mean')
        self.assertEqual(RunConfig.from_dict({'gate': {'offset': 'none'}}).gate.offset, 'none')

    def test_round_trip(self):
        tree = {'eos': {'T_ref': 0.85}, 'micro': dict(SMALL_MICRO, search_window=[0.3, 0.7]),
                'gate': {'epsilon_model': 0.25, 'input_scaling': [1., 2., 1., 2.]},
                'macro': {'n_cells': 50, 'initial_left': [2.0, 0.], 'boundary': 'oscillating',
                          'wall_amplitude': 0.05},
                'io': {'out_dir': self.tmp}}
        cfg = RunConfig.from_dict(tree)
        self.assertEqual(cfg.micro.search_window, (0.3, 0.7))
        self.assertEqual(cfg.macro.initial_left, (2.0, 0.))
        self.assertEqual(RunConfig.from_dict(cfg.to_dict()), cfg)
        fname = save_config(cfg, os.path.join(self.tmp, 'cfg', 'run.json'))
        self.assertEqual(load_config(fname), cfg)
        with open(fname) as f:
            self.assertEqual(json.load(f), cfg.to_dict())

    def test_rejects(self):
        for tree in ({'solver': {}}, {'eos': {'T': 1.}}, {'macro': {'gate': {}}}, {'micro': {'N': 401}},
                     {'gate': {'offset': 'median'}}, {'io': {'deterministic': False}}, {'eos': []},
                     {'micro': {'N': 'many'}}, []):
            with self.assertRaises(ValidationError):
                RunConfig.from_dict(tree)

    def test_bad_file(self):
        fname = os.path.join(self.tmp, 'bad.json')
        with open(fname, 'w') as f:
            f.write('{"eos": ')
        with self.assertRaises(ValidationError):
            load_config(fname)
        with self.assertRaises(ValidationError):
            load_config(os.path.join(self.tmp, 'missing.json'))

    def test_calibrated_eos(self):
        eq = maxwell_equilibrium(EosConfig().params())
        self.assertLess(abs(eq.rho_liq - 1.804), 0.01)
        self.assertLess(abs(eq.rho_vap - 0.317), 0.01)
        with self.assertRaises(ValidationError):
            EosConfig(T_ref=1.5).params()


class MaxwellCommandTest(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def write(self, tree):
        fname = os.path.join(self.tmp, 'cfg.json')
        with open(fname, 'w') as f:
            json.dump(tree, f)
        return fname

    def test_calibrated(self):
        eq, out = quietly(cmd_maxwell, RunConfig())
        assert_allclose(eq.rho_liq, 1.804, atol=0.01)
        assert_allclose(eq.rho_vap, 0.317, atol=0.01)
        self.assertIn('rho_liq', out)
        self.assertIn('tau_vap_min', out)

    def test_near_critical(self):
        eq, _ = quietly(cmd_maxwell, RunConfig.from_dict({'eos': {'T_ref': 0.99}}))
        self.assertLess(abs(eq.rho_liq - 1.), 0.3)
        self.assertLess(abs(eq.rho_vap - 1.), 0.3)

    def test_exit_codes(self):
        code, _ = quietly(main, ['maxwell', '--quiet'])
        self.assertEqual(code, 0)
        code, _ = quietly(main, ['maxwell', '--quiet', '--config', self.write({'eos': {'T_ref': 1.5}})])
        self.assertEqual(code, 1)
        code, _ = quietly(main, ['maxwell', '--quiet', '--config', self.write({'eos': {'colour': 1}})])
        self.assertEqual(code, 1)

    def test_micro_single_phase(self):
        code, _ = quietly(main, ['micro', '--quiet', '--out', self.tmp, '0.2', '0', '0.3', '0'])
        self.assertEqual(code, 1)
        self.assertFalse(os.path.exists(os.path.join(self.tmp, 'micro_response.csv')))


class SampleTableTest(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        self.cfg = RunConfig.from_dict({'eos': {'T_ref': 0.85}, 'micro': SMALL_MICRO,
                                        'io': {'out_dir': self.tmp}})
        self.store = os.path.join(self.tmp, 'samples.csv')

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_read_inputs(self):
        assert_array_equal(read_inputs(values=[1.9, 0., 0.3, 0.]), [[1.9, 0., 0.3, 0.]])
        self.assertEqual(read_inputs().shape, (0, 4))
        with self.assertRaises(ValidationError):
            read_inputs(values=[1., 2., 3.])
        fname = os.path.join(self.tmp, 'inputs.csv')
        with open(fname, 'w') as f:
            f.write('rho_L,m_L,rho_R,m_R\n1.9,0,0.3,0\n0.3,0,1.9,0\n')
        assert_array_equal(read_inputs(fname, [2., 0., 0.3, 0.])[:, 0], [1.9, 0.3, 2.])
        with open(fname, 'w') as f:
            f.write('a,b,c,d\n1,2,3,4\n')
        with self.assertRaises(ValidationError):
            read_inputs(fname)

    def test_empty(self):
        count, _ = quietly(cmd_sample_table, self.cfg, [])
        self.assertEqual(count, 0)
        self.assertFalse(os.path.exists(self.store))

    def test_append_and_duplicate(self):
        inputs = [[1.9, 0., 0.3, 0.], [0.2, 0., 0.3, 0.]]
        count, _ = quietly(cmd_sample_table, self.cfg, inputs)
        self.assertEqual(count, 1)
        header, data = read_table(self.store)
        self.assertEqual(data.shape, (1, 11))
        assert_array_equal(data[0, :4], inputs[0])

        code, _ = quietly(main, ['sample-table', '--quiet', '--store', self.store, '--config',
                                 save_config(self.cfg, os.path.join(self.tmp, 'cfg.json')),
                                 '1.9', '0', '0.3', '0'])
        self.assertEqual(code, 0)
        header, data = read_table(self.store)
        self.assertEqual(data.shape, (2, 11))
        assert_array_equal(data[0], data[1])
        self.assertEqual(len(load_store(self.store)), 1)


class MacroCommandTest(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        self.store = os.path.join(self.tmp, 'store.csv')
        tree = {'eos': {'T_ref': 0.85}, 'micro': SMALL_MICRO,
                'macro': {'n_cells': 20, 't_end': 0.1, 'output_stride': 2},
                'io': {'out_dir': self.tmp, 'store': self.store}}
        self.cfg = RunConfig.from_dict(tree)
        eq = maxwell_equilibrium(self.cfg.eos.params())
        x = [eq.rho_liq, 0., eq.rho_vap, 0.]
        save_store(SampleSet().add(Sample(x, [0.] + x)), self.store)
        self.fname = save_config(self.cfg, os.path.join(self.tmp, 'cfg.json'))

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_run(self):
        code, out = quietly(main, ['macro', '--quiet', '--config', self.fname])
        self.assertEqual(code, 0)
        self.assertIn('micro_calls   0', out)
        header, report = read_table(os.path.join(self.tmp, 'report.csv'))
        self.assertEqual(header[0], 'step')
        self.assertTrue(np.all(report[:, 2] == 0))
        header, track = read_table(os.path.join(self.tmp, 'track.csv'))
        self.assertEqual(header, ['t', 'pos'])
        assert_allclose(track[:, 1], 0.5)
        self.assertEqual(track[-1, 0], 0.1)
        _, times = read_table(os.path.join(self.tmp, 'times.csv'))
        meshes = sorted(os.listdir(os.path.join(self.tmp, 'trajectory')))
        self.assertEqual(len(meshes), len(times))
        self.assertEqual(meshes[0], 'mesh_00000.csv')
        self.assertEqual(len(load_store(self.store)), 1)
        self.assertEqual(load_config(os.path.join(self.tmp, 'run_config.json')), self.cfg)

    def test_zero_end_time(self):
        self.cfg.macro.t_end = 0.
        out_dir = os.path.join(self.tmp, 'zero')
        result, _ = quietly(cmd_macro, self.cfg, out_dir)
        self.assertEqual(result.totals['steps'], 0)
        self.assertEqual(os.listdir(os.path.join(out_dir, 'trajectory')), ['mesh_00000.csv'])


if __name__ == '__main__':
    unittest.main()
