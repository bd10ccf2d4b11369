#!/usr/bin/env python
# -*- coding: utf-8 -*-

# #########################################################################
# Copyright (c) 2015, UChicago Argonne, LLC. All rights reserved.         #
# Distributed under the BSD-3 license, see LICENSE.txt for details.       #
# #########################################################################

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import os
import shutil
import tempfile
import unittest

import numpy as np
from numpy.testing import assert_allclose, assert_array_equal

from chainflow.eos import VdwParams, maxwell_equilibrium
from chainflow.microsolver import RiemannResponse
from chainflow.surrogate import *
from chainflow.util.errors import IllConditionedError, UntrainedError, ValidationError


class LinearOracle(object):
    """Deterministic stand-in for the microscale solver."""

    def __init__(self):
        self.calls = 0

    def __call__(self, x):
        self.calls += 1
        y = [0.1 * (x[0] - x[2]), x[0], x[1], x[2], x[3]]
        return RiemannResponse.from_vector(y, 0.001, 0.002, False)


class FailingOracle(object):

    def __call__(self, x):
        raise RuntimeError('micro failure')


def make_set(points, f=lambda x: [x[0], x[1] + 1., x[2], x[3] - 1., x.sum()]):
    samples = SampleSet()
    for x in points:
        samples = samples.add(Sample(x, f(np.asarray(x))))
    return samples


class KernelTest(unittest.TestCase):

    def test_identity_and_width(self):
        x = np.array([1., 0.2, 0.3, -0.1])
        self.assertEqual(kernel(x, x, 10.), 1.)
        x2 = x + np.array([np.sqrt(0.1), 0., 0., 0.])
        assert_allclose(kernel(x, x2, 10.), np.exp(-1.), rtol=1e-12)

    def test_symmetric(self):
        rs = np.random.RandomState(5)
        for _ in range(20):
            a, b = rs.normal(size=4), rs.normal(size=4)
            self.assertEqual(kernel(a, b, 0.7), kernel(b, a, 0.7))
            self.assertTrue(0. < kernel(a, b, 0.7) <= 1.)

    def test_scaling(self):
        a = np.zeros(4)
        b = np.array([2., 0., 0., 0.])
        assert_allclose(kernel(a, b, 1., scaling=[2., 1., 1., 1.]), np.exp(-1.), rtol=1e-14)
        with self.assertRaises(ValidationError):
            kernel(a, b, 1., scaling=[0., 1., 1., 1.])


class TrainTest(unittest.TestCase):

    def test_single_sample(self):
        samples = make_set([[1., 0., 0.3, 0.]])
        state = train(samples, 10., 0.)
        assert_allclose(state.coefficients[0], samples.Y[0])
        assert_allclose(predict(state, [1., 0., 0.3, 0.]), samples.Y[0])

    def test_two_samples(self):
        samples = make_set([[1., 0., 0.3, 0.], [1.2, 0.1, 0.3, 0.]])
        gamma = 2.
        k = np.exp(-gamma * (0.2 ** 2 + 0.1 ** 2))
        inverse = np.array([[1., -k], [-k, 1.]]) / (1. - k * k)
        state = train(samples, gamma, 0.)
        assert_allclose(state.coefficients, inverse.dot(samples.Y), rtol=1e-10)

    def test_interpolation(self):
        rs = np.random.RandomState(2)
        points = rs.uniform(0., 3., size=(8, 4))
        samples = make_set(points)
        state = train(samples, 1., 0.)
        for x, y in zip(samples.X, samples.Y):
            assert_allclose(predict(state, x), y, rtol=1e-8, atol=1e-10)

    def test_far_field_decay(self):
        samples = make_set([[1., 0., 0.3, 0.], [1.5, 0., 0.3, 0.]])
        far = [50., 50., 50., 50.]
        assert_allclose(predict(train(samples, 1., 1e-10), far), 0., atol=1e-12)
        mean_state = train(samples, 1., 1e-10, offset='mean')
        assert_allclose(predict(mean_state, far), samples.Y.mean(axis=0), rtol=1e-12)

    def test_midpoint_of_equal_outputs(self):
        y = [0.1, 1.8, 0., 0.3, 0.]
        samples = SampleSet([Sample([1., 0., 0.3, 0.], y), Sample([1.4, 0., 0.3, 0.], y)])
        mid = [1.2, 0., 0.3, 0.]
        assert_allclose(predict(train(samples, 3., 0., offset='mean'), mid), y, rtol=1e-12)
        k = np.exp(-3. * 0.16)
        k_mid = np.exp(-3. * 0.04)
        expected = np.array(y) * 2. * k_mid / (1. + k)
        assert_allclose(predict(train(samples, 3., 0.), mid), expected, rtol=1e-10)

    def test_permutation_invariance(self):
        rs = np.random.RandomState(9)
        points = rs.uniform(0., 2., size=(6, 4))
        x = rs.uniform(0., 2., size=4)
        a = predict(train(make_set(points), 1.5, 1e-8), x)
        b = predict(train(make_set(points[::-1]), 1.5, 1e-8), x)
        assert_allclose(a, b, rtol=1e-10, atol=1e-12)

    def test_retraining_idempotent(self):
        samples = make_set(np.random.RandomState(4).uniform(0., 2., size=(5, 4)))
        assert_array_equal(train(samples, 2., 1e-10).coefficients, train(samples, 2., 1e-10).coefficients)

    def test_errors(self):
        with self.assertRaises(ValidationError):
            train(SampleSet(), 1., 0.)
        with self.assertRaises(ValueError):
            train(make_set([[1., 0., 0.3, 0.]]), 1., 0., offset='median')
        # exact duplicates bypassing the set's replacement policy
        x = [1., 0., 0.3, 0.]
        twins = SampleSet([Sample(x, [0.] * 5), Sample(x, [1.] * 5)])
        with self.assertRaises(IllConditionedError):
            train(twins, 1., 0.)

    def test_untrained(self):
        gate = GateConfig(input_scaling=[1., 1., 1., 1.])
        state = initial_state(gate)
        with self.assertRaises(UntrainedError):
            predict(state, [1., 0., 0.3, 0.])


class SampleSetTest(unittest.TestCase):

    def test_duplicates_replaced(self):
        samples = make_set([[1., 0., 0.3, 0.], [1.2, 0., 0.3, 0.]])
        replaced = samples.add(Sample([1.2, 0., 0.3, 0.], [9.] * 5))
        self.assertEqual(len(replaced), 2)
        self.assertEqual(replaced.samples[1].y, (9.,) * 5)
        self.assertEqual(len(samples), 2)
        self.assertEqual(samples.samples[1].y[0], 1.2)

    def test_sample_validation(self):
        with self.assertRaises(ValidationError):
            Sample([1., 2.], [0.] * 5)


class ScoreTest(unittest.TestCase):

    def test_values(self):
        self.assertEqual(score([1., 0., 0.3, 0.], SampleSet()), float('inf'))
        samples = make_set([[1., 0., 0.3, 0.], [2., 0., 0.3, 0.]])
        self.assertEqual(score([1., 0., 0.3, 0.], samples), 0.)
        assert_allclose(score([1.3, 0.4, 0.3, 0.], samples), 0.5, rtol=1e-14)
        assert_allclose(score([1.3, 0.4, 0.3, 0.], samples, scaling=[1., 2., 1., 1.]), np.sqrt(0.13), rtol=1e-14)


class GateTest(unittest.TestCase):

    def setUp(self):
        self.gate = GateConfig(epsilon_model=0.5, input_scaling=[1., 1., 1., 1.], offset='none')
        self.state = initial_state(self.gate)

    def test_empty_state_samples(self):
        oracle = LinearOracle()
        x = np.array([1., 0., 0.3, 0.])
        y, state, sampled = evaluate_gated(x, self.state, self.gate, oracle)
        self.assertTrue(sampled)
        self.assertEqual(oracle.calls, 1)
        self.assertEqual(len(state.sample_set), 1)
        assert_allclose(y, [0.07, 1., 0., 0.3, 0.])
        self.assertEqual(state.sample_set.samples[0].rh_mom_res, 0.002)
        self.assertEqual(len(self.state.sample_set), 0)

    def test_stored_point_uses_surrogate(self):
        oracle = LinearOracle()
        x = np.array([1., 0., 0.3, 0.])
        _, state, _ = evaluate_gated(x, self.state, self.gate, oracle)
        for eps in (1e-9, 0.5, 10.):
            gate = GateConfig(epsilon_model=eps, input_scaling=[1., 1., 1., 1.], offset='none')
            y, same, sampled = evaluate_gated(x, state, gate, oracle)
            self.assertFalse(sampled)
            self.assertIs(same, state)
        self.assertEqual(oracle.calls, 1)

    def test_threshold(self):
        oracle = LinearOracle()
        _, state, _ = evaluate_gated([1., 0., 0.3, 0.], self.state, self.gate, oracle)
        _, state2, sampled = evaluate_gated([1.25, 0., 0.3, 0.], state, self.gate, oracle)
        self.assertFalse(sampled)
        _, state3, sampled = evaluate_gated([1.5, 0., 0.3, 0.], state, self.gate, oracle)
        self.assertTrue(sampled)
        self.assertEqual(len(state3.sample_set), 2)
        self.assertEqual(oracle.calls, 2)

    def test_fresh_value_returned(self):
        oracle = LinearOracle()
        _, state, _ = evaluate_gated([1., 0., 0.3, 0.], self.state, self.gate, oracle)
        x = np.array([2., 0.1, 0.3, 0.])
        y, _, sampled = evaluate_gated(x, state, self.gate, oracle)
        self.assertTrue(sampled)
        assert_array_equal(y, oracle(x).as_vector())

    def test_failure_leaves_state(self):
        oracle = LinearOracle()
        _, state, _ = evaluate_gated([1., 0., 0.3, 0.], self.state, self.gate, oracle)
        with self.assertRaises(RuntimeError):
            evaluate_gated([3., 0., 0.3, 0.], state, self.gate, FailingOracle())
        self.assertEqual(len(state.sample_set), 1)
        self.assertTrue(state.is_trained)

    def test_forced_sample(self):
        oracle = LinearOracle()
        _, state, _ = evaluate_gated([1., 0., 0.3, 0.], self.state, self.gate, oracle)
        y, state, response = sample([1., 0., 0.3, 0.], state, oracle, self.gate)
        self.assertEqual(len(state.sample_set), 1)
        self.assertEqual(oracle.calls, 2)
        self.assertIsInstance(response, RiemannResponse)

    def test_epsilon_sweep(self):
        stream = [np.array([1. + t, 0., 0.3, 0.]) for t in np.linspace(0., 4., 401)]
        counts = []
        for eps in (0.25, 0.5, 1.0):
            gate = GateConfig(epsilon_model=eps, input_scaling=[1., 1., 1., 1.], offset='mean')
            state = initial_state(gate)
            oracle = LinearOracle()
            for x in stream:
                _, state, _ = evaluate_gated(x, state, gate, oracle)
            self.assertEqual(oracle.calls, len(state.sample_set))
            counts.append(oracle.calls)
        self.assertTrue(counts[0] > counts[1] > counts[2], msg=str(counts))
        self.assertTrue(13 <= counts[0] <= 17)
        self.assertTrue(3 <= counts[2] <= 5)

    def test_gate_validation(self):
        for kwargs in ({'epsilon_model': 0.}, {'gamma_k': -1.}, {'lambda_reg': -1e-3}, {'offset': 'max'},
                       {'input_scaling': [1., 1., 1.]}):
            with self.assertRaises(ValidationError):
                GateConfig(**kwargs)
        with self.assertRaises(ValidationError):
            GateConfig().resolved_scaling()

    def test_default_gate_decays(self):
        gate = GateConfig(input_scaling=[1., 1., 1., 1.])
        self.assertEqual(gate.offset, 'none')
        lone = SampleSet().add(Sample([1., 0., 0.3, 0.], [0.1, 1.8, 0.2, 0.3, 0.05]))
        state = initial_state(gate, sample_set=lone)
        assert_allclose(predict(state, [100.] * 4), 0., atol=1e-12)

    def test_default_scaling(self):
        params = VdwParams()
        scaling = default_input_scaling(params)
        rho_l = maxwell_equilibrium(params).rho_liq
        self.assertEqual(scaling[0], rho_l)
        self.assertEqual(scaling[2], rho_l)
        self.assertGreater(scaling[1], rho_l)
        assert_array_equal(GateConfig().resolved_scaling(params), scaling)


class StoreTest(unittest.TestCase):

    def setUp(self):
        self.folder = tempfile.mkdtemp()
        self.fname = os.path.join(self.folder, 'store', 'samples.csv')

    def tearDown(self):
        shutil.rmtree(self.folder)

    def test_round_trip(self):
        rs = np.random.RandomState(8)
        samples = make_set(rs.uniform(0.1, 2., size=(7, 4)) / 3.)
        save_store(samples, self.fname)
        loaded = load_store(self.fname)
        assert_array_equal(loaded.X, samples.X)
        assert_array_equal(loaded.Y, samples.Y)
        x = rs.uniform(0.1, 0.6, size=4)
        assert_array_equal(predict(train(loaded, 2., 1e-10), x), predict(train(samples, 2., 1e-10), x))
        with open(self.fname) as f:
            self.assertEqual(f.readline().strip(), ','.join(STORE_HEADER))

    def test_append_and_duplicates(self):
        self.assertEqual(len(load_store(self.fname)), 0)
        with self.assertRaises(ValidationError):
            load_store(self.fname, missing_ok=False)
        append_store(Sample([1., 0., 0.3, 0.], [0.] * 5, 0.01, 0.02), self.fname)
        append_store(Sample([1.5, 0., 0.3, 0.], [1.] * 5), self.fname)
        append_store(Sample([1., 0., 0.3, 0.], [2.] * 5), self.fname)
        loaded = load_store(self.fname)
        self.assertEqual(len(loaded), 2)
        self.assertEqual(loaded.samples[0].y, (2.,) * 5)
        self.assertTrue(np.isnan(loaded.samples[0].rh_mass_res))

    def test_gate_duplicate_policy(self):
        append_store(Sample([1., 0., 0.3, 0.], [0.] * 5), self.fname)
        append_store(Sample([1.001, 0., 0.3, 0.], [1.] * 5), self.fname)
        self.assertEqual(len(load_store(self.fname)), 2)
        gate = GateConfig(input_scaling=[1., 1., 1., 1.], duplicate_radius=0.01)
        loaded = load_store(self.fname, scaling=gate.resolved_scaling(), radius=gate.duplicate_radius)
        self.assertEqual(len(loaded), 1)
        self.assertEqual(loaded.samples[0].y, (1.,) * 5)

    def test_empty_set(self):
        save_store(SampleSet(), self.fname)
        self.assertEqual(len(load_store(self.fname)), 0)


if __name__ == '__main__':
    unittest.main()
