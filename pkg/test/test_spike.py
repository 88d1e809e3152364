#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
#    Project: lif_quant, spike train quantization with leaky integrate-and-fire neurons
#
#    Distributed under the MIT license, see the LICENSE file.

"""
Test suite for spike trains and the conversion of piecewise constant signals
"""

from __future__ import division

__authors__ = ["lif_quant developers"]
__license__ = "MIT"
__date__ = "17/10/2026"

import sys
import math
import unittest
import numpy
from scipy import integrate
from utilstest import UtilsTest, getLogger
logger = getLogger(__file__)
import lif_quant
from lif_quant.param import ConfigurationError, UnsupportedError
from lif_quant.spike import SpikeTrain, SpikeTrainError, PiecewiseConstantSignal, EMPTY, \
    make_train, merge, add, scale, shift, scale_time, approx_equal, signal_to_spikes

EPS = 1e-4


class test_train(unittest.TestCase):
    def test_canonical(self):
        self.assertEqual(make_train([(1.0, 2.0), (0.0, -1.0)]).events, [(0.0, -1.0), (1.0, 2.0)])
        self.assertEqual(make_train([(0.0, 1.0), (0.0, -1.0)]), EMPTY)
        self.assertEqual(make_train([]), EMPTY)
        self.assertEqual(make_train(), EMPTY)
        train = make_train([(2.0, 1.0), (1.0, 0.5), (2.0, 0.25), (3.0, 0.0)])
        self.assertEqual(train.events, [(1.0, 0.5), (2.0, 1.25)])
        self.assertTrue(numpy.all(numpy.diff(train.times) > 0))

    def test_invalid(self):
        self.assertRaises(SpikeTrainError, make_train, [(float("nan"), 1.0)])
        self.assertRaises(SpikeTrainError, make_train, [(0.0, float("inf"))])
        self.assertRaises(SpikeTrainError, make_train, [(0.0, 1.0, 2.0)])
        self.assertRaises(SpikeTrainError, make_train, times=[0.0, 1.0], amplitudes=[1.0])
        self.assertRaises(SpikeTrainError, SpikeTrain.from_dict, {"spikes": []})

    def test_immutable(self):
        train = make_train([(0.0, 1.0)])
        self.assertRaises(ValueError, train.amplitudes.__setitem__, 0, 5.0)
        self.assertRaises(ValueError, train.times.__setitem__, 0, 5.0)

    def test_vector_space(self):
        self.assertEqual(add(make_train([(0, 1)]), make_train([(0, 1), (1, 2)])).events,
                         [(0.0, 2.0), (1.0, 2.0)])
        a = make_train([(0.0, -1.5), (EPS, 1.0), (2 * EPS, 1.5)])
        self.assertEqual(scale(a, 2).events, [(0.0, -3.0), (EPS, 2.0), (2 * EPS, 3.0)])
        self.assertEqual(scale(a, 0), EMPTY)
        self.assertEqual(a - a, EMPTY)
        self.assertEqual(a + (-a), EMPTY)
        self.assertEqual(2 * a, a * 2)
        b = make_train([(0.5, 1.0), (EPS, -1.0)])
        self.assertEqual(a + b, b + a)
        self.assertEqual(add(a, EMPTY), a)
        self.assertRaises(SpikeTrainError, scale, a, float("nan"))

    def test_merge(self):
        trains = [make_train([(0, 1)]), EMPTY, make_train([(0, 2), (1, 1)]), make_train([(1, -1)])]
        self.assertEqual(merge(trains).events, [(0.0, 3.0)])
        self.assertEqual(merge([]), EMPTY)

    def test_time_maps(self):
        self.assertEqual(shift(make_train([(0, 1)]), 0.25).events, [(0.25, 1.0)])
        self.assertEqual(shift(EMPTY, 3.0), EMPTY)
        self.assertEqual(scale_time(make_train([(1, 1), (2, -1)]), 0.5).events, [(0.5, 1.0), (1.0, -1.0)])
        self.assertRaises(ConfigurationError, scale_time, make_train([(1, 1)]), 0.0)

    def test_approx_equal(self):
        a = make_train([(0.0, 1.0), (1.0, 2.0)])
        b = make_train([(0.0, 1.0 + 1e-13), (1.0, 2.0), (1.5, 1e-14)])
        self.assertTrue(approx_equal(a, b))
        self.assertFalse(approx_equal(a, make_train([(0.0, 1.0)])))
        self.assertFalse(approx_equal(a, make_train([(0.0, 1.0), (1.0, 2.1)])))

    def test_dict(self):
        train = make_train([(0.1, 1.0), (0.3, -0.7)])
        self.assertEqual(train.to_dict(), {"events": [[0.1, 1.0], [0.3, -0.7]]})
        self.assertEqual(SpikeTrain.from_dict(train.to_dict()), train)


class test_signal(unittest.TestCase):
    def test_midpoint(self):
        signal = PiecewiseConstantSignal([0.0, 2.0], [1.0])
        self.assertEqual(signal_to_spikes(signal, 0.0).events, [(1.0, 2.0)])

    def test_exponential_location(self):
        train = PiecewiseConstantSignal([0.0, 1.0], [1.0]).to_spikes(1.0)
        self.assertEqual(len(train), 1)
        s, a = train.events[0]
        self.assertAlmostEqual(s, math.log(math.e - 1), places=14)
        self.assertAlmostEqual(a, 1.0, places=14)
        exact = integrate.quad(math.exp, 0.0, 1.0, epsabs=0, epsrel=1e-13)[0]
        self.assertAlmostEqual(math.exp(s), exact, places=12)

    def test_zero_signal(self):
        signal = PiecewiseConstantSignal([0.0, 1.0, 3.0], [0.0, 0.0])
        self.assertEqual(signal_to_spikes(signal, 0.5), EMPTY)

    def test_infinite_leak(self):
        signal = PiecewiseConstantSignal([0.0, 1.0], [1.0])
        self.assertRaises(UnsupportedError, signal_to_spikes, signal, "inf")
        self.assertRaises(UnsupportedError, signal.weighted_integral, "inf", 1.0)

    def test_invalid(self):
        self.assertRaises(SpikeTrainError, PiecewiseConstantSignal, [0.0], [])
        self.assertRaises(SpikeTrainError, PiecewiseConstantSignal, [0.0, 1.0], [1.0, 2.0])
        self.assertRaises(SpikeTrainError, PiecewiseConstantSignal, [0.0, 1.0, 1.0], [1.0, 2.0])

    def test_weighted_integral(self):
        """spikes carry the leaky weighted integral of every piece, checked by quadrature"""
        rng = numpy.random.default_rng(3)
        for alpha in (0.0, 0.3, 1.0, 4.0):
            for _ in range(5):
                k = int(rng.integers(1, 8))
                breakpoints = numpy.concatenate(([0.0], numpy.cumsum(rng.uniform(0.1, 1.0, k))))
                values = rng.uniform(-2, 2, k)
                impulses = make_train([(float(breakpoints[-1]) / 3, 0.75)])
                signal = PiecewiseConstantSignal(breakpoints, values, impulses)
                train = signal_to_spikes(signal, alpha)
                for end in breakpoints[1:].tolist():
                    spikes = sum(a * math.exp(alpha * s) for s, a in train.events if s <= end)
                    quad = sum(integrate.quad(lambda x, c=c: c * math.exp(alpha * x), lo, min(hi, end),
                                              epsabs=0, epsrel=1e-13)[0]
                               for lo, hi, c in zip(breakpoints[:-1], breakpoints[1:], values) if lo < end)
                    quad += sum(a * math.exp(alpha * s) for s, a in impulses.events if s <= end)
                    closed = signal.weighted_integral(alpha, end)
                    delta = abs(spikes - quad) / max(1.0, abs(quad))
                    logger.info("alpha=%s end=%.3f delta=%s", alpha, end, delta)
                    self.assertLess(delta, 1e-9)
                    self.assertLess(abs(closed - quad) / max(1.0, abs(quad)), 1e-9)

    def test_value_at(self):
        signal = PiecewiseConstantSignal([0.0, 1.0, 2.0], [3.0, -1.0])
        self.assertEqual(signal.value_at(-0.5), 0.0)
        self.assertEqual(signal.value_at(0.0), 3.0)
        self.assertEqual(signal.value_at(1.0), -1.0)
        self.assertEqual(signal.value_at(2.0), 0.0)


def suite():
    testSuite = unittest.TestSuite()
    for name in ("test_canonical", "test_invalid", "test_immutable", "test_vector_space",
                 "test_merge", "test_time_maps", "test_approx_equal", "test_dict"):
        testSuite.addTest(test_train(name))
    for name in ("test_midpoint", "test_exponential_location", "test_zero_signal", "test_infinite_leak",
                 "test_invalid", "test_weighted_integral", "test_value_at"):
        testSuite.addTest(test_signal(name))
    return testSuite


if __name__ == '__main__':
    runner = unittest.TextTestRunner()
    if not runner.run(suite()).wasSuccessful():
        sys.exit(1)
