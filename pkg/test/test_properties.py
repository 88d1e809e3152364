#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
#    Project: lif_quant, spike train quantization with leaky integrate-and-fire neurons
#
#    Distributed under the MIT license, see the LICENSE file.

"""
Property based tests of the norms and of the neuron, run with hypothesis
when it is installed
"""

from __future__ import division

__authors__ = ["lif_quant developers"]
__license__ = "MIT"
__date__ = "17/10/2026"

import sys
import math
import unittest
import numpy
from utilstest import UtilsTest, getLogger
logger = getLogger(__file__)
import lif_quant
from lif_quant.param import ResetMode
from lif_quant.norms import alexiewicz_norm, discrepancy_norm
from lif_quant.spike import make_train, scale, EMPTY
from lif_quant.lif import LifConfig, lif
from lif_quant.decompose import unit_decompose_counts

try:
    from hypothesis import given, settings, example
    import hypothesis.strategies as st
except ImportError:
    logger.warning("hypothesis is not installed, property based tests are skipped")
    given = None

if given is not None:
    amplitudes = st.floats(-5.0, 5.0, allow_nan=False, allow_infinity=False)
    # multiples of 1/64: sums stay exact at alpha = 0 and alpha = inf
    dyadics = st.integers(-320, 320).map(lambda k: k / 64.0)
    leaks = st.one_of(st.just(0.0), st.just("inf"), st.floats(1e-3, 50.0))
    thetas = st.sampled_from([0.25, 0.3, 1.0, 1.5])
    resets = st.sampled_from(sorted(ResetMode.values()))

    @st.composite
    def trains(draw, max_size=20, values=None):
        """trains on the grid of spacing 1/8, at most one event per grid point"""
        slots = draw(st.lists(st.integers(0, 200), max_size=max_size, unique=True))
        values = draw(st.lists(values or amplitudes, min_size=len(slots), max_size=len(slots)))
        return make_train(times=numpy.array(slots, dtype=float) * 0.125, amplitudes=values)

    class test_properties(unittest.TestCase):
        @given(trains(), trains())
        @settings(max_examples=200, deadline=None)
        def test_addition(self, a, b):
            self.assertEqual(a + b, b + a)
            self.assertEqual(a + EMPTY, a)
            self.assertEqual(a - a, EMPTY)

        @given(trains(), trains(), leaks)
        @settings(max_examples=200, deadline=None)
        def test_triangle(self, a, b, alpha):
            lhs = alexiewicz_norm(a + b, alpha)
            rhs = alexiewicz_norm(a, alpha) + alexiewicz_norm(b, alpha)
            self.assertLessEqual(lhs, rhs + 1e-9 * max(1.0, rhs))

        @given(trains(), st.floats(-4.0, 4.0), leaks)
        @settings(max_examples=200, deadline=None)
        def test_homogeneity(self, a, factor, alpha):
            expected = abs(factor) * alexiewicz_norm(a, alpha)
            self.assertAlmostEqual(alexiewicz_norm(scale(a, factor), alpha), expected,
                                   delta=1e-9 * max(1.0, expected))

        @given(trains(), leaks)
        @settings(max_examples=200, deadline=None)
        def test_definite(self, a, alpha):
            self.assertEqual(alexiewicz_norm(a, alpha) == 0.0, len(a) == 0)

        @given(trains(), leaks)
        @settings(max_examples=200, deadline=None)
        def test_equivalence(self, a, alpha):
            n_alex = alexiewicz_norm(a, alpha)
            n_disc = discrepancy_norm(a, alpha)
            slack = 1e-9 * max(1.0, n_disc)
            self.assertLessEqual(n_alex, n_disc + slack)
            self.assertLessEqual(n_disc, 2 * n_alex + slack)

        @given(trains(), leaks, thetas)
        @settings(max_examples=300, deadline=None)
        def test_quantization_error(self, eta, alpha, theta):
            neuron = LifConfig(theta, alpha, ResetMode.TO_MOD)
            err = alexiewicz_norm(eta - lif(eta, neuron), alpha)
            self.assertLess(err, theta)

        @given(trains(), leaks, thetas, resets)
        @settings(max_examples=300, deadline=None)
        def test_silent(self, eta, alpha, theta, reset):
            out = lif(eta, LifConfig(theta, alpha, reset))
            self.assertEqual(len(out) == 0, alexiewicz_norm(eta, alpha) < theta)
            self.assertTrue(set(out.times.tolist()) <= set(eta.times.tolist()))

        @given(trains(values=dyadics), trains(values=dyadics), st.sampled_from([0.0, "inf"]))
        @example(make_train([(0.0, -1.5), (0.125, 1.0), (0.25, 1.5)]),
                 make_train([(0.0, 1.0), (0.125, -1.0), (0.25, 1.0)]), 0.0)
        @example(make_train([(0.0, 0.5)]), make_train([(0.0, 1.0)]), "inf")
        @settings(max_examples=300, deadline=None)
        def test_lipschitz(self, eta, nu, alpha):
            neuron = LifConfig(1.0, alpha, ResetMode.TO_MOD)
            lhs = alexiewicz_norm(lif(eta + nu, neuron) - lif(eta, neuron), alpha)
            n = alexiewicz_norm(nu, alpha)
            self.assertLessEqual(lhs, math.ceil(n - 1e-9 * max(1.0, n)))

        @given(st.lists(st.integers(-6, 6), max_size=25))
        @settings(max_examples=300, deadline=None)
        def test_unit_rounds(self, counts):
            level = int(numpy.abs(numpy.cumsum(counts)).max()) if counts else 0
            rest = numpy.array(counts, dtype=int)
            for unit in unit_decompose_counts(counts):
                rest = rest - unit
                level -= 1
                self.assertEqual(int(numpy.abs(numpy.cumsum(rest)).max()), level)
            self.assertEqual(level, 0)

        @given(st.lists(st.integers(-6, 6), max_size=25))
        @settings(max_examples=300, deadline=None)
        def test_unit_negation(self, counts):
            negated = unit_decompose_counts([-c for c in counts])
            self.assertEqual(negated, [[-d for d in unit] for unit in unit_decompose_counts(counts)])

        @given(st.lists(st.integers(-6, 6), max_size=25))
        @settings(max_examples=300, deadline=None)
        def test_unit_decomposition(self, counts):
            units = unit_decompose_counts(counts)
            level = int(numpy.abs(numpy.cumsum(counts)).max()) if counts else 0
            self.assertEqual(len(units), level)
            total = numpy.sum(units, axis=0).tolist() if units else [0] * len(counts)
            self.assertEqual(total, counts)
            for unit in units:
                self.assertEqual(int(numpy.abs(numpy.cumsum(unit)).max()), 1)

    TESTS = ("test_addition", "test_triangle", "test_homogeneity", "test_definite", "test_equivalence",
             "test_quantization_error", "test_silent", "test_lipschitz", "test_unit_decomposition",
             "test_unit_rounds", "test_unit_negation")
else:
    TESTS = ()


def suite():
    testSuite = unittest.TestSuite()
    for name in TESTS:
        testSuite.addTest(test_properties(name))
    return testSuite


if __name__ == '__main__':
    runner = unittest.TextTestRunner()
    if not runner.run(suite()).wasSuccessful():
        sys.exit(1)
