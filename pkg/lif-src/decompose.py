#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
#    Project: lif_quant, spike train quantization with leaky integrate-and-fire neurons
#
#    Distributed under the MIT license, see the LICENSE file.

"""
Decomposition of a spike train into its LIF quantization and a residual,
and of the quantization into unit-norm trains.

For a train psi whose amplitudes are integer multiples of theta, the integer
walk S_k = sum_(j<=k) psi_j / theta has maximum absolute value N (the
alpha = 0 Alexiewicz norm of psi / theta).  Each round removes one unit
train.  The walk is cut at its top and bottom peaks into down and up
intervals; the unit gets a spike of 1 at the first peak, then on each
interval either one spike of 2 (case A) or two spikes of 1 (case B), with
the sign of the interval.  Subtracting it shifts every peak by one toward
zero, so the remaining walk has maximum N - 1.  A walk whose first peak is
negative is decomposed as its negation.
"""

from __future__ import division, print_function, with_statement

__authors__ = ["lif_quant developers"]
__license__ = "MIT"
__date__ = "17/10/2026"
__status__ = "beta"

import itertools
import logging
import numpy
from .param import par, ResetMode, UnsupportedError
from .spike import make_train
from .lif import lif

logger = logging.getLogger("lif_quant.decompose")


class DecompositionError(ValueError):
    """Raised when amplitudes are not integer multiples of the threshold"""
    pass


class Decomposition(object):
    """
    Result of :func:`decompose`

    :param psi: LIF quantization, amplitudes multiple of theta
    :param rho: residual train - psi, Alexiewicz norm below theta
    :param units: unit trains whose sum is psi
    :param theta: threshold
    """
    def __init__(self, psi, rho, units, theta):
        self.psi = psi
        self.rho = rho
        self.units = units
        self.theta = theta

    def reconstruct(self):
        return self.psi + self.rho

    def __repr__(self):
        return "Decomposition(%s spikes, %s units, theta=%r)" % (len(self.psi), len(self.units), self.theta)


def quantize_split(train, cfg):
    """
    Split a train into its reset-to-mod LIF output and the residual

    :return: (psi, rho) with psi = lif(train) and rho = train - psi
    """
    if cfg.reset != ResetMode.TO_MOD:
        raise UnsupportedError("The quantization split needs the reset to mod, got %r" % cfg.reset)
    psi = lif(train, cfg)
    return psi, train - psi


def _snap(psi, theta, tolerance):
    ratios = psi.amplitudes / theta
    counts = numpy.rint(ratios)
    bad = numpy.nonzero(numpy.abs(ratios - counts) > tolerance)[0]
    if bad.size:
        i = int(bad[0])
        raise DecompositionError("Amplitude %r at t=%r is not an integer multiple of theta=%r" %
                                 (float(psi.amplitudes[i]), float(psi.times[i]), theta))
    return [int(c) for c in counts.tolist()]


def _walk_level(counts):
    return max([abs(s) for s in itertools.accumulate(counts)] or [0])


def _fits(walk, k, d, level):
    return abs(walk[k] - d) <= level - 1


def _switch(counts, walk, interval, start, end, level):
    """
    Unit spikes taking the unit walk from `start` to `end` across an interval

    Case A puts a single spike of 2 on an amplitude of the same sign and at
    least 2, case B puts two spikes of 1 on amplitudes of the same sign.
    The earliest indices are taken among those keeping every shifted walk
    sample within level - 1.

    :return: (dict index -> unit amplitude, case label)
    """
    step = 1 if end > start else -1
    if step * sum(counts[k] for k in interval) < 2:
        return {}, None
    n = len(interval)
    before = [True] * (n + 1)
    for j, k in enumerate(interval):
        before[j + 1] = before[j] and _fits(walk, k, start, level)
    after = [True] * (n + 1)
    for j in range(n - 1, -1, -1):
        after[j] = after[j + 1] and _fits(walk, interval[j], end, level)
    for j, k in enumerate(interval):
        if step * counts[k] >= 2 and before[j] and after[j]:
            return {k: 2 * step}, "A"
    for j1, k1 in enumerate(interval):
        if step * counts[k1] < 1 or not before[j1]:
            continue
        for j2 in range(j1 + 1, n):
            if not _fits(walk, interval[j2 - 1], 0, level):
                break
            k2 = interval[j2]
            if step * counts[k2] >= 1 and after[j2]:
                return {k1: step, k2: step}, "B"
    raise DecompositionError("No unit placement on interval %s of a walk of level %s" % (interval, level))


def _peel(counts, level):
    """
    One unit of an integer train whose walk has maximum absolute value `level`

    The walk is oriented so that its first peak is positive.  Top peaks are
    the first sample at the level and every later sample at level - 1 or
    above.  Between two top peaks, and after the last one, the first minimum
    is a bottom peak when it reaches -1 or below; the unit walk goes down to
    -1 on the interval ending there and back up to +1 on the interval ending
    at the next top peak.  Stretches staying above -1 carry no spike.
    """
    if level == 1:
        return list(counts)
    walk = list(itertools.accumulate(counts))
    sign = 1 if next(s for s in walk if abs(s) == level) > 0 else -1
    counts = [sign * c for c in counts]
    walk = [sign * s for s in walk]
    size = len(walk)
    tops = [walk.index(level)]
    tops.extend(k for k in range(tops[0] + 1, size) if walk[k] >= level - 1)
    unit = [0] * size
    unit[tops[0]] = 1
    cases = []
    for top, next_top in zip(tops, tops[1:] + [None]):
        stop = size if next_top is None else next_top + 1
        span = range(top + 1, stop)
        if not span:
            continue
        bottom = min(span, key=lambda k: (walk[k], k))
        if walk[bottom] > -1:
            continue
        intervals = [(range(top + 1, bottom + 1), 1, -1)]
        if next_top is not None:
            intervals.append((range(bottom + 1, next_top + 1), -1, 1))
        for interval, start, end in intervals:
            spikes, case = _switch(counts, walk, list(interval), start, end, level)
            for k, d in spikes.items():
                unit[k] = d
            cases.append(case)
    logger.debug("level %s: %s top peaks, %s intervals, cases %s",
                 level, len(tops), len(cases), "".join(c or "-" for c in cases))
    return [sign * d for d in unit]


def unit_decompose_counts(counts):
    """
    Integer version of :func:`unit_decompose`

    :param counts: integer amplitudes of psi / theta
    :return: list of integer amplitude lists, one per unit, summing to counts
    """
    counts = [int(c) for c in counts]
    level = _walk_level(counts)
    units = []
    while level > 0:
        unit = _peel(counts, level)
        counts = [c - d for c, d in zip(counts, unit)]
        new_level = _walk_level(counts)
        assert new_level == level - 1, "unit round reduced the level from %s to %s" % (level, new_level)
        units.append(unit)
        level = new_level
    return units


def unit_decompose(psi, theta, tolerance=None):
    """
    Split a quantized train into unit trains of alpha = 0 Alexiewicz norm
    theta, as many as the norm of psi / theta.

    :param psi: SpikeTrain with amplitudes multiple of theta
    :param theta: positive threshold
    :param tolerance: snapping tolerance on psi / theta
    :return: list of SpikeTrain
    :raise DecompositionError: when an amplitude is not a multiple of theta
    """
    if tolerance is None:
        tolerance = par.SnapTolerance
    theta = float(theta)
    if len(psi) == 0:
        return []
    counts = _snap(psi, theta, tolerance)
    units = unit_decompose_counts(counts)
    logger.debug("%s spikes decomposed into %s units", len(psi), len(units))
    times = psi.times
    return [make_train(times=times, amplitudes=numpy.array(unit, dtype=numpy.float64) * theta)
            for unit in units]


def decompose(train, cfg):
    """Quantization split followed by the unit decomposition of psi"""
    psi, rho = quantize_split(train, cfg)
    return Decomposition(psi, rho, unit_decompose(psi, cfg.theta), cfg.theta)
