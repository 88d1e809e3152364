#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
#    Project: lif_quant, spike train quantization with leaky integrate-and-fire neurons
#
#    Distributed under the MIT license, see the LICENSE file.

"""
Spike trains as a vector space, and the conversion of piecewise constant
signals into spike trains.

A :class:`SpikeTrain` is kept in canonical form: times strictly increasing,
no zero amplitude, coincident events merged by summation.  Both arrays are
read-only numpy float64 arrays.
"""

from __future__ import division, print_function, with_statement

__authors__ = ["lif_quant developers"]
__license__ = "MIT"
__date__ = "17/10/2026"
__status__ = "beta"

import math
import logging
import numpy
from .param import ConfigurationError, UnsupportedError
from .norms import Leak

logger = logging.getLogger("lif_quant.spike")


class SpikeTrainError(ValueError):
    """Raised for malformed spike train input (non-finite values...)"""
    pass


def _freeze(array):
    array.flags.writeable = False
    return array


class SpikeTrain(object):
    """
    Finite signed spike train, immutable.

    Build it with :func:`make_train`; the constructor expects arrays that are
    already canonical.
    """
    __slots__ = ("_times", "_amplitudes")

    def __init__(self, times=(), amplitudes=()):
        self._times = _freeze(numpy.array(times, dtype=numpy.float64).reshape(-1))
        self._amplitudes = _freeze(numpy.array(amplitudes, dtype=numpy.float64).reshape(-1))
        if self._times.size != self._amplitudes.size:
            raise SpikeTrainError("times and amplitudes differ in length: %s != %s" %
                                  (self._times.size, self._amplitudes.size))

    @property
    def times(self):
        return self._times

    @property
    def amplitudes(self):
        return self._amplitudes

    @property
    def events(self):
        return list(zip(self._times.tolist(), self._amplitudes.tolist()))

    def __len__(self):
        return self._times.size

    def __iter__(self):
        return iter(self.events)

    def __bool__(self):
        return self._times.size > 0
    __nonzero__ = __bool__

    def __eq__(self, other):
        if not isinstance(other, SpikeTrain):
            return NotImplemented
        return (numpy.array_equal(self._times, other._times) and
                numpy.array_equal(self._amplitudes, other._amplitudes))

    def __ne__(self, other):
        res = self.__eq__(other)
        if res is NotImplemented:
            return res
        return not res

    def __hash__(self):
        return hash((self._times.tobytes(), self._amplitudes.tobytes()))

    def __add__(self, other):
        if not isinstance(other, SpikeTrain):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, SpikeTrain):
            return NotImplemented
        return add(self, scale(other, -1.0))

    def __neg__(self):
        return scale(self, -1.0)

    def __mul__(self, factor):
        return scale(self, factor)
    __rmul__ = __mul__

    def __repr__(self):
        return "SpikeTrain(%s)" % self.events

    def to_dict(self):
        return {"events": [[t, a] for t, a in self.events]}

    @classmethod
    def from_dict(cls, obj):
        try:
            events = obj["events"]
        except (KeyError, TypeError):
            raise SpikeTrainError("A spike train needs an 'events' list")
        return make_train(events)


EMPTY = SpikeTrain()


def make_train(events=None, times=None, amplitudes=None):
    """
    Build a canonical train from (time, amplitude) pairs or from two arrays.

    Events are stably sorted by time, coincident events are summed in input
    order and zero amplitudes are dropped.

    :param events: iterable of (time, amplitude) pairs
    :param times: alternatively, array of times
    :param amplitudes: and the matching array of amplitudes
    :return: SpikeTrain
    :raise SpikeTrainError: on NaN or infinite values
    """
    if events is not None:
        pairs = numpy.array(list(events), dtype=numpy.float64)
        if pairs.size == 0:
            return EMPTY
        if pairs.ndim != 2 or pairs.shape[1] != 2:
            raise SpikeTrainError("Events must be (time, amplitude) pairs")
        times = pairs[:, 0]
        amplitudes = pairs[:, 1]
    else:
        times = numpy.asarray(times if times is not None else (), dtype=numpy.float64).reshape(-1)
        amplitudes = numpy.asarray(amplitudes if amplitudes is not None else (), dtype=numpy.float64).reshape(-1)
        if times.size != amplitudes.size:
            raise SpikeTrainError("times and amplitudes differ in length: %s != %s" %
                                  (times.size, amplitudes.size))
    if times.size == 0:
        return EMPTY
    if not (numpy.all(numpy.isfinite(times)) and numpy.all(numpy.isfinite(amplitudes))):
        raise SpikeTrainError("Spike times and amplitudes must be finite")
    order = numpy.argsort(times, kind="mergesort")
    times = times[order]
    amplitudes = amplitudes[order]
    unique, inverse = numpy.unique(times, return_inverse=True)
    if unique.size != times.size:
        merged = numpy.zeros(unique.size, dtype=numpy.float64)
        for idx, amp in zip(inverse.tolist(), amplitudes.tolist()):
            merged[idx] += amp
        times, amplitudes = unique, merged
    keep = amplitudes != 0.0
    return SpikeTrain(times[keep], amplitudes[keep])


def merge(trains):
    """Superposition of any number of trains, coincident events summed in list order"""
    trains = [t for t in trains if len(t)]
    if not trains:
        return EMPTY
    if len(trains) == 1:
        return trains[0]
    return make_train(times=numpy.concatenate([t.times for t in trains]),
                      amplitudes=numpy.concatenate([t.amplitudes for t in trains]))


def add(a, b):
    """Sum of two trains"""
    return merge([a, b])


def scale(train, factor):
    """Multiply every amplitude by a real factor"""
    factor = float(factor)
    if not math.isfinite(factor):
        raise SpikeTrainError("Scaling factor must be finite, got %r" % factor)
    if factor == 0.0 or len(train) == 0:
        return EMPTY
    amplitudes = train.amplitudes * factor
    keep = amplitudes != 0.0
    return SpikeTrain(train.times[keep], amplitudes[keep])


def shift(train, delta):
    """Translate every event by delta in time"""
    delta = float(delta)
    if not math.isfinite(delta):
        raise SpikeTrainError("Time shift must be finite, got %r" % delta)
    return make_train(times=train.times + delta, amplitudes=train.amplitudes)


def scale_time(train, factor):
    """
    Multiply every time by a positive factor.  A LIF neuron with leak alpha
    fed with scale_time(eta, alpha / beta) behaves like a neuron with leak
    beta fed with eta.
    """
    factor = float(factor)
    if not (math.isfinite(factor) and factor > 0.0):
        raise ConfigurationError("Time scaling factor must be positive and finite, got %r" % factor)
    return make_train(times=train.times * factor, amplitudes=train.amplitudes)


def approx_equal(a, b, atol=1e-12):
    """
    Event-wise comparison with an absolute tolerance; events smaller than
    atol are ignored on both sides.
    """
    a_keep = numpy.abs(a.amplitudes) > atol
    b_keep = numpy.abs(b.amplitudes) > atol
    if a_keep.sum() != b_keep.sum():
        return False
    return (numpy.allclose(a.times[a_keep], b.times[b_keep], rtol=0.0, atol=atol) and
            numpy.allclose(a.amplitudes[a_keep], b.amplitudes[b_keep], rtol=0.0, atol=atol))


class PiecewiseConstantSignal(object):
    """
    Piecewise constant signal with optional Dirac impulses.

    :param breakpoints: strictly increasing interval bounds u_0 < ... < u_K
    :param values: the K constant values c_k on [u_(k-1), u_k)
    :param impulses: optional SpikeTrain of Dirac impulses
    """
    def __init__(self, breakpoints, values, impulses=None):
        self.breakpoints = numpy.array(breakpoints, dtype=numpy.float64).reshape(-1)
        self.values = numpy.array(values, dtype=numpy.float64).reshape(-1)
        if self.breakpoints.size < 2:
            raise SpikeTrainError("A piecewise constant signal needs at least two breakpoints")
        if self.values.size != self.breakpoints.size - 1:
            raise SpikeTrainError("Expected %s values for %s breakpoints, got %s" %
                                  (self.breakpoints.size - 1, self.breakpoints.size, self.values.size))
        if not (numpy.all(numpy.isfinite(self.breakpoints)) and numpy.all(numpy.isfinite(self.values))):
            raise SpikeTrainError("Breakpoints and values must be finite")
        if numpy.any(numpy.diff(self.breakpoints) <= 0):
            raise SpikeTrainError("Breakpoints must be strictly increasing")
        self.impulses = impulses if impulses is not None else EMPTY

    def value_at(self, t):
        """Value of the regular part at time t, 0 outside [u_0, u_K)"""
        if t < self.breakpoints[0] or t >= self.breakpoints[-1]:
            return 0.0
        k = int(numpy.searchsorted(self.breakpoints, t, side="right")) - 1
        return float(self.values[k])

    def weighted_integral(self, alpha, t):
        """
        Closed form of the integral of s(x) exp(alpha x) from u_0 to t of
        the regular part, the impulses being added with their weights.
        """
        alpha = Leak.coerce(alpha)
        if alpha.is_infinite:
            raise UnsupportedError("Weighted integral is not defined for an infinite leak")
        total = 0.0
        for lo, hi, c in zip(self.breakpoints[:-1].tolist(), self.breakpoints[1:].tolist(), self.values.tolist()):
            hi = min(hi, t)
            if hi <= lo:
                break
            if alpha.is_zero:
                total += c * (hi - lo)
            else:
                total += c * (math.exp(alpha.value * hi) - math.exp(alpha.value * lo)) / alpha.value
        for s, a in self.impulses.events:
            if s <= t:
                total += a * math.exp(alpha.value * s)
        return total

    def to_spikes(self, alpha):
        return signal_to_spikes(self, alpha)


def _log_mean_exp(x):
    """log((exp(x) - 1) / x) for x > 0, stable on the whole range"""
    if x < 1.0:
        return math.log(math.expm1(x) / x)
    return x + math.log1p(-math.exp(-x)) - math.log(x)


def signal_to_spikes(signal, alpha):
    """
    Replace each constant piece by a single spike whose leaky weighted
    integral matches the piece exactly, then add the impulses.

    The spike of piece [lo, hi) with value c has amplitude c (hi - lo) and
    sits at the midpoint for alpha = 0, at
    lo + log((exp(alpha w) - 1) / (alpha w)) / alpha otherwise.

    :raise UnsupportedError: for an infinite leak
    """
    alpha = Leak.coerce(alpha)
    if alpha.is_infinite:
        raise UnsupportedError("Signal to spike conversion is not defined for an infinite leak")
    times = []
    amplitudes = []
    for lo, hi, c in zip(signal.breakpoints[:-1].tolist(), signal.breakpoints[1:].tolist(), signal.values.tolist()):
        if c == 0.0:
            continue
        width = hi - lo
        if alpha.is_zero:
            times.append(0.5 * (lo + hi))
        else:
            times.append(lo + _log_mean_exp(alpha.value * width) / alpha.value)
        amplitudes.append(c * width)
    regular = make_train(times=times, amplitudes=amplitudes)
    logger.debug("signal with %s pieces converted into %s spikes", signal.values.size, len(regular))
    return add(regular, signal.impulses)
