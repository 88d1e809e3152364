#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
#    Project: lif_quant, spike train quantization with leaky integrate-and-fire neurons
#
#    Distributed under the MIT license, see the LICENSE file.

"""
Norms on spike trains.

The leaky Alexiewicz norm of a train with events (t_i, a_i) is the largest
absolute value of the leaky running sums::

    S_n = S_(n-1) * exp(-alpha * (t_n - t_(n-1))) + a_n

The running sum is the "leaky addition" shared with the LIF neuron: the very
same floating point expression is used in both places so that a train has a
norm below the threshold exactly when the neuron stays silent.

The leak alpha is a :class:`Leak`; ``Leak.INFINITY`` is an explicit case and
not a large float.
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

logger = logging.getLogger("lif_quant.norms")


class Leak(object):
    """
    Leak rate alpha of a LIF neuron, a non-negative real or infinity.

    :param value: float, string ("inf" accepted) or another Leak
    """
    __slots__ = ("_value",)

    def __init__(self, value=0.0):
        if isinstance(value, Leak):
            value = value._value
        elif isinstance(value, str):
            token = value.strip().lower()
            if token in ("inf", "+inf", "infinity"):
                value = math.inf
            else:
                try:
                    value = float(token)
                except ValueError:
                    raise ConfigurationError("Invalid leak %r" % value)
        value = float(value)
        if math.isnan(value) or value < 0.0:
            raise ConfigurationError("Leak must be a non-negative number or infinity, got %r" % value)
        self._value = value

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        return cls(value)

    @property
    def value(self):
        return self._value

    @property
    def is_infinite(self):
        return math.isinf(self._value)

    @property
    def is_zero(self):
        return self._value == 0.0

    def token(self):
        """Textual form used in files: "inf" or the shortest round-trip repr"""
        if self.is_infinite:
            return "inf"
        return repr(self._value)

    def __float__(self):
        return self._value

    def __eq__(self, other):
        if isinstance(other, Leak):
            return self._value == other._value
        return NotImplemented

    def __ne__(self, other):
        res = self.__eq__(other)
        if res is NotImplemented:
            return res
        return not res

    def __hash__(self):
        return hash(("Leak", self._value))

    def __repr__(self):
        return "Leak(%s)" % self.token()


Leak.ZERO = Leak(0.0)
Leak.INFINITY = Leak(math.inf)


def decay_factor(alpha, gap):
    """
    Multiplicative decay exp(-alpha * gap) of the potential over a gap

    :param alpha: Leak
    :param gap: non-negative time difference
    :return: float in [0, 1]
    """
    if alpha.is_infinite:
        return 0.0
    return math.exp(-alpha.value * gap)


def oplus(times, amplitudes, alpha):
    """
    Running leaky sums S_1 .. S_N of a train

    :param times: strictly increasing event times
    :param amplitudes: amplitudes of the events
    :param alpha: Leak or anything accepted by it
    :return: numpy array of the running sums
    """
    alpha = Leak.coerce(alpha)
    amplitudes = numpy.asarray(amplitudes, dtype=numpy.float64)
    if alpha.is_infinite:
        return amplitudes.copy()
    out = numpy.empty(amplitudes.size, dtype=numpy.float64)
    s = 0.0
    prev = None
    for n, (t, a) in enumerate(zip(numpy.asarray(times, dtype=numpy.float64).tolist(),
                                   amplitudes.tolist())):
        decay = 1.0 if prev is None else decay_factor(alpha, t - prev)
        s = s * decay + a
        out[n] = s
        prev = t
    return out


def alexiewicz_norm(train, alpha):
    """
    Leaky Alexiewicz norm computed with the running sum, O(N)

    :param train: SpikeTrain
    :param alpha: Leak
    :return: float
    """
    alpha = Leak.coerce(alpha)
    if len(train) == 0:
        return 0.0
    if alpha.is_infinite:
        return float(numpy.abs(train.amplitudes).max())
    return float(numpy.abs(oplus(train.times, train.amplitudes, alpha)).max())


def alexiewicz_norm_direct(train, alpha):
    """
    Reference O(N^2) evaluation of the leaky Alexiewicz norm, every prefix
    is summed from scratch.
    """
    alpha = Leak.coerce(alpha)
    times = train.times.tolist()
    amplitudes = train.amplitudes.tolist()
    best = 0.0
    for n in range(len(times)):
        if alpha.is_infinite:
            acc = amplitudes[n]
        else:
            acc = 0.0
            for j in range(n + 1):
                acc += amplitudes[j] * math.exp(-alpha.value * (times[n] - times[j]))
        best = max(best, abs(acc))
    return best


def discrepancy_norm(train, alpha):
    """
    Leaky discrepancy (Weyl) norm: largest absolute leaky sum over all
    windows of consecutive events.

    O(N) for alpha = 0 (range of the prefix sums) and alpha = infinity,
    O(N^2) otherwise.
    """
    alpha = Leak.coerce(alpha)
    if len(train) == 0:
        return 0.0
    if alpha.is_infinite:
        return float(numpy.abs(train.amplitudes).max())
    if alpha.is_zero:
        prefix = numpy.concatenate(([0.0], numpy.cumsum(train.amplitudes)))
        return float(prefix.max() - prefix.min())
    return discrepancy_norm_direct(train, alpha)


def discrepancy_norm_direct(train, alpha):
    """Reference O(N^2) evaluation of the discrepancy norm over all windows"""
    alpha = Leak.coerce(alpha)
    times = train.times.tolist()
    amplitudes = train.amplitudes.tolist()
    best = 0.0
    for n in range(len(times)):
        if alpha.is_infinite:
            best = max(best, abs(amplitudes[n]))
            continue
        window = 0.0
        for m in range(n, -1, -1):
            window += amplitudes[m] * math.exp(-alpha.value * (times[n] - times[m]))
            best = max(best, abs(window))
    return best


def l2_norm(train, alpha):
    """
    Euclidean norm of the vector of running leaky sums

    :raise UnsupportedError: for an infinite leak
    """
    alpha = Leak.coerce(alpha)
    if alpha.is_infinite:
        raise UnsupportedError("The L2 norm of the running sums is not defined for an infinite leak")
    if len(train) == 0:
        return 0.0
    return float(numpy.sqrt(numpy.sum(oplus(train.times, train.amplitudes, alpha) ** 2)))


def norm(train, alpha, kind="alex"):
    """Dispatch on the norm name: alex, disc or l2"""
    if kind == "alex":
        return alexiewicz_norm(train, alpha)
    elif kind == "disc":
        return discrepancy_norm(train, alpha)
    elif kind == "l2":
        return l2_norm(train, alpha)
    raise ConfigurationError("Unknown norm %r" % (kind,))


def unit_ball_shear(n):
    """
    Bidiagonal matrix T with 1 on the diagonal and -1 below it: the
    Alexiewicz unit ball (alpha = 0) of N-spike trains is T applied to the
    hypercube [-1, 1]^N.
    """
    n = int(n)
    if n < 1:
        raise ConfigurationError("Dimension of the unit ball must be positive, got %s" % n)
    return numpy.eye(n) - numpy.eye(n, k=-1)


def in_unit_ball_A0(amplitudes, radius=1.0):
    """
    Membership of an amplitude vector in the alpha = 0 Alexiewicz ball,
    equivalent to T^-1 x lying in the hypercube.
    """
    amplitudes = numpy.asarray(amplitudes, dtype=numpy.float64)
    if amplitudes.size == 0:
        return True
    return bool(numpy.all(numpy.abs(numpy.cumsum(amplitudes)) <= radius))
