#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
#    Project: lif_quant, spike train quantization with leaky integrate-and-fire neurons
#
#    Distributed under the MIT license, see the LICENSE file.

"""
Leaky integrate-and-fire neuron seen as a quantizer of spike trains.

Two implementations are provided:

* :func:`lif`, event driven on continuous time
* :func:`lif_discrete`, on an equidistant time grid

The neuron only inspects its potential at input events.  When the absolute
potential reaches the threshold theta the neuron emits a spike and resets:

* ``zero``: the whole potential is emitted, the potential restarts at 0
* ``sub``: +/- theta is emitted and subtracted from the potential
* ``mod``: the integer part of u / theta (times theta) is emitted, the
  remainder is kept

Reset by subtraction may leave a potential above threshold, it is discharged
at the next input event.
"""

from __future__ import division, print_function, with_statement

__authors__ = ["lif_quant developers"]
__license__ = "MIT"
__date__ = "17/10/2026"
__status__ = "beta"

import math
import logging
import numpy
from .param import par, ResetMode, BetaMode, ConfigurationError
from .norms import Leak, decay_factor, alexiewicz_norm
from .spike import SpikeTrain, make_train, EMPTY

logger = logging.getLogger("lif_quant.lif")


class ResolutionError(ValueError):
    """Raised when two spikes fall into the same cell of a time grid"""
    pass


def truncate(x):
    """Quantizer [x] = sgn(x) floor(|x|), rounding toward zero"""
    return float(math.trunc(x))


class LifConfig(object):
    """
    Parameters of a LIF neuron

    :param theta: positive threshold
    :param alpha: leak, a Leak, a float or "inf"
    :param reset: one of ResetMode values
    """
    def __init__(self, theta=None, alpha=0.0, reset=ResetMode.TO_MOD):
        if theta is None:
            theta = par.Theta
        theta = float(theta)
        if not (math.isfinite(theta) and theta > 0.0):
            raise ConfigurationError("Threshold must be positive and finite, got %r" % theta)
        self.theta = theta
        self.alpha = Leak.coerce(alpha)
        self.reset = ResetMode.check(reset, "reset mode")

    def replace(self, theta=None, alpha=None, reset=None):
        return LifConfig(self.theta if theta is None else theta,
                         self.alpha if alpha is None else alpha,
                         self.reset if reset is None else reset)

    def __eq__(self, other):
        if not isinstance(other, LifConfig):
            return NotImplemented
        return (self.theta, self.alpha, self.reset) == (other.theta, other.alpha, other.reset)

    def __hash__(self):
        return hash((self.theta, self.alpha, self.reset))

    def __repr__(self):
        return "LifConfig(theta=%r, alpha=%s, reset=%s)" % (self.theta, self.alpha.token(), self.reset)


class DiscreteLifConfig(object):
    """
    Parameters of the grid based LIF neuron

    :param base: LifConfig
    :param dt: grid spacing, positive
    :param beta_mode: BetaMode.EXACT_EXP uses exp(-alpha dt) per cell,
                      BetaMode.PAPER_LINEAR uses 1 - dt / alpha
    """
    def __init__(self, base, dt, beta_mode=BetaMode.EXACT_EXP):
        dt = float(dt)
        if not (math.isfinite(dt) and dt > 0.0):
            raise ConfigurationError("Grid spacing must be positive and finite, got %r" % dt)
        self.base = base
        self.dt = dt
        self.beta_mode = BetaMode.check(beta_mode, "beta mode")
        alpha = base.alpha
        if self.beta_mode == BetaMode.PAPER_LINEAR and not alpha.is_infinite and alpha.value <= dt:
            raise ConfigurationError("Linear decay 1 - dt/alpha needs alpha > dt (alpha=%s, dt=%s)" %
                                     (alpha.token(), dt))

    @property
    def beta(self):
        """Decay factor applied per grid cell"""
        return self.decay(1)

    def decay(self, steps):
        """Decay over a number of grid cells"""
        alpha = self.base.alpha
        if self.beta_mode == BetaMode.EXACT_EXP:
            if alpha.is_infinite:
                return 0.0
            return math.exp(-alpha.value * (self.dt * steps))
        if alpha.is_infinite:
            return 1.0
        return (1.0 - self.dt / alpha.value) ** steps

    def __repr__(self):
        return "DiscreteLifConfig(%r, dt=%r, beta_mode=%s)" % (self.base, self.dt, self.beta_mode)


def _discharge(u, cfg):
    """
    Spike emitted by a potential at or above threshold and the potential
    left after the reset.
    """
    if cfg.reset == ResetMode.TO_ZERO:
        return u, 0.0
    if cfg.reset == ResetMode.BY_SUBTRACTION:
        b = math.copysign(cfg.theta, u)
        return b, u - b
    b = truncate(u / cfg.theta) * cfg.theta
    return b, u - b


def lif(train, cfg):
    """
    Event driven LIF quantization of a spike train.

    :param train: SpikeTrain
    :param cfg: LifConfig
    :return: SpikeTrain of the emitted spikes, at a subset of the input times
    """
    if len(train) == 0:
        return EMPTY
    theta = cfg.theta
    alpha = cfg.alpha
    out_times = []
    out_amplitudes = []
    u = 0.0
    prev = None
    for t, a in zip(train.times.tolist(), train.amplitudes.tolist()):
        if alpha.is_infinite:
            u = a
        else:
            decay = 1.0 if prev is None else decay_factor(alpha, t - prev)
            assert 0.0 <= decay <= 1.0, "decay factor %s out of [0, 1]" % decay
            u = u * decay + a
        prev = t
        if abs(u) >= theta:
            b, u = _discharge(u, cfg)
            out_times.append(t)
            out_amplitudes.append(b)
    return make_train(times=out_times, amplitudes=out_amplitudes)


def lif_discrete(amplitudes, cfg):
    """
    LIF quantization of a sequence sampled on an equidistant grid.

    The potential of cell n is the decayed residual of the previous update
    plus the input of cell n; the spike of an input can be emitted in its
    own cell.  Empty cells are only visited while the residual is above
    threshold (reset by subtraction), the decay over skipped cells is
    applied in one go.

    :param amplitudes: 1D sequence of grid amplitudes
    :param cfg: DiscreteLifConfig
    :return: numpy array of the same length with the emitted amplitudes
    """
    base = cfg.base
    inputs = numpy.asarray(amplitudes, dtype=numpy.float64).reshape(-1)
    if not numpy.all(numpy.isfinite(inputs)):
        raise ConfigurationError("Grid amplitudes must be finite")
    out = numpy.zeros_like(inputs)
    memoryless = base.alpha.is_infinite and cfg.beta_mode == BetaMode.EXACT_EXP
    u = 0.0
    last = None
    for n, a in enumerate(inputs.tolist()):
        if a == 0.0 and abs(u) < base.theta:
            continue
        if memoryless:
            u = a
        else:
            decay = 1.0 if last is None else cfg.decay(n - last)
            u = u * decay + a
        last = n
        if abs(u) >= base.theta:
            b, u = _discharge(u, base)
            out[n] = b
    return out


def to_grid(train, dt):
    """
    Sample a train on the grid of spacing dt, the event at t going to the
    cell floor(t / dt).

    :return: numpy array of length max index + 1 (empty for the empty train)
    :raise ResolutionError: when two events share a cell
    """
    dt = float(dt)
    if not (math.isfinite(dt) and dt > 0.0):
        raise ConfigurationError("Grid spacing must be positive and finite, got %r" % dt)
    if len(train) == 0:
        return numpy.zeros(0, dtype=numpy.float64)
    if train.times[0] < 0.0:
        raise ResolutionError("Grid sampling needs non-negative times, got %r" % train.times[0])
    index = numpy.floor(train.times / dt).astype(numpy.int64)
    clash = numpy.nonzero(numpy.diff(index) == 0)[0]
    if clash.size:
        i = int(clash[0])
        raise ResolutionError("Spikes at t=%r and t=%r fall into the same grid cell %s (dt=%r)" %
                              (float(train.times[i]), float(train.times[i + 1]), int(index[i]), dt))
    grid = numpy.zeros(int(index[-1]) + 1, dtype=numpy.float64)
    grid[index] = train.amplitudes
    return grid


def from_grid(amplitudes, dt):
    """Spike train with the non-zero cells of a grid at times n * dt"""
    amplitudes = numpy.asarray(amplitudes, dtype=numpy.float64).reshape(-1)
    index = numpy.nonzero(amplitudes)[0]
    return make_train(times=index * float(dt), amplitudes=amplitudes[index])


def quantization_residual(train, cfg):
    """
    Quantization error of the neuron

    :return: (train - lif(train), its Alexiewicz norm)
    """
    residual = train - lif(train, cfg)
    return residual, alexiewicz_norm(residual, cfg.alpha)
