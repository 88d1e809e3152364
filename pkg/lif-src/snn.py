#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
#    Project: lif_quant, spike train quantization with leaky integrate-and-fire neurons
#
#    Distributed under the MIT license, see the LICENSE file.

"""
Feed-forward spiking neural network of identical LIF neurons and the bound
on the propagation of input perturbations through it.
"""

from __future__ import division, print_function, with_statement

__authors__ = ["lif_quant developers"]
__license__ = "MIT"
__date__ = "17/10/2026"
__status__ = "beta"

import math
import logging
import numpy
from .param import par, GammaPolicy, ConfigurationError
from .norms import Leak
from .spike import make_train, merge, scale
from .lif import LifConfig, lif

logger = logging.getLogger("lif_quant.snn")


class SnnNetwork(object):
    """
    Layers of weights W_1 .. W_L and the neuron shared by every unit.

    :param layers: list of 2D arrays, W_k of shape (n_k, n_(k-1))
    :param neuron: LifConfig
    """
    def __init__(self, layers, neuron):
        if not layers:
            raise ConfigurationError("A network needs at least one layer")
        self.layers = []
        for k, w in enumerate(layers):
            w = numpy.array(w, dtype=numpy.float64)
            if w.ndim != 2 or 0 in w.shape:
                raise ConfigurationError("Layer %s must be a non-empty matrix, got shape %s" % (k, w.shape))
            if not numpy.all(numpy.isfinite(w)):
                raise ConfigurationError("Layer %s has non-finite weights" % k)
            if self.layers and w.shape[1] != self.layers[-1].shape[0]:
                raise ConfigurationError("Layer %s expects %s inputs but the previous layer has %s outputs" %
                                         (k, w.shape[1], self.layers[-1].shape[0]))
            w.flags.writeable = False
            self.layers.append(w)
        self.neuron = neuron

    @property
    def n_inputs(self):
        return self.layers[0].shape[1]

    @property
    def n_outputs(self):
        return self.layers[-1].shape[0]

    @property
    def shape(self):
        return (self.n_inputs,) + tuple(w.shape[0] for w in self.layers)

    def with_leak(self, alpha):
        return SnnNetwork(self.layers, self.neuron.replace(alpha=alpha))

    def __repr__(self):
        return "SnnNetwork(%s, %r)" % ("-".join(str(i) for i in self.shape), self.neuron)


def snn_forward(inputs, net):
    """
    Propagate input trains through the network.  The weighted presynaptic
    trains of a neuron are superposed (in presynaptic order) before a single
    LIF pass.

    :param inputs: list of SpikeTrain, one per input channel
    :param net: SnnNetwork
    :return: list of output SpikeTrain
    """
    if len(inputs) != net.n_inputs:
        raise ConfigurationError("Network expects %s input trains, got %s" % (net.n_inputs, len(inputs)))
    trains = list(inputs)
    for depth, w in enumerate(net.layers):
        trains = [lif(merge([scale(trains[i], w[j, i]) for i in range(w.shape[1]) if w[j, i] != 0.0]),
                      net.neuron)
                  for j in range(w.shape[0])]
        logger.debug("layer %s: %s spikes emitted", depth + 1, sum(len(t) for t in trains))
    return trains


def gamma_for(alpha, policy=GammaPolicy.SAFE):
    """
    Lipschitz constant of the neuron used by the bound: 1 for alpha in
    {0, infinity}, otherwise 3 (safe) or 2 (conjectured).
    """
    alpha = Leak.coerce(alpha)
    GammaPolicy.check(policy, "gamma policy")
    if alpha.is_zero or alpha.is_infinite:
        return 1.0
    if policy == GammaPolicy.CONJECTURED:
        return par.GammaConjectured
    return par.GammaSafe


def snn_error_bound(nu_norms, net, gamma, theta=None):
    """
    Upper bound of the output perturbation norms given the norms of the
    input perturbations.

    With theta = 1: x_0 = ceil(gamma nu), x_k = ceil(gamma |W_k| x_(k-1)).
    Other thresholds are handled by rescaling every train by 1 / theta.

    :param nu_norms: Alexiewicz norms of the input perturbations
    :param net: SnnNetwork
    :param gamma: Lipschitz constant, at least 1
    :param theta: threshold, default the one of the network neuron
    :return: numpy array, one bound per output channel
    """
    gamma = float(gamma)
    if not gamma >= 1.0:
        raise ConfigurationError("gamma must be at least 1, got %r" % gamma)
    if theta is None:
        theta = net.neuron.theta
    nu = numpy.array(nu_norms, dtype=numpy.float64).reshape(-1)
    if nu.size != net.n_inputs:
        raise ConfigurationError("Expected %s input norms, got %s" % (net.n_inputs, nu.size))
    if numpy.any(nu < 0) or not numpy.all(numpy.isfinite(nu)):
        raise ConfigurationError("Input norms must be finite and non-negative")
    x = numpy.ceil(gamma * (nu / theta))
    for w in net.layers:
        x = numpy.ceil(gamma * numpy.abs(w).dot(x))
    return theta * x


def example_network(alpha=0.0, theta=1.0, reset="mod"):
    """The 2-3-1 network with weights [[1, 1], [1, 2]], [[.5, 0], [.5, .5], [0, -.5]], [[1, 1, 1]]"""
    return SnnNetwork([[[1.0, 1.0], [1.0, 2.0]],
                       [[0.5, 0.0], [0.5, 0.5], [0.0, -0.5]],
                       [[1.0, 1.0, 1.0]]],
                      LifConfig(theta, alpha, reset))


def example_inputs():
    """Two short input trains driving every layer of the example network"""
    return [make_train([(0.0, 1.0)]), make_train([(1.0, 0.5)])]


def example_perturbations():
    """Single-spike perturbations of the first input channel, labelled red and green"""
    return {"red": [make_train([(0.5, 1.0)]), make_train()],
            "green": [make_train([(0.75, 0.5)]), make_train()]}
