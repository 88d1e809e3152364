#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
#    Project: lif_quant, spike train quantization with leaky integrate-and-fire neurons
#
#    Distributed under the MIT license, see the LICENSE file.

"""
Leaky integrate-and-fire neurons as quantizers of spike trains: norms,
quantization, decomposition, network perturbation bounds and the seeded
experiments checking them.
"""

version = "0.1.0"
from .param import par, ResetMode, BetaMode, GammaPolicy, ConfigurationError, UnsupportedError
from .norms import Leak, alexiewicz_norm, discrepancy_norm, l2_norm
from .spike import SpikeTrain, PiecewiseConstantSignal, make_train, signal_to_spikes
from .lif import LifConfig, DiscreteLifConfig, lif, lif_discrete, to_grid
from .decompose import quantize_split, unit_decompose
from .snn import SnnNetwork, snn_forward, snn_error_bound, gamma_for
