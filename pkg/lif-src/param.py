#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
#    Project: lif_quant, spike train quantization with leaky integrate-and-fire neurons
#
#    Distributed under the MIT license, see the LICENSE file.

"""
Contains the default parameters, the enumerations and the exceptions shared
by all modules of lif_quant
"""

from __future__ import division, print_function, with_statement

__authors__ = ["lif_quant developers"]
__license__ = "MIT"
__date__ = "17/10/2026"
__status__ = "beta"


class Enum(dict):
    """
    Simple class half way between a dict and a class, behaving as an enum
    """
    def __getattr__(self, name):
        if name in self:
            return self[name]
        raise AttributeError(name)

    def check(self, value, what="value"):
        """
        Validate that value is one of the members

        :param value: candidate member value
        :param what: name used in the error message
        :return: the value itself
        """
        if value not in self.values():
            raise ConfigurationError("Invalid %s %r, expected one of %s" %
                                     (what, value, ", ".join(sorted(self.values()))))
        return value


class ConfigurationError(ValueError):
    """Raised when a parameter or a combination of parameters is invalid"""
    pass


class UnsupportedError(ValueError):
    """Raised when an operation is undefined in the requested regime"""
    pass


ResetMode = Enum(TO_ZERO="zero",
                 BY_SUBTRACTION="sub",
                 TO_MOD="mod")

BetaMode = Enum(EXACT_EXP="exact",
                PAPER_LINEAR="paper")

GammaPolicy = Enum(SAFE="safe",
                   CONJECTURED="conjectured")

NormKind = Enum(ALEXIEWICZ="alex",
                DISCREPANCY="disc",
                L2="l2")

par = Enum(Theta=1.0,
           AmplitudeLow=-2.0,
           AmplitudeHigh=2.0,
           NbSpikes=50,
           NbTrials=100,
           GridSpacing=1.0,
           Alphas=(0.01, 0.1, 1.0, 10.0, 100.0),
           SweepSpikes=(100, 200, 300, 400, 500),
           SweepAlpha=1.0,
           LagAlphas=(0.2, 0.5, 0.8),
           LagShifts=(0.0, 0.001, 0.005, 0.01, 0.05, 0.1),
           LagEpsilons=(0.0, 0.05, 0.1, 0.2, 0.5),
           IsometryAlpha=4.0,
           IsometryTheta=0.3,
           IsometryThetas=(0.05, 0.1, 0.2, 0.3, 0.5, 1.0),
           IsometryAlphas=(0.0, 0.5, 1.0, 2.0, 4.0, 8.0),
           Halvings=8,
           HistogramBins=30,
           SnapTolerance=1e-9,   # integer snapping of amplitudes / theta
           BoundSlack=1e-9,      # absolute slack on inequality checks
           GammaSafe=3.0,
           GammaConjectured=2.0,
           ExampleEpsilon=1e-4,
           SearchBudget=200)
