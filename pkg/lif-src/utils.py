#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
#    Project: lif_quant, spike train quantization with leaky integrate-and-fire neurons
#
#    Distributed under the MIT license, see the LICENSE file.

"""
Helpers for the OpenCL plan: kernel sources and work sizes
"""

from __future__ import division

__authors__ = ["lif_quant developers"]
__license__ = "MIT"
__date__ = "17/10/2026"
__status__ = "beta"

import os

OPENCL_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "openCL")


def get_opencl_code(name):
    """
    Read the source of a kernel shipped with the package

    :param name: kernel name, with or without the .cl extension
    :return: the source as a string
    """
    if not name.endswith(".cl"):
        name += ".cl"
    path = os.path.join(OPENCL_DIR, name)
    if not os.path.isfile(path):
        raise IOError("OpenCL kernel %s not found in %s" % (name, OPENCL_DIR))
    with open(path) as f:
        return f.read()


def calc_size(shape, blocksize):
    """
    Global work size: every dimension of shape rounded up to a multiple of
    the workgroup size

    :param shape: tuple of sizes
    :param blocksize: tuple (or int) of workgroup sizes
    """
    if "__len__" not in dir(blocksize):
        blocksize = (blocksize,) * len(shape)
    return tuple(int(-(-s // b) * b) for s, b in zip(shape, blocksize))
