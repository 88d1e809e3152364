#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
#    Project: lif_quant, spike train quantization with leaky integrate-and-fire neurons
#
#    Distributed under the MIT license, see the LICENSE file.

"""
Common helpers of the test suites: loads lif_quant from the source tree and
sets the verbosity of the test loggers.
"""

from __future__ import division

__authors__ = ["lif_quant developers"]
__license__ = "MIT"
__date__ = "17/10/2026"

import os
import sys
import logging
import argparse
import importlib.util

logging.basicConfig(level=logging.WARNING)
logger = logging.getLogger("utilstest")

parser = argparse.ArgumentParser(description="Tests for lif_quant")
parser.add_argument("-D", "--device", dest="device", default=None,
                    help="OpenCL device type for the OpenCL tests, like CPU or GPU")
parser.add_argument("-d", "--debug", dest="debug", default=False, action="store_true",
                    help="run in debugging mode")
parser.add_argument("-i", "--info", dest="info", default=False, action="store_true",
                    help="run in more verbose mode")
# unknown options belong to the test runner (unittest, pytest...)
options, _ = parser.parse_known_args()


class UtilsTest(object):
    """
    Static class providing useful stuff for preparing tests.
    """
    test_home = os.path.dirname(os.path.abspath(__file__))
    name = "lif_quant"
    source_home = os.path.join(os.path.dirname(test_home), "lif-src")

    @classmethod
    def load(cls):
        """Import the package from the source tree, once"""
        if cls.name in sys.modules and getattr(sys.modules[cls.name], "__file__", "").startswith(cls.source_home):
            return sys.modules[cls.name]
        for key in list(sys.modules):
            if key == cls.name or key.startswith(cls.name + "."):
                sys.modules.pop(key)
        spec = importlib.util.spec_from_file_location(cls.name, os.path.join(cls.source_home, "__init__.py"),
                                                      submodule_search_locations=[cls.source_home])
        module = importlib.util.module_from_spec(spec)
        sys.modules[cls.name] = module
        spec.loader.exec_module(module)
        logger.info("%s loaded from %s", cls.name, module.__file__)
        return module


def getLogger(filename=__file__):
    """
    small helper function that initialized the logger and returns it
    """
    basename = os.path.splitext(os.path.basename(os.path.abspath(filename)))[0]
    level = logging.WARN
    if options.debug:
        level = logging.DEBUG
    elif options.info:
        level = logging.INFO
    mylogger = logging.getLogger(basename)
    mylogger.setLevel(level)
    logging.getLogger("lif_quant").setLevel(level)
    mylogger.debug("tests loaded from file: %s", basename)
    UtilsTest.load()
    return mylogger
