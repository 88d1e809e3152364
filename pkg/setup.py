#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
#    Project: lif_quant, spike train quantization with leaky integrate-and-fire neurons
#
#    Distributed under the MIT license, see the LICENSE file.

"""
Installer script for lif_quant
"""

from __future__ import division, with_statement, print_function

__authors__ = ["lif_quant developers"]
__license__ = "MIT"
__date__ = "17/10/2026"
__status__ = "beta"

import os
import sys
import glob
import subprocess
from setuptools import setup, Command

cmdclass = {}

pkg_name = "lif_quant"  # relative to site-packages ...
script_files = glob.glob("scripts/*")

version = [l.split("=")[1].strip().strip('"') for l in open(os.path.join(os.path.dirname(
    os.path.abspath(__file__)), "lif-src", "__init__.py"))
    if l.strip().startswith("version")][0]


class PyTest(Command):
    user_options = []

    def initialize_options(self):
        pass

    def finalize_options(self):
        pass

    def run(self):
        errno = subprocess.call([sys.executable, "test_all.py"], cwd="test")
        if errno != 0:
            print("Tests did not pass !!!")
            raise SystemExit(errno)
        else:
            print("All Tests passed")
cmdclass['test'] = PyTest

#######################
# build_doc commandes #
#######################

try:
    import sphinx
    import sphinx.util.console
    sphinx.util.console.color_terminal = lambda: False
    from sphinx.setup_command import BuildDoc
except ImportError:
    sphinx = None

if sphinx:
    class build_doc(BuildDoc):

        def run(self):

            # make sure the python path is pointing to the newly built
            # code so that the documentation is built on this and not a
            # previously installed version

            build = self.get_finalized_command('build')
            sys.path.insert(0, os.path.abspath(build.build_lib))

            for builder in ('html', 'latex'):
                self.builder = builder
                self.builder_target_dir = os.path.join(self.build_dir, builder)
                self.mkpath(self.builder_target_dir)
                BuildDoc.run(self)
            sys.path.pop(0)
    cmdclass['build_doc'] = build_doc

classifiers = """\
Development Status :: 4 - Beta
Intended Audience :: Science/Research
Programming Language :: Python :: 3
Topic :: Scientific/Engineering :: Mathematics
Topic :: Scientific/Engineering :: Artificial Intelligence
Operating System :: OS Independent
License :: OSI Approved :: MIT License
"""


setup(name=pkg_name,
      version=version,
      author="lif_quant developers",
      description='Leaky integrate-and-fire neurons as quantizers of spike trains',
      long_description=open("README.md").read(),
      long_description_content_type="text/markdown",
      scripts=script_files,
      packages=[pkg_name],
      package_dir={pkg_name: "lif-src"},
      package_data={pkg_name: ["openCL/*.cl"]},
      python_requires=">=3.7",
      install_requires=["numpy>=1.17", "scipy>=1.4"],
      extras_require={"opencl": ["pyopencl"],
                      "plot": ["matplotlib>=3.4"],
                      "test": ["hypothesis"],
                      "doc": ["sphinx"]},
      entry_points={"console_scripts": ["lif-quant = lif_quant.cli:main"]},
      cmdclass=cmdclass,
      classifiers=[c for c in classifiers.split("\n") if c],
      license="MIT"
      )
