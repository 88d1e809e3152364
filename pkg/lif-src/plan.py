#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
#    Project: lif_quant, spike train quantization with leaky integrate-and-fire neurons
#
#    Distributed under the MIT license, see the LICENSE file.

"""
Contains a class for creating a plan, allocating arrays and compiling the
kernels evaluating many equidistant-grid spike trains at once on an OpenCL
device.

How to get the quantization errors of 1000 random trains of 50 spikes::

    plan = NormPlan(50, 1000, devicetype="GPU")
    alex, l2 = plan.quantization_error(amplitudes, LifConfig(1.0, 0.1, "mod"))

amplitudes is a (1000, 50) array, row k holding the amplitudes of train k
at times spacing, 2 spacing, ...
"""

from __future__ import division, print_function, with_statement

__authors__ = ["lif_quant developers"]
__license__ = "MIT"
__date__ = "17/10/2026"
__status__ = "beta"

import time
import logging
import threading
import numpy
from .param import ResetMode, ConfigurationError
from .norms import Leak, decay_factor
from .opencl import ocl, pyopencl, allocate_cl_buffers, release_cl_buffers
from .utils import get_opencl_code, calc_size

logger = logging.getLogger("lif_quant.plan")

RESET_CODES = {ResetMode.TO_ZERO: 0,
               ResetMode.BY_SUBTRACTION: 1,
               ResetMode.TO_MOD: 2}


class NormPlan(object):
    """
    Batch evaluation of Alexiewicz norms and LIF quantization errors.
    """
    kernels = {"alexiewicz": 256}  # key: program name, value: max local workgroup size

    def __init__(self, n_spikes, n_trains, devicetype="all", device=None, context=None,
                 profile=False, max_workgroup_size=None):
        """
        Constructor of the class

        :param n_spikes: number of grid points of every train
        :param n_trains: number of trains processed per call
        :param devicetype: can be 'CPU', 'GPU' or 'ALL'
        :param device: 2-tuple of integers (platform, device)
        :param context: provide an external context
        :param profile: collect timing info
        :param max_workgroup_size: set to 1 under macosX on CPU
        """
        if pyopencl is None or ocl is None:
            raise RuntimeError("No OpenCL device available, install pyopencl and a driver")
        self.n_spikes = int(n_spikes)
        self.n_trains = int(n_trains)
        if self.n_spikes < 1 or self.n_trains < 1:
            raise ConfigurationError("A plan needs at least one train of one spike")
        self.profile = bool(profile)
        self.events = []
        self.buffers = {}
        self.programs = {}
        self._sem = threading.Semaphore()
        if context:
            self.ctx = context
            device_name = self.ctx.devices[0].name.strip()
            platform_name = self.ctx.devices[0].platform.name.strip()
            self.device = next((p.id, d.id) for p in ocl.platforms if p.name == platform_name
                               for d in p.devices if d.name == device_name)
        else:
            self.device = device or ocl.select_device(devicetype, memory=self._calc_memory())
            if self.device is None:
                raise RuntimeError("No OpenCL device of type %s with double precision" % devicetype)
            self.ctx = ocl.create_context(platformid=self.device[0], deviceid=self.device[1])
        self.ocl_device = ocl.device(self.device)
        if not self.ocl_device.has_fp64:
            raise RuntimeError("Device %s does not support double precision" % self.ocl_device.name)
        if profile:
            self.queue = pyopencl.CommandQueue(self.ctx, properties=pyopencl.command_queue_properties.PROFILING_ENABLE)
        else:
            self.queue = pyopencl.CommandQueue(self.ctx)
        self.wg = min(max_workgroup_size or self.kernels["alexiewicz"], self.ocl_device.max_work_group_size)
        self._compile_kernels()
        self._allocate_buffers()

    def __del__(self):
        self._free_buffers()
        self.queue = None
        self.ctx = None

    def __repr__(self):
        return "NormPlan(%s trains of %s spikes on %s)" % (self.n_trains, self.n_spikes, self.ocl_device)

    def _calc_memory(self):
        return 8 * self.n_trains * (self.n_spikes + 2)

    def _allocate_buffers(self):
        mf = pyopencl.mem_flags
        buffers = [("amplitudes", mf.READ_ONLY, numpy.float64, self.n_trains * self.n_spikes),
                   ("alex", mf.WRITE_ONLY, numpy.float64, self.n_trains),
                   ("l2", mf.WRITE_ONLY, numpy.float64, self.n_trains)]
        self.buffers = allocate_cl_buffers(buffers, self.ocl_device, self.ctx)

    def _free_buffers(self):
        if getattr(self, "buffers", None):
            release_cl_buffers(self.buffers)

    def _compile_kernels(self):
        """Call the OpenCL compiler"""
        for kernel in self.kernels:
            try:
                self.programs[kernel] = pyopencl.Program(self.ctx, get_opencl_code(kernel)).build()
            except pyopencl.MemoryError as error:
                raise MemoryError(error)
            except pyopencl.RuntimeError as error:
                logger.error("Failed compiling kernel '%s': %s", kernel, error)
                raise

    def _upload(self, amplitudes):
        amplitudes = numpy.ascontiguousarray(amplitudes, dtype=numpy.float64)
        if amplitudes.shape != (self.n_trains, self.n_spikes):
            raise ConfigurationError("Expected amplitudes of shape %s, got %s" %
                                     ((self.n_trains, self.n_spikes), amplitudes.shape))
        evt = pyopencl.enqueue_copy(self.queue, self.buffers["amplitudes"], amplitudes)
        if self.profile:
            self.events.append(("copy H->D", evt))

    def _download(self, name):
        out = numpy.empty(self.n_trains, dtype=numpy.float64)
        evt = pyopencl.enqueue_copy(self.queue, out, self.buffers[name])
        evt.wait()
        if self.profile:
            self.events.append(("copy D->H %s" % name, evt))
        return out

    def alexiewicz(self, amplitudes, alpha, spacing=1.0):
        """
        Leaky Alexiewicz norm of every row

        :param amplitudes: (n_trains, n_spikes) array
        :param alpha: Leak
        :param spacing: grid spacing
        :return: numpy array of n_trains norms
        """
        decay = numpy.float64(decay_factor(Leak.coerce(alpha), spacing))
        with self._sem:
            self._upload(amplitudes)
            evt = self.programs["alexiewicz"].alexiewicz_norm(
                self.queue, calc_size((self.n_trains,), (self.wg,)), (self.wg,),
                self.buffers["amplitudes"], decay, numpy.int32(self.n_spikes),
                numpy.int32(self.n_trains), self.buffers["alex"])
            if self.profile:
                self.events.append(("alexiewicz_norm", evt))
            return self._download("alex")

    def quantization_error(self, amplitudes, neuron, spacing=1.0):
        """
        Quantization residual norms of every row

        :param amplitudes: (n_trains, n_spikes) array
        :param neuron: LifConfig
        :param spacing: grid spacing
        :return: (Alexiewicz norms, L2 norms), the latter None for an infinite leak
        """
        decay = numpy.float64(decay_factor(neuron.alpha, spacing))
        t0 = time.time()
        with self._sem:
            self._upload(amplitudes)
            evt = self.programs["alexiewicz"].quantization_error(
                self.queue, calc_size((self.n_trains,), (self.wg,)), (self.wg,),
                self.buffers["amplitudes"], decay, numpy.float64(neuron.theta),
                numpy.int32(RESET_CODES[neuron.reset]), numpy.int32(self.n_spikes),
                numpy.int32(self.n_trains), self.buffers["alex"], self.buffers["l2"])
            if self.profile:
                self.events.append(("quantization_error", evt))
            alex = self._download("alex")
            l2 = None if neuron.alpha.is_infinite else self._download("l2")
        logger.debug("quantization errors of %s trains in %.3fms", self.n_trains, 1000.0 * (time.time() - t0))
        return alex, l2

    def log_profile(self):
        """
        If we are in profiling mode, prints out all timing for every single OpenCL call
        """
        t = 0.0
        if self.profile:
            for name, evt in self.events:
                et = 1e-6 * (evt.profile.end - evt.profile.start)
                logger.info("%50s:\t%.3fms", name, et)
                t += et
            logger.info("%50s:\t%.3fms", "Total execution time", t)

    def reset_timer(self):
        """Resets the profiling timers"""
        with self._sem:
            self.events = []
