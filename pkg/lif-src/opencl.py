#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
#    Project: lif_quant, spike train quantization with leaky integrate-and-fire neurons
#
#    Distributed under the MIT license, see the LICENSE file.

"""
Discovery and selection of the OpenCL devices able to run the double
precision batch kernels.

pyopencl is optional: without it (or without any device) ``ocl`` is None and
the pure numpy code paths are used.
"""

from __future__ import division, print_function, with_statement

__authors__ = ["lif_quant developers"]
__license__ = "MIT"
__date__ = "17/10/2026"
__status__ = "beta"

import os
import logging
import numpy

logger = logging.getLogger("lif_quant.opencl")

try:
    import pyopencl
    import pyopencl.array
except ImportError:
    logger.warning("Unable to import pyopencl, batch evaluation on OpenCL devices is disabled")
    pyopencl = None

FP64 = "cl_khr_fp64"


class Device(object):
    """
    Description of an OpenCL device

    :param name: name of the device
    :param dtype: CPU, GPU or ACC
    :param version: OpenCL version string
    :param extensions: space separated extension list
    :param memory: global memory in bytes
    :param cores: number of compute units
    :param idx: index of the device within its platform
    :param workgroup: maximum workgroup size
    """
    def __init__(self, name="None", dtype=None, version=None, extensions="", memory=None,
                 cores=None, idx=0, workgroup=1):
        self.name = name.strip()
        self.type = dtype
        self.version = version
        self.extensions = extensions.split()
        self.memory = memory
        self.cores = cores
        self.id = idx
        self.max_work_group_size = workgroup

    @property
    def has_fp64(self):
        return FP64 in self.extensions

    def __repr__(self):
        return "%s" % self.name

    def pretty_print(self):
        lst = ["Name\t\t:\t%s" % self.name,
               "Type\t\t:\t%s" % self.type,
               "Memory\t\t:\t%.3f MB" % (self.memory / 2.0 ** 20),
               "Cores\t\t:\t%s CU" % self.cores,
               "Version\t\t:\t%s" % self.version,
               "Double\t\t:\t%s" % self.has_fp64]
        return os.linesep.join(lst)


class Platform(object):
    """OpenCL platform and its devices"""
    def __init__(self, name="None", vendor="None", idx=0):
        self.name = name.strip()
        self.vendor = vendor.strip()
        self.devices = []
        self.id = idx

    def __repr__(self):
        return "%s" % self.name


def _device_type(device):
    try:
        devtype = pyopencl.device_type.to_string(device.type).upper()
    except ValueError:
        # pocl does not always describe itself as a CPU
        devtype = "CPU"
    return devtype[:3]


class OpenCL(object):
    """
    Inventory of the platforms and devices seen by pyopencl.

    ocl is the only instance, shared by all modules.
    """
    def __init__(self):
        self.platforms = []
        self.nb_devices = 0
        for idx, platform in enumerate(pyopencl.get_platforms()):
            pypl = Platform(platform.name, platform.vendor, idx)
            for idd, device in enumerate(platform.get_devices()):
                workgroup = device.max_work_group_size
                devtype = _device_type(device)
                if devtype == "CPU" and pypl.vendor == "Apple":
                    logger.info("Apple OpenCL on CPU: enforce max_work_group_size=1")
                    workgroup = 1
                pypl.devices.append(Device(device.name, devtype, device.version, device.extensions,
                                           device.global_mem_size, device.max_compute_units, idd, workgroup))
                self.nb_devices += 1
            self.platforms.append(pypl)

    def __repr__(self):
        out = ["OpenCL devices:"]
        for pid, platform in enumerate(self.platforms):
            out.append("[%s] %s: " % (pid, platform.name) +
                       ", ".join("(%s,%s) %s" % (pid, did, dev.name) for did, dev in enumerate(platform.devices)))
        return os.linesep.join(out)

    def select_device(self, dtype="ALL", memory=None, extensions=(FP64,)):
        """
        Device with the largest memory among those of the requested type
        providing the extensions

        :param dtype: "gpu", "cpu", "acc" or "all"
        :param memory: minimum amount of memory in bytes
        :param extensions: extensions the device must have
        :return: (platform id, device id) or None
        """
        dtype = (dtype or "ALL").upper()[:3]
        best = None
        for pid, platform in enumerate(self.platforms):
            for did, device in enumerate(platform.devices):
                if dtype not in ("ALL", "DEF") and device.type != dtype:
                    continue
                if memory is not None and device.memory < memory:
                    continue
                if any(ext not in device.extensions for ext in extensions):
                    continue
                if best is None or best[2] < device.memory:
                    best = pid, did, device.memory
        if best:
            return best[0], best[1]

    def device(self, ids):
        return self.platforms[ids[0]].devices[ids[1]]

    def create_context(self, devicetype="ALL", platformid=None, deviceid=None):
        """
        Context on a double precision device

        :param devicetype: "gpu", "cpu", "acc" or "all"
        :param platformid: force the platform
        :param deviceid: force the device
        :raise RuntimeError: when no suitable device exists
        """
        if platformid is not None and deviceid is not None:
            ids = int(platformid), int(deviceid)
        else:
            ids = self.select_device(devicetype)
        if ids is None:
            raise RuntimeError("No OpenCL device of type %s with %s support" % (devicetype, FP64))
        device = pyopencl.get_platforms()[ids[0]].get_devices()[ids[1]]
        logger.info("OpenCL context on %s", device.name.strip())
        return pyopencl.Context(devices=[device])


def release_cl_buffers(cl_buffers):
    """Release every buffer of a name -> pyopencl.Buffer dict"""
    for key in cl_buffers:
        if cl_buffers[key] is not None:
            try:
                cl_buffers[key].release()
            except pyopencl.LogicError:
                logger.error("Error while freeing buffer %s", key)
            cl_buffers[key] = None
    return cl_buffers


def allocate_cl_buffers(buffers, device, context):
    """
    :param buffers: list of (name, flag, numpy dtype, number of items)
    :param device: Device, used to check the available memory
    :param context: pyopencl context
    :return: dict name -> pyopencl.Buffer
    """
    needed = sum(numpy.dtype(dtype).itemsize * size for _, _, dtype, size in buffers)
    logger.info("%.3fMB are needed on device which has %.3fMB", needed / 1.0e6, device.memory / 1.0e6)
    if needed >= device.memory:
        raise MemoryError("Not enough device memory for buffers (%s requested, %s available)" %
                          (needed, device.memory))
    mem = {}
    try:
        for name, flag, dtype, size in buffers:
            mem[name] = pyopencl.Buffer(context, flag, numpy.dtype(dtype).itemsize * max(size, 1))
    except pyopencl.MemoryError as error:
        release_cl_buffers(mem)
        raise MemoryError(error)
    return mem


if pyopencl:
    try:
        ocl = OpenCL()
    except pyopencl.Error as error:
        logger.warning("OpenCL platforms could not be listed: %s", error)
        ocl = None
    if ocl is not None and ocl.nb_devices == 0:
        ocl = None
else:
    ocl = None
