#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
#    Project: lif_quant, spike train quantization with leaky integrate-and-fire neurons
#
#    Distributed under the MIT license, see the LICENSE file.

"""
Test suite for the command line interface and the file formats
"""

from __future__ import division

__authors__ = ["lif_quant developers"]
__license__ = "MIT"
__date__ = "17/10/2026"

import os
import io
import sys
import json
import math
import shutil
import tempfile
import unittest
import contextlib
from unittest import mock
from utilstest import UtilsTest, getLogger
logger = getLogger(__file__)
import lif_quant
from lif_quant import fileio, harness
from lif_quant.param import ResetMode
from lif_quant.norms import Leak
from lif_quant.harness import TrialRecord, ExperimentReport
from lif_quant.cli import run
from lif_quant.spike import make_train
from lif_quant.snn import example_network, example_inputs


class test_cli(unittest.TestCase):
    def setUp(self):
        self.tmpdir = tempfile.mkdtemp(prefix="lif_quant_")

    def tearDown(self):
        shutil.rmtree(self.tmpdir)
        self.tmpdir = None

    def write(self, name, obj):
        path = os.path.join(self.tmpdir, name)
        if isinstance(obj, str):
            with io.open(path, "w", encoding="utf-8") as f:
                f.write(obj)
        else:
            fileio.write_json(obj, path)
        return path

    def call(self, *argv):
        out = io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
            code = run(list(argv))
        return code, out.getvalue()

    def test_norm(self):
        path = self.write("train.json", {"events": [[0.0, 1.0], [1.0, 1.0]]})
        code, out = self.call("norm", "--alpha", "0", path)
        self.assertEqual(code, 0)
        self.assertEqual(float(out), 2.0)
        code, out = self.call("norm", "--kind", "l2", path)
        self.assertEqual(code, 0)
        self.assertAlmostEqual(float(out), math.sqrt(5), places=14)
        self.assertEqual(self.call("norm", "--kind", "l2", "--alpha", "inf", path)[0], 2)

    def test_lif(self):
        path = self.write("eta.json", {"events": [[0.0, -1.5], [0.0001, 1.0], [0.0002, 1.5]]})
        result = os.path.join(self.tmpdir, "out.json")
        code, _ = self.call("lif", "--theta", "1", "--alpha", "0", "--reset", "mod", "-o", result, path)
        self.assertEqual(code, 0)
        with io.open(result, encoding="utf-8") as f:
            first = f.read()
        self.assertEqual(json.loads(first), {"events": [[0.0, -1.0], [0.0002, 2.0]]})
        self.call("lif", "--theta", "1", "--alpha", "0", "--reset", "mod", "-o", result, path)
        with io.open(result, encoding="utf-8") as f:
            self.assertEqual(f.read(), first)
        code, out = self.call("lif", "--alpha", "inf", path)
        self.assertEqual(json.loads(out)["events"], [[0.0, -1.0], [0.0001, 1.0], [0.0002, 1.0]])

    def test_lif_discrete(self):
        path = self.write("grid.json", {"events": [[0.26, 1.0], [0.5, 2.5]]})
        code, out = self.call("lif", "--discrete", "--dt", "0.25", path)
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["events"], [[0.25, 1.0], [0.5, 2.0]])
        self.assertEqual(self.call("lif", "--discrete", path)[0], 2)
        clash = self.write("clash.json", {"events": [[0.1, 1.0], [0.15, 1.0]]})
        self.assertEqual(self.call("lif", "--discrete", "--dt", "0.25", clash)[0], 2)
        self.assertEqual(self.call("lif", "--discrete", "--dt", "0.25", "--beta", "paper", path)[0], 2)

    def test_snn_and_bound(self):
        net = self.write("net.json", fileio.network_to_dict(example_network()))
        inputs = self.write("inputs.json", fileio.trains_to_json(example_inputs()))
        code, out = self.call("snn", "--net", net, inputs)
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out), {"trains": [{"events": [[0.0, 1.0], [1.0, -1.0]]}]})
        code, out = self.call("bound", "--net", net, "--gamma", "safe", "--nu-norms", "1,0")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out), [3.0])
        self.assertEqual(self.call("bound", "--net", net, "--nu-norms", "1")[0], 2)
        self.assertEqual(self.call("bound", "--net", net, "--nu-norms", "a,b")[0], 2)
        bad = self.write("bad_net.json", {"layers": [[[1.0, 1.0]], [[1.0, 1.0]]]})
        self.assertEqual(self.call("snn", "--net", bad, inputs)[0], 2)

    def test_decompose(self):
        path = self.write("psi.json", {"events": [[0.0, 2.0], [1.0, -2.0]]})
        code, out = self.call("decompose", "--theta", "1", path)
        self.assertEqual(code, 0)
        result = json.loads(out)
        self.assertEqual(result["psi"], {"events": [[0.0, 2.0], [1.0, -2.0]]})
        self.assertEqual(result["rho"], {"events": []})
        self.assertEqual(result["units"], [{"events": [[0.0, 1.0]]}, {"events": [[0.0, 1.0], [1.0, -2.0]]}])

    def test_experiment(self):
        out_dir = os.path.join(self.tmpdir, "run")
        argv = ["experiment", "decomposition", "--seed", "1", "--trials", "3", "--spikes", "10", "--out", out_dir]
        self.assertEqual(self.call(*argv)[0], 0)
        with io.open(os.path.join(out_dir, "decomposition.csv"), encoding="utf-8") as f:
            csv_first = f.read()
        with io.open(os.path.join(out_dir, "decomposition.json"), encoding="utf-8") as f:
            json_first = f.read()
        self.assertTrue(csv_first.startswith("experiment,trial,reset,alpha,theta,label,measured,bound,pass\n"))
        self.assertTrue(json.loads(json_first)["passed"])
        self.assertEqual(self.call(*argv)[0], 0)
        with io.open(os.path.join(out_dir, "decomposition.csv"), encoding="utf-8") as f:
            self.assertEqual(f.read(), csv_first)
        with io.open(os.path.join(out_dir, "decomposition.json"), encoding="utf-8") as f:
            self.assertEqual(f.read(), json_first)

    def test_errors(self):
        broken = self.write("broken.json", "{\"events\": [[0, 1]")
        self.assertEqual(self.call("norm", broken)[0], 2)
        nan = self.write("nan.json", "{\"events\": [[0, NaN]]}")
        self.assertEqual(self.call("norm", nan)[0], 2)
        self.assertEqual(self.call("norm", os.path.join(self.tmpdir, "missing.json"))[0], 2)
        self.assertEqual(self.call("norm", "--alpha", "abc", broken)[0], 2)
        self.assertEqual(self.call("frobnicate")[0], 2)
        self.assertEqual(self.call()[0], 2)
        code, out = self.call("-V")
        self.assertEqual(code, 0)
        self.assertIn(lif_quant.version, out)

    def test_unwritable_output(self):
        path = self.write("eta.json", {"events": [[0.0, 2.5]]})
        target = os.path.join(self.tmpdir, "no_such_dir", "out.json")
        self.assertEqual(self.call("lif", "-o", target, path)[0], 2)
        self.assertFalse(os.path.exists(target))
        blocker = self.write("blocker", "")
        argv = ["experiment", "decomposition", "--trials", "1", "--out", os.path.join(blocker, "run")]
        self.assertEqual(self.call(*argv)[0], 2)

    def test_failed_report(self):
        def failing(cfg):
            record = TrialRecord("quantization", 0, ResetMode.TO_MOD, Leak.ZERO, cfg.theta, "error", 1.5, 1.0, False)
            return ExperimentReport("quantization", cfg, [record])

        out_dir = os.path.join(self.tmpdir, "failed")
        with mock.patch.dict(harness.EXPERIMENTS, {"quantization": failing}):
            code, _ = self.call("experiment", "quantization", "--trials", "1", "--out", out_dir)
        self.assertEqual(code, 1)
        with io.open(os.path.join(out_dir, "quantization.json"), encoding="utf-8") as f:
            self.assertFalse(json.load(f)["passed"])


class test_fileio(unittest.TestCase):
    def test_dumps(self):
        self.assertEqual(json.loads(fileio.dumps({"x": float("nan"), "y": [float("inf"), 0.1]})),
                         {"x": "nan", "y": ["inf", 0.1]})

    def test_network(self):
        net = example_network(alpha="inf", theta=0.5, reset="sub")
        again = fileio.network_from_dict(json.loads(fileio.dumps(fileio.network_to_dict(net))))
        self.assertEqual(again.neuron, net.neuron)
        self.assertEqual([w.tolist() for w in again.layers], [w.tolist() for w in net.layers])
        self.assertRaises(fileio.ParseError, fileio.network_from_dict, {"theta": 1.0})

    def test_trains(self):
        self.assertEqual(fileio.train_from_json({"events": [[1.0, 2.0], [0.0, -1.0]]}).events,
                         [(0.0, -1.0), (1.0, 2.0)])
        self.assertRaises(fileio.ParseError, fileio.train_from_json, {"events": [[0.0]]})
        self.assertRaises(fileio.ParseError, fileio.train_from_json, [1, 2])
        self.assertEqual(fileio.trains_to_json([make_train([(0.5, 1.0)])]), {"trains": [{"events": [[0.5, 1.0]]}]})


def suite():
    testSuite = unittest.TestSuite()
    for name in ("test_norm", "test_lif", "test_lif_discrete", "test_snn_and_bound", "test_decompose",
                 "test_experiment", "test_errors", "test_unwritable_output", "test_failed_report"):
        testSuite.addTest(test_cli(name))
    for name in ("test_dumps", "test_network", "test_trains"):
        testSuite.addTest(test_fileio(name))
    return testSuite


if __name__ == '__main__':
    runner = unittest.TextTestRunner()
    if not runner.run(suite()).wasSuccessful():
        sys.exit(1)
