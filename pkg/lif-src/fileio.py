#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
#    Project: lif_quant, spike train quantization with leaky integrate-and-fire neurons
#
#    Distributed under the MIT license, see the LICENSE file.

"""
JSON codecs of trains and networks, CSV/JSON/SVG writers of experiment
reports.

Train files: ``{"events": [[t, a], ...]}``; several trains:
``{"trains": [{"events": ...}, ...]}``.  Network files:
``{"theta": 1.0, "alpha": 4.0 | "inf", "reset": "mod", "layers": [W_1, ...]}``.
Floats are written with their shortest round-trip representation.
"""

from __future__ import division, print_function, with_statement

__authors__ = ["lif_quant developers"]
__license__ = "MIT"
__date__ = "17/10/2026"
__status__ = "beta"

import os
import io
import csv
import json
import math
import logging
import numpy
from .param import ConfigurationError
from .spike import SpikeTrain, SpikeTrainError
from .lif import LifConfig
from .snn import SnnNetwork
from .harness import CSV_HEADER

logger = logging.getLogger("lif_quant.fileio")

try:
    import matplotlib
    matplotlib.use("Agg")
    from matplotlib import pyplot
except ImportError:
    logger.warning("Unable to import matplotlib, SVG rendering is disabled")
    pyplot = None


class ParseError(ValueError):
    """Malformed input file, the message names the path"""
    pass


class OutputError(ValueError):
    """Result file that cannot be written, the message names the path"""
    pass


def _load_json(path):
    try:
        with io.open(path, encoding="utf-8") as f:
            return json.load(f)
    except (IOError, OSError) as error:
        raise ParseError("%s: unable to read: %s" % (path, error))
    except ValueError as error:
        raise ParseError("%s: invalid JSON: %s" % (path, error))


def _sanitize(obj):
    """Replace non-finite floats by strings so that the output stays valid JSON"""
    if isinstance(obj, dict):
        return {k: _sanitize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sanitize(v) for v in obj]
    if isinstance(obj, (float, numpy.floating)):
        obj = float(obj)
        if math.isnan(obj):
            return "nan"
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
    elif isinstance(obj, numpy.integer):
        return int(obj)
    return obj


def dumps(obj):
    return json.dumps(_sanitize(obj), indent=1)


def write_text(text, path):
    try:
        with io.open(path, "w", encoding="utf-8") as f:
            f.write(text)
            f.write(u"\n")
    except (IOError, OSError) as error:
        raise OutputError("%s: unable to write: %s" % (path, error))


def write_json(obj, path):
    write_text(dumps(obj), path)


def train_from_json(obj, path="<input>"):
    try:
        return SpikeTrain.from_dict(obj)
    except (SpikeTrainError, ValueError, TypeError) as error:
        raise ParseError("%s: invalid spike train: %s" % (path, error))


def read_train(path):
    """Single spike train from a JSON file"""
    return train_from_json(_load_json(path), path)


def read_trains(path):
    """List of spike trains, from {"trains": [...]} or a bare list"""
    obj = _load_json(path)
    if isinstance(obj, dict):
        obj = obj.get("trains")
    if not isinstance(obj, list):
        raise ParseError("%s: expected a list of trains under 'trains'" % path)
    return [train_from_json(t, path) for t in obj]


def trains_to_json(trains):
    return {"trains": [t.to_dict() for t in trains]}


def network_to_dict(net):
    neuron = net.neuron
    return {"theta": neuron.theta, "alpha": neuron.alpha.token(), "reset": neuron.reset,
            "layers": [w.tolist() for w in net.layers]}


def network_from_dict(obj, path="<input>"):
    try:
        neuron = LifConfig(obj.get("theta", 1.0), obj.get("alpha", 0.0), obj.get("reset", "mod"))
        return SnnNetwork(obj["layers"], neuron)
    except (KeyError, AttributeError, TypeError) as error:
        raise ParseError("%s: invalid network description: %r" % (path, error))
    except ConfigurationError as error:
        raise ParseError("%s: %s" % (path, error))


def read_network(path):
    return network_from_dict(_load_json(path), path)


###############################################################################
# Experiment reports
###############################################################################

def write_report_csv(report, path):
    """One row per trial record, header first"""
    with io.open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for record in report.records:
            writer.writerow(record.row())


def write_report_json(report, path):
    write_json(report.summary(), path)


def render_svg(report, path):
    """
    Histograms of every record group, or the measured/bound maps of the
    (alpha, lambda) experiment

    :return: True when the figure was written
    """
    if pyplot is None:
        logger.warning("matplotlib missing, %s not written", path)
        return False
    if report.name == "alpha_lambda":
        fig = _alpha_lambda_figure(report)
    else:
        fig = _histogram_figure(report)
    fig.savefig(path, format="svg")
    pyplot.close(fig)
    return True


def _alpha_lambda_figure(report):
    cases = list(report.extra.items())
    fig, axes = pyplot.subplots(len(cases), 2, figsize=(8, 3 * len(cases)), squeeze=False)
    for row, (label, result) in enumerate(cases):
        for col, key in enumerate(("measured", "bound")):
            ax = axes[row, col]
            image = ax.imshow(numpy.array(result[key]), aspect="auto", origin="lower",
                              extent=(result["lambdas"][0], result["lambdas"][-1], -0.5, len(result["alphas"]) - 0.5))
            ax.set_yticks(range(len(result["alphas"])))
            ax.set_yticklabels(result["alphas"])
            ax.set_xlabel("lambda")
            ax.set_ylabel("alpha")
            ax.set_title("%s: %s" % (label, key))
            fig.colorbar(image, ax=ax)
    fig.tight_layout()
    return fig


def _histogram_figure(report):
    groups = report.summary()["groups"]
    fig, ax = pyplot.subplots(figsize=(8, 5))
    for group in groups[:12]:
        edges = numpy.array(group["histogram"]["edges"])
        ax.stairs(group["histogram"]["counts"], edges,
                  label="%s alpha=%s %s" % (group["reset"], group["alpha"], group["label"]))
    ax.set_xlabel("measured")
    ax.set_ylabel("count")
    ax.set_title(report.name)
    ax.legend(fontsize="x-small")
    return fig


def write_report(report, out_dir, svg=False):
    """
    Write <name>.csv, <name>.json and optionally <name>.svg in out_dir

    :return: list of written paths
    """
    base = os.path.join(out_dir, report.name)
    try:
        if not os.path.isdir(out_dir):
            os.makedirs(out_dir)
        write_report_csv(report, base + ".csv")
        write_report_json(report, base + ".json")
    except (IOError, OSError) as error:
        raise OutputError("%s: unable to write the report: %s" % (out_dir, error))
    paths = [base + ".csv", base + ".json"]
    if svg and render_svg(report, base + ".svg"):
        paths.append(base + ".svg")
    logger.info("report written to %s", ", ".join(paths))
    return paths
