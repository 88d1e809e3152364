#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
#    Project: lif_quant, spike train quantization with leaky integrate-and-fire neurons
#
#    Distributed under the MIT license, see the LICENSE file.

"""
Command line interface.

Sub-commands::

    lif_quant norm --alpha A [--kind alex|disc|l2] train.json
    lif_quant lif --theta T --alpha A --reset zero|sub|mod [--discrete --dt D --beta exact|paper] train.json
    lif_quant snn --net net.json inputs.json
    lif_quant decompose --theta T [--alpha A] train.json
    lif_quant bound --net net.json --gamma safe|conjectured --nu-norms 1,0.5
    lif_quant experiment NAME --seed S --trials N --out DIR [--svg]

Exit code: 0 on success, 1 when an experiment has a failed pass flag, 2 on
usage or input errors.
"""

from __future__ import division, print_function, with_statement

__authors__ = ["lif_quant developers"]
__license__ = "MIT"
__date__ = "17/10/2026"
__status__ = "beta"

import sys
import logging
import argparse
from .param import par, ResetMode, BetaMode, GammaPolicy, NormKind, ConfigurationError, UnsupportedError
from .norms import Leak, norm
from .spike import SpikeTrainError
from .lif import LifConfig, DiscreteLifConfig, ResolutionError, lif, lif_discrete, to_grid, from_grid
from .decompose import DecompositionError, decompose
from .snn import snn_forward, snn_error_bound, gamma_for
from .harness import EXPERIMENTS, ExperimentConfig, run_experiment
from . import fileio
from . import version

logger = logging.getLogger("lif_quant.cli")

USER_ERRORS = (ConfigurationError, UnsupportedError, SpikeTrainError, ResolutionError,
               DecompositionError, fileio.ParseError, fileio.OutputError)


def _leak(text):
    try:
        return Leak(text)
    except ConfigurationError as error:
        raise argparse.ArgumentTypeError(str(error))


def _norm_list(text):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma separated numbers, got %r" % text)


def _emit(text, output=None):
    if output:
        fileio.write_text(text, output)
    else:
        print(text)


def do_norm(args):
    _emit(repr(norm(fileio.read_train(args.train), args.alpha, args.kind)))
    return 0


def do_lif(args):
    train = fileio.read_train(args.train)
    neuron = LifConfig(args.theta, args.alpha, args.reset)
    if args.discrete:
        if args.dt is None:
            raise ConfigurationError("--discrete needs --dt")
        cfg = DiscreteLifConfig(neuron, args.dt, args.beta)
        out = from_grid(lif_discrete(to_grid(train, args.dt), cfg), args.dt)
    else:
        out = lif(train, neuron)
    _emit(fileio.dumps(out.to_dict()), args.output)
    return 0


def do_snn(args):
    net = fileio.read_network(args.net)
    outputs = snn_forward(fileio.read_trains(args.inputs), net)
    _emit(fileio.dumps(fileio.trains_to_json(outputs)))
    return 0


def do_decompose(args):
    result = decompose(fileio.read_train(args.train), LifConfig(args.theta, args.alpha, ResetMode.TO_MOD))
    _emit(fileio.dumps({"psi": result.psi.to_dict(),
                        "rho": result.rho.to_dict(),
                        "units": [u.to_dict() for u in result.units]}))
    return 0


def do_bound(args):
    net = fileio.read_network(args.net)
    gamma = gamma_for(net.neuron.alpha, args.gamma)
    _emit(fileio.dumps(snn_error_bound(args.nu_norms, net, gamma).tolist()))
    return 0


def do_experiment(args):
    cfg = ExperimentConfig(seed=args.seed, n_trials=args.trials, n_spikes=args.spikes,
                           theta=args.theta, workers=args.workers, device=args.device)
    report = run_experiment(args.name, cfg)
    fileio.write_report(report, args.out, svg=args.svg)
    if not report.passed:
        logger.error("%s: %s failed records, failed checks: %s", report.name,
                     len(report.failures()), ", ".join(report.failed_checks()) or "none")
        return 1
    return 0


def get_parser():
    parser = argparse.ArgumentParser(prog="lif_quant",
                                     description="Spike train quantization with leaky integrate-and-fire neurons")
    parser.add_argument("-V", "--version", action="version", version="%(prog)s " + version)
    parser.add_argument("-v", "--verbose", action="store_true", help="show information messages")
    parser.add_argument("-d", "--debug", action="store_true", help="show debugging messages")
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    p = sub.add_parser("norm", help="norm of a spike train")
    p.add_argument("--alpha", type=_leak, default=Leak.ZERO, help="leak, a number or inf")
    p.add_argument("--kind", choices=sorted(NormKind.values()), default=NormKind.ALEXIEWICZ)
    p.add_argument("train", help="JSON spike train")
    p.set_defaults(func=do_norm)

    p = sub.add_parser("lif", help="LIF quantization of a spike train")
    p.add_argument("--theta", type=float, default=par.Theta)
    p.add_argument("--alpha", type=_leak, default=Leak.ZERO)
    p.add_argument("--reset", choices=sorted(ResetMode.values()), default=ResetMode.TO_MOD)
    p.add_argument("--discrete", action="store_true", help="run on the time grid of spacing --dt")
    p.add_argument("--dt", type=float, default=None)
    p.add_argument("--beta", choices=sorted(BetaMode.values()), default=BetaMode.EXACT_EXP)
    p.add_argument("-o", "--output", default=None, help="write the train to this file")
    p.add_argument("train")
    p.set_defaults(func=do_lif)

    p = sub.add_parser("snn", help="forward pass of a network")
    p.add_argument("--net", required=True, help="JSON network")
    p.add_argument("inputs", help="JSON list of input trains")
    p.set_defaults(func=do_snn)

    p = sub.add_parser("decompose", help="quantization split and unit decomposition")
    p.add_argument("--theta", type=float, default=par.Theta)
    p.add_argument("--alpha", type=_leak, default=Leak.ZERO)
    p.add_argument("train")
    p.set_defaults(func=do_decompose)

    p = sub.add_parser("bound", help="output perturbation bound of a network")
    p.add_argument("--net", required=True)
    p.add_argument("--gamma", choices=sorted(GammaPolicy.values()), default=GammaPolicy.SAFE)
    p.add_argument("--nu-norms", dest="nu_norms", type=_norm_list, required=True,
                   help="comma separated norms of the input perturbations")
    p.set_defaults(func=do_bound)

    p = sub.add_parser("experiment", help="run a seeded experiment")
    p.add_argument("name", choices=list(EXPERIMENTS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=par.NbTrials)
    p.add_argument("--spikes", type=int, default=par.NbSpikes)
    p.add_argument("--theta", type=float, default=par.Theta)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--device", default=None, help="OpenCL device type (gpu, cpu, all)")
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--svg", action="store_true", help="also render an SVG figure")
    p.set_defaults(func=do_experiment)
    return parser


def run(argv=None):
    """
    Parse argv and execute the sub-command

    :return: exit code
    """
    parser = get_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return error.code
    if args.debug:
        level = logging.DEBUG
    elif args.verbose:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s:%(name)s:%(message)s")
    logging.getLogger("lif_quant").setLevel(level)
    try:
        return args.func(args)
    except USER_ERRORS as error:
        logger.error("%s", error)
        return 2


def main():
    sys.exit(run())
