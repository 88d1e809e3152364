#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
#    Project: lif_quant, spike train quantization with leaky integrate-and-fire neurons
#
#    Distributed under the MIT license, see the LICENSE file.

"""
Seeded numerical experiments checking the quantization, Lipschitz and
perturbation bounds on random spike trains.

Every experiment returns an :class:`ExperimentReport`: one
:class:`TrialRecord` per (trial, reset, leak, ...) with the measured value,
the bound it is compared with and a pass flag.  Pass flags are only set where
the bound is proven, the reset to mod; other rows are informative.

Random numbers come from numpy's PCG64 seeded by ``SeedSequence([seed,
stream...])`` so each trial owns its stream: results do not depend on the
number of worker processes.

Usage::

    cfg = ExperimentConfig(seed=1, n_trials=20)
    report = exp_quantization(cfg)
    assert report.passed
"""

from __future__ import division, print_function, with_statement

__authors__ = ["lif_quant developers"]
__license__ = "MIT"
__date__ = "17/10/2026"
__status__ = "beta"

import math
import logging
import functools
import collections
import multiprocessing
import numpy
from scipy import stats
from .param import par, ResetMode, GammaPolicy, ConfigurationError
from .norms import Leak, alexiewicz_norm, discrepancy_norm, l2_norm
from .spike import make_train, scale, shift, approx_equal
from .lif import LifConfig, lif
from .decompose import quantize_split, unit_decompose_counts
from .snn import SnnNetwork, snn_forward, snn_error_bound, gamma_for, \
                 example_network, example_inputs, example_perturbations

logger = logging.getLogger("lif_quant.harness")

RESETS = (ResetMode.TO_MOD, ResetMode.BY_SUBTRACTION, ResetMode.TO_ZERO)
CSV_HEADER = ("experiment", "trial", "reset", "alpha", "theta", "label", "measured", "bound", "pass")

# sign pattern and relative spacing of the perturbation of example one
EXAMPLE_ONE_VARIANTS = collections.OrderedDict([
    ("aligned", ((1.0, -1.0, 1.0), 1.0)),
    ("inverted", ((-1.0, 1.0, -1.0), 1.0)),
    ("stretched", ((1.0, -1.0, 1.0), 2.0)),
    ("compressed", ((1.0, -1.0, 1.0), 0.5))])


class ExperimentConfig(object):
    """
    Parameters shared by the experiments

    :param seed: non-negative integer seed
    :param n_trials: number of random trials
    :param n_spikes: number of spikes of the random trains
    :param amp_range: (low, high) of the uniform amplitudes
    :param alphas: leaks swept by the quantization experiment
    :param theta: threshold
    :param grid_spacing: spacing of the equidistant spike times
    :param workers: number of processes, 1 runs in process
    :param device: OpenCL device type ("gpu", "cpu", "all") or None
    """
    def __init__(self, seed=0, n_trials=None, n_spikes=None, amp_range=None, alphas=None,
                 theta=None, grid_spacing=None, workers=1, device=None):
        self.seed = int(seed)
        if self.seed < 0:
            raise ConfigurationError("Seed must be non-negative, got %s" % seed)
        self.n_trials = int(par.NbTrials if n_trials is None else n_trials)
        if self.n_trials < 1:
            raise ConfigurationError("At least one trial is needed, got %s" % self.n_trials)
        self.n_spikes = int(par.NbSpikes if n_spikes is None else n_spikes)
        if self.n_spikes < 0:
            raise ConfigurationError("Number of spikes must be non-negative, got %s" % self.n_spikes)
        lo, hi = amp_range if amp_range is not None else (par.AmplitudeLow, par.AmplitudeHigh)
        if not lo < hi:
            raise ConfigurationError("Amplitude range must satisfy low < high, got (%s, %s)" % (lo, hi))
        self.amp_range = (float(lo), float(hi))
        self.alphas = tuple(Leak.coerce(a) for a in (par.Alphas if alphas is None else alphas))
        self.theta = float(par.Theta if theta is None else theta)
        if not (math.isfinite(self.theta) and self.theta > 0):
            raise ConfigurationError("Threshold must be positive, got %r" % self.theta)
        self.grid_spacing = float(par.GridSpacing if grid_spacing is None else grid_spacing)
        if not (math.isfinite(self.grid_spacing) and self.grid_spacing > 0):
            raise ConfigurationError("Grid spacing must be positive, got %r" % self.grid_spacing)
        self.workers = max(1, int(workers))
        self.device = device

    def to_dict(self):
        return {"seed": self.seed, "n_trials": self.n_trials, "n_spikes": self.n_spikes,
                "amp_range": list(self.amp_range), "alphas": [a.token() for a in self.alphas],
                "theta": self.theta, "grid_spacing": self.grid_spacing}

    def __repr__(self):
        return "ExperimentConfig(%s)" % ", ".join("%s=%r" % kv for kv in sorted(self.to_dict().items()))


class TrialRecord(object):
    """One measured quantity compared with its bound"""
    __slots__ = ("experiment", "trial", "reset", "alpha", "theta", "label", "measured", "bound", "passed")

    def __init__(self, experiment, trial, reset, alpha, theta, label, measured, bound=None, passed=None):
        self.experiment = experiment
        self.trial = trial
        self.reset = reset
        self.alpha = Leak.coerce(alpha)
        self.theta = theta
        self.label = label
        self.measured = float(measured)
        self.bound = None if bound is None else float(bound)
        self.passed = None if passed is None else bool(passed)

    def row(self):
        """CSV row, floats written with their shortest round-trip repr"""
        flag = "" if self.passed is None else ("true" if self.passed else "false")
        return [self.experiment, str(self.trial), self.reset, self.alpha.token(), repr(self.theta),
                self.label, repr(self.measured), "" if self.bound is None else repr(self.bound), flag]

    def __repr__(self):
        return "TrialRecord(%s)" % ", ".join(self.row())


class ExperimentReport(object):
    """
    Records of an experiment plus the aggregated checks

    :param name: experiment name
    :param config: ExperimentConfig
    :param records: list of TrialRecord
    :param extra: dict of experiment specific series (sweeps, matrices)
    :param checks: dict of named global checks, name -> bool
    """
    def __init__(self, name, config, records, extra=None, checks=None):
        self.name = name
        self.config = config
        self.records = list(records)
        self.extra = extra or {}
        self.checks = checks or {}

    def failures(self):
        return [r for r in self.records if r.passed is False]

    def failed_checks(self):
        return [k for k, v in self.checks.items() if not v]

    @property
    def passed(self):
        return not self.failures() and not self.failed_checks()

    def groups(self):
        """Measured values grouped by (reset, alpha, theta, label), in first seen order"""
        out = collections.OrderedDict()
        for r in self.records:
            out.setdefault((r.reset, r.alpha.token(), r.theta, r.label), []).append(r.measured)
        return out

    def summary(self, bins=None):
        """Aggregated statistics and histograms as a JSON compatible dict"""
        bins = bins or par.HistogramBins
        groups = []
        for (reset, alpha, theta, label), values in self.groups().items():
            values = numpy.array(values)
            counts, edges = numpy.histogram(values, bins=bins)
            groups.append({"reset": reset, "alpha": alpha, "theta": theta, "label": label,
                           "count": int(values.size), "min": float(values.min()),
                           "max": float(values.max()), "mean": float(values.mean()),
                           "histogram": {"counts": counts.tolist(), "edges": edges.tolist()}})
        return {"experiment": self.name,
                "config": self.config.to_dict() if self.config is not None else None,
                "n_records": len(self.records),
                "n_failures": len(self.failures()),
                "checks": dict(self.checks),
                "passed": self.passed,
                "groups": groups,
                "extra": self.extra}

    def __repr__(self):
        return "ExperimentReport(%s, %s records, %s failures)" % (self.name, len(self.records), len(self.failures()))


def make_rng(seed, *stream):
    """Independent PCG64 generator for a seed and a stream path of integers"""
    return numpy.random.Generator(numpy.random.PCG64(numpy.random.SeedSequence([int(seed)] + [int(s) for s in stream])))


def _stream(rng_stream):
    if isinstance(rng_stream, (tuple, list)):
        return tuple(rng_stream)
    return (rng_stream,)


def _random_amplitudes(cfg, rng_stream, n_spikes):
    rng = make_rng(cfg.seed, *_stream(rng_stream))
    return rng.uniform(cfg.amp_range[0], cfg.amp_range[1], n_spikes)


def gen_random_train(cfg, rng_stream, n_spikes=None):
    """
    Train of i.i.d. uniform amplitudes at times grid_spacing * (1 .. n)

    :param cfg: ExperimentConfig
    :param rng_stream: integer or tuple of integers selecting the stream
    :param n_spikes: overrides cfg.n_spikes
    """
    n = cfg.n_spikes if n_spikes is None else int(n_spikes)
    amplitudes = _random_amplitudes(cfg, rng_stream, n)
    return make_train(times=cfg.grid_spacing * numpy.arange(1, n + 1), amplitudes=amplitudes)


def _random_perturbation(cfg, rng_stream, base, density=0.2):
    """Sparse perturbation sitting on the events of base, amplitudes in [-theta, theta]"""
    rng = make_rng(cfg.seed, *_stream(rng_stream))
    if len(base) == 0:
        return make_train([(0.0, float(rng.uniform(-cfg.theta, cfg.theta)))])
    mask = rng.random(len(base)) < density
    mask[int(rng.integers(len(base)))] = True
    amplitudes = rng.uniform(-cfg.theta, cfg.theta, int(mask.sum()))
    return make_train(times=base.times[mask], amplitudes=amplitudes)


def _run_trials(func, cfg):
    """Map func over the trial indices, flattening the lists in trial order"""
    trials = range(cfg.n_trials)
    if cfg.workers > 1:
        # forked workers inherit the already imported package
        if "fork" in multiprocessing.get_all_start_methods():
            context = multiprocessing.get_context("fork")
        else:
            context = multiprocessing.get_context()
        with context.Pool(cfg.workers) as pool:
            chunks = pool.map(func, trials)
    else:
        chunks = [func(trial) for trial in trials]
    return [record for chunk in chunks for record in chunk]


def _spearman(x, y):
    if len(x) < 2:
        return float("nan")
    return float(stats.spearmanr(x, y)[0])


def _le(value, bound):
    return value <= bound + par.BoundSlack * max(1.0, abs(bound))


###############################################################################
# Quantization error
###############################################################################

def _quantization_trial(cfg, trial):
    train = gen_random_train(cfg, trial)
    records = []
    for reset in RESETS:
        for alpha in cfg.alphas:
            residual = train - lif(train, LifConfig(cfg.theta, alpha, reset))
            err = alexiewicz_norm(residual, alpha)
            passed = err < cfg.theta if reset == ResetMode.TO_MOD else None
            records.append(TrialRecord("quantization", trial, reset, alpha, cfg.theta, "alex", err, cfg.theta, passed))
            if not alpha.is_infinite:
                records.append(TrialRecord("quantization", trial, reset, alpha, cfg.theta, "l2",
                                           l2_norm(residual, alpha)))
    return records


def _quantization_opencl(cfg):
    """Same records as _quantization_trial, norms evaluated by the OpenCL plan"""
    from .plan import NormPlan
    matrix = numpy.vstack([_random_amplitudes(cfg, trial, cfg.n_spikes) for trial in range(cfg.n_trials)])
    plan = NormPlan(cfg.n_spikes, cfg.n_trials, devicetype=cfg.device)
    rows = [[] for _ in range(cfg.n_trials)]
    for reset in RESETS:
        for alpha in cfg.alphas:
            neuron = LifConfig(cfg.theta, alpha, reset)
            alex, l2 = plan.quantization_error(matrix, neuron, cfg.grid_spacing)
            for trial in range(cfg.n_trials):
                err = float(alex[trial])
                passed = err < cfg.theta if reset == ResetMode.TO_MOD else None
                rows[trial].append(TrialRecord("quantization", trial, reset, alpha, cfg.theta, "alex", err, cfg.theta, passed))
                if l2 is not None:
                    rows[trial].append(TrialRecord("quantization", trial, reset, alpha, cfg.theta, "l2", float(l2[trial])))
    plan.log_profile()
    return [record for row in rows for record in row]


def _sweep_trial(cfg, sizes, trial):
    alpha = Leak(par.SweepAlpha)
    neuron = LifConfig(cfg.theta, alpha, ResetMode.TO_MOD)
    records = []
    for n in sizes:
        train = gen_random_train(cfg, (trial, n), n_spikes=n)
        residual = train - lif(train, neuron)
        err = alexiewicz_norm(residual, alpha)
        label = "sweep:n=%s" % n
        records.append(TrialRecord("quantization", trial, ResetMode.TO_MOD, alpha, cfg.theta,
                                   label + ":alex", err, cfg.theta, err < cfg.theta))
        records.append(TrialRecord("quantization", trial, ResetMode.TO_MOD, alpha, cfg.theta,
                                   label + ":l2", l2_norm(residual, alpha)))
    return records


def exp_quantization(cfg, sizes=None):
    """
    Quantization error of random trains for every reset and leak, plus the
    growth of the L2 error with the number of spikes.
    """
    sizes = tuple(par.SweepSpikes if sizes is None else sizes)
    if cfg.device:
        records = _quantization_opencl(cfg)
    else:
        records = _run_trials(functools.partial(_quantization_trial, cfg), cfg)
    sweep = _run_trials(functools.partial(_sweep_trial, cfg, sizes), cfg)
    mean_l2 = []
    max_alex = []
    for n in sizes:
        label = "sweep:n=%s" % n
        mean_l2.append(float(numpy.mean([r.measured for r in sweep if r.label == label + ":l2"])))
        max_alex.append(float(max(r.measured for r in sweep if r.label == label + ":alex")))
    rho = _spearman(sizes, mean_l2)
    logger.info("quantization: L2 error grows with rank correlation %.3f over %s", rho, sizes)
    extra = {"l2_sweep": {"n_spikes": list(sizes), "mean_l2": mean_l2, "max_alex": max_alex, "spearman": rho}}
    checks = {"l2_grows_with_spikes": bool(rho > 0)} if len(sizes) > 1 else {}
    return ExperimentReport("quantization", cfg, records + sweep, extra, checks)


###############################################################################
# Lag and threshold variations
###############################################################################

def _lag_trial(cfg, shifts, epsilons, alphas, trial):
    train = gen_random_train(cfg, trial)
    records = []
    if len(train) == 0:
        return records
    amax = float(numpy.abs(train.amplitudes).max())
    for reset in RESETS:
        proven = reset == ResetMode.TO_MOD
        for alpha in alphas:
            neuron = LifConfig(cfg.theta, alpha, reset)
            base = lif(train, neuron)
            size = alexiewicz_norm(train, alpha)
            for dt in shifts:
                lhs = alexiewicz_norm(lif(shift(train, dt), neuron) - base, alpha)
                if alpha.is_infinite:
                    rhs, passed = None, None
                else:
                    rhs = amax + 2 * cfg.theta + dt * alpha.value * (size + amax)
                    passed = _le(lhs, rhs) if (proven and dt <= 0.01 * cfg.grid_spacing) else None
                records.append(TrialRecord("lag_threshold", trial, reset, alpha, cfg.theta,
                                           "shift=%r" % dt, lhs, rhs, passed))
            for eps in epsilons:
                lhs = alexiewicz_norm(lif(train, neuron.replace(theta=cfg.theta + eps)) - base, alpha)
                rhs = 2 * cfg.theta + eps
                records.append(TrialRecord("lag_threshold", trial, reset, alpha, cfg.theta,
                                           "eps=%r" % eps, lhs, rhs, _le(lhs, rhs) if proven else None))
    return records


def exp_lag_threshold(cfg, shifts=None, epsilons=None, alphas=None):
    """
    Output distance under a time shift of the input and under a threshold
    increase; the time shift bound is asserted for shifts up to 1% of the
    grid spacing.
    """
    shifts = tuple(par.LagShifts if shifts is None else shifts)
    epsilons = tuple(par.LagEpsilons if epsilons is None else epsilons)
    if any(e < 0 for e in epsilons):
        raise ConfigurationError("Threshold increments must be non-negative")
    alphas = tuple(Leak.coerce(a) for a in (par.LagAlphas if alphas is None else alphas))
    records = _run_trials(functools.partial(_lag_trial, cfg, shifts, epsilons, alphas), cfg)
    return ExperimentReport("lag_threshold", cfg, records)


###############################################################################
# Quasi isometry
###############################################################################

def _isometry_discrepancy(eta1, eta2, neuron):
    alpha = neuron.alpha
    before = alexiewicz_norm(eta1 - eta2, alpha)
    after = alexiewicz_norm(lif(eta1, neuron) - lif(eta2, neuron), alpha)
    return abs(after - before)


def _isometry_trial(cfg, thetas, alphas, trial):
    eta1 = gen_random_train(cfg, (trial, 0))
    eta2 = gen_random_train(cfg, (trial, 1))
    records = []
    for reset in RESETS:
        proven = reset == ResetMode.TO_MOD
        for theta in thetas:
            neuron = LifConfig(theta, par.IsometryAlpha, reset)
            m = _isometry_discrepancy(eta1, eta2, neuron)
            records.append(TrialRecord("quasi_isometry", trial, reset, neuron.alpha, theta, "theta-sweep",
                                       m, 2 * theta, _le(m, 2 * theta) if proven else None))
        for alpha in alphas:
            neuron = LifConfig(par.IsometryTheta, alpha, reset)
            m = _isometry_discrepancy(eta1, eta2, neuron)
            records.append(TrialRecord("quasi_isometry", trial, reset, alpha, neuron.theta, "alpha-sweep",
                                       m, 2 * neuron.theta, _le(m, 2 * neuron.theta) if proven else None))
    for k in range(par.Halvings + 1):
        neuron = LifConfig(cfg.theta / 2 ** k, par.IsometryAlpha, ResetMode.TO_MOD)
        m = _isometry_discrepancy(eta1, eta2, neuron)
        records.append(TrialRecord("quasi_isometry", trial, ResetMode.TO_MOD, neuron.alpha, neuron.theta,
                                   "halving", m, 2 * neuron.theta, _le(m, 2 * neuron.theta)))
    return records


def exp_quasi_isometry(cfg, thetas=None, alphas=None):
    """
    Distortion of distances by the neuron, with constant leak and varying
    threshold then constant threshold and varying leak, plus the shrinking
    of the distortion when the threshold is halved repeatedly.
    """
    thetas = tuple(par.IsometryThetas if thetas is None else thetas)
    alphas = tuple(Leak.coerce(a) for a in (par.IsometryAlphas if alphas is None else alphas))
    records = _run_trials(functools.partial(_isometry_trial, cfg, thetas, alphas), cfg)
    levels = [cfg.theta / 2 ** k for k in range(par.Halvings + 1)]
    means = [float(numpy.mean([r.measured for r in records if r.label == "halving" and r.theta == t]))
             for t in levels]
    rho = _spearman(levels, means)
    extra = {"halving": {"theta": levels, "mean_discrepancy": means, "spearman": rho}}
    return ExperimentReport("quasi_isometry", cfg, records, extra, {"halving_trend": bool(rho > 0)})


###############################################################################
# Lipschitz bounds of a single neuron
###############################################################################

def _lipschitz_trial(cfg, alphas, trial):
    eta = gen_random_train(cfg, (trial, 0))
    nu = _random_perturbation(cfg, (trial, 1), eta)
    records = []
    for k, alpha in enumerate(alphas):
        neuron = LifConfig(cfg.theta, alpha, ResetMode.TO_MOD)
        base = lif(eta, neuron)
        size = alexiewicz_norm(nu, alpha)
        lhs = alexiewicz_norm(lif(eta + nu, neuron) - base, alpha)
        bound = gamma_for(alpha) * math.ceil(size / cfg.theta) * cfg.theta
        records.append(TrialRecord("lipschitz", trial, ResetMode.TO_MOD, alpha, cfg.theta, "gamma",
                                   lhs, bound, _le(lhs, bound)))
        if (alpha.is_zero or alpha.is_infinite) and size > 0:
            factor = cfg.theta * make_rng(cfg.seed, trial, 2, k).uniform(0.05, 0.999) / size
            small = scale(nu, factor)
            lhs = alexiewicz_norm(lif(eta + small, neuron) - base, alpha)
            records.append(TrialRecord("lipschitz", trial, ResetMode.TO_MOD, alpha, cfg.theta, "small",
                                       lhs, cfg.theta, _le(lhs, cfg.theta)))
    return records


def exp_lipschitz(cfg, alphas=(0.0, 0.5, 1.0, 2.0, "inf")):
    """
    Output distance of a perturbed input: at most theta for perturbations of
    norm at most theta when alpha is 0 or infinite, at most
    gamma(alpha) ceil(|nu| / theta) theta in general.
    """
    alphas = tuple(Leak.coerce(a) for a in alphas)
    records = _run_trials(functools.partial(_lipschitz_trial, cfg, alphas), cfg)
    return ExperimentReport("lipschitz", cfg, records)


###############################################################################
# Perturbation bound through a network
###############################################################################

def _snn_trial(cfg, network, alphas, trial):
    inputs = [gen_random_train(cfg, (trial, i)) for i in range(network.n_inputs)]
    nus = [_random_perturbation(cfg, (trial, 100 + i), x) for i, x in enumerate(inputs)]
    perturbed = [x + nu for x, nu in zip(inputs, nus)]
    proven = network.neuron.reset == ResetMode.TO_MOD
    records = []
    for alpha in alphas:
        net = network.with_leak(alpha)
        ref = snn_forward(inputs, net)
        out = snn_forward(perturbed, net)
        bound = snn_error_bound([alexiewicz_norm(nu, alpha) for nu in nus], net, gamma_for(alpha))
        for j, (a, b) in enumerate(zip(out, ref)):
            lhs = alexiewicz_norm(a - b, alpha)
            records.append(TrialRecord("snn_bound", trial, net.neuron.reset, alpha, net.neuron.theta,
                                       "output=%s" % j, lhs, bound[j], _le(lhs, bound[j]) if proven else None))
    return records


def exp_snn_bound(cfg, network=None, alphas=(0.0, 1.0)):
    """Output perturbation of a network against the layer-wise bound"""
    network = network if network is not None else example_network(theta=cfg.theta)
    alphas = tuple(Leak.coerce(a) for a in alphas)
    records = _run_trials(functools.partial(_snn_trial, cfg, network, alphas), cfg)
    return ExperimentReport("snn_bound", cfg, records)


###############################################################################
# Decomposition
###############################################################################

def _walk_max(counts):
    walk = numpy.cumsum(counts)
    return int(numpy.abs(walk).max()) if walk.size else 0


def _decomposition_trial(cfg, max_level, trial):
    rng = make_rng(cfg.seed, trial, 0)
    n = max(1, min(cfg.n_spikes, 20))
    walk = rng.integers(-max_level, max_level + 1, n)
    counts = numpy.diff(numpy.concatenate(([0], walk))).astype(int).tolist()
    level = _walk_max(counts)
    units = unit_decompose_counts(counts)
    exact = [sum(column) for column in zip(*units)] == counts if units else not any(counts)
    ok = exact and len(units) == level and all(_walk_max(u) == 1 for u in units)
    records = [TrialRecord("decomposition", trial, ResetMode.TO_MOD, Leak.ZERO, cfg.theta, "units",
                           len(units), level, ok)]
    train = gen_random_train(cfg, (trial, 1))
    for alpha in cfg.alphas:
        neuron = LifConfig(cfg.theta, alpha, ResetMode.TO_MOD)
        psi, rho = quantize_split(train, neuron)
        err = alexiewicz_norm(rho, alpha)
        records.append(TrialRecord("decomposition", trial, ResetMode.TO_MOD, alpha, cfg.theta, "residual",
                                   err, cfg.theta, err < cfg.theta and approx_equal(psi + rho, train, 1e-9)))
    return records


def exp_decomposition(cfg, max_level=6):
    """Unit decomposition of random integer trains and residual of the split"""
    records = _run_trials(functools.partial(_decomposition_trial, cfg, int(max_level)), cfg)
    return ExperimentReport("decomposition", cfg, records)


###############################################################################
# Norm equivalence and idempotence
###############################################################################

def _norm_trial(cfg, alphas, trial):
    train = gen_random_train(cfg, trial)
    exact = math.frexp(cfg.theta)[0] == 0.5
    records = []
    for alpha in alphas:
        a = alexiewicz_norm(train, alpha)
        d = discrepancy_norm(train, alpha)
        records.append(TrialRecord("norm_suite", trial, ResetMode.TO_MOD, alpha, cfg.theta, "alex<=disc", a, d, _le(a, d)))
        records.append(TrialRecord("norm_suite", trial, ResetMode.TO_MOD, alpha, cfg.theta, "disc<=2alex", d, 2 * a, _le(d, 2 * a)))
        neuron = LifConfig(cfg.theta, alpha, ResetMode.TO_MOD)
        once = lif(train, neuron)
        twice = lif(once, neuron)
        records.append(TrialRecord("norm_suite", trial, ResetMode.TO_MOD, alpha, cfg.theta, "idempotence",
                                   alexiewicz_norm(twice - once, alpha), 0.0, (twice == once) if exact else None))
        silent = len(lif(train - once, neuron))
        records.append(TrialRecord("norm_suite", trial, ResetMode.TO_MOD, alpha, cfg.theta, "residual_silent",
                                   silent, 0, (silent == 0) if exact else None))
    return records


def exp_norm_suite(cfg, alphas=(0.0, 0.5, 1.0, 10.0, "inf")):
    """
    Equivalence of the Alexiewicz and discrepancy norms, idempotence of the
    reset-to-mod neuron and silence of its residual. The last two are only
    asserted for power of two thresholds, where the quantization is exact in
    floating point.
    """
    alphas = tuple(Leak.coerce(a) for a in alphas)
    records = _run_trials(functools.partial(_norm_trial, cfg, alphas), cfg)
    return ExperimentReport("norm_suite", cfg, records)


###############################################################################
# Two spike trains in the plane
###############################################################################

def _unit_ball_trial(cfg, alphas, trial):
    x = _random_amplitudes(cfg, (trial, 0), 2)
    train = make_train(times=cfg.grid_spacing * numpy.arange(1, 3), amplitudes=x)
    records = []
    for alpha in alphas:
        neuron = LifConfig(cfg.theta, alpha, ResetMode.TO_MOD)
        q = lif(train, neuron)
        err = alexiewicz_norm(train - q, alpha)
        label = "x=(%r,%r)" % (float(x[0]), float(x[1]))
        records.append(TrialRecord("unit_ball", trial, ResetMode.TO_MOD, alpha, cfg.theta, label,
                                   err, cfg.theta, err < cfg.theta))
    return records


def exp_unit_ball(cfg, alphas=(0.0, 1.0, 2.0, "inf")):
    """Quantization of two-spike trains, the points of the plane and their images"""
    alphas = tuple(Leak.coerce(a) for a in alphas)
    records = _run_trials(functools.partial(_unit_ball_trial, cfg, alphas), cfg)
    points = collections.OrderedDict()
    for trial in range(cfg.n_trials):
        x = _random_amplitudes(cfg, (trial, 0), 2)
        train = make_train(times=cfg.grid_spacing * numpy.arange(1, 3), amplitudes=x)
        for alpha in alphas:
            q = lif(train, LifConfig(cfg.theta, alpha, ResetMode.TO_MOD))
            image = to_pair(q, cfg.grid_spacing)
            points.setdefault(alpha.token(), []).append([x.tolist(), image])
    return ExperimentReport("unit_ball", cfg, records, {"points": points})


def to_pair(train, spacing):
    """Amplitudes at the two grid times spacing and 2 * spacing"""
    pair = [0.0, 0.0]
    for t, a in train.events:
        pair[int(round(t / spacing)) - 1] = a
    return pair


###############################################################################
# Leak / perturbation scale maps and the Lipschitz constant
###############################################################################

def example_one(eps=None, variant="aligned"):
    """
    Three spikes at 0, eps and 2 eps with amplitudes -1.5, 1, 1.5 and a
    perturbation of unit amplitudes.

    :param variant: one of EXAMPLE_ONE_VARIANTS: aligned (+1, -1, +1 on the
        same times), inverted (opposite signs), stretched (perturbation
        spaced by 2 eps), compressed (spaced by eps / 2)
    :return: (eta, nu)
    """
    eps = par.ExampleEpsilon if eps is None else float(eps)
    if not eps > 0:
        raise ConfigurationError("Spacing of example one must be positive, got %r" % eps)
    if variant not in EXAMPLE_ONE_VARIANTS:
        raise ConfigurationError("Unknown variant %r, expected one of %s" %
                                 (variant, ", ".join(EXAMPLE_ONE_VARIANTS)))
    signs, spacing = EXAMPLE_ONE_VARIANTS[variant]
    eta = make_train([(0.0, -1.5), (eps, 1.0), (2 * eps, 1.5)])
    nu = make_train([(k * spacing * eps, s) for k, s in enumerate(signs)])
    return eta, nu


class AlphaLambdaResult(object):
    """Measured output distances and bounds on an (alpha, lambda) grid"""
    def __init__(self, alphas, lambdas, measured, bound):
        self.alphas = alphas
        self.lambdas = lambdas
        self.measured = measured
        self.bound = bound

    def to_dict(self):
        return {"alphas": [a.token() for a in self.alphas], "lambdas": self.lambdas.tolist(),
                "measured": self.measured.tolist(), "bound": self.bound.tolist()}


def exp_alpha_lambda(base, perturbation, alpha_grid, lambda_grid, target=None,
                     theta=None, reset=ResetMode.TO_MOD):
    """
    Map of the output distance |F(base + lambda nu) - F(base)| over a grid
    of leaks and perturbation scales.

    :param base: SpikeTrain, or list of trains when target is a network
    :param perturbation: same structure as base
    :param target: None for a single neuron, or an SnnNetwork (its leak is
        replaced by each grid value, the largest output distance is kept)
    :param theta: threshold of the single neuron
    :param reset: reset of the single neuron
    :return: AlphaLambdaResult with measured and bound matrices of shape
        (len(alpha_grid), len(lambda_grid))
    """
    alphas = [Leak.coerce(a) for a in alpha_grid]
    lambdas = numpy.array(lambda_grid, dtype=numpy.float64).reshape(-1)
    measured = numpy.zeros((len(alphas), lambdas.size))
    bound = numpy.zeros_like(measured)
    network = isinstance(target, SnnNetwork)
    if not network:
        neuron0 = LifConfig(theta, 0.0, reset)
    for i, alpha in enumerate(alphas):
        gamma = gamma_for(alpha)
        if network:
            net = target.with_leak(alpha)
            ref = snn_forward(base, net)
        else:
            neuron = neuron0.replace(alpha=alpha)
            ref = lif(base, neuron)
        for j, lam in enumerate(lambdas.tolist()):
            if network:
                nus = [scale(p, lam) for p in perturbation]
                out = snn_forward([b + nu for b, nu in zip(base, nus)], net)
                measured[i, j] = max(alexiewicz_norm(a - b, alpha) for a, b in zip(out, ref))
                bound[i, j] = snn_error_bound([alexiewicz_norm(nu, alpha) for nu in nus], net, gamma).max()
            else:
                nu = scale(perturbation, lam)
                measured[i, j] = alexiewicz_norm(lif(base + nu, neuron) - ref, alpha)
                bound[i, j] = gamma * math.ceil(alexiewicz_norm(nu, alpha) / neuron.theta) * neuron.theta
    return AlphaLambdaResult(alphas, lambdas, measured, bound)


def exp_alpha_lambda_report(cfg, alpha_grid=(0.0, 1.0, 10.0, 100.0, 1e3, 1e4, 1e5, "inf"),
                            lambda_grid=None):
    """(alpha, lambda) maps of the four variants of example one and of the example network"""
    lambdas = numpy.linspace(0.0, 2.0, 41) if lambda_grid is None else lambda_grid
    records = []
    extra = collections.OrderedDict()
    cases = [(v, example_one(variant=v), None) for v in EXAMPLE_ONE_VARIANTS]
    for name, nus in example_perturbations().items():
        cases.append(("snn-" + name, (example_inputs(), nus), example_network(theta=cfg.theta)))
    for label, (base, nu), target in cases:
        result = exp_alpha_lambda(base, nu, alpha_grid, lambdas, target, theta=cfg.theta)
        extra[label] = result.to_dict()
        for i, alpha in enumerate(result.alphas):
            for j in range(result.lambdas.size):
                m, b = result.measured[i, j], result.bound[i, j]
                records.append(TrialRecord("alpha_lambda", j, ResetMode.TO_MOD, alpha, cfg.theta,
                                           "%s:lambda=%r" % (label, float(result.lambdas[j])), m, b, _le(m, b)))
    return ExperimentReport("alpha_lambda", cfg, records, extra)


def _random_pair(rng, theta):
    n = int(rng.integers(2, 13))
    times = numpy.cumsum(rng.uniform(0.01, 2.0, n))
    eta = make_train(times=times, amplitudes=rng.uniform(-2 * theta, 2 * theta, n))
    mask = rng.random(n) < 0.5
    mask[int(rng.integers(n))] = True
    nu = make_train(times=times[mask], amplitudes=rng.uniform(-1.5 * theta, 1.5 * theta, int(mask.sum())))
    return eta, nu


def estimate_gamma(alpha_grid, search_budget=None, seed=0, theta=1.0):
    """
    Largest observed ratio |LIF(eta + nu) - LIF(eta)| / (ceil(|nu| / theta) theta)
    per leak, over the variants of example one and random pairs.

    :return: list of (Leak, ratio)
    """
    budget = par.SearchBudget if search_budget is None else int(search_budget)
    results = []
    for k, alpha in enumerate(Leak.coerce(a) for a in alpha_grid):
        neuron = LifConfig(theta, alpha, ResetMode.TO_MOD)
        rng = make_rng(seed, k)
        candidates = [example_one(variant=v) for v in EXAMPLE_ONE_VARIANTS]
        candidates += [_random_pair(rng, theta) for _ in range(budget)]
        best = 0.0
        for eta, nu in candidates:
            size = alexiewicz_norm(nu, alpha)
            if size == 0.0:
                continue
            lhs = alexiewicz_norm(lif(eta + nu, neuron) - lif(eta, neuron), alpha)
            best = max(best, lhs / (math.ceil(size / theta) * theta))
        logger.info("alpha=%s: largest ratio %.6f over %s candidates", alpha.token(), best, len(candidates))
        results.append((alpha, best))
    return results


def exp_gamma(cfg, alpha_grid=(0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0, "inf")):
    """Report form of :func:`estimate_gamma`, ratios checked against the safe constant"""
    records = []
    ratios = estimate_gamma(alpha_grid, cfg.n_trials, cfg.seed, cfg.theta)
    for k, (alpha, ratio) in enumerate(ratios):
        safe = gamma_for(alpha, GammaPolicy.SAFE)
        records.append(TrialRecord("gamma", k, ResetMode.TO_MOD, alpha, cfg.theta, "ratio", ratio, safe, _le(ratio, safe)))
    extra = {"ratios": [[a.token(), r] for a, r in ratios],
             "conjectured_holds": all(_le(r, gamma_for(a, GammaPolicy.CONJECTURED)) for a, r in ratios)}
    return ExperimentReport("gamma", cfg, records, extra)


EXPERIMENTS = collections.OrderedDict([
    ("quantization", exp_quantization),
    ("lag_threshold", exp_lag_threshold),
    ("quasi_isometry", exp_quasi_isometry),
    ("lipschitz", exp_lipschitz),
    ("snn_bound", exp_snn_bound),
    ("decomposition", exp_decomposition),
    ("norm_suite", exp_norm_suite),
    ("unit_ball", exp_unit_ball),
    ("alpha_lambda", exp_alpha_lambda_report),
    ("gamma", exp_gamma)])


def run_experiment(name, cfg):
    """Run a registered experiment by name"""
    try:
        func = EXPERIMENTS[name]
    except KeyError:
        raise ConfigurationError("Unknown experiment %r, expected one of %s" % (name, ", ".join(EXPERIMENTS)))
    logger.info("running %s with %r", name, cfg)
    report = func(cfg)
    logger.info("%s: %s records, %s failures", name, len(report.records), len(report.failures()))
    return report
