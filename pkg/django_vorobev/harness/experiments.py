#! coding: utf-8
"""Experimentos de Monte Carlo sobre modelos booleanos con oráculo
analítico. Cada experimento devuelve un ExperimentResult con filas en orden
canónico (n, k, ensayo) y un resumen con su criterio de aceptación."""
import logging
import math
from fractions import Fraction

import numpy as np

from django_vorobev import app_settings
from django_vorobev.boolean_models import oracle_for
from django_vorobev.boxdim import box_count_report
from django_vorobev.coverage import as_level, level_set, level_set_grid, survival_curve
from django_vorobev.exceptions import HypothesisError
from django_vorobev.grid import boundary_cells, refine, symm_diff_volume
from django_vorobev.strings import CONSISTENCY_RADIUS, CONSISTENCY_STATIONARY, EXPERIMENT_FINISHED, \
    EXPERIMENT_STARTED, RATE_PLATEAU_WARNING
from django_vorobev.vorobev import alpha_star_nr, k_nr, kovyazin_mean, regime, \
    threshold_report, vorobev_from_oracle
from . import plan as plans
from .runner import coverage_snapshots, parallel_map

logger = logging.getLogger(__name__)

# Valores de α del fcurve además de los quiebres de la curva empírica
FCURVE_POINTS = 101

CONSISTENCY_COLUMNS = ['n', 'r', 'trial', 'delta_knr', 'delta_kn', 'delta_knr_kn',
                       'alpha_star_nr', 'lambda_n']
RATE_COLUMNS = ['n', 'r', 'alpha', 'mc_mean_delta', 'mc_se', 'best_bound', 'eps_star',
                'bound_satisfied', 'plateau_warning']
BRACKET_COLUMNS = ['n', 'r', 'trial', 'alpha_star_nr', 'alpha_star', 'beta_star', 'inside']
FCURVE_COLUMNS = ['alpha', 'F_emp', 'F_oracle']
BOXDIM_COLUMNS = ['k', 'r', 'N_r', 'log2_N_r']

FILENAMES = {
    plans.CONSISTENCY: 'consistency.csv',
    plans.RATE_CHECK: 'rate.csv',
    plans.BRACKET: 'bracket.csv',
    plans.FCURVE: 'fcurve.csv',
    plans.BOXDIM: 'boxdim.csv',
}


class ExperimentResult(object):

    def __init__(self, kind, columns, rows, summary=None, passed=None):
        self.kind = kind
        self.columns = columns
        self.rows = rows
        self.summary = summary or {}
        self.passed = passed

    @property
    def filename(self):
        return FILENAMES[self.kind]

    def column(self, name):
        return [row[name] for row in self.rows]


def _mesh(k):
    return Fraction(1, 2 ** k)


def _run_trials(plan, function):
    """function(trial, snapshots) -> filas; se ejecuta en paralelo por ensayo
    y las filas se ordenan por (n, k, ensayo)"""
    def unit(trial):
        return function(trial, coverage_snapshots(plan.config, trial, plan.n_schedule))
    rows = [row for chunk in parallel_map(unit, range(plan.trials), plan.threads) for row in chunk]
    return sorted(rows, key=lambda row: (row['n'], -row['r'], row['trial']))


def _oracle_field(plan):
    return oracle_for(plan.config).sample(plan.config.grid)


def _median(values):
    return float(np.median(values)) if len(values) else float('nan')


def _standard_error(values):
    if len(values) < 2:
        return 0.0
    return float(np.std(values, ddof=1) / math.sqrt(len(values)))


def _by_point(rows, name):
    grouped = {}
    for row in rows:
        grouped.setdefault((row['n'], row['r']), []).append(float(row[name]))
    return grouped


def run_consistency(plan):
    """δ(K_{n,r}, E_V) y δ(K_n, E_V) contra la esperanza de Vorob'ev del
    oráculo en la grilla base; también δ(K_{n,r}, K_n)"""
    config = plan.config
    if config.stationary_base:
        raise HypothesisError(CONSISTENCY_STATIONARY.format(config.model))
    if not config.radius.has_density:
        raise HypothesisError(CONSISTENCY_RADIUS.format(config.radius))
    logger.info(EXPERIMENT_STARTED.format(plan.kind, config.provenance()))
    reference = vorobev_from_oracle(oracle_for(config), None, config.grid)
    base = config.grid.k

    def trial_rows(trial, snapshots):
        rows = []
        for n, k in plan.points():
            field = snapshots[n]
            kn = kovyazin_mean(field)
            knr = refine(k_nr(field, k), base)
            rows.append({
                'n': n, 'r': _mesh(k), 'trial': trial,
                'delta_knr': symm_diff_volume(knr, reference),
                'delta_kn': symm_diff_volume(kn, reference),
                'delta_knr_kn': symm_diff_volume(knr, kn),
                'alpha_star_nr': knr.thresholds.alpha_star,
                'lambda_n': field.mean_volume,
            })
        return rows

    rows = _run_trials(plan, trial_rows)
    summary = {'reference_regime': regime(reference.thresholds),
               'reference_plateau': reference.thresholds.plateau_flag}
    passed = None
    points = plan.points()
    if len(points) > 1:
        deltas = _by_point(rows, 'delta_knr')
        ordered = [deltas[(n, _mesh(k))] for n, k in points]
        medians = [_median(values) for values in ordered]
        errors = [_standard_error(values) for values in ordered]
        factor = app_settings.get('VOROBEV_CONSISTENCY_FACTOR')
        improves = medians[-1] < factor * medians[0]
        monotone = all(later <= earlier + error
                       for earlier, later, error in zip(medians, medians[1:], errors[1:]))
        summary.update({'medians': medians, 'standard_errors': errors,
                        'improvement_factor': factor, 'improves': improves,
                        'non_increasing': monotone})
        passed = improves and monotone
    logger.info(EXPERIMENT_FINISHED.format(plan.kind, len(rows), passed))
    return ExperimentResult(plan.kind, CONSISTENCY_COLUMNS, rows, summary, passed)


def rate_bound(n, r, kappa, eps, curve, alpha):
    """r^κ + 2 exp(-2 n ε²) + F(α - ε) - F(α + ε)"""
    alpha, eps = as_level(alpha), as_level(eps)
    plateau = curve.exact(alpha - eps) - curve.exact(alpha + eps)
    return float(r) ** kappa + 2.0 * math.exp(-2.0 * n * float(eps) ** 2) + float(plateau)


def best_rate_bound(n, r, kappa, eps_grid, curve, alpha):
    """(cota mínima, ε que la alcanza) sobre la grilla de ε"""
    return min((rate_bound(n, r, kappa, eps, curve, alpha), eps) for eps in eps_grid)


def run_rate_check(plan):
    """Media de Monte Carlo de δ(Q^r_{n,α}, Q_α) contra la cota
    r^κ + 2e^{-2nε²} + F(α-ε) - F(α+ε) minimizada en ε"""
    config = plan.config
    logger.info(EXPERIMENT_STARTED.format(plan.kind, config.provenance()))
    oracle_field = _oracle_field(plan)
    curve = survival_curve(oracle_field)
    alpha = as_level(plan.alpha)
    target = level_set(oracle_field, alpha)
    plateau = curve.jump(alpha) > 0
    if plateau:
        logger.warning(RATE_PLATEAU_WARNING.format(float(alpha)))
    base = config.grid.k

    def trial_rows(trial, snapshots):
        return [{'n': n, 'r': _mesh(k), 'trial': trial,
                 'delta': symm_diff_volume(refine(level_set_grid(snapshots[n], alpha, k), base), target)}
                for n, k in plan.points()]

    deltas = _by_point(_run_trials(plan, trial_rows), 'delta')
    slack = app_settings.get('VOROBEV_RATE_SLACK_SE')
    rows = []
    for n, k in plan.points():
        values = deltas[(n, _mesh(k))]
        mean, error = float(np.mean(values)), _standard_error(values)
        bound, eps = best_rate_bound(n, _mesh(k), plan.kappa, plan.eps_grid, curve, alpha)
        rows.append({'n': n, 'r': _mesh(k), 'alpha': alpha, 'mc_mean_delta': mean, 'mc_se': error,
                     'best_bound': bound, 'eps_star': eps,
                     'bound_satisfied': mean <= bound + slack * error,
                     'plateau_warning': plateau})
    passed = all(row['bound_satisfied'] for row in rows)
    summary = {'slack_standard_errors': slack, 'quantization_bits': oracle_field.bits,
               'plateau_warning': plateau}
    summary.update(oracle_field.quadrature)
    logger.info(EXPERIMENT_FINISHED.format(plan.kind, len(rows), passed))
    return ExperimentResult(plan.kind, RATE_COLUMNS, rows, summary, passed)


def run_bracket(plan):
    """α*_{n,r} contra el intervalo [α* - tol, β* + tol] de la curva del
    oráculo"""
    config = plan.config
    logger.info(EXPERIMENT_STARTED.format(plan.kind, config.provenance()))
    oracle_field = _oracle_field(plan)
    report = threshold_report(survival_curve(oracle_field), oracle_field.integral())
    tolerance = Fraction(app_settings.get('VOROBEV_BRACKET_TOLERANCE'))
    low, high = report.alpha_star - tolerance, report.beta_star + tolerance

    def trial_rows(trial, snapshots):
        rows = []
        for n, k in plan.points():
            estimate = alpha_star_nr(snapshots[n], k)
            rows.append({'n': n, 'r': _mesh(k), 'trial': trial, 'alpha_star_nr': estimate,
                         'alpha_star': report.alpha_star, 'beta_star': report.beta_star,
                         'inside': low <= estimate <= high})
        return rows

    rows = _run_trials(plan, trial_rows)
    inside = _by_point(rows, 'inside')
    fractions = {'{}:{}'.format(n, k): float(np.mean(inside[(n, _mesh(k))])) for n, k in plan.points()}
    required = app_settings.get('VOROBEV_BRACKET_FRACTION')
    passed = all(value >= required for value in fractions.values())
    summary = {'alpha_star': report.alpha_star, 'beta_star': report.beta_star,
               'plateau_flag': report.plateau_flag, 'regime': regime(report),
               'tolerance': tolerance, 'required_fraction': required, 'fractions': fractions,
               'quantization_bits': oracle_field.bits}
    logger.info(EXPERIMENT_FINISHED.format(plan.kind, len(rows), passed))
    return ExperimentResult(plan.kind, BRACKET_COLUMNS, rows, summary, passed)


def run_fcurve(plan):
    """F_n empírica de n_max réplicas del ensayo 0 junto a F del oráculo"""
    config = plan.config
    logger.info(EXPERIMENT_STARTED.format(plan.kind, config.provenance()))
    field = coverage_snapshots(config, 0, [plan.max_n])[plan.max_n]
    empirical = survival_curve(field)
    oracle = survival_curve(_oracle_field(plan))
    alphas = set(Fraction(i, FCURVE_POINTS - 1) for i in range(FCURVE_POINTS))
    alphas.update(alpha for alpha, _ in empirical.breakpoints())
    rows = [{'alpha': alpha, 'F_emp': empirical.exact(alpha), 'F_oracle': oracle.exact(alpha)}
            for alpha in sorted(alphas)]
    summary = {'n': plan.max_n, 'lambda_n': field.mean_volume,
               'empirical': threshold_report(empirical, field.mean_volume)._asdict()}
    logger.info(EXPERIMENT_FINISHED.format(plan.kind, len(rows), None))
    return ExperimentResult(plan.kind, FCURVE_COLUMNS, rows, summary)


def run_boxdim(plan):
    """Box-counting del borde del conjunto de nivel Q_α del oráculo"""
    config = plan.config
    logger.info(EXPERIMENT_STARTED.format(plan.kind, config.provenance()))
    region = level_set(_oracle_field(plan), as_level(plan.alpha))
    report = box_count_report(boundary_cells(region), plan.mesh_levels)
    rows = list(report.csv_rows())
    summary = {'slope_estimate': report.slope_estimate, 'rss': report.rss,
               'fit_range': report.fit_range, 'alpha': plan.alpha}
    logger.info(EXPERIMENT_FINISHED.format(plan.kind, len(rows), None))
    return ExperimentResult(plan.kind, BOXDIM_COLUMNS, rows, summary)


RUNNERS = {
    plans.CONSISTENCY: run_consistency,
    plans.RATE_CHECK: run_rate_check,
    plans.BRACKET: run_bracket,
    plans.FCURVE: run_fcurve,
    plans.BOXDIM: run_boxdim,
}


def run_plan(plan):
    return RUNNERS[plan.kind](plan)
