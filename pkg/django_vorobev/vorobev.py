#! coding: utf-8
"""Umbrales α*, β*, la media de Kovyazin K_n, el estimador en grilla K_{n,r}
y la esperanza de Vorob'ev de referencia a partir de un oráculo."""
import logging
from collections import namedtuple
from fractions import Fraction
from math import ceil, floor

import numpy as np

from django_vorobev.coverage import SurvivalCurve
from django_vorobev.coverage.fields import CoverageField, as_level
from django_vorobev.grid import WeightedMask
from django_vorobev.grid.masks import check_same_grid, flatten, unflatten
from django_vorobev.strings import FILL_OVERFLOW, PLATEAU_DETECTED, TARGET_RANGE_ERROR

logger = logging.getLogger(__name__)

REGULAR = 'regular'
GAP = 'gap'

ThresholdReport = namedtuple('ThresholdReport', [
    'alpha_star', 'beta_star', 'target_volume', 'plateau_flag', 'beta_defined'])


def _target(target):
    target = as_level(target)
    if not 0 <= target <= 1:
        raise ValueError(TARGET_RANGE_ERROR.format(target))
    return target


def alpha_star(curve, target):
    """inf{α ∈ [0,1] : F(α) ≤ target}, exacto sobre los tramos de la curva"""
    bound = floor(_target(target) / curve.unit)
    below = np.flatnonzero(curve.tails <= bound)
    if not len(below):
        return Fraction(1)
    return curve.alpha(int(below[0]))


def _beta_star(curve, target):
    target = _target(target)
    if target <= 0:
        return Fraction(1), True
    bound = ceil(target / curve.unit)
    above = np.flatnonzero(curve.tails >= bound)
    if not len(above):
        return Fraction(0), False
    last = int(above[-1])
    if last + 1 < len(curve):
        return curve.alpha(last + 1), True
    return Fraction(1), True


def beta_star(curve, target):
    """sup{α ∈ [0,1] : F(α) ≥ target}. Si el conjunto es vacío devuelve 0;
    threshold_report lo marca con beta_defined = False"""
    return _beta_star(curve, target)[0]


def threshold_report(curve, target):
    target = _target(target)
    alpha = alpha_star(curve, target)
    beta, defined = _beta_star(curve, target)
    plateau = curve.jump(alpha) > 0
    if plateau:
        logger.debug(PLATEAU_DETECTED.format(float(alpha), float(curve.jump(alpha))))
    return ThresholdReport(alpha, beta, target, plateau, defined)


def regime(report):
    """'regular' si α* = β*, 'gap' si α* < β*"""
    return REGULAR if report.alpha_star == report.beta_star else GAP


def _field_target(field, target):
    if target is not None:
        return as_level(target)
    if isinstance(field, CoverageField):
        return field.mean_volume
    return field.integral()


def rank_and_fill(field, report):
    """Peso 1 sobre {p > α*}; las celdas con p = α* se agregan en orden de
    índice lineal hasta el volumen objetivo, con una única celda fraccionaria"""
    grid = field.grid
    strict = flatten(field.strict_cells(report.alpha_star))
    ties = np.flatnonzero(flatten(field.weak_cells(report.alpha_star)) & ~strict)
    need = report.target_volume * grid.cell_count - int(np.count_nonzero(strict))
    if need < 0 or need > len(ties):
        raise AssertionError(FILL_OVERFLOW.format(need, len(ties)))
    whole = floor(need)
    weights = strict.astype(np.float64)
    weights[ties[:whole]] = 1.0
    if need > whole:
        weights[ties[whole]] = float(need - whole)
    return WeightedMask(grid, unflatten(weights, grid),
                        exact_volume=report.target_volume, thresholds=report)


def vorobev_estimate(field, target=None):
    """Umbral por la curva exacta del campo y selección por rank-and-fill"""
    target = _field_target(field, target)
    report = threshold_report(SurvivalCurve.from_field(field), target)
    return rank_and_fill(field, report)


def alpha_star_nr(field, k, target=None):
    """α*_{n,r} = inf{α : λ({p_n > α}^r) ≤ Λ_n}"""
    target = _field_target(field, target)
    return alpha_star(SurvivalCurve.from_field(field.coarsen(k)), target)


def kovyazin_mean(field, target=None):
    """K_n: λ(K_n) = Λ_n y {p_n > α*_n} ⊂ K_n ⊂ {p_n ≥ α*_n}"""
    return vorobev_estimate(field, target)


def k_nr(field, k, target=None):
    """K_{n,r} en el nivel k, construido sobre el campo muestreado en los
    anclajes, con volumen exacto Λ_n"""
    target = _field_target(field, target)
    return vorobev_estimate(field.coarsen(k), target)


def vorobev_from_oracle(oracle, mean_volume, grid, bits=None):
    """E_V(X) de referencia con volumen objetivo mean_volume. Con None se usa
    la fórmula de Robbins sobre el oráculo muestreado"""
    field = oracle.sample(grid, bits)
    if mean_volume is None:
        mean_volume = field.integral()
    return vorobev_estimate(field, mean_volume)


def vorobev_deviation(region, field):
    """(1/n) Σ δ(B, X_i) calculado sobre el campo de cobertura:
    Σ_c r^d [p_c + w_c (1 - 2 p_c)]"""
    check_same_grid(region, field)
    p = field.probabilities()
    w = region.weights if isinstance(region, WeightedMask) else region.weights()
    return float((p + w * (1.0 - 2.0 * p)).sum(dtype=np.float64)) / field.grid.cell_count
