#! coding: utf-8
"""Dimensión de box-counting superior de bordes rasterizados y chequeo del
error de discretización δ(B^r, B) ≤ r^{d - dim - eps}."""
import logging
import math
from collections import namedtuple
from fractions import Fraction

import numpy as np

from django_vorobev.exceptions import InsufficientScalesError
from django_vorobev.grid import approximation_error, boundary_cells
from django_vorobev.strings import BOUND_EXPONENT_ERROR, EMPTY_BOUNDARY, \
    INSUFFICIENT_SCALES, NO_LEVELS_ERROR

logger = logging.getLogger(__name__)

MIN_SCALES = 3

BoxCountRow = namedtuple('BoxCountRow', ['k', 'r', 'count'])
SlopeFit = namedtuple('SlopeFit', ['slope', 'rss', 'fit_range'])
DiscretizationRow = namedtuple('DiscretizationRow', ['k', 'r', 'delta', 'bound', 'satisfied'])


class BoxCountReport(object):

    def __init__(self, rows, slope_estimate, rss, fit_range):
        self.rows = rows
        self.slope_estimate = slope_estimate
        self.rss = rss
        self.fit_range = fit_range

    def csv_rows(self):
        for row in self.rows:
            yield {
                'k': row.k,
                'r': float(row.r),
                'N_r': row.count,
                'log2_N_r': math.log2(row.count) if row.count else float('-inf'),
            }

    def summary(self):
        return 'slope={:.9g} rss={:.9g} fit_range={}-{}'.format(
            self.slope_estimate, self.rss, *self.fit_range)


def box_counts(boundary, levels):
    """N_r para cada nivel: celdas de nivel k que contienen alguna celda base
    encendida del borde"""
    levels = sorted(set(levels))
    if not levels:
        raise ValueError(NO_LEVELS_ERROR)
    cells = boundary.cells()
    d = boundary.grid.d
    rows = []
    for k in levels:
        step = boundary.grid.block_size(k)
        n = 2 ** k
        blocks = cells.reshape((n, step) * d).any(axis=tuple(range(1, 2 * d, 2)))
        rows.append(BoxCountRow(k, Fraction(1, n), int(np.count_nonzero(blocks))))
    return rows


def default_fit_range(levels):
    """Excluye los dos niveles más gruesos (saturan) y el más fino
    (contaminado por el raster)"""
    levels = sorted(set(levels))
    trimmed = levels[2:-1]
    if len(trimmed) < MIN_SCALES:
        trimmed = levels
    return trimmed[0], trimmed[-1]


def estimate_box_dim(rows, fit_range=None):
    """Pendiente de mínimos cuadrados de log N_r contra -log r = k log 2"""
    if fit_range is None:
        fit_range = default_fit_range([row.k for row in rows])
    usable = [row for row in rows
              if fit_range[0] <= row.k <= fit_range[1] and row.count >= 1]
    if len(usable) < MIN_SCALES:
        raise InsufficientScalesError(INSUFFICIENT_SCALES.format(len(usable)))
    x = np.array([row.k * math.log(2) for row in usable])
    y = np.log(np.array([row.count for row in usable], dtype=np.float64))
    slope, intercept = np.polyfit(x, y, 1)
    residuals = y - (slope * x + intercept)
    return SlopeFit(float(slope), float(np.sum(residuals ** 2)), tuple(fit_range))


def box_count_report(boundary, levels, fit_range=None):
    rows = box_counts(boundary, levels)
    fit = estimate_box_dim(rows, fit_range)
    slope = min(max(fit.slope, 0.0), float(boundary.grid.d))
    return BoxCountReport(rows, slope, fit.rss, fit.fit_range)


def boundary_dimension(region, levels, fit_range=None):
    """dim̂ del borde discreto de una Mask; 0 si el borde es vacío"""
    boundary = boundary_cells(region)
    if not boundary.count:
        logger.info(EMPTY_BOUNDARY)
        return 0.0
    return box_count_report(boundary, levels, fit_range).slope_estimate


def check_prop1(region, levels, eps, dim_hat=None):
    """Tabla (k, r, δ(B^r, B), r^{d - dim̂ - eps}) con la marca de filas en
    que la cota se cumple. Que falle en r gruesos es esperable."""
    if eps <= 0:
        raise ValueError(BOUND_EXPONENT_ERROR.format(eps))
    if dim_hat is None:
        dim_hat = boundary_dimension(region, levels)
    exponent = region.grid.d - dim_hat - eps
    if exponent <= 0:
        raise ValueError(BOUND_EXPONENT_ERROR.format(exponent))
    rows = []
    for k in sorted(set(levels)):
        r = Fraction(1, 2 ** k)
        delta = approximation_error(region, k)
        bound = float(r) ** exponent
        rows.append(DiscretizationRow(k, r, delta, bound, delta <= bound))
    return rows
