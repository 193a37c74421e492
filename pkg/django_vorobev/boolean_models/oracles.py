#! coding: utf-8
"""Funciones de cobertura analíticas de los modelos booleanos.

Estacionario: p ≡ c = 1 - exp(-m κ_d E R^d). No estacionario:
p(x) = 1 - exp(-φ(x)) con φ(x) = ∫_{[0,1]^d} P(R > |x - y|) m(y) dy,
aproximada por la regla del punto medio en una grilla de nivel Q. Átomos:
p(x) = 1 - exp(-φ(x)) Π (1 - q_i) sobre los átomos cuya bola cerrada
contiene a x.
"""
import itertools
import logging
import math

import numpy as np
from scipy.signal import fftconvolve

from django_vorobev import app_settings
from django_vorobev.coverage import CoverageOracle
from django_vorobev.exceptions import HypothesisError
from django_vorobev.strings import NOT_STATIONARY_ERROR, QUADRATURE_NOT_CONVERGED
from .config import STATIONARY
from .laws import ball_volume

logger = logging.getLogger(__name__)


def stationary_phi(config):
    """m κ_d E(R^d): φ constante de una base estacionaria"""
    return config.intensity.m * ball_volume(config.d) * config.radius.moment(config.d)


def analytic_coverage_stationary(config):
    """c_{m,d} = 1 - exp(-m κ_d E(R^d))"""
    if config.model != STATIONARY:
        raise HypothesisError(NOT_STATIONARY_ERROR.format(config.model))
    return 1.0 - math.exp(-stationary_phi(config))


def _support_axes(x, reach, level):
    n = 2 ** level
    axes = []
    for coordinate in x:
        first = max(int(math.floor((coordinate - reach) * n)) - 1, 0)
        last = min(int(math.ceil((coordinate + reach) * n)) + 1, n)
        axes.append((np.arange(first, last) + 0.5) / n)
    return axes


def phi(x, config, level=None):
    """φ(x) por punto medio en el nivel Q, sumando sólo sobre la caja que
    contiene al soporte de P(R > |x - ·|)"""
    if config.stationary_base:
        return stationary_phi(config)
    level = config.quadrature_level if level is None else level
    x = np.asarray(x, dtype=np.float64)
    axes = _support_axes(x, config.radius.r_max, level)
    if any(not len(axis) for axis in axes):
        return 0.0
    mesh = np.meshgrid(*axes, indexing='ij', sparse=True)
    distance = np.sqrt(sum((axis - coordinate) ** 2 for axis, coordinate in zip(mesh, x)))
    integrand = config.radius.tail(distance) * config.intensity.density(*mesh)
    return float(integrand.sum(dtype=np.float64)) / 2 ** (level * config.d)


def _phi_on_grid(config, grid, level):
    """φ en los centros de celda de `grid` con cuadratura de nivel `level`.

    Los nodos finos se separan en s^d fases (s = 2^{level - k}); cada fase es
    una grilla del mismo tamaño que la de salida y su aporte es una
    convolución con el núcleo P(R > |desplazamiento|).
    """
    d, n = grid.d, grid.cells_per_axis
    step = 2 ** (level - grid.k)
    h = 1.0 / 2 ** level
    center = (step - 1) / 2.0
    reach = min(int(math.ceil(config.radius.r_max / (step * h))) + 1, n)
    shifts = np.arange(-reach, reach + 1)
    total = np.zeros(grid.shape)
    window = (slice(reach, reach + n),) * d
    for phase in itertools.product(range(step), repeat=d):
        axes = [(np.arange(n) * step + offset + 0.5) * h for offset in phase]
        density = np.broadcast_to(
            config.intensity.density(*np.meshgrid(*axes, indexing='ij', sparse=True)), grid.shape)
        if not np.any(density):
            continue
        offsets = [(shifts * step + center - offset) * h for offset in phase]
        mesh = np.meshgrid(*offsets, indexing='ij', sparse=True)
        kernel = config.radius.tail(np.sqrt(sum(axis * axis for axis in mesh)))
        total += fftconvolve(density, kernel, mode='full')[window]
    return np.clip(total * h ** d, 0.0, None)


def phi_field(config, grid, level=None):
    """φ sobre toda la grilla con chequeo de Richardson: se repite la
    cuadratura con la mitad de resolución y se registra la diferencia"""
    tolerance = app_settings.get('VOROBEV_QUADRATURE_TOLERANCE')
    if config.stationary_base:
        values = np.full(grid.shape, stationary_phi(config))
        return values, {'quadrature_level': None, 'richardson_difference': 0.0,
                        'quadrature_tolerance': tolerance, 'quadrature_converged': True}
    level = max(config.quadrature_level if level is None else level, grid.k)
    values = _phi_on_grid(config, grid, level)
    difference = None
    if level - 1 >= grid.k:
        coarse = _phi_on_grid(config, grid, level - 1)
        difference = float(np.max(np.abs(values - coarse))) if values.size else 0.0
    converged = difference is None or difference <= tolerance
    if not converged:
        logger.warning(QUADRATURE_NOT_CONVERGED.format(level, difference, tolerance))
    return values, {'quadrature_level': level, 'richardson_difference': difference,
                    'quadrature_tolerance': tolerance, 'quadrature_converged': converged}


def atom_factor(config, *axes):
    """Π (1 - q_i) sobre los átomos cuya bola cerrada contiene al punto"""
    factor = 1.0
    for atom in config.atoms:
        distance2 = sum((np.asarray(axis) - c) ** 2 for axis, c in zip(axes, atom.center))
        factor = factor * np.where(distance2 <= atom.radius ** 2, 1.0 - atom.q, 1.0)
    return factor


def analytic_coverage(x, config):
    """p(x) en un punto o en un array (N, d) de puntos"""
    points = np.asarray(x, dtype=np.float64)
    single = points.ndim == 1
    points = np.atleast_2d(points)
    if config.stationary_base:
        base = np.full(len(points), stationary_phi(config))
    else:
        base = np.array([phi(point, config) for point in points])
    values = 1.0 - np.exp(-base) * atom_factor(config, *points.T)
    return float(values[0]) if single else values


def coverage_field(config, grid, level=None):
    """p en los centros de celda de `grid`, con metadatos de cuadratura"""
    values, quadrature = phi_field(config, grid, level)
    centers = np.meshgrid(*([grid.cell_centers()] * grid.d), indexing='ij', sparse=True)
    return 1.0 - np.exp(-values) * atom_factor(config, *centers), quadrature


def oracle_for(config):
    return CoverageOracle(lambda points: analytic_coverage(points, config),
                          config.provenance(),
                          field_sampler=lambda grid: coverage_field(config, grid))
