#! coding: utf-8
from fractions import Fraction
from math import ceil, floor

import numpy as np

from django_vorobev.exceptions import ResolutionError
from django_vorobev.strings import BOUNDARY_SIDE_ERROR, RADIUS_ERROR, REFINE_LEVEL_ERROR
from .masks import Mask, WeightedMask, check_same_grid, popcount

# Holgura para no perder centros de celda ubicados exactamente sobre la esfera
BALL_WINDOW_SLACK = 1e-9


def volume(region):
    """λ(A) para Mask o WeightedMask: Σ pesos · r^d"""
    return float(region.exact_volume)


def symm_diff_exact(first, second):
    """λ(A △ B) exacto para dos Mask de la misma grilla"""
    check_same_grid(first, second)
    return Fraction(popcount(first.bits ^ second.bits), first.grid.cell_count)


def symm_diff_volume(first, second):
    """Pseudo-distancia δ(A, B) = λ(A △ B).

    Para pesos se usa Σ |w_A - w_B| · r^d, que coincide con λ(A △ B) sobre
    indicadoras. Ambos argumentos deben compartir la grilla.
    """
    check_same_grid(first, second)
    if isinstance(first, Mask) and isinstance(second, Mask):
        return float(symm_diff_exact(first, second))
    difference = np.abs(_weights(first) - _weights(second)).sum(dtype=np.float64)
    return float(difference) / first.grid.cell_count


def _weights(region):
    if isinstance(region, Mask):
        return region.weights()
    return region.weights


def grid_approximation(region, k):
    """B^r: la celda [x, x+r)^d de nivel k se incluye si su punto de anclaje x
    está en B, es decir si la celda base que lo contiene está encendida"""
    step = region.grid.block_size(k)
    window = (slice(None, None, step),) * region.grid.d
    return Mask.from_cells(region.grid.at_level(k), region.cells()[window])


def refine(region, k):
    """Reexpresa una Mask o WeightedMask en el nivel más fino k (exacto)"""
    if k < region.grid.k:
        raise ResolutionError(REFINE_LEVEL_ERROR.format(region.grid.k, k))
    factor = 2 ** (k - region.grid.k)
    grid = region.grid.at_level(k)
    values = region.cells() if isinstance(region, Mask) else region.weights
    for axis in range(grid.d):
        values = np.repeat(values, factor, axis=axis)
    if isinstance(region, Mask):
        return Mask.from_cells(grid, values)
    return WeightedMask(grid, values, exact_volume=region.exact_volume,
                        thresholds=region.thresholds)


def approximation_error(region, k):
    """δ(B^r, B) medido en la resolución base de B"""
    coarse = grid_approximation(region, k)
    return symm_diff_volume(refine(coarse, region.grid.k), region)


def _ball_window(grid, center, radius):
    n = grid.cells_per_axis
    window, offsets = [], []
    for coordinate in center:
        first = max(int(ceil((coordinate - radius) * n - 0.5 - BALL_WINDOW_SLACK)), 0)
        last = min(int(floor((coordinate + radius) * n - 0.5 + BALL_WINDOW_SLACK)), n - 1)
        if first > last:
            return None
        window.append(slice(first, last + 1))
        offsets.append((np.arange(first, last + 1) + 0.5) / n - coordinate)
    return tuple(window), offsets


def paint_ball(cells, grid, center, radius):
    """Enciende, sobre un array de celdas, las celdas cuyo centro está en la
    bola cerrada B(center, radius). Modifica `cells` in place"""
    found = _ball_window(grid, center, radius)
    if found is None:
        return cells
    window, offsets = found
    axes = np.meshgrid(*offsets, indexing='ij', sparse=True)
    distance2 = sum(axis * axis for axis in axes)
    cells[window] |= distance2 <= radius * radius
    return cells


def rasterize_ball(center, radius, grid):
    if radius <= 0:
        raise ValueError(RADIUS_ERROR.format(radius))
    cells = np.zeros(grid.shape, dtype=bool)
    return Mask.from_cells(grid, paint_ball(cells, grid, center, radius))


def boundary_cells(region, side='both'):
    """Celdas con algún vecino por cara (dentro del cubo) de indicadora
    opuesta. side='inner' se queda con las encendidas, 'outer' con las
    apagadas"""
    if side not in ('both', 'inner', 'outer'):
        raise ValueError(BOUNDARY_SIDE_ERROR.format(side))
    cells = region.cells()
    edge = np.zeros_like(cells)
    d = region.grid.d
    for axis in range(d):
        lower = [slice(None)] * d
        upper = [slice(None)] * d
        lower[axis] = slice(None, -1)
        upper[axis] = slice(1, None)
        lower, upper = tuple(lower), tuple(upper)
        differ = cells[lower] != cells[upper]
        edge[lower] |= differ
        edge[upper] |= differ
    if side == 'inner':
        edge &= cells
    elif side == 'outer':
        edge &= ~cells
    return Mask.from_cells(region.grid, edge)
