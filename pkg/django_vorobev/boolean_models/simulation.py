#! coding: utf-8
import logging

import numpy as np

from django_vorobev.grid import Mask, paint_ball
from django_vorobev.strings import REPLICATE_SIMULATED
from .rng import substream

logger = logging.getLogger(__name__)


def sample_germ_count_and_positions(config, window, rng):
    """Proceso de Poisson de intensidad m sobre la ventana cúbica: cantidad
    Poisson(‖m‖) y posiciones i.i.d. con densidad m / ‖m‖"""
    mass = config.intensity.total_mass(window, config.d)
    if mass <= 0:
        return np.empty((0, config.d))
    count = int(rng.poisson(mass))
    return config.intensity.sample(rng, count, window, config.d)


def simulate_cells(config, index, grid=None):
    """Réplica `index` como array booleano de celdas. El orden de consumo
    del subflujo es fijo: gérmenes, radios y luego los ensayos de Bernoulli
    de los átomos"""
    grid = config.grid if grid is None else grid
    rng = substream(config.seed, index)
    germs = sample_germ_count_and_positions(config, config.germ_window(), rng)
    radii = config.radius.sample(rng, len(germs))
    cells = np.zeros(grid.shape, dtype=bool)
    for center, radius in zip(germs, radii):
        paint_ball(cells, grid, center, radius)
    if config.atoms:
        successes = rng.random(len(config.atoms)) < np.array([atom.q for atom in config.atoms])
        for atom, success in zip(config.atoms, successes):
            if success:
                paint_ball(cells, grid, atom.center, atom.radius)
    logger.debug(REPLICATE_SIMULATED.format(index, len(germs)))
    return cells


def simulate(config, index, grid=None):
    """X_i = (∪ B(x, R_x) ∪ átomos activos) ∩ [0,1]^d rasterizado; determinado
    por (semilla, índice de réplica)"""
    grid = config.grid if grid is None else grid
    return Mask.from_cells(grid, simulate_cells(config, index, grid))
