#! coding: utf-8
import numpy as np

from django_vorobev.boolean_models import BooleanConfig, Constant, Dirac, SeparableBump, Uniform, \
    Atom, STATIONARY, NONSTATIONARY, ATOMS
from django_vorobev.grid import GridSpec, Mask


def two_strips(k=2):
    """A = [0, 0.5) × [0, 1) y B = [0.25, 0.75) × [0, 1)"""
    grid = GridSpec(2, k)
    return Mask.from_box(grid, (0, 0), (0.5, 1)), Mask.from_box(grid, (0.25, 0), (0.75, 1))


def random_masks(grid, count, seed=0, density=0.5):
    rng = np.random.default_rng(seed)
    return [Mask.from_cells(grid, rng.random(grid.shape) < density) for _ in range(count)]


def stationary_config(k=6, m=50.0, r0=0.1, **kwargs):
    return BooleanConfig(STATIONARY, Constant(m), Dirac(r0), GridSpec(2, k), **kwargs)


def nonstationary_config(k=6, **kwargs):
    return BooleanConfig(NONSTATIONARY, SeparableBump(5.0, 20.0), Uniform(0.05, 0.15),
                         GridSpec(2, k), **kwargs)


def single_atom_config(k=6, q=1.0, radius=0.25, m=0.0, **kwargs):
    return BooleanConfig(ATOMS, Constant(m), Uniform(0.05, 0.15), GridSpec(2, k),
                         atoms=[Atom((0.5, 0.5), radius, q)], **kwargs)
