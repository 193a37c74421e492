#! coding: utf-8
from fractions import Fraction

import numpy as np

from django_vorobev.exceptions import ResolutionError
from django_vorobev.strings import GRID_DIMENSION_ERROR, GRID_IMMUTABLE, \
    GRID_LEVEL_ERROR, GRID_SIZE_ERROR, MESH_LEVEL_ERROR

MAX_DIMENSION = 3

# 2^30 celdas: límite direccionable de los arrays de celdas y de los
# archivos VRBW (índices lineales de 32 bits con margen)
MAX_CELL_BITS = 30

DEFAULT_BASE_LEVELS = {1: 12, 2: 10, 3: 7}


class GridSpec(object):
    """Grilla diádica sobre [0,1]^d con malla r = 2^-k.

    Las celdas son los cubos semiabiertos [x, x+r)^d anclados en los puntos
    del reticulado rZ^d ∩ [0,1)^d. El índice lineal de una celda recorre el
    eje 0 más rápido (orden 'F' de numpy).
    """

    __slots__ = ('d', 'k')

    def __init__(self, d, k):
        d, k = int(d), int(k)
        if not 1 <= d <= MAX_DIMENSION:
            raise ValueError(GRID_DIMENSION_ERROR.format(d))
        if k < 0:
            raise ValueError(GRID_LEVEL_ERROR.format(k))
        if k * d > MAX_CELL_BITS:
            raise ValueError(GRID_SIZE_ERROR.format(d, k))
        object.__setattr__(self, 'd', d)
        object.__setattr__(self, 'k', k)

    def __setattr__(self, name, value):
        raise AttributeError(GRID_IMMUTABLE)

    @classmethod
    def base(cls, d, k=None):
        return cls(d, DEFAULT_BASE_LEVELS[d] if k is None else k)

    @property
    def mesh(self):
        return Fraction(1, 2 ** self.k)

    @property
    def cells_per_axis(self):
        return 2 ** self.k

    @property
    def cell_count(self):
        return 2 ** (self.k * self.d)

    @property
    def shape(self):
        return (self.cells_per_axis,) * self.d

    @property
    def cell_volume(self):
        return Fraction(1, self.cell_count)

    def at_level(self, k):
        return GridSpec(self.d, k)

    def block_size(self, k):
        """Cantidad de celdas base por eje en una celda de nivel k"""
        if k > self.k:
            raise ResolutionError(MESH_LEVEL_ERROR.format(k, self.k))
        return 2 ** (self.k - k)

    def cell_centers(self):
        """Coordenadas de los centros de celda sobre un eje"""
        return (np.arange(self.cells_per_axis) + 0.5) / self.cells_per_axis

    def __eq__(self, other):
        return isinstance(other, GridSpec) and (self.d, self.k) == (other.d, other.k)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.d, self.k))

    def __repr__(self):
        return 'GridSpec(d={}, k={})'.format(self.d, self.k)
