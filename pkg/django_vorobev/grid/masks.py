#! coding: utf-8
from fractions import Fraction
from math import ceil

import numpy as np

from django_vorobev.exceptions import FormatError, GridMismatchError
from django_vorobev.strings import GRID_MISMATCH, MASK_SHAPE_ERROR, \
    WEIGHTS_RANGE_ERROR

# Cantidad de bits encendidos por valor de byte
POPCOUNT = np.array([bin(value).count('1') for value in range(256)], dtype=np.uint8)


def packed_length(cell_count):
    return (cell_count + 7) // 8


def popcount(packed):
    return int(POPCOUNT[packed].sum(dtype=np.int64))


def check_same_grid(first, second):
    if first.grid != second.grid:
        raise GridMismatchError(GRID_MISMATCH.format(first.grid, second.grid))


def flatten(cells):
    """Aplana un array de celdas en orden lineal (eje 0 más rápido)"""
    return np.asarray(cells).ravel(order='F')


def unflatten(flat, grid):
    return np.asarray(flat).reshape(grid.shape, order='F')


class Mask(object):
    """Indicadora de una unión de celdas semiabiertas de una GridSpec.

    Los bits se guardan empaquetados (bit i, LSB primero dentro de cada
    byte, es la celda de índice lineal i). Es inmutable.
    """

    def __init__(self, grid, bits):
        bits = np.array(bits, dtype=np.uint8).ravel()
        if bits.shape != (packed_length(grid.cell_count),):
            raise FormatError(MASK_SHAPE_ERROR.format(bits.shape, grid))
        spare = grid.cell_count % 8
        if spare:
            bits[-1] &= (1 << spare) - 1
        bits.setflags(write=False)
        self.grid = grid
        self.bits = bits

    @classmethod
    def from_cells(cls, grid, cells):
        cells = np.asarray(cells, dtype=bool)
        if cells.shape != grid.shape:
            raise ValueError(MASK_SHAPE_ERROR.format(cells.shape, grid))
        return cls(grid, np.packbits(flatten(cells), bitorder='little'))

    @classmethod
    def empty(cls, grid):
        return cls(grid, np.zeros(packed_length(grid.cell_count), dtype=np.uint8))

    @classmethod
    def full(cls, grid):
        return cls(grid, np.full(packed_length(grid.cell_count), 255, dtype=np.uint8))

    @classmethod
    def from_box(cls, grid, lower, upper):
        """Aproximación de grilla de la caja [lower, upper): celdas cuyo
        punto de anclaje pertenece a la caja"""
        n = grid.cells_per_axis
        cells = np.zeros(grid.shape, dtype=bool)
        window = []
        for low, high in zip(lower, upper):
            first = min(max(ceil(Fraction(low) * n), 0), n)
            last = min(max(ceil(Fraction(high) * n), 0), n)
            window.append(slice(first, last))
        cells[tuple(window)] = True
        return cls.from_cells(grid, cells)

    def cells(self):
        flat = np.unpackbits(self.bits, count=self.grid.cell_count, bitorder='little')
        return unflatten(flat.astype(bool), self.grid)

    @property
    def count(self):
        return popcount(self.bits)

    @property
    def exact_volume(self):
        return Fraction(self.count, self.grid.cell_count)

    def weights(self):
        return self.cells().astype(np.float64)

    def union(self, other):
        check_same_grid(self, other)
        return Mask(self.grid, self.bits | other.bits)

    def intersection(self, other):
        check_same_grid(self, other)
        return Mask(self.grid, self.bits & other.bits)

    def complement(self):
        return Mask(self.grid, ~self.bits)

    def issubset(self, other):
        check_same_grid(self, other)
        return not np.any(self.bits & ~other.bits)

    def __eq__(self, other):
        return isinstance(other, Mask) and self.grid == other.grid \
            and np.array_equal(self.bits, other.bits)

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return 'Mask({!r}, count={})'.format(self.grid, self.count)


class WeightedMask(object):
    """Pesos por celda en [0, 1]. Aloja los estimadores K_n, K_{n,r} y la
    esperanza de Vorob'ev de referencia.

    `exact_volume` es el volumen en aritmética racional; los estimadores lo
    fijan al volumen objetivo. `thresholds` guarda el ThresholdReport con
    el que se construyó, si corresponde.
    """

    def __init__(self, grid, weights, exact_volume=None, thresholds=None):
        weights = np.array(weights, dtype=np.float64)
        if weights.shape != grid.shape:
            raise ValueError(MASK_SHAPE_ERROR.format(weights.shape, grid))
        if weights.size and (weights.min() < 0.0 or weights.max() > 1.0):
            raise ValueError(WEIGHTS_RANGE_ERROR)
        weights.setflags(write=False)
        self.grid = grid
        self.weights = weights
        if exact_volume is None:
            exact_volume = self._rational_volume()
        self.exact_volume = Fraction(exact_volume)
        self.thresholds = thresholds

    @classmethod
    def from_mask(cls, mask):
        return cls(mask.grid, mask.weights(), exact_volume=mask.exact_volume)

    def _rational_volume(self):
        ones = int(np.count_nonzero(self.weights == 1.0))
        partial = self.weights[(self.weights > 0.0) & (self.weights < 1.0)]
        total = Fraction(ones) + sum((Fraction(float(w)) for w in partial), Fraction(0))
        return total * self.grid.cell_volume

    @property
    def fractional_cells(self):
        return int(np.count_nonzero((self.weights > 0.0) & (self.weights < 1.0)))

    def support(self):
        """Celdas con peso positivo, como Mask"""
        return Mask.from_cells(self.grid, self.weights > 0.0)

    def core(self):
        """Celdas con peso 1, como Mask"""
        return Mask.from_cells(self.grid, self.weights == 1.0)

    def __repr__(self):
        return 'WeightedMask({!r}, volume={})'.format(self.grid, self.exact_volume)
