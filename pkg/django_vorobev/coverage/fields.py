#! coding: utf-8
from fractions import Fraction
from math import ceil, floor

import numpy as np

from django_vorobev.exceptions import GridMismatchError
from django_vorobev.grid.masks import check_same_grid
from django_vorobev.strings import COUNTS_RANGE_ERROR, EMPTY_REPLICATES, \
    GRID_MISMATCH


def as_level(value):
    """Fraction exacta de un nivel α. Los float se toman por su representación
    decimal más corta, así 0.3 es 3/10 y no 5404319552844595/2^54"""
    if isinstance(value, (float, np.floating)):
        return Fraction(repr(float(value)))
    return Fraction(value)


class LevelField(object):
    """Campo por celda con valores racionales values / denominator en [0, 1].

    Es la base común del p_n empírico (denominador n) y de los campos de
    oráculo cuantizados (denominador 2^bits). Guardar enteros evita empates
    ambiguos al umbralizar en α = j / n.
    """

    def __init__(self, grid, values, denominator):
        values = np.array(values, dtype=np.int64)
        if values.shape != grid.shape:
            raise ValueError(COUNTS_RANGE_ERROR.format(values.shape, grid))
        if values.size and (values.min() < 0 or values.max() > denominator):
            raise ValueError(COUNTS_RANGE_ERROR.format((values.min(), values.max()), denominator))
        values.setflags(write=False)
        self.grid = grid
        self.values = values
        self.denominator = int(denominator)

    def strict_cells(self, alpha):
        """{valor > α}"""
        return self.values > floor(as_level(alpha) * self.denominator)

    def weak_cells(self, alpha):
        """{valor ≥ α}"""
        return self.values >= ceil(as_level(alpha) * self.denominator)

    def level_cells(self, alpha, strict=True):
        if strict:
            return self.strict_cells(alpha)
        return self.weak_cells(alpha)

    def value_at(self, index):
        return Fraction(int(self.values[tuple(index)]), self.denominator)

    def integral(self):
        """∫ p dλ en aritmética racional"""
        return Fraction(int(self.values.sum(dtype=np.int64)),
                        self.denominator * self.grid.cell_count)

    def probabilities(self):
        return self.values / float(self.denominator)

    def coarsen(self, k):
        """Campo en el nivel k muestreado en los puntos de anclaje: sus
        conjuntos de nivel son las aproximaciones de grilla de los
        conjuntos de nivel del campo base"""
        step = self.grid.block_size(k)
        window = (slice(None, None, step),) * self.grid.d
        return self._with(self.grid.at_level(k), self.values[window])

    def _with(self, grid, values):
        return LevelField(grid, values, self.denominator)


class CoverageField(LevelField):
    """Cantidad de réplicas que cubren cada celda; aloja p_n y Λ_n.

    Λ_n se fija en la grilla base y se conserva al pasar a niveles más
    gruesos con `coarsen`.
    """

    def __init__(self, grid, counts, n, covered_cells=None, mean_volume=None):
        super(CoverageField, self).__init__(grid, counts, n)
        self.n = int(n)
        if covered_cells is None:
            covered_cells = int(self.values.sum(dtype=np.int64))
        self.covered_cells = int(covered_cells)
        if mean_volume is None:
            mean_volume = Fraction(self.covered_cells, self.n * self.grid.cell_count)
        self._mean_volume = Fraction(mean_volume)

    @property
    def counts(self):
        return self.values

    @property
    def mean_volume(self):
        """Λ_n: media de los volúmenes de las réplicas"""
        return self._mean_volume

    def _with(self, grid, values):
        return CoverageField(grid, values, self.n, mean_volume=self._mean_volume)


class CoverageAccumulator(object):
    """Reducción entera y conmutativa de réplicas en un CoverageField"""

    def __init__(self, grid):
        self.grid = grid
        self.counts = np.zeros(grid.shape, dtype=np.int64)
        self.n = 0
        self.covered_cells = 0

    def add(self, mask):
        if mask.grid != self.grid:
            raise GridMismatchError(GRID_MISMATCH.format(self.grid, mask.grid))
        return self.add_cells(mask.cells())

    def add_cells(self, cells):
        self.counts += cells
        self.covered_cells += int(np.count_nonzero(cells))
        self.n += 1
        return self

    def merge(self, other):
        if other.grid != self.grid:
            raise GridMismatchError(GRID_MISMATCH.format(self.grid, other.grid))
        self.counts += other.counts
        self.n += other.n
        self.covered_cells += other.covered_cells
        return self

    def field(self):
        if not self.n:
            raise ValueError(EMPTY_REPLICATES)
        return CoverageField(self.grid, self.counts, self.n, covered_cells=self.covered_cells)


def _checked(masks):
    masks = list(masks)
    if not masks:
        raise ValueError(EMPTY_REPLICATES)
    for mask in masks[1:]:
        check_same_grid(masks[0], mask)
    return masks


def accumulate(masks):
    """p_n a partir de réplicas en una grilla común"""
    masks = _checked(masks)
    accumulator = CoverageAccumulator(masks[0].grid)
    for mask in masks:
        accumulator.add(mask)
    return accumulator.field()


def empirical_mean_volume(masks):
    """Λ_n = (1/n) Σ λ(X_i), exacto"""
    masks = _checked(masks)
    return sum((mask.exact_volume for mask in masks), Fraction(0)) / len(masks)

