#! coding: utf-8
from fractions import Fraction
from functools import reduce
from math import ceil, floor, gcd

import numpy as np

from django_vorobev.strings import CURVE_ALPHAS_ERROR, CURVE_VOLUMES_ERROR
from .fields import as_level

INT64_LIMIT = 2 ** 62


def _lcm(first, second):
    return first * second // gcd(first, second)


def _integers(values):
    """Array de enteros; cae a dtype object si no entra en int64"""
    values = [int(value) for value in values]
    if all(-INT64_LIMIT < value < INT64_LIMIT for value in values):
        return np.array(values, dtype=np.int64)
    return np.array(values, dtype=object)


class SurvivalCurve(object):
    """Función escalonada F(α) = λ{p > α}, no creciente y continua a derecha.

    Se guarda en forma exacta: el tramo i vale tails[i] · unit sobre
    [numerators[i] / denominator, numerators[i+1] / denominator), el último
    tramo llega hasta 1 (excluido) y F(α) = 0 para α ≥ 1. Para α < 0 vale
    `total` · unit, el volumen del soporte.
    """

    def __init__(self, numerators, denominator, tails, unit, total=None):
        self.numerators = _integers(numerators)
        self.denominator = int(denominator)
        self.tails = _integers(tails)
        self.unit = Fraction(unit)
        self.total = int(self.tails[0] if total is None else total)
        if not len(self.numerators) or self.numerators[0] != 0 \
                or np.any(np.diff(self.numerators) <= 0) \
                or self.numerators[-1] >= self.denominator:
            raise ValueError(CURVE_ALPHAS_ERROR)
        if len(self.tails) != len(self.numerators) or np.any(np.diff(self.tails) > 0) \
                or self.tails[-1] < 0 or self.total < self.tails[0]:
            raise ValueError(CURVE_VOLUMES_ERROR)

    @classmethod
    def from_field(cls, field):
        """Curva exacta de un LevelField: tramos en 0 y en cada valor
        distinto del campo estrictamente entre 0 y 1"""
        values = field.values.ravel()
        distinct, counts = np.unique(values, return_counts=True)
        cumulative = np.cumsum(counts)
        interior = distinct[(distinct > 0) & (distinct < field.denominator)]
        alphas = np.concatenate([np.zeros(1, dtype=np.int64), interior])
        below = np.searchsorted(distinct, alphas, side='right')
        at_most = np.where(below > 0, cumulative[np.maximum(below - 1, 0)], 0)
        tails = values.size - at_most
        return cls(alphas, field.denominator, tails, field.grid.cell_volume,
                   total=values.size)

    @classmethod
    def from_breakpoints(cls, breakpoints, total=None):
        """Curva a partir de pares (α_i, F_i) con α_0 = 0"""
        alphas = [as_level(alpha) for alpha, _ in breakpoints]
        volumes = [Fraction(value) for _, value in breakpoints]
        if total is not None:
            volumes.append(Fraction(total))
        denominator = reduce(_lcm, (alpha.denominator for alpha in alphas), 1)
        scale = reduce(_lcm, (value.denominator for value in volumes), 1)
        if total is not None:
            total = volumes.pop() * scale
        return cls([alpha * denominator for alpha in alphas], denominator,
                   [value * scale for value in volumes], Fraction(1, scale), total=total)

    def _piece_at(self, numerator_bound):
        """Índice del último tramo que arranca en o antes de numerator_bound"""
        return int(np.searchsorted(self.numerators, numerator_bound, side='right')) - 1

    def exact(self, alpha):
        """F(α) exacto"""
        alpha = as_level(alpha)
        if alpha >= 1:
            return Fraction(0)
        if alpha < 0:
            return self.total * self.unit
        piece = self._piece_at(floor(alpha * self.denominator))
        return int(self.tails[piece]) * self.unit

    def __call__(self, alpha):
        return float(self.exact(alpha))

    def left_limit(self, alpha):
        """F(α⁻) = λ{p ≥ α}"""
        alpha = as_level(alpha)
        if alpha <= 0:
            return self.total * self.unit
        if alpha > 1:
            return Fraction(0)
        piece = self._piece_at(ceil(alpha * self.denominator) - 1)
        return int(self.tails[piece]) * self.unit

    def jump(self, alpha):
        """λ{p = α} = F(α⁻) - F(α)"""
        return self.left_limit(alpha) - self.exact(alpha)

    def alpha(self, piece):
        return Fraction(int(self.numerators[piece]), self.denominator)

    def volume(self, piece):
        return int(self.tails[piece]) * self.unit

    def __len__(self):
        return len(self.numerators)

    def breakpoints(self):
        """Pares exactos (α_i, F(α_i)), más (1, 0)"""
        points = [(self.alpha(piece), self.volume(piece)) for piece in range(len(self))]
        points.append((Fraction(1), Fraction(0)))
        return points

    def csv_rows(self):
        for alpha, value in self.breakpoints():
            yield {'alpha': float(alpha), 'F': float(value)}

    def __repr__(self):
        return 'SurvivalCurve(pieces={})'.format(len(self))
