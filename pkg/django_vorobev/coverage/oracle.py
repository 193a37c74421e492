#! coding: utf-8
import logging
from fractions import Fraction

import numpy as np

from django_vorobev import app_settings
from django_vorobev.strings import ORACLE_GRID_REQUIRED, ORACLE_RANGE_ERROR, ORACLE_SAMPLED
from .fields import LevelField

logger = logging.getLogger(__name__)

# Tolerancia de redondeo antes de considerar un valor fuera de [0, 1]
RANGE_SLACK = 1e-9


def quantize(probabilities, bits):
    """Enteros en [0, 2^bits] con el valor más cercano a p · 2^bits"""
    probabilities = np.asarray(probabilities, dtype=np.float64)
    if probabilities.size and (probabilities.min() < -RANGE_SLACK
                               or probabilities.max() > 1 + RANGE_SLACK):
        raise ValueError(ORACLE_RANGE_ERROR.format(probabilities.min(), probabilities.max()))
    denominator = 2 ** bits
    return np.clip(np.rint(probabilities * denominator), 0, denominator).astype(np.int64)


class OracleField(LevelField):
    """Función de cobertura analítica muestreada en los centros de celda y
    cuantizada a una resolución 2^-bits"""

    def __init__(self, grid, values, bits, provenance=None, quadrature=None):
        super(OracleField, self).__init__(grid, values, 2 ** bits)
        self.bits = bits
        self.provenance = provenance
        self.quadrature = quadrature or {}

    @property
    def resolution(self):
        return Fraction(1, self.denominator)

    def _with(self, grid, values):
        return OracleField(grid, values, self.bits, self.provenance, self.quadrature)


class CoverageOracle(object):
    """p(x) = P(x ∈ X) de un modelo con fórmula cerrada.

    `evaluator` recibe un array de puntos (N, d) y devuelve N probabilidades.
    `field_sampler`, si está, evalúa p en todos los centros de una grilla
    de una sola vez y devuelve (valores, metadatos de cuadratura).
    """

    def __init__(self, evaluator, provenance, field_sampler=None):
        self.evaluator = evaluator
        self.provenance = provenance
        self.field_sampler = field_sampler

    def __call__(self, points):
        points = np.atleast_2d(np.asarray(points, dtype=np.float64))
        return np.asarray(self.evaluator(points), dtype=np.float64)

    def probabilities(self, grid):
        if self.field_sampler is not None:
            return self.field_sampler(grid)
        centers = grid.cell_centers()
        axes = np.meshgrid(*([centers] * grid.d), indexing='ij')
        points = np.stack([axis.ravel() for axis in axes], axis=-1)
        return self(points).reshape(grid.shape), {}

    def sample(self, grid, bits=None):
        if bits is None:
            bits = app_settings.get('VOROBEV_QUANTIZATION_BITS')
        values, quadrature = self.probabilities(grid)
        logger.debug(ORACLE_SAMPLED.format(self.provenance, grid, bits))
        return OracleField(grid, quantize(values, bits), bits,
                           provenance=self.provenance, quadrature=quadrature)

    def __repr__(self):
        return 'CoverageOracle({})'.format(self.provenance)


def as_field(source, grid=None, bits=None):
    """Normaliza las fuentes aceptadas por las operaciones de cobertura: un
    LevelField se usa tal cual, un oráculo se muestrea sobre `grid`"""
    if isinstance(source, LevelField):
        return source
    if grid is None:
        raise ValueError(ORACLE_GRID_REQUIRED)
    return source.sample(grid, bits)
