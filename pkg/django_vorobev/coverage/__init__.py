#! coding: utf-8
from .fields import as_level, LevelField, CoverageField, CoverageAccumulator, accumulate, \
    empirical_mean_volume
from .survival import SurvivalCurve
from .oracle import CoverageOracle, OracleField, quantize
from .level_sets import survival_curve, level_set, level_set_grid
