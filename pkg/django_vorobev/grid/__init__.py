#! coding: utf-8
from .spec import GridSpec
from .masks import Mask, WeightedMask
from .operations import volume, symm_diff_volume, symm_diff_exact, \
    grid_approximation, refine, approximation_error, rasterize_ball, \
    paint_ball, boundary_cells
