#! coding: utf-8
import math
from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase

from django_vorobev.exceptions import GridMismatchError, ResolutionError
from django_vorobev.grid import GridSpec, Mask, WeightedMask, volume, symm_diff_volume, \
    symm_diff_exact, grid_approximation, refine, approximation_error, rasterize_ball, \
    boundary_cells
from .helpers import random_masks, two_strips


class GridSpecTests(SimpleTestCase):

    def test_cell_geometry(self):
        grid = GridSpec(2, 3)
        self.assertEqual(grid.shape, (8, 8))
        self.assertEqual(grid.cell_count, 64)
        self.assertEqual(grid.mesh, Fraction(1, 8))

    def test_invalid_dimension(self):
        with self.assertRaises(ValueError):
            GridSpec(4, 2)

    def test_too_many_cells(self):
        with self.assertRaises(ValueError):
            GridSpec(3, 11)

    def test_immutable(self):
        with self.assertRaises(AttributeError):
            GridSpec(2, 3).k = 4

    def test_block_size_below_base(self):
        with self.assertRaises(ResolutionError):
            GridSpec(2, 3).block_size(4)


class VolumeTests(SimpleTestCase):

    def test_empty(self):
        self.assertEqual(volume(Mask.empty(GridSpec(2, 4))), 0.0)

    def test_full(self):
        for k in range(4):
            self.assertEqual(volume(Mask.full(GridSpec(3, k))), 1.0)

    def test_counting(self):
        grid = GridSpec(2, 2)
        cells = np.zeros(grid.shape, dtype=bool)
        cells[0, :] = True
        self.assertEqual(volume(Mask.from_cells(grid, cells)), 0.25)

    def test_weighted_volume_is_exact(self):
        grid = GridSpec(1, 2)
        region = WeightedMask(grid, [1.0, 0.5, 0.0, 0.0])
        self.assertEqual(region.exact_volume, Fraction(3, 8))

    def test_weights_out_of_range(self):
        with self.assertRaises(ValueError):
            WeightedMask(GridSpec(1, 1), [1.5, 0.0])


class SymmDiffTests(SimpleTestCase):

    def test_identity(self):
        first, _ = two_strips()
        self.assertEqual(symm_diff_volume(first, first), 0.0)

    def test_complement(self):
        grid = GridSpec(2, 3)
        self.assertEqual(symm_diff_volume(Mask.full(grid), Mask.empty(grid)), 1.0)

    def test_strips(self):
        for k in (2, 3, 5):
            first, second = two_strips(k)
            self.assertEqual(symm_diff_volume(first, second), 0.5)

    def test_grid_mismatch(self):
        with self.assertRaises(GridMismatchError):
            symm_diff_volume(Mask.empty(GridSpec(2, 2)), Mask.empty(GridSpec(2, 3)))

    def test_pseudometric(self):
        first, second, third = random_masks(GridSpec(2, 4), 3, seed=1)
        self.assertEqual(symm_diff_exact(first, second), symm_diff_exact(second, first))
        self.assertLessEqual(symm_diff_exact(first, second),
                             symm_diff_exact(first, third) + symm_diff_exact(third, second))

    def test_inclusion_exclusion(self):
        for first, second in zip(random_masks(GridSpec(2, 4), 5, seed=2),
                                 random_masks(GridSpec(2, 4), 5, seed=3)):
            expected = first.exact_volume + second.exact_volume \
                - 2 * first.intersection(second).exact_volume
            self.assertEqual(symm_diff_exact(first, second), expected)

    def test_weighted_matches_indicator(self):
        first, second = two_strips(3)
        weighted = WeightedMask.from_mask(first)
        self.assertEqual(symm_diff_volume(weighted, second), symm_diff_volume(first, second))


class GridApproximationTests(SimpleTestCase):

    def test_aligned_box_reproduced(self):
        grid = GridSpec(2, 4)
        box = Mask.from_box(grid, (0, 0), (0.5, 0.5))
        coarse = grid_approximation(box, 2)
        self.assertEqual(coarse, Mask.from_box(GridSpec(2, 2), (0, 0), (0.5, 0.5)))
        self.assertEqual(approximation_error(box, 2), 0.0)

    def test_empty(self):
        empty = Mask.empty(GridSpec(2, 5))
        for k in range(6):
            self.assertEqual(grid_approximation(empty, k).count, 0)

    def test_idempotent(self):
        region = random_masks(GridSpec(2, 5), 1, seed=4)[0]
        once = grid_approximation(region, 3)
        self.assertEqual(grid_approximation(once, 3), once)

    def test_finer_level_rejected(self):
        with self.assertRaises(ResolutionError):
            grid_approximation(Mask.empty(GridSpec(2, 3)), 4)

    def test_dyadic_box_every_level(self):
        box = Mask.from_box(GridSpec(2, 7), (0.25, 0.125), (0.75, 0.5))
        for k in range(3, 8):
            self.assertEqual(approximation_error(box, k), 0.0)

    def test_disk_error(self):
        disk = rasterize_ball((0.5, 0.5), 0.3, GridSpec(2, 10))
        self.assertLessEqual(approximation_error(disk, 4), 8 * 2 ** -4)

    def test_disk_error_over_mesh_bounded(self):
        disk = rasterize_ball((0.5, 0.5), 0.3, GridSpec(2, 10))
        for k in range(2, 9):
            self.assertLessEqual(approximation_error(disk, k) * 2 ** k, 8)

    def test_refine_is_exact(self):
        first, _ = two_strips(2)
        fine = refine(first, 5)
        self.assertEqual(fine.exact_volume, first.exact_volume)
        self.assertEqual(grid_approximation(fine, 2), first)


class RasterizeBallTests(SimpleTestCase):

    def test_large_radius_covers_cube(self):
        grid = GridSpec(2, 4)
        self.assertEqual(rasterize_ball((0.5, 0.5), 2, grid), Mask.full(grid))

    def test_single_cell(self):
        grid = GridSpec(2, 4)
        ball = rasterize_ball((5.5 / 16, 9.5 / 16), 0.01, grid)
        self.assertEqual(ball.count, 1)
        self.assertTrue(ball.cells()[5, 9])

    def test_area(self):
        ball = rasterize_ball((0.5, 0.5), 0.25, GridSpec(2, 10))
        self.assertLess(abs(volume(ball) - math.pi / 16), 4 * 2 ** -10)

    def test_outside_cube(self):
        self.assertEqual(rasterize_ball((3.0, 3.0), 0.5, GridSpec(2, 4)).count, 0)

    def test_non_positive_radius(self):
        with self.assertRaises(ValueError):
            rasterize_ball((0.5, 0.5), 0, GridSpec(2, 4))


class BoundaryCellsTests(SimpleTestCase):

    def test_full_has_no_boundary(self):
        self.assertEqual(boundary_cells(Mask.full(GridSpec(2, 4))).count, 0)

    def test_single_interior_cell(self):
        for d in (1, 2, 3):
            grid = GridSpec(d, 3)
            cells = np.zeros(grid.shape, dtype=bool)
            cells[(4,) * d] = True
            self.assertEqual(boundary_cells(Mask.from_cells(grid, cells)).count, 1 + 2 * d)

    def test_square(self):
        square = Mask.from_box(GridSpec(2, 4), (0.25, 0.25), (0.75, 0.75))
        self.assertEqual(boundary_cells(square).count, 60)
        self.assertEqual(boundary_cells(square, side='inner').count, 28)
        self.assertEqual(boundary_cells(square, side='outer').count, 32)

    def test_unknown_side(self):
        with self.assertRaises(ValueError):
            boundary_cells(Mask.empty(GridSpec(2, 2)), side='diagonal')
