#! coding: utf-8
import itertools
from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase

from django_vorobev.coverage import CoverageField, CoverageOracle, SurvivalCurve, accumulate, \
    level_set, level_set_grid, survival_curve
from django_vorobev.grid import GridSpec, Mask, grid_approximation, rasterize_ball, symm_diff_volume
from django_vorobev.grid.masks import flatten
from django_vorobev.vorobev import GAP, REGULAR, alpha_star, alpha_star_nr, beta_star, k_nr, \
    kovyazin_mean, regime, threshold_report, vorobev_deviation, vorobev_estimate, \
    vorobev_from_oracle
from .helpers import random_masks, two_strips


def plateau_curve():
    """F = 1 en [0, 0.2), 0.6 en [0.2, 0.5), 0.2 en [0.5, 1)"""
    return SurvivalCurve.from_breakpoints([(0, 1), (Fraction(1, 5), Fraction(3, 5)),
                                           (Fraction(1, 2), Fraction(1, 5))])


class ThresholdTests(SimpleTestCase):

    def test_step_at_constant(self):
        curve = SurvivalCurve.from_breakpoints([(0, 1), (Fraction(4, 5), 0)])
        self.assertEqual(alpha_star(curve, Fraction(1, 2)), Fraction(4, 5))

    def test_plateau_alpha(self):
        self.assertEqual(alpha_star(plateau_curve(), Fraction(3, 5)), Fraction(1, 5))

    def test_full_target(self):
        self.assertEqual(alpha_star(plateau_curve(), 1), 0)

    def test_plateau_beta(self):
        self.assertEqual(beta_star(plateau_curve(), Fraction(3, 5)), Fraction(1, 2))

    def test_beta_on_last_piece(self):
        self.assertEqual(beta_star(plateau_curve(), Fraction(1, 5)), 1)

    def test_beta_undefined_is_flagged(self):
        curve = SurvivalCurve.from_breakpoints([(0, Fraction(1, 4))])
        report = threshold_report(curve, Fraction(1, 2))
        self.assertEqual(report.beta_star, 0)
        self.assertFalse(report.beta_defined)

    def test_target_out_of_range(self):
        with self.assertRaises(ValueError):
            alpha_star(plateau_curve(), 2)

    def test_infimum_semantics(self):
        curve = survival_curve(accumulate(random_masks(GridSpec(2, 4), 7, seed=30)))
        target = Fraction(2, 5)
        alpha = alpha_star(curve, target)
        self.assertLessEqual(curve.exact(alpha), target)
        if alpha > 0:
            self.assertGreater(curve.left_limit(alpha), target)

    def test_bracket_order(self):
        for seed in range(5):
            field = accumulate(random_masks(GridSpec(2, 4), 5, seed=seed))
            report = threshold_report(survival_curve(field), field.mean_volume)
            self.assertLessEqual(0, report.alpha_star)
            self.assertLessEqual(report.alpha_star, report.beta_star)
            self.assertLessEqual(report.beta_star, 1)

    def test_fine_curve_has_no_gap_beyond_one_step(self):
        grid = GridSpec(1, 8)
        oracle = CoverageOracle(lambda points: points[:, 0], 'linear')
        field = oracle.sample(grid, bits=20)
        report = threshold_report(survival_curve(field), field.integral())
        self.assertLessEqual(report.beta_star - report.alpha_star, Fraction(1, 256))

    def test_regime(self):
        field = accumulate(two_strips(2))
        report = threshold_report(survival_curve(field), field.mean_volume)
        self.assertEqual(regime(report), REGULAR)
        self.assertEqual(regime(threshold_report(plateau_curve(), Fraction(3, 5))), GAP)


class KovyazinMeanTests(SimpleTestCase):

    def assertSandwich(self, estimate, field, alpha):
        weights = estimate.weights
        self.assertTrue(np.all(weights[field.strict_cells(alpha)] == 1.0))
        self.assertTrue(np.all(weights[~field.weak_cells(alpha)] == 0.0))
        self.assertLessEqual(estimate.fractional_cells, 1)

    def test_two_strips(self):
        field = accumulate(two_strips(2))
        estimate = kovyazin_mean(field)
        self.assertEqual(estimate.thresholds.alpha_star, Fraction(1, 2))
        self.assertEqual(estimate.exact_volume, Fraction(1, 2))
        self.assertEqual(level_set(field, 0.5).exact_volume, Fraction(1, 4))
        self.assertEqual(level_set(field, 0.5, strict=False).exact_volume, Fraction(3, 4))
        self.assertSandwich(estimate, field, Fraction(1, 2))

    def test_tie_fill_follows_linear_index(self):
        estimate = kovyazin_mean(accumulate(two_strips(2)))
        filled = np.flatnonzero(flatten(estimate.weights) == 1.0)
        strict = [1, 5, 9, 13]
        self.assertEqual(sorted(set(filled) - set(strict)), [0, 2, 4, 6])

    def test_deterministic_input(self):
        mask = rasterize_ball((0.4, 0.6), 0.2, GridSpec(2, 6))
        estimate = kovyazin_mean(accumulate([mask] * 4))
        self.assertEqual(estimate.core(), mask)
        self.assertEqual(estimate.fractional_cells, 0)
        self.assertEqual(estimate.thresholds.alpha_star, 0)

    def test_zero_target(self):
        estimate = kovyazin_mean(accumulate(two_strips(2)), target=0)
        self.assertFalse(np.any(estimate.weights))

    def test_exact_volume_and_sandwich(self):
        for seed, n in ((31, 3), (32, 7), (33, 10)):
            field = accumulate(random_masks(GridSpec(2, 5), n, seed=seed))
            estimate = kovyazin_mean(field)
            self.assertEqual(estimate.exact_volume, field.mean_volume)
            self.assertAlmostEqual(estimate.weights.sum() / field.grid.cell_count,
                                   float(field.mean_volume), places=12)
            self.assertSandwich(estimate, field, estimate.thresholds.alpha_star)

    def test_constant_field(self):
        grid = GridSpec(2, 3)
        field = CoverageField(grid, np.full(grid.shape, 2), 5)
        estimate = vorobev_estimate(field, Fraction(3, 10))
        weights = flatten(estimate.weights)
        self.assertTrue(np.all(weights[:19] == 1.0))
        self.assertAlmostEqual(weights[19], 0.2)
        self.assertFalse(np.any(weights[20:]))
        self.assertTrue(estimate.thresholds.plateau_flag)


class OptimalityTests(SimpleTestCase):

    def brute_force_minimum(self, field):
        """Mínimo de (1/n) Σ δ(B, X_i) sobre los vértices del politopo de
        pesos de volumen Λ_n: celdas enteras más una fraccionaria. El objetivo
        sólo depende de cuántas celdas de cada valor de p se eligen, así que se
        recorren todas esas cantidades y el valor de la celda fraccionaria"""
        p = flatten(field.probabilities())
        values, sizes = np.unique(p, return_counts=True)
        gain = 1.0 - 2.0 * values
        need = field.mean_volume * len(p)
        whole, fraction = int(need), float(need - int(need))
        best = None
        for head in itertools.product(*(range(size + 1) for size in sizes[:-1])):
            last = whole - sum(head)
            if not 0 <= last <= sizes[-1]:
                continue
            taken = head + (last,)
            value = float(np.dot(gain, taken))
            if fraction:
                value += fraction * min(g for g, t, s in zip(gain, taken, sizes) if t < s)
            best = value if best is None else min(best, value)
        return (p.sum() + best) / len(p)

    def test_rank_and_fill_is_optimal(self):
        for seed, n in ((40, 2), (41, 3), (42, 4)):
            field = accumulate(random_masks(GridSpec(2, 3), n, seed=seed))
            estimate = kovyazin_mean(field)
            self.assertAlmostEqual(vorobev_deviation(estimate, field),
                                   self.brute_force_minimum(field), places=12)

    def test_deviation_is_mean_symmetric_difference(self):
        masks = random_masks(GridSpec(2, 4), 6, seed=43)
        field = accumulate(masks)
        candidate = masks[0]
        expected = sum(symm_diff_volume(candidate, mask) for mask in masks) / len(masks)
        self.assertAlmostEqual(vorobev_deviation(candidate, field), expected, places=12)


class GridEstimatorTests(SimpleTestCase):

    def test_two_strips_alpha(self):
        for k in (2, 3, 4):
            field = accumulate(two_strips(4))
            self.assertEqual(alpha_star_nr(field, k), Fraction(1, 2))

    def test_base_level_matches_empirical(self):
        field = accumulate(random_masks(GridSpec(2, 4), 6, seed=50))
        self.assertEqual(alpha_star_nr(field, 4),
                         alpha_star(survival_curve(field), field.mean_volume))
        self.assertTrue(np.array_equal(k_nr(field, 4).weights, kovyazin_mean(field).weights))

    def test_constant_field(self):
        grid = GridSpec(2, 4)
        field = CoverageField(grid, np.full(grid.shape, 3), 4)
        self.assertEqual(alpha_star_nr(field, 2, target=Fraction(1, 2)), Fraction(3, 4))

    def test_two_strips_volume(self):
        field = accumulate(two_strips(2))
        estimate = k_nr(field, 2)
        self.assertEqual(estimate.exact_volume, Fraction(1, 2))
        self.assertEqual(estimate.thresholds.alpha_star, Fraction(1, 2))

    def test_sandwich_on_grid(self):
        field = accumulate(random_masks(GridSpec(2, 6), 8, seed=51))
        for k in (2, 3, 4, 5):
            estimate = k_nr(field, k)
            alpha = alpha_star_nr(field, k)
            self.assertEqual(estimate.exact_volume, field.mean_volume)
            strict = level_set_grid(field, alpha, k).cells()
            weak = level_set_grid(field, alpha, k, strict=False).cells()
            self.assertTrue(np.all(estimate.weights[strict] == 1.0))
            self.assertTrue(np.all(estimate.weights[~weak] == 0.0))
            self.assertLessEqual(estimate.fractional_cells, 1)

    def test_single_replicate(self):
        mask = rasterize_ball((0.5, 0.5), 0.3, GridSpec(2, 8))
        approximation = grid_approximation(mask, 4)
        estimate = k_nr(accumulate([mask]), 4)
        self.assertEqual(estimate.exact_volume, mask.exact_volume)
        self.assertTrue(estimate.support().issubset(approximation)
                        or approximation.issubset(estimate.core()))


class OracleExpectationTests(SimpleTestCase):

    def test_deterministic_set(self):
        grid = GridSpec(2, 6)
        disk = rasterize_ball((0.5, 0.5), 0.25, grid)
        cells = disk.cells()

        def indicator(points):
            index = np.floor(points * grid.cells_per_axis).astype(int)
            return cells[tuple(index.T)].astype(float)
        expectation = vorobev_from_oracle(CoverageOracle(indicator, 'disk'), None, grid)
        self.assertEqual(expectation.core(), disk)
        self.assertEqual(expectation.exact_volume, disk.exact_volume)
        self.assertEqual(expectation.fractional_cells, 0)

    def test_constant_coverage_is_flagged(self):
        grid = GridSpec(2, 5)
        oracle = CoverageOracle(lambda points: np.full(len(points), 0.75), 'constant')
        expectation = vorobev_from_oracle(oracle, None, grid)
        self.assertTrue(expectation.thresholds.plateau_flag)
        self.assertEqual(expectation.thresholds.alpha_star, Fraction(3, 4))
        self.assertEqual(expectation.exact_volume, Fraction(3, 4))
        self.assertEqual(expectation.core(), Mask.from_cells(
            grid, np.arange(grid.cell_count).reshape(grid.shape, order='F') < 768))

    def test_explicit_mean_volume(self):
        grid = GridSpec(2, 4)
        oracle = CoverageOracle(lambda points: np.full(len(points), 0.75), 'constant')
        expectation = vorobev_from_oracle(oracle, Fraction(1, 2), grid)
        self.assertEqual(expectation.exact_volume, Fraction(1, 2))
        self.assertEqual(expectation.thresholds.alpha_star, Fraction(3, 4))
