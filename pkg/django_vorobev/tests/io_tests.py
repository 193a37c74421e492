#! coding: utf-8
import os
import shutil
import tempfile
from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase

from django_vorobev.coverage import accumulate
from django_vorobev.coverage.io import coverage_from_bytes, coverage_to_bytes, read_coverage, \
    write_coverage
from django_vorobev.exceptions import FormatError
from django_vorobev.grid import GridSpec, Mask, WeightedMask
from django_vorobev.grid.io import mask_from_bytes, mask_to_bytes, read_masks, weighted_from_bytes, \
    weighted_to_bytes, write_mask, MASK_FILENAME
from .helpers import random_masks, two_strips


class MaskFormatTests(SimpleTestCase):

    def test_header_layout(self):
        data = mask_to_bytes(Mask.full(GridSpec(2, 3)))
        self.assertEqual(data[:4], b'VRBM')
        self.assertEqual(list(data[4:7]), [1, 2, 3])
        self.assertEqual(len(data), 7 + 8)

    def test_bit_order(self):
        grid = GridSpec(2, 2)
        cells = np.zeros(grid.shape, dtype=bool)
        cells[1, 0] = True  # índice lineal 1: el eje 0 corre más rápido
        cells[0, 1] = True  # índice lineal 4
        data = mask_to_bytes(Mask.from_cells(grid, cells))
        self.assertEqual(data[7], 0b00010010)

    def test_bad_magic(self):
        data = b'XXXX' + mask_to_bytes(Mask.empty(GridSpec(2, 2)))[4:]
        with self.assertRaises(FormatError):
            mask_from_bytes(data)

    def test_bad_version(self):
        data = bytearray(mask_to_bytes(Mask.empty(GridSpec(2, 2))))
        data[4] = 9
        with self.assertRaises(FormatError):
            mask_from_bytes(bytes(data))

    def test_truncated(self):
        with self.assertRaises(FormatError):
            mask_from_bytes(mask_to_bytes(Mask.full(GridSpec(2, 4)))[:-1])
        with self.assertRaises(FormatError):
            mask_from_bytes(b'VRB')

    def test_read_back(self):
        mask = random_masks(GridSpec(3, 3), 1, seed=5)[0]
        self.assertEqual(mask_from_bytes(mask_to_bytes(mask)), mask)


class WeightedFormatTests(SimpleTestCase):

    def test_fixed_point(self):
        grid = GridSpec(1, 2)
        data = weighted_to_bytes(WeightedMask(grid, [1.0, 0.5, 0.0, 0.0]))
        self.assertEqual(data[:4], b'VRBW')
        weights = np.frombuffer(data, dtype='<u4', offset=7)
        self.assertEqual(weights[0], 2 ** 32 - 1)
        self.assertEqual(weights[2], 0)

    def test_indicator_volume_is_exact(self):
        first, _ = two_strips(3)
        region = weighted_from_bytes(weighted_to_bytes(WeightedMask.from_mask(first)))
        self.assertEqual(region.exact_volume, Fraction(1, 2))

    def test_mask_magic_rejected(self):
        with self.assertRaises(FormatError):
            weighted_from_bytes(mask_to_bytes(Mask.full(GridSpec(1, 3))))


class CoverageFormatTests(SimpleTestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_layout(self):
        field = accumulate(two_strips(2))
        data = coverage_to_bytes(field)
        self.assertEqual(data[:4], b'VRBC')
        self.assertEqual(np.frombuffer(data, dtype='<u4', count=1, offset=7)[0], 2)
        self.assertEqual(len(data), 7 + 4 + 4 * 16)

    def test_file(self):
        field = accumulate(random_masks(GridSpec(2, 4), 7, seed=6))
        path = os.path.join(self.directory, 'coverage.vrbc')
        write_coverage(path, field)
        stored = read_coverage(path)
        self.assertEqual(stored.n, 7)
        self.assertTrue(np.array_equal(stored.counts, field.counts))
        self.assertEqual(stored.mean_volume, field.mean_volume)

    def test_wrong_length(self):
        data = coverage_to_bytes(accumulate(two_strips(2)))
        with self.assertRaises(FormatError):
            coverage_from_bytes(data + b'\x00')

    def test_read_masks_in_name_order(self):
        masks = random_masks(GridSpec(2, 3), 3, seed=7)
        for index in (2, 0, 1):
            write_mask(os.path.join(self.directory, MASK_FILENAME.format(index)), masks[index])
        self.assertEqual(list(read_masks(self.directory)), masks)
