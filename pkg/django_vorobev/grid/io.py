#! coding: utf-8
"""Formatos binarios de conjuntos en grilla.

VRBM: bytes 0-3 'VRBM', byte 4 versión (1), byte 5 d, byte 6 k, y luego
ceil(2^{kd}/8) bytes de bits (LSB primero, eje 0 más rápido).
VRBW: mismo encabezado con magia 'VRBW' y 2^{kd} pesos uint32 little-endian
en punto fijo con denominador 2^32 - 1.
"""
import glob
import os
from fractions import Fraction

import numpy as np

from django_vorobev.exceptions import FormatError
from django_vorobev.strings import FORMAT_HEADER_ERROR, FORMAT_LENGTH_ERROR, \
    FORMAT_MAGIC_ERROR, FORMAT_VERSION_ERROR
from .masks import Mask, WeightedMask, flatten, packed_length, unflatten
from .spec import GridSpec

VERSION = 1
HEADER_LENGTH = 7
MASK_MAGIC = b'VRBM'
WEIGHTED_MAGIC = b'VRBW'
FIXED_POINT_DENOMINATOR = 2 ** 32 - 1
MASK_FILENAME = 'mask_{:06d}.vrbm'


def header(magic, grid):
    return magic + bytes([VERSION, grid.d, grid.k])


def parse_header(data, magic):
    """Valida el encabezado y devuelve la GridSpec que describe"""
    if len(data) < HEADER_LENGTH:
        raise FormatError(FORMAT_HEADER_ERROR)
    if data[:4] != magic:
        raise FormatError(FORMAT_MAGIC_ERROR.format(magic.decode('ascii'), data[:4]))
    if data[4] != VERSION:
        raise FormatError(FORMAT_VERSION_ERROR.format(data[4]))
    try:
        return GridSpec(data[5], data[6])
    except ValueError as e:
        raise FormatError(str(e))


def check_payload(data, expected):
    if len(data) - HEADER_LENGTH != expected:
        raise FormatError(FORMAT_LENGTH_ERROR.format(expected, len(data) - HEADER_LENGTH))


def mask_to_bytes(mask):
    return header(MASK_MAGIC, mask.grid) + mask.bits.tobytes()


def mask_from_bytes(data):
    grid = parse_header(data, MASK_MAGIC)
    check_payload(data, packed_length(grid.cell_count))
    return Mask(grid, np.frombuffer(data, dtype=np.uint8, offset=HEADER_LENGTH))


def weighted_to_bytes(region):
    fixed = np.rint(flatten(region.weights) * FIXED_POINT_DENOMINATOR).astype('<u4')
    return header(WEIGHTED_MAGIC, region.grid) + fixed.tobytes()


def weighted_from_bytes(data):
    grid = parse_header(data, WEIGHTED_MAGIC)
    check_payload(data, 4 * grid.cell_count)
    fixed = np.frombuffer(data, dtype='<u4', offset=HEADER_LENGTH)
    total = int(fixed.sum(dtype=np.uint64))
    exact_volume = Fraction(total, FIXED_POINT_DENOMINATOR) * grid.cell_volume
    weights = unflatten(fixed / float(FIXED_POINT_DENOMINATOR), grid)
    return WeightedMask(grid, weights, exact_volume=exact_volume)


def write_bytes(path, data):
    with open(path, 'wb') as f:
        f.write(data)


def read_bytes(path):
    with open(path, 'rb') as f:
        return f.read()


def write_mask(path, mask):
    write_bytes(path, mask_to_bytes(mask))


def read_mask(path):
    return mask_from_bytes(read_bytes(path))


def write_weighted(path, region):
    write_bytes(path, weighted_to_bytes(region))


def read_weighted(path):
    return weighted_from_bytes(read_bytes(path))


def mask_paths(directory):
    return sorted(glob.glob(os.path.join(directory, '*.vrbm')))


def read_masks(directory):
    """Lee todos los .vrbm de un directorio en orden de nombre"""
    for path in mask_paths(directory):
        yield read_mask(path)
