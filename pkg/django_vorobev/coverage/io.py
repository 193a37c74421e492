#! coding: utf-8
"""VRBC: encabezado VRBM con magia 'VRBC', n como uint32 little-endian y
2^{kd} conteos uint32 little-endian en orden lineal."""
import numpy as np

from django_vorobev.grid.io import HEADER_LENGTH, check_payload, header, parse_header, \
    read_bytes, write_bytes
from django_vorobev.grid.masks import flatten, unflatten
from .fields import CoverageField

COVERAGE_MAGIC = b'VRBC'


def coverage_to_bytes(field):
    n = np.array([field.n], dtype='<u4')
    counts = flatten(field.counts).astype('<u4')
    return header(COVERAGE_MAGIC, field.grid) + n.tobytes() + counts.tobytes()


def coverage_from_bytes(data):
    grid = parse_header(data, COVERAGE_MAGIC)
    check_payload(data, 4 + 4 * grid.cell_count)
    n = int(np.frombuffer(data, dtype='<u4', count=1, offset=HEADER_LENGTH)[0])
    counts = np.frombuffer(data, dtype='<u4', offset=HEADER_LENGTH + 4)
    return CoverageField(grid, unflatten(counts.astype(np.int64), grid), n)


def write_coverage(path, field):
    write_bytes(path, coverage_to_bytes(field))


def read_coverage(path):
    return coverage_from_bytes(read_bytes(path))
