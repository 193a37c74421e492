#! coding: utf-8
"""Mapa paralelo sobre ensayos con subflujos deterministas.

El ensayo t usa las réplicas de índice t · n_max + i, i < n_max, de modo
que cada ensayo es independiente y el resultado no depende de la cantidad
de hilos ni del orden de finalización.
"""
import logging
import os
from concurrent.futures import ThreadPoolExecutor

from django_vorobev import app_settings
from django_vorobev.boolean_models import simulate_cells
from django_vorobev.coverage import CoverageAccumulator
from django_vorobev.strings import TRIAL_FINISHED

logger = logging.getLogger(__name__)


def resolve_threads(requested=None):
    """RSET_THREADS (setting VOROBEV_THREADS) tiene prioridad sobre el
    pedido explícito"""
    override = app_settings.get('VOROBEV_THREADS')
    if override:
        return max(int(override), 1)
    if requested:
        return max(int(requested), 1)
    return os.cpu_count() or 1


def parallel_map(function, items, threads=None):
    """Como map, en orden de entrada"""
    items = list(items)
    threads = min(resolve_threads(threads), max(len(items), 1))
    if threads == 1:
        return [function(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(function, items))


def replicate_index(trial, i, max_n):
    return trial * max_n + i


def coverage_snapshots(config, trial, sizes):
    """Acumula n_max réplicas del ensayo y devuelve {n: CoverageField} para
    cada n pedido"""
    sizes = sorted(set(sizes))
    max_n = sizes[-1]
    accumulator = CoverageAccumulator(config.grid)
    snapshots = {}
    for i in range(max_n):
        accumulator.add_cells(simulate_cells(config, replicate_index(trial, i, max_n)))
        if accumulator.n in sizes:
            snapshots[accumulator.n] = accumulator.field()
    logger.debug(TRIAL_FINISHED.format(trial, max_n))
    return snapshots


def simulate_many(config, indices, threads=None):
    """Réplicas de los índices dados como arrays de celdas, en orden"""
    return parallel_map(lambda index: simulate_cells(config, index), indices, threads)


def accumulate_replicates(config, count, threads=None, chunk=32):
    """Campo de cobertura de las réplicas 0..count-1, acumulado por bloques
    para no retener todas las réplicas"""
    accumulator = CoverageAccumulator(config.grid)
    for start in range(0, count, chunk):
        for cells in simulate_many(config, range(start, min(start + chunk, count)), threads):
            accumulator.add_cells(cells)
    return accumulator.field()
