#! coding: utf-8
"""Subflujos aleatorios por réplica.

Cada réplica usa un generador Philox (contador) cuya clave sale de mezclar
(semilla maestra, índices) con el finalizador de SplitMix64. Los conteos de
Poisson usan Generator.poisson de numpy (inversión para medias < 10, PTRS
por encima) y las uniformes Generator.random.
"""
import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(value):
    value = (value + GOLDEN_GAMMA) & MASK64
    value = ((value ^ (value >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    value = ((value ^ (value >> 27)) * 0x94D049BB133111EB) & MASK64
    return value ^ (value >> 31)


def stream_key(seed, *indices):
    """Clave de 128 bits para (semilla, índices...)"""
    state = splitmix64(int(seed) & MASK64)
    for index in indices:
        state = splitmix64(state ^ (int(index) & MASK64))
    return (state << 64) | splitmix64(state ^ GOLDEN_GAMMA)


def substream(seed, *indices):
    return np.random.Generator(np.random.Philox(key=stream_key(seed, *indices)))
