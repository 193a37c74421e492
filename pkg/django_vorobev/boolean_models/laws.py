#! coding: utf-8
"""Leyes de radio de los granos y modelos de intensidad de los gérmenes."""
import math

import numpy as np

from django_vorobev.exceptions import ConfigError
from django_vorobev.strings import INTENSITY_NEGATIVE, RADIUS_LAW_ERROR, \
    WINDOW_NOT_CUBE

# Tamaño de lote para el muestreo por rechazo
REJECTION_BATCH = 4096


def ball_volume(d):
    """κ_d = λ(B(0, 1)) en dimensión d"""
    return math.pi ** (d / 2.0) / math.gamma(d / 2.0 + 1)


class RadiusLaw(object):
    kind = None
    has_density = True

    def moment(self, power):
        raise NotImplementedError

    def tail(self, t):
        """P(R > t), vectorizado"""
        raise NotImplementedError

    def sample(self, rng, size):
        raise NotImplementedError

    @property
    def r_max(self):
        raise NotImplementedError


class Dirac(RadiusLaw):
    """R ≡ r0. Sin densidad: no cumple la hipótesis de regularidad de los
    conjuntos de nivel y se excluye de los experimentos que la necesitan"""
    kind = 'dirac'
    has_density = False

    def __init__(self, r0):
        if not r0 > 0:
            raise ConfigError(RADIUS_LAW_ERROR.format('radius.r0', r0), key='radius.r0')
        self.r0 = float(r0)

    def moment(self, power):
        return self.r0 ** power

    def tail(self, t):
        return (np.asarray(t, dtype=np.float64) < self.r0).astype(np.float64)

    def sample(self, rng, size):
        return np.full(size, self.r0)

    @property
    def r_max(self):
        return self.r0

    def __repr__(self):
        return 'dirac(r0={:g})'.format(self.r0)


class Uniform(RadiusLaw):
    kind = 'uniform'

    def __init__(self, a, b):
        if not 0 < a < b:
            raise ConfigError(RADIUS_LAW_ERROR.format('radius.a, radius.b', (a, b)), key='radius.a')
        self.a = float(a)
        self.b = float(b)

    def moment(self, power):
        return (self.b ** (power + 1) - self.a ** (power + 1)) / ((power + 1) * (self.b - self.a))

    def tail(self, t):
        t = np.asarray(t, dtype=np.float64)
        return np.clip((self.b - t) / (self.b - self.a), 0.0, 1.0)

    def sample(self, rng, size):
        return self.a + (self.b - self.a) * rng.random(size)

    @property
    def r_max(self):
        return self.b

    def __repr__(self):
        return 'uniform(a={:g}, b={:g})'.format(self.a, self.b)


class IntensityModel(object):
    """m(x) ≥ 0 sobre una ventana cúbica [low, high]^d"""
    kind = None

    def density(self, *axes):
        """m evaluada sobre coordenadas por eje que se combinan por broadcasting"""
        raise NotImplementedError

    def __call__(self, points):
        points = np.atleast_2d(points)
        return self.density(*points.T)

    def total_mass(self, window, d):
        raise NotImplementedError

    def sample(self, rng, count, window, d):
        raise NotImplementedError

    @property
    def peak(self):
        raise NotImplementedError


def _window_volume(window, d):
    low, high = window
    return (high - low) ** d


def _uniform_points(rng, count, window, d):
    low, high = window
    return low + (high - low) * rng.random((count, d))


def _check_unit_window(window):
    if tuple(window) != (0.0, 1.0):
        raise ConfigError(WINDOW_NOT_CUBE.format(window), key='intensity.kind')


class Constant(IntensityModel):
    kind = 'constant'

    def __init__(self, m):
        if m < 0:
            raise ConfigError(INTENSITY_NEGATIVE.format('intensity.m', m), key='intensity.m')
        self.m = float(m)

    def density(self, *axes):
        shape = np.broadcast(*axes).shape if len(axes) > 1 else np.shape(axes[0])
        return np.full(shape, self.m)

    def total_mass(self, window, d):
        return self.m * _window_volume(window, d)

    def sample(self, rng, count, window, d):
        return _uniform_points(rng, count, window, d)

    @property
    def peak(self):
        return self.m

    def __repr__(self):
        return 'constant(m={:g})'.format(self.m)


class SeparableBump(IntensityModel):
    """m(x) = m0 + m1 Π sin(π x_j) sobre [0, 1]^d.

    Se muestrea como mezcla: uniforme con probabilidad m0 / ‖m‖ y, si no,
    cada coordenada por inversión de la densidad (π/2) sin(πx), es decir
    x = arccos(1 - 2u) / π.
    """
    kind = 'separable_bump'

    def __init__(self, m0, m1):
        if m0 < 0 or m1 < 0:
            raise ConfigError(INTENSITY_NEGATIVE.format('intensity.m0, intensity.m1', (m0, m1)),
                              key='intensity.m0')
        self.m0 = float(m0)
        self.m1 = float(m1)

    def density(self, *axes):
        product = 1.0
        for axis in axes:
            product = product * np.sin(np.pi * np.asarray(axis, dtype=np.float64))
        return self.m0 + self.m1 * product

    def _bump_mass(self, d):
        return self.m1 * (2.0 / math.pi) ** d

    def total_mass(self, window, d):
        _check_unit_window(window)
        return self.m0 + self._bump_mass(d)

    def sample(self, rng, count, window, d):
        _check_unit_window(window)
        total = self.total_mass(window, d)
        if not count or total <= 0:
            return np.empty((0, d))
        bump = rng.random(count) >= self.m0 / total
        points = rng.random((count, d))
        points[bump] = np.arccos(1.0 - 2.0 * points[bump]) / math.pi
        return points

    @property
    def peak(self):
        return self.m0 + self.m1

    def __repr__(self):
        return 'separable_bump(m0={:g}, m1={:g})'.format(self.m0, self.m1)


class GaussianBump(IntensityModel):
    """m(x) = m0 + amplitude · exp(-|x - center|² / (2 width²)) sobre [0,1]^d,
    muestreada por rechazo desde la envolvente constante m0 + amplitude"""
    kind = 'gaussian_bump'

    def __init__(self, m0, amplitude, center, width):
        if m0 < 0 or amplitude < 0:
            raise ConfigError(INTENSITY_NEGATIVE.format('intensity.m0, intensity.amplitude',
                                                        (m0, amplitude)), key='intensity.amplitude')
        if not width > 0:
            raise ConfigError(INTENSITY_NEGATIVE.format('intensity.width', width), key='intensity.width')
        self.m0 = float(m0)
        self.amplitude = float(amplitude)
        self.center = tuple(float(c) for c in center)
        self.width = float(width)

    def density(self, *axes):
        distance2 = 0.0
        for axis, center in zip(axes, self.center):
            distance2 = distance2 + (np.asarray(axis, dtype=np.float64) - center) ** 2
        return self.m0 + self.amplitude * np.exp(-distance2 / (2.0 * self.width ** 2))

    def total_mass(self, window, d):
        _check_unit_window(window)
        scale = self.width * math.sqrt(2.0)
        mass = self.amplitude
        for center in self.center[:d]:
            mass *= self.width * math.sqrt(math.pi / 2.0) \
                * (math.erf((1.0 - center) / scale) + math.erf(center / scale))
        return self.m0 + mass

    def sample(self, rng, count, window, d):
        _check_unit_window(window)
        accepted = []
        missing = count
        while missing > 0:
            points = rng.random((REJECTION_BATCH, d))
            keep = rng.random(REJECTION_BATCH) * self.peak <= self(points)
            accepted.append(points[keep][:missing])
            missing -= len(accepted[-1])
        if not accepted:
            return np.empty((0, d))
        return np.concatenate(accepted)

    @property
    def peak(self):
        return self.m0 + self.amplitude

    def __repr__(self):
        return 'gaussian_bump(m0={:g}, amplitude={:g}, center={}, width={:g})'.format(
            self.m0, self.amplitude, self.center, self.width)
