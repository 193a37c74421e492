#! coding: utf-8
"""Configuración de modelos booleanos.

Archivos INI con líneas `clave = valor` en secciones ([model], [intensity],
[radius], [atoms], [grid], [run], [experiment]) o su equivalente YAML con
mapeos anidados. Toda clave desconocida o faltante se rechaza nombrándola.
"""
import configparser
import copy
import logging
import os

import yaml

from django_vorobev.exceptions import ConfigError
from django_vorobev.grid import GridSpec
from django_vorobev.grid.spec import DEFAULT_BASE_LEVELS
from django_vorobev.strings import CONFIG_INVALID_VALUE, CONFIG_MISSING_KEY, \
    CONFIG_READ_ERROR, CONFIG_UNKNOWN_KEY, CONFIG_UNKNOWN_SECTION, \
    DIRAC_RADIUS_WARNING, STATIONARY_INTENSITY_ERROR
from .laws import Constant, Dirac, GaussianBump, SeparableBump, Uniform

logger = logging.getLogger(__name__)

STATIONARY = 'stationary'
NONSTATIONARY = 'nonstationary'
ATOMS = 'atoms'
MODEL_KINDS = (STATIONARY, NONSTATIONARY, ATOMS)

YAML_EXTENSIONS = ('.yml', '.yaml')


def _text(value):
    return str(value).strip()


def _float(value):
    return float(value)


def _int(value):
    return int(value)


def _floats(value):
    """'0.5, 0.5' o una lista YAML"""
    if isinstance(value, (list, tuple)):
        return [float(item) for item in value]
    return [float(item) for item in str(value).replace(';', ',').split(',') if item.strip()]


def _ints(value):
    return [int(item) for item in _floats(value)]


def _points(value):
    """'0.5,0.5; 0.2,0.3' o una lista YAML de listas"""
    if isinstance(value, (list, tuple)):
        return [tuple(float(c) for c in point) for point in value]
    return [tuple(float(c) for c in point.split(',')) for point in str(value).split(';')
            if point.strip()]


def _pairs(value):
    """'100:4, 200:5' o una lista YAML de pares: puntos (n, k) de un
    cronograma diagonal"""
    if isinstance(value, (list, tuple)):
        return [(int(n), int(k)) for n, k in value]
    pairs = []
    for item in str(value).replace(';', ',').split(','):
        if item.strip():
            n, k = item.split(':')
            pairs.append((int(n), int(k)))
    return pairs


KEYS = {
    'model.kind': _text,
    'intensity.kind': _text,
    'intensity.m': _float,
    'intensity.m0': _float,
    'intensity.m1': _float,
    'intensity.amplitude': _float,
    'intensity.center': _floats,
    'intensity.width': _float,
    'radius.kind': _text,
    'radius.r0': _float,
    'radius.a': _float,
    'radius.b': _float,
    'atoms.count': _int,
    'atoms.centers': _points,
    'atoms.q': _floats,
    'atoms.radius': _float,
    'atoms.base': _text,
    'grid.d': _int,
    'grid.K': _int,
    'grid.quadrature_level': _int,
    'run.seed': _int,
    'run.n': _int,
    'experiment.kind': _text,
    'experiment.n_schedule': _ints,
    'experiment.mesh_levels': _ints,
    'experiment.trials': _int,
    'experiment.kappa': _float,
    'experiment.eps_grid': _floats,
    'experiment.alpha': _float,
    'experiment.schedule': _pairs,
}

SECTIONS = sorted(set(key.split('.')[0] for key in KEYS))

# Valores por defecto de cada modelo cuando la sección no se especifica
MODEL_DEFAULTS = {
    STATIONARY: {'intensity.kind': 'constant', 'intensity.m': 50.0,
                 'radius.kind': 'dirac', 'radius.r0': 0.1},
    NONSTATIONARY: {'intensity.kind': 'separable_bump', 'intensity.m0': 5.0, 'intensity.m1': 20.0,
                    'radius.kind': 'uniform', 'radius.a': 0.05, 'radius.b': 0.15},
    ATOMS: {'intensity.kind': 'constant', 'intensity.m': 0.0,
            'radius.kind': 'uniform', 'radius.a': 0.05, 'radius.b': 0.15},
}


class Atom(object):

    def __init__(self, center, radius, q):
        self.center = tuple(center)
        self.radius = float(radius)
        self.q = float(q)

    def __repr__(self):
        return 'atom(center={}, radius={:g}, q={:g})'.format(self.center, self.radius, self.q)


class BooleanConfig(object):
    """Parámetros de un modelo booleano de bolas sobre [0,1]^d"""

    def __init__(self, model, intensity, radius, grid, atoms=(), atoms_base=NONSTATIONARY,
                 seed=0, n=100, quadrature_level=None, experiment=None):
        self.model = model
        self.intensity = intensity
        self.radius = radius
        self.grid = grid
        self.atoms = list(atoms)
        self.atoms_base = atoms_base
        self.seed = seed
        self.n = n
        self.quadrature_level = grid.k + 2 if quadrature_level is None else quadrature_level
        self.experiment = dict(experiment or {})
        self.validate()

    @property
    def d(self):
        return self.grid.d

    @property
    def stationary_base(self):
        """Base estacionaria: el propio modelo estacionario o átomos sobre
        una base estacionaria"""
        return self.model == STATIONARY or (self.model == ATOMS and self.atoms_base == STATIONARY)

    def validate(self):
        if self.model not in MODEL_KINDS:
            raise ConfigError(CONFIG_INVALID_VALUE.format('model.kind', self.model), key='model.kind')
        if self.stationary_base and not isinstance(self.intensity, Constant):
            raise ConfigError(STATIONARY_INTENSITY_ERROR, key='intensity.kind')
        if self.model == ATOMS and self.atoms_base not in (STATIONARY, NONSTATIONARY):
            raise ConfigError(CONFIG_INVALID_VALUE.format('atoms.base', self.atoms_base), key='atoms.base')
        for atom in self.atoms:
            if not 0 <= atom.q <= 1:
                raise ConfigError(CONFIG_INVALID_VALUE.format('atoms.q', atom.q), key='atoms.q')
            if len(atom.center) != self.d:
                raise ConfigError(CONFIG_INVALID_VALUE.format('atoms.centers', atom.center),
                                  key='atoms.centers')
            if not atom.radius > 0:
                raise ConfigError(CONFIG_INVALID_VALUE.format('atoms.radius', atom.radius),
                                  key='atoms.radius')
        if self.quadrature_level < self.grid.k:
            raise ConfigError(CONFIG_INVALID_VALUE.format('grid.quadrature_level', self.quadrature_level),
                              key='grid.quadrature_level')
        if self.n < 1:
            raise ConfigError(CONFIG_INVALID_VALUE.format('run.n', self.n), key='run.n')

    def germ_window(self):
        """Ventana de gérmenes: dilatada por r_max para la base estacionaria
        (p constante en todo el cubo), el cubo unidad en otro caso"""
        if self.stationary_base:
            return -self.radius.r_max, 1.0 + self.radius.r_max
        return 0.0, 1.0

    def replace(self, **kwargs):
        other = copy.copy(self)
        for name, value in kwargs.items():
            setattr(other, name, value)
        other.validate()
        return other

    def provenance(self):
        parts = [self.model, repr(self.intensity), repr(self.radius), 'd={}'.format(self.d)]
        if self.model == ATOMS:
            parts.append('base={}'.format(self.atoms_base))
            parts.extend(repr(atom) for atom in self.atoms)
        return ' '.join(parts)

    def warnings(self):
        if not self.radius.has_density:
            logger.warning(DIRAC_RADIUS_WARNING.format(self.radius))


def _flatten(data, prefix=''):
    """Mapeo anidado de YAML a claves con punto"""
    flat = {}
    for name, value in (data or {}).items():
        key = '{}.{}'.format(prefix, name) if prefix else str(name)
        if isinstance(value, dict):
            flat.update(_flatten(value, key))
        else:
            flat[key] = value
    return flat


def _read_ini(text):
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str
    try:
        parser.read_string(text)
    except configparser.Error as e:
        raise ConfigError(CONFIG_READ_ERROR.format(e))
    raw = {}
    for section in parser.sections():
        for name, value in parser.items(section):
            raw['{}.{}'.format(section, name)] = value
    return raw


def _read_yaml(text):
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ConfigError(CONFIG_READ_ERROR.format(e))
    if data is not None and not isinstance(data, dict):
        raise ConfigError(CONFIG_READ_ERROR.format(type(data).__name__))
    return _flatten(data)


def parse_values(raw):
    """Valida y convierte claves con punto a sus tipos"""
    values = {}
    for key, value in raw.items():
        section = key.split('.')[0]
        if section not in SECTIONS:
            raise ConfigError(CONFIG_UNKNOWN_SECTION.format(section), key=section)
        if key not in KEYS:
            raise ConfigError(CONFIG_UNKNOWN_KEY.format(key), key=key)
        try:
            values[key] = KEYS[key](value)
        except (TypeError, ValueError):
            raise ConfigError(CONFIG_INVALID_VALUE.format(key, value), key=key)
    return values


def _require(values, key):
    if key not in values:
        raise ConfigError(CONFIG_MISSING_KEY.format(key), key=key)
    return values[key]


def _build_intensity(values, d):
    kind = _require(values, 'intensity.kind')
    if kind == Constant.kind:
        return Constant(_require(values, 'intensity.m'))
    if kind == SeparableBump.kind:
        return SeparableBump(values.get('intensity.m0', 0.0), _require(values, 'intensity.m1'))
    if kind == GaussianBump.kind:
        center = values.get('intensity.center', [0.5] * d)
        if len(center) != d:
            raise ConfigError(CONFIG_INVALID_VALUE.format('intensity.center', center),
                              key='intensity.center')
        return GaussianBump(values.get('intensity.m0', 0.0), _require(values, 'intensity.amplitude'),
                            center, _require(values, 'intensity.width'))
    raise ConfigError(CONFIG_INVALID_VALUE.format('intensity.kind', kind), key='intensity.kind')


def _build_radius(values):
    kind = _require(values, 'radius.kind')
    if kind == Dirac.kind:
        return Dirac(_require(values, 'radius.r0'))
    if kind == Uniform.kind:
        return Uniform(_require(values, 'radius.a'), _require(values, 'radius.b'))
    raise ConfigError(CONFIG_INVALID_VALUE.format('radius.kind', kind), key='radius.kind')


def _build_atoms(values):
    centers = values.get('atoms.centers', [])
    count = values.get('atoms.count', len(centers))
    if count != len(centers):
        raise ConfigError(CONFIG_INVALID_VALUE.format('atoms.count', count), key='atoms.count')
    if not count:
        return []
    q = values.get('atoms.q', [1.0])
    if len(q) == 1:
        q = q * count
    if len(q) != count:
        raise ConfigError(CONFIG_INVALID_VALUE.format('atoms.q', q), key='atoms.q')
    radius = _require(values, 'atoms.radius')
    return [Atom(center, radius, prob) for center, prob in zip(centers, q)]


def build_config(values):
    """BooleanConfig a partir de claves con punto ya convertidas"""
    model = _require(values, 'model.kind')
    if model not in MODEL_KINDS:
        raise ConfigError(CONFIG_INVALID_VALUE.format('model.kind', model), key='model.kind')
    defaults = dict(MODEL_DEFAULTS[model])
    if any(key.startswith('intensity.') for key in values):
        defaults = {key: value for key, value in defaults.items() if not key.startswith('intensity.')}
    if any(key.startswith('radius.') for key in values):
        defaults = {key: value for key, value in defaults.items() if not key.startswith('radius.')}
    defaults.update(values)
    values = defaults

    d = values.get('grid.d', 2)
    try:
        grid = GridSpec(d, values.get('grid.K', DEFAULT_BASE_LEVELS.get(d, 0)))
    except ValueError as e:
        raise ConfigError(str(e), key='grid.K')
    experiment = {key.split('.', 1)[1]: value for key, value in values.items()
                  if key.startswith('experiment.')}
    return BooleanConfig(model, _build_intensity(values, d), _build_radius(values), grid,
                         atoms=_build_atoms(values),
                         atoms_base=values.get('atoms.base', NONSTATIONARY),
                         seed=values.get('run.seed', 0), n=values.get('run.n', 100),
                         quadrature_level=values.get('grid.quadrature_level'),
                         experiment=experiment)


def loads(text, fmt='ini'):
    raw = _read_yaml(text) if fmt == 'yaml' else _read_ini(text)
    return build_config(parse_values(raw))


def load_config(path):
    """Lee un archivo de configuración; el formato sale de la extensión"""
    try:
        with open(path) as f:
            text = f.read()
    except (IOError, OSError) as e:
        raise ConfigError(CONFIG_READ_ERROR.format(e))
    fmt = 'yaml' if os.path.splitext(path)[1].lower() in YAML_EXTENSIONS else 'ini'
    return loads(text, fmt)
