#! coding: utf-8
import itertools

from django_vorobev import app_settings
from django_vorobev.exceptions import ConfigError
from django_vorobev.strings import PLAN_INVALID, PLAN_UNKNOWN_KIND

CONSISTENCY = 'consistency'
RATE_CHECK = 'rate_check'
BRACKET = 'bracket'
FCURVE = 'fcurve'
BOXDIM = 'boxdim'
KINDS = (CONSISTENCY, RATE_CHECK, BRACKET, FCURVE, BOXDIM)

DEFAULT_N_SCHEDULE = (25, 50, 100, 200, 400)
DEFAULT_MESH_LEVELS = (4, 5, 6, 7)
DEFAULT_TRIALS = 20
DEFAULT_KAPPA = 1.0
DEFAULT_ALPHA = 0.3


def _schedule_points(schedule):
    """Pares (n, k) enteros de un cronograma explícito"""
    try:
        return [(int(n), int(k)) for n, k in schedule]
    except (TypeError, ValueError):
        raise ConfigError(PLAN_INVALID.format('experiment.schedule', schedule),
                          key='experiment.schedule')


class ExperimentPlan(object):
    """Experimento sobre un modelo: cronogramas de n y de niveles de malla,
    cantidad de ensayos por punto, κ, grilla de ε y directorio de salida.

    `schedule`, si está, es una lista explícita de puntos (n, k) (por ejemplo
    la diagonal (25, 4), (100, 5), (400, 7)); si no, se usa el producto de
    ambos cronogramas.
    """

    def __init__(self, kind, config, n_schedule=DEFAULT_N_SCHEDULE, mesh_levels=DEFAULT_MESH_LEVELS,
                 trials=DEFAULT_TRIALS, kappa=DEFAULT_KAPPA, eps_grid=None, alpha=DEFAULT_ALPHA,
                 schedule=None, output_dir=None, threads=None):
        if kind not in KINDS:
            raise ConfigError(PLAN_UNKNOWN_KIND.format(kind, ', '.join(KINDS)), key='experiment.kind')
        self.kind = kind
        self.config = config
        self.schedule = _schedule_points(schedule) if schedule else None
        if self.schedule:
            n_schedule = sorted(set(n for n, _ in self.schedule))
            mesh_levels = sorted(set(k for _, k in self.schedule))
        self.n_schedule = sorted(set(n_schedule))
        self.mesh_levels = sorted(set(mesh_levels))
        self.trials = trials
        self.kappa = kappa
        self.eps_grid = tuple(eps_grid or app_settings.get('VOROBEV_EPS_GRID'))
        self.alpha = alpha
        self.output_dir = output_dir
        self.threads = threads
        self.validate()

    def validate(self):
        if not self.n_schedule or min(self.n_schedule) < 1:
            raise ConfigError(PLAN_INVALID.format('experiment.n_schedule', self.n_schedule),
                              key='experiment.n_schedule')
        if not self.mesh_levels or min(self.mesh_levels) < 0 or max(self.mesh_levels) > self.config.grid.k:
            raise ConfigError(PLAN_INVALID.format('experiment.mesh_levels', self.mesh_levels),
                              key='experiment.mesh_levels')
        if self.trials < 1:
            raise ConfigError(PLAN_INVALID.format('experiment.trials', self.trials), key='experiment.trials')
        if not 0 < self.kappa <= self.config.d:
            raise ConfigError(PLAN_INVALID.format('experiment.kappa', self.kappa), key='experiment.kappa')
        if not self.eps_grid or min(self.eps_grid) <= 0:
            raise ConfigError(PLAN_INVALID.format('experiment.eps_grid', self.eps_grid),
                              key='experiment.eps_grid')
        if not 0 <= self.alpha <= 1:
            raise ConfigError(PLAN_INVALID.format('experiment.alpha', self.alpha), key='experiment.alpha')

    @classmethod
    def from_config(cls, config, kind=None, **overrides):
        """Plan a partir de la sección [experiment] de la configuración; los
        argumentos explícitos (no None) tienen prioridad"""
        options = dict(config.experiment)
        kind = kind or options.pop('kind', None)
        options.pop('kind', None)
        options.update({name: value for name, value in overrides.items() if value is not None})
        return cls(kind, config, **options)

    @property
    def max_n(self):
        return max(self.n_schedule)

    def points(self):
        """Puntos (n, k) en orden canónico"""
        if self.schedule:
            return sorted(set(self.schedule))
        return list(itertools.product(self.n_schedule, self.mesh_levels))

    def as_dict(self):
        return {
            'kind': self.kind,
            'model': self.config.provenance(),
            'seed': self.config.seed,
            'grid': {'d': self.config.d, 'K': self.config.grid.k},
            'n_schedule': self.n_schedule,
            'mesh_levels': self.mesh_levels,
            'schedule': self.schedule,
            'trials': self.trials,
            'kappa': self.kappa,
            'eps_grid': list(self.eps_grid),
            'alpha': self.alpha,
        }
