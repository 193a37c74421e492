#! coding: utf-8
import os

from django_vorobev.coverage import survival_curve
from django_vorobev.harness import FCURVE
from django_vorobev.harness.writers import write_csv
from ._utils import ExperimentCommand
from .estimate import read_field


class Command(ExperimentCommand):
    """F_n(α) = λ{p_n > α}. Con --masks usa máscaras externas (columnas
    alpha, F); con --config simula el modelo y agrega la curva del oráculo"""
    help = 'Survival curve F(alpha) of the coverage function (fcurve.csv)'
    kind = FCURVE

    def add_command_arguments(self, parser):
        super(Command, self).add_command_arguments(parser)
        parser.add_argument('--masks', type=str, help='Directory with .vrbm masks')
        parser.add_argument('--n', type=int, help='Replicate count (overrides run.n)')

    def plan(self, config, options):
        if not options.get('n_schedule'):
            options['n_schedule'] = [options.get('n') or config.n]
        return super(Command, self).plan(config, options)

    def handle(self, *args, **options):
        if not options.get('masks'):
            return super(Command, self).handle(*args, **options)
        curve = survival_curve(read_field(options['masks']))
        write_csv(os.path.join(self.output_dir(options), 'fcurve.csv'), ['alpha', 'F'],
                  list(curve.csv_rows()))
