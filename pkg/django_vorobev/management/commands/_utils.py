#! coding: utf-8
import logging
import os
import sys
from functools import partial

from django.core.management import BaseCommand, CommandError

from django_vorobev.boolean_models import load_config
from django_vorobev.exceptions import VorobevError
from django_vorobev.harness import ExperimentPlan, run_plan, save_result
from django_vorobev.strings import ACCEPTANCE_FAILED, CONFIG_REQUIRED, DATA_ERROR, \
    SUMMARY_LINE

USAGE_ERROR = 1
DATA_ERROR_CODE = 2
ACCEPTANCE_ERROR = 3


def _integers(value):
    return [int(item) for item in value.split(',') if item.strip()]


def _floats(value):
    return [float(item) for item in value.split(',') if item.strip()]


def _pairs(value):
    return [tuple(int(part) for part in item.split(':')) for item in value.split(',') if item.strip()]


def add_common_arguments(parser):
    parser.add_argument('--config', type=str, help='Model configuration file (INI or YAML)')
    parser.add_argument('--out', type=str, default='.', help='Output directory')
    parser.add_argument('--seed', type=int, help='Master seed (overrides run.seed)')
    parser.add_argument('--threads', type=int, help='Worker threads (RSET_THREADS overrides it)')
    parser.add_argument('--quiet', action='store_true', help='Only log warnings and errors')


def add_experiment_arguments(parser):
    parser.add_argument('--n-schedule', type=_integers, help='Replicate counts, e.g. 25,50,100')
    parser.add_argument('--mesh-levels', type=_integers, help='Mesh levels k, e.g. 4,5,6')
    parser.add_argument('--schedule', type=_pairs, help='Explicit (n:k) points, e.g. 25:4,100:5')
    parser.add_argument('--trials', type=int, help='Trials per point')
    parser.add_argument('--kappa', type=float, help='Boundary regularity exponent')
    parser.add_argument('--alpha', type=float, help='Level for rate and boxdim runs')
    parser.add_argument('--eps-grid', type=_floats, help='Epsilon grid for the rate bound')
    parser.add_argument('--xlsx', action='store_true', help='Also write an XLSX sheet')


def _usage_error(parser, message):
    if parser.called_from_command_line:
        parser.print_usage(sys.stderr)
        parser.exit(USAGE_ERROR, '{}: error: {}\n'.format(parser.prog, message))
    raise CommandError('Error: {}'.format(message), returncode=USAGE_ERROR)


class VorobevCommand(BaseCommand):
    """Base de los comandos de la CLI: flags globales, --quiet y traducción
    de errores de datos/configuración a código de salida 2"""

    requires_system_checks = []

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super(VorobevCommand, self).create_parser(prog_name, subcommand, **kwargs)
        parser.error = partial(_usage_error, parser)
        return parser

    def add_arguments(self, parser):
        add_common_arguments(parser)
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def execute(self, *args, **options):
        if options.get('quiet'):
            logging.getLogger('django_vorobev').setLevel(logging.WARNING)
        try:
            return super(VorobevCommand, self).execute(*args, **options)
        except (VorobevError, ValueError, IOError) as e:
            raise CommandError(DATA_ERROR.format(e), returncode=DATA_ERROR_CODE)

    def load_model(self, options):
        if not options.get('config'):
            raise CommandError(CONFIG_REQUIRED, returncode=USAGE_ERROR)
        config = load_config(options['config'])
        if options.get('seed') is not None:
            config = config.replace(seed=options['seed'])
        config.warnings()
        return config

    def output_dir(self, options):
        directory = options.get('out') or '.'
        if not os.path.isdir(directory):
            os.makedirs(directory)
        return directory


class ExperimentCommand(VorobevCommand):
    """Comando que corre un experimento del arnés y falla con código 3 si
    su criterio de aceptación no se cumple"""

    kind = None

    def add_command_arguments(self, parser):
        add_experiment_arguments(parser)

    def plan(self, config, options):
        return ExperimentPlan.from_config(
            config, kind=self.kind,
            n_schedule=options.get('n_schedule'), mesh_levels=options.get('mesh_levels'),
            schedule=options.get('schedule'), trials=options.get('trials'),
            kappa=options.get('kappa'), alpha=options.get('alpha'),
            eps_grid=options.get('eps_grid'), output_dir=options.get('out'),
            threads=options.get('threads'))

    def handle(self, *args, **options):
        config = self.load_model(options)
        plan = self.plan(config, options)
        result = run_plan(plan)
        save_result(result, plan, self.output_dir(options), xlsx=options.get('xlsx'))
        if not options.get('quiet'):
            self.stdout.write(SUMMARY_LINE.format(plan.kind, len(result.rows), result.passed))
        if result.passed is False:
            raise CommandError(ACCEPTANCE_FAILED.format(plan.kind), returncode=ACCEPTANCE_ERROR)
