#! coding: utf-8
import logging
import os

from django.core.management import CommandError

from django_vorobev.coverage import CoverageAccumulator, survival_curve
from django_vorobev.coverage.io import write_coverage
from django_vorobev.exceptions import ResolutionError
from django_vorobev.grid.io import mask_paths, read_mask, write_weighted
from django_vorobev.harness.writers import write_csv
from django_vorobev.strings import EMPTY_REPLICATES, ESTIMATE_FINISHED, MASKS_REQUIRED, \
    MESH_LEVEL_ERROR
from django_vorobev.vorobev import alpha_star_nr, k_nr, kovyazin_mean, threshold_report
from ._utils import VorobevCommand, USAGE_ERROR

logger = logging.getLogger(__name__)

THRESHOLD_COLUMNS = ['n', 'r', 'lambda_n', 'alpha_star_nr', 'alpha_star', 'beta_star', 'plateau_flag']


def read_field(directory):
    """Acumula las máscaras VRBM de un directorio sin retenerlas"""
    paths = mask_paths(directory)
    if not paths:
        raise ValueError(EMPTY_REPLICATES)
    accumulator = None
    for path in paths:
        mask = read_mask(path)
        if accumulator is None:
            accumulator = CoverageAccumulator(mask.grid)
        accumulator.add(mask)
    return accumulator.field()


class Command(VorobevCommand):
    """Estima K_n y K_{n,r} a partir de máscaras producidas externamente
    (por ejemplo, pilas de segmentación) y escribe kn.vrbw, knr.vrbw,
    coverage.vrbc y thresholds.csv"""
    help = "Estimate the Vorob'ev expectation from a directory of VRBM masks"

    def add_command_arguments(self, parser):
        parser.add_argument('--masks', type=str, help='Directory with .vrbm masks')
        parser.add_argument('--mesh-level', type=int, help='Mesh level k of K_{n,r} (default: base level)')

    def handle(self, *args, **options):
        if not options.get('masks'):
            raise CommandError(MASKS_REQUIRED, returncode=USAGE_ERROR)
        field = read_field(options['masks'])
        k = field.grid.k if options.get('mesh_level') is None else options['mesh_level']
        if not 0 <= k <= field.grid.k:
            raise ResolutionError(MESH_LEVEL_ERROR.format(k, field.grid.k))
        lambda_n = field.mean_volume
        report = threshold_report(survival_curve(field), lambda_n)
        directory = self.output_dir(options)

        write_weighted(os.path.join(directory, 'kn.vrbw'), kovyazin_mean(field))
        write_weighted(os.path.join(directory, 'knr.vrbw'), k_nr(field, k))
        write_coverage(os.path.join(directory, 'coverage.vrbc'), field)
        row = {
            'n': field.n,
            'r': 1.0 / 2 ** k,
            'lambda_n': lambda_n,
            'alpha_star_nr': alpha_star_nr(field, k),
            'alpha_star': report.alpha_star,
            'beta_star': report.beta_star,
            'plateau_flag': report.plateau_flag,
        }
        write_csv(os.path.join(directory, 'thresholds.csv'), THRESHOLD_COLUMNS, [row])
        logger.info(ESTIMATE_FINISHED.format(field.n, k, directory))
