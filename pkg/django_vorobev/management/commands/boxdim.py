#! coding: utf-8
import os

from django_vorobev.boxdim import box_count_report
from django_vorobev.grid import boundary_cells
from django_vorobev.grid.io import read_mask
from django_vorobev.harness import BOXDIM
from django_vorobev.harness.writers import write_csv
from ._utils import ExperimentCommand, _integers

COLUMNS = ['k', 'r', 'N_r', 'log2_N_r']


class Command(ExperimentCommand):
    """Box-counting del borde de una máscara VRBM (--mask) o del conjunto de
    nivel α del oráculo del modelo (--config)"""
    help = 'Box-counting dimension of a rasterized boundary (boxdim.csv)'
    kind = BOXDIM

    def add_command_arguments(self, parser):
        super(Command, self).add_command_arguments(parser)
        parser.add_argument('--mask', type=str, help='VRBM mask whose boundary is counted')
        parser.add_argument('--fit-range', type=_integers, help='k_min,k_max of the fit')
        parser.add_argument('--side', choices=('both', 'inner', 'outer'), default='both',
                            help='Boundary cells taken from both sides or one side')

    def handle(self, *args, **options):
        if not options.get('mask'):
            return super(Command, self).handle(*args, **options)
        mask = read_mask(options['mask'])
        levels = options.get('mesh_levels') or list(range(mask.grid.k + 1))
        fit_range = tuple(options['fit_range']) if options.get('fit_range') else None
        report = box_count_report(boundary_cells(mask, options['side']), levels, fit_range)
        write_csv(os.path.join(self.output_dir(options), 'boxdim.csv'), COLUMNS, list(report.csv_rows()))
        if not options.get('quiet'):
            self.stdout.write(report.summary())
