#! coding: utf-8
import logging
import os

from django_vorobev.coverage import CoverageAccumulator
from django_vorobev.coverage.io import write_coverage
from django_vorobev.grid import Mask
from django_vorobev.grid.io import MASK_FILENAME, write_mask
from django_vorobev.harness.runner import simulate_many
from django_vorobev.strings import SIMULATION_FINISHED
from ._utils import VorobevCommand

logger = logging.getLogger(__name__)

# Réplicas simuladas en paralelo antes de escribirlas
CHUNK = 32


class Command(VorobevCommand):
    """Simula run.n réplicas del modelo y las escribe como mask_%06d.vrbm,
    junto con el campo de cobertura acumulado coverage.vrbc"""
    help = 'Simulate replicates of a Boolean model as VRBM masks'

    def add_command_arguments(self, parser):
        parser.add_argument('--n', type=int, help='Replicate count (overrides run.n)')

    def handle(self, *args, **options):
        config = self.load_model(options)
        count = options.get('n') or config.n
        directory = self.output_dir(options)
        accumulator = CoverageAccumulator(config.grid)
        for start in range(0, count, CHUNK):
            indices = range(start, min(start + CHUNK, count))
            for index, cells in zip(indices, simulate_many(config, indices, options.get('threads'))):
                write_mask(os.path.join(directory, MASK_FILENAME.format(index)),
                           Mask.from_cells(config.grid, cells))
                accumulator.add_cells(cells)
        write_coverage(os.path.join(directory, 'coverage.vrbc'), accumulator.field())
        logger.info(SIMULATION_FINISHED.format(count, directory))
