#! coding: utf-8
import json
import logging
import os

from django.core.management import BaseCommand, CommandError

from django_vorobev.harness import KINDS
from django_vorobev.models import ExperimentTask
from django_vorobev.strings import KIND_CONFIG_REQUIRED, TASK_ALREADY_RUNNING, TASK_NOT_FOUND
from django_vorobev.tasks import run_experiment_task

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    """Comando para ejecutar un experimento de manera sincrónica, útil para
    debugging. Corre una ExperimentTask existente (--id) o crea una a partir
    de un archivo de configuración"""

    def add_arguments(self, parser):
        parser.add_argument('--id', type=int)
        parser.add_argument('--kind', choices=KINDS)
        parser.add_argument('--config', type=str)
        parser.add_argument('--parameters', type=str, default='{}')

    def handle(self, *args, **options):
        if options['id'] is not None:
            try:
                task = ExperimentTask.objects.get(id=options['id'])
            except ExperimentTask.DoesNotExist:
                raise CommandError(TASK_NOT_FOUND.format(options['id']), returncode=2)
        else:
            if ExperimentTask.objects.filter(status=ExperimentTask.RUNNING):
                logger.info(TASK_ALREADY_RUNNING)
                return
            if not options['kind'] or not options['config']:
                raise CommandError(KIND_CONFIG_REQUIRED)
            with open(options['config']) as f:
                config = f.read()
            yaml_file = os.path.splitext(options['config'])[1].lower() in ('.yml', '.yaml')
            task = ExperimentTask(kind=options['kind'], config=config,
                                  config_format=ExperimentTask.YAML if yaml_file else ExperimentTask.INI,
                                  parameters=json.dumps(json.loads(options['parameters'])))
            task.save()

        run_experiment_task(task)
