#! coding: utf-8
import logging
import os

from django.conf import settings
from django_rq import job

from django_vorobev import app_settings
from django_vorobev.boolean_models import loads
from django_vorobev.exceptions import VorobevError
from django_vorobev.harness import ExperimentPlan, run_plan, save_result
from django_vorobev.models import ExperimentTask
from django_vorobev.strings import TASK_FAILED, TASK_FINISHED, TASK_STARTED

logger = logging.getLogger(__name__)


def output_root():
    root = app_settings.get('VOROBEV_OUTPUT_ROOT')
    if root:
        return root
    return os.path.join(settings.MEDIA_ROOT, 'experiments')


@job('experiments', timeout=-1)
def run_experiment_task(task):
    """Corre el experimento de una ExperimentTask, escribe sus CSV en
    VOROBEV_OUTPUT_ROOT/<id>/ y cierra la tarea"""
    output_dir = task.output_dir or os.path.join(output_root(), str(task.id))
    passed = None
    try:
        parameters = task.plan_parameters()
        xlsx = bool(parameters.pop('xlsx', False))
        config = loads(task.config, task.config_format)
        plan = ExperimentPlan.from_config(config, kind=task.kind, **parameters)
        ExperimentTask.info(task, TASK_STARTED.format(plan.kind, config.provenance()))
        result = run_plan(plan)
        for path in save_result(result, plan, output_dir, xlsx=xlsx):
            ExperimentTask.info(task, path)
        passed = result.passed
        ExperimentTask.info(task, TASK_FINISHED.format(len(result.rows), passed))
    except (VorobevError, TypeError) as e:
        logger.error(TASK_FAILED.format(task.id, e))
        ExperimentTask.info(task, TASK_FAILED.format(task.id, e))
    except Exception as e:
        logger.exception(TASK_FAILED.format(task.id, e))
        ExperimentTask.info(task, TASK_FAILED.format(task.id, e))
    finally:
        task.refresh_from_db()
        task.output_dir = output_dir
        task.acceptance_passed = passed
        task.close()
