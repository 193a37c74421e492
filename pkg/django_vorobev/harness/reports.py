#! coding: utf-8
import logging
import os

from django_vorobev import __version__, app_settings
from django_vorobev.strings import RESULT_WRITTEN
from .writers import write_csv, write_json, write_xlsx

logger = logging.getLogger(__name__)

METADATA_FILENAME = 'run_metadata.json'

ACCEPTANCE_SETTINGS = (
    'VOROBEV_CONSISTENCY_FACTOR',
    'VOROBEV_BRACKET_TOLERANCE',
    'VOROBEV_BRACKET_FRACTION',
    'VOROBEV_RATE_SLACK_SE',
    'VOROBEV_QUANTIZATION_BITS',
    'VOROBEV_QUADRATURE_TOLERANCE',
)


def run_metadata(plan, result):
    """Parámetros del plan, factores de aceptación (elecciones del arnés, no
    resultados teóricos) y el resumen del experimento"""
    return {
        'version': __version__,
        'plan': plan.as_dict(),
        'acceptance': {name: app_settings.get(name) for name in ACCEPTANCE_SETTINGS},
        'summary': result.summary,
        'passed': result.passed,
    }


def save_result(result, plan, output_dir, xlsx=False):
    """Escribe el CSV del experimento, run_metadata.json y opcionalmente
    una planilla XLSX con las mismas filas. Devuelve las rutas escritas"""
    if not os.path.isdir(output_dir):
        os.makedirs(output_dir)
    paths = [os.path.join(output_dir, result.filename), os.path.join(output_dir, METADATA_FILENAME)]
    write_csv(paths[0], result.columns, result.rows)
    write_json(paths[1], run_metadata(plan, result))
    if xlsx:
        paths.append(os.path.splitext(paths[0])[0] + '.xlsx')
        write_xlsx(paths[-1], result.columns, result.rows, name=result.kind)
    for path in paths:
        logger.info(RESULT_WRITTEN.format(path))
    return paths
