#! coding: utf-8
from django.conf import settings

DEFAULTS = {
    'VOROBEV_THREADS': None,
    'VOROBEV_QUANTIZATION_BITS': 20,
    'VOROBEV_QUADRATURE_TOLERANCE': 1e-3,
    'VOROBEV_CONSISTENCY_FACTOR': 0.5,
    'VOROBEV_BRACKET_TOLERANCE': 0.05,
    'VOROBEV_BRACKET_FRACTION': 0.95,
    'VOROBEV_RATE_SLACK_SE': 2.0,
    'VOROBEV_EPS_GRID': (0.02, 0.05, 0.1, 0.15, 0.2, 0.3),
    'VOROBEV_OUTPUT_ROOT': None,
}


def get(name):
    """Valor de un setting del paquete. Permite usar los módulos de cálculo
    sin un proyecto Django configurado"""
    if not settings.configured:
        return DEFAULTS[name]
    return getattr(settings, name, DEFAULTS[name])
