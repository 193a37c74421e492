#! coding: utf-8
"""Punto de entrada `rset`: corre los comandos de management del paquete
sin necesidad de un proyecto Django. Si DJANGO_SETTINGS_MODULE no está
definido se configura un entorno mínimo."""
import os
import sys

import django
import environ
from django.conf import settings
from django.core.management import load_command_class

from django_vorobev.strings import CLI_USAGE

SUBCOMMANDS = ('simulate', 'estimate', 'fcurve', 'boxdim', 'converge', 'rate', 'bracket')

USAGE_ERROR = 1


def minimal_settings():
    env = environ.Env()
    return {
        'INSTALLED_APPS': ['django_vorobev'],
        'DATABASES': {'default': {'ENGINE': 'django.db.backends.sqlite3', 'NAME': ':memory:'}},
        'USE_TZ': True,
        'VOROBEV_THREADS': env.int('RSET_THREADS', default=None),
        'LOGGING': {
            'version': 1,
            'disable_existing_loggers': False,
            'formatters': {
                'simple': {'format': '%(levelname)s %(asctime)s %(message)s'},
            },
            'handlers': {
                'console': {'level': 'INFO', 'class': 'logging.StreamHandler', 'formatter': 'simple'},
            },
            'loggers': {
                'django_vorobev': {'handlers': ['console'], 'level': 'INFO', 'propagate': False},
            },
        },
    }


def setup():
    if not settings.configured and not os.environ.get('DJANGO_SETTINGS_MODULE'):
        settings.configure(**minimal_settings())
    django.setup()


def main(argv=None):
    """Devuelve el código de salida: 0 éxito, 1 uso, 2 datos/configuración,
    3 criterio de aceptación no cumplido"""
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] not in SUBCOMMANDS:
        sys.stderr.write(CLI_USAGE.format(', '.join(SUBCOMMANDS)))
        return USAGE_ERROR
    setup()
    command = load_command_class('django_vorobev', argv[0])
    try:
        command.run_from_argv(['rset', argv[0]] + argv[1:])
    except SystemExit as e:
        if e.code is None:
            return 0
        return e.code if isinstance(e.code, int) else USAGE_ERROR
    return 0


if __name__ == '__main__':
    sys.exit(main())
