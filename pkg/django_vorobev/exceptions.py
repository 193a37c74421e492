#! coding: utf-8
from django.core.exceptions import ImproperlyConfigured


class VorobevError(Exception):
    """Base de los errores propios del paquete"""


class GridMismatchError(VorobevError, ValueError):
    """Operación entre conjuntos definidos sobre grillas distintas. El
    llamador debe alinear las grillas (refine / grid_approximation) antes"""


class ResolutionError(VorobevError, ValueError):
    """Se pidió un nivel más fino que la resolución base del raster"""


class InsufficientScalesError(VorobevError, ValueError):
    """Menos de tres escalas utilizables para ajustar una pendiente"""


class FormatError(VorobevError, ValueError):
    """Archivo binario (VRBM / VRBW / VRBC) inválido"""


class HypothesisError(VorobevError, ValueError):
    """El modelo no cumple una hipótesis requerida por el experimento"""


class ConfigError(VorobevError, ImproperlyConfigured):

    def __init__(self, message, key=None):
        super(ConfigError, self).__init__(message)
        self.key = key
