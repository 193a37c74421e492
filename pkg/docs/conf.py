# -*- coding: utf-8 -*-
#
# Configuración de Sphinx para la documentación de django-vorobev. Las
# páginas están en Markdown (instalacion.md, uso.md) y se leen con
# recommonmark; index.rst sólo arma el índice.
import os
import sys

from recommonmark.parser import CommonMarkParser

sys.path.insert(0, os.path.abspath('..'))

source_parsers = {
    '.md': CommonMarkParser,
}
source_suffix = ['.rst', '.md']
master_doc = 'index'

project = 'django-vorobev'
copyright = '2026, django-vorobev'
author = 'django-vorobev'
version = '0.1'
release = '0.1.0'
language = 'es'

extensions = []

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'alabaster'
html_theme_options = {
    'description': "Esperanza de Vorob'ev de conjuntos aleatorios en grillas diádicas",
}
htmlhelp_basename = 'django-vorobevdoc'

man_pages = [
    (master_doc, 'django-vorobev', u"Documentación de django-vorobev", [author], 1),
]
