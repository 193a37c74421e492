#! coding: utf-8
from django_vorobev.harness import BRACKET
from ._utils import ExperimentCommand


class Command(ExperimentCommand):
    help = 'Empirical thresholds against the oracle [alpha*, beta*] bracket (bracket.csv)'
    kind = BRACKET
