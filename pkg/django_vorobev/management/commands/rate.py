#! coding: utf-8
from django_vorobev.harness import RATE_CHECK
from ._utils import ExperimentCommand


class Command(ExperimentCommand):
    help = 'Monte Carlo mean of the level-set error against its rate bound (rate.csv)'
    kind = RATE_CHECK
