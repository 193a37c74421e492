#! coding: utf-8
from django_vorobev.harness import CONSISTENCY
from ._utils import ExperimentCommand


class Command(ExperimentCommand):
    """Consistencia de K_{n,r} y K_n contra la esperanza de Vorob'ev del
    oráculo (consistency.csv)"""
    help = "Convergence of the grid estimator to the oracle Vorob'ev expectation"
    kind = CONSISTENCY
