#! coding: utf-8
from .tasks import AbstractTask, ExperimentTask
