#! coding: utf-8
from .plan import ExperimentPlan, CONSISTENCY, RATE_CHECK, BRACKET, FCURVE, BOXDIM, KINDS
from .experiments import ExperimentResult, run_consistency, run_rate_check, run_bracket, \
    run_fcurve, run_boxdim, run_plan, rate_bound, best_rate_bound
from .reports import save_result
