#! coding: utf-8
from django_vorobev.grid import Mask, grid_approximation
from .oracle import as_field
from .survival import SurvivalCurve


def survival_curve(source, grid=None):
    """F(α) = λ{p > α} como curva escalonada exacta"""
    return SurvivalCurve.from_field(as_field(source, grid))


def level_set(source, alpha, strict=True, grid=None):
    """Q_α = {p > α}, o {p ≥ α} si strict es falso"""
    field = as_field(source, grid)
    return Mask.from_cells(field.grid, field.level_cells(alpha, strict))


def level_set_grid(source, alpha, k, strict=True, grid=None):
    """Q^r_α: aproximación de grilla de nivel k del conjunto de nivel base"""
    return grid_approximation(level_set(source, alpha, strict, grid), k)
