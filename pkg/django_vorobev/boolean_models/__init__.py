#! coding: utf-8
from .laws import RadiusLaw, Dirac, Uniform, IntensityModel, Constant, SeparableBump, \
    GaussianBump, ball_volume
from .config import BooleanConfig, Atom, load_config, loads, STATIONARY, NONSTATIONARY, ATOMS
from .simulation import sample_germ_count_and_positions, simulate, simulate_cells
from .oracles import analytic_coverage_stationary, phi, phi_field, analytic_coverage, \
    coverage_field, oracle_for
