"""Identifying codes on the infinite square and hexagonal grids."""

from .bounds import counting_inequality_check, density_lower_bound, known_bounds_table
from .code import (
    PatternError,
    PeriodicCode,
    ValidityReport,
    Window,
    density,
    format_pattern,
    identifying_set,
    is_identifying_code,
    make_code,
    parse_pattern,
    window_census,
)
from .discharge import ChargeLedger, DischargingError, check_average_bound, run_discharging
from .grid import Ball, GridKind, Vertex, ball, ball_set, ball_size, distance, neighbors
from .localver import (
    VerificationCertificate,
    WindowConfig,
    complete_scenario,
    max_pairs,
    naive_enumerate,
    run_statement,
    window_config,
)
from .pairs import (
    AuxGraph,
    CodewordClass,
    PairReport,
    aux_graph,
    classify_codeword,
    covered_by_union,
    pair_report,
    right_angle_of_witnesses,
)
from .torus import TorusInstance, heuristic_upper, is_valid_torus_code, min_code_exact

__all__ = [
    "AuxGraph",
    "Ball",
    "ChargeLedger",
    "CodewordClass",
    "DischargingError",
    "GridKind",
    "PairReport",
    "PatternError",
    "PeriodicCode",
    "TorusInstance",
    "ValidityReport",
    "VerificationCertificate",
    "Vertex",
    "Window",
    "WindowConfig",
    "aux_graph",
    "ball",
    "ball_set",
    "ball_size",
    "check_average_bound",
    "classify_codeword",
    "complete_scenario",
    "counting_inequality_check",
    "covered_by_union",
    "density",
    "density_lower_bound",
    "distance",
    "format_pattern",
    "heuristic_upper",
    "identifying_set",
    "is_identifying_code",
    "is_valid_torus_code",
    "known_bounds_table",
    "make_code",
    "max_pairs",
    "min_code_exact",
    "naive_enumerate",
    "neighbors",
    "pair_report",
    "parse_pattern",
    "right_angle_of_witnesses",
    "run_discharging",
    "run_statement",
    "window_census",
    "window_config",
]

__version__ = "0.1.0"
