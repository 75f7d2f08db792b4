"""Fibonacci covering growth with locally adjusted string decorations."""

from ._quasigrow import (
    Covering,
    DeceptionReport,
    GoldenInterval,
    GoldenNumber,
    GrowthStatistics,
    ParseResult,
    __version__,
    boundary_interval,
    can_attach,
    classify,
    compose,
    covering_growth_failure_demo,
    deflation_illegality_depth,
    enumerate_deceptions,
    factor_set,
    feasible_interval,
    fibonacci_word,
    greedy_growth_failure_demo,
    grow,
    is_deception,
    is_factor,
    lift,
    min_deception_length,
    mod_tau,
    perp_trace,
    render_svg,
    rotation_coding,
    step_left,
    step_right,
    strip_consistency,
    strip_width,
    substitute,
)

__all__ = [name for name in dir() if not name.startswith("_")]
