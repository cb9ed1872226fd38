"""Registered statements, constructive builders and the grid evaluator."""

from .builders import (
    Construction,
    construct_corona_zfs,
    construct_empty_corona_zfs,
    construct_join_basis_in_G,
    construct_join_cover_zfs,
    construct_lex_complete_upper_zfs,
    construct_lex_singletons_zfs,
    construct_lex_upper_zfs,
    construct_single_edge_near_miss,
)
from .core import STATUSES, ClaimSpec, Context, EvaluationRecord, Outcome, judge
from .harness import evaluate_claim, exit_code, parse_grid, report_csv, report_json, report_text, run_grid, summarize
from .registry import REGISTRY, get_claim, perturbed

__all__ = [
    "Construction",
    "construct_corona_zfs",
    "construct_empty_corona_zfs",
    "construct_join_basis_in_G",
    "construct_join_cover_zfs",
    "construct_lex_complete_upper_zfs",
    "construct_lex_singletons_zfs",
    "construct_lex_upper_zfs",
    "construct_single_edge_near_miss",
    "STATUSES",
    "ClaimSpec",
    "Context",
    "EvaluationRecord",
    "Outcome",
    "judge",
    "evaluate_claim",
    "exit_code",
    "parse_grid",
    "report_csv",
    "report_json",
    "report_text",
    "run_grid",
    "summarize",
    "REGISTRY",
    "get_claim",
    "perturbed",
]
