"""Reentrant flow shop scheduling with unit processing times.

Priority rules (LRL, WLRL), exact solvers, an FPTAS and hardness
constructions for minimizing total weighted completion time.
"""

from ._backend import BACKEND
from .approx import fptas_solve, normalize_dummy_placement, parallel_to_flowshop, sahni_fptas, to_parallel_instance
from .core import (
    GuardExceeded,
    Instance,
    InvalidInstance,
    InvalidSchedule,
    Job,
    LoopRef,
    Progression,
    Schedule,
    evaluate_objective,
    extract_progressions,
    interchange_progressions,
    is_non_interruptive,
    progression_of,
    simulate_sequence,
    validate_instance,
)
from .exact import (
    Assignment,
    assignment_to_schedule,
    brute_force_optimum,
    closed_form_objective,
    dp_optimum,
    exhaustive_sequence_optimum,
    wspt_order,
)
from .gantt import render_gantt
from .reductions import partition_reduction, three_partition_reduction
from .rules import LRL, WLRL, DispatchRule, Kind, TieBreak, dispatch_schedule, parse_rule

__all__ = [
    "BACKEND", "Assignment", "DispatchRule", "GuardExceeded", "Instance", "InvalidInstance",
    "InvalidSchedule", "Job", "Kind", "LRL", "LoopRef", "Progression", "Schedule", "TieBreak",
    "WLRL", "assignment_to_schedule", "brute_force_optimum", "closed_form_objective",
    "dispatch_schedule", "dp_optimum", "evaluate_objective", "exhaustive_sequence_optimum",
    "extract_progressions", "fptas_solve", "interchange_progressions", "is_non_interruptive",
    "normalize_dummy_placement", "parallel_to_flowshop", "parse_rule", "partition_reduction",
    "progression_of", "render_gantt", "sahni_fptas", "simulate_sequence",
    "three_partition_reduction", "to_parallel_instance", "validate_instance", "wspt_order",
]
