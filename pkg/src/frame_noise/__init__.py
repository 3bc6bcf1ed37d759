"""Worst-case crosstalk noise from triangular attacker bumps in timing windows.

Envelope algebra gives the exact worst-case composite magnitude and an
attacker alignment that achieves it; a brute-force grid search and two
conventional baselines are provided for comparison.
"""

from .aggregate import (
    AnalysisResult,
    SummedEnvelope,
    analyze,
    build_emax,
    build_emin,
    partition,
    sum_envelopes,
    worst_case,
)
from .baseline import BaselineResult, naive_peak_sum, pessimism_reduction, pruned_envelope
from .bench import GenConfig, boxplot_stats, gen_case, mann_whitney_u, run_corpus
from .casefile import CaseFile, parse_case
from .envelope import Envelope, Vertex, build_inner, build_outer, eval_envelope, eval_sigma
from .errors import (
    CombinationBudgetExceeded,
    EmptyInput,
    EmptySample,
    FrameError,
    LengthMismatch,
    NonFiniteParameter,
    PeakOrderViolation,
    SchemaError,
    ValidationError,
    WindowOrderViolation,
    ZeroBaseline,
)
from .model import (
    AttackerSpec,
    ChainCase,
    Triangle,
    TimingWindow,
    composite,
    eval_shifted,
    eval_triangle,
    make_case,
    validate,
)
from .oracle import VerificationReport, composite_peak, grid_search, verify

__version__ = "0.1.0"
