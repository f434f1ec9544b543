"""Value-of-information assessment and scheduling for vehicular perception data.

The package scores the usefulness of transmitting sensed observations
between vehicles: pairwise-comparison weights for the application at hand
(``ahp``), conditional scores for proximity, timeliness, and sensing
quality with their weighted aggregation (``voi``), a value-ranked
transmission scheduler (``scheduler``), and parameter-sweep curve
generation with figure presets (``sweep``). ``voinet.cli`` exposes all of
it on the command line.
"""

from .ahp import (
    RANDOM_INDEX,
    ComparisonMatrix,
    ConsistencyReport,
    EigenSolution,
    build_matrix,
    consistency,
    principal_eigenvector,
)
from .voi import (
    DYNAMIC,
    HIGHWAY,
    NON_PROCESSED,
    PROCESSED,
    SAFETY,
    SCENARIOS,
    SENSORS,
    STATIC,
    TEMPORAL_CLASSES,
    TRAFFIC,
    URBAN,
    VARIABLE,
    ApplicationProfile,
    AssessmentContext,
    AttributeScores,
    LogisticParams,
    Scenario,
    SensorModel,
    TemporalClass,
    attribute_scores,
    focal_distance,
    los_probability,
    overall_voi,
    proximity_voi,
    quality_voi_nonprocessed,
    quality_voi_processed,
    safety_distance,
    timeliness_voi,
)
from .scheduler import (
    PerceptionRecord,
    RankedEntry,
    ReceiverView,
    SchedulerConfig,
    filter_broadcast,
    rank,
    score_record,
)
from .sweep import CurveSet, SweepSeries, SweepSpec, figure_preset, preset_names, run_sweep

__version__ = "0.1.0"

__all__ = [
    "RANDOM_INDEX",
    "ComparisonMatrix",
    "ConsistencyReport",
    "EigenSolution",
    "build_matrix",
    "consistency",
    "principal_eigenvector",
    "ApplicationProfile",
    "AssessmentContext",
    "AttributeScores",
    "LogisticParams",
    "Scenario",
    "SensorModel",
    "TemporalClass",
    "URBAN",
    "HIGHWAY",
    "SCENARIOS",
    "STATIC",
    "VARIABLE",
    "DYNAMIC",
    "TEMPORAL_CLASSES",
    "SAFETY",
    "TRAFFIC",
    "SENSORS",
    "PROCESSED",
    "NON_PROCESSED",
    "safety_distance",
    "proximity_voi",
    "timeliness_voi",
    "focal_distance",
    "quality_voi_processed",
    "quality_voi_nonprocessed",
    "los_probability",
    "attribute_scores",
    "overall_voi",
    "PerceptionRecord",
    "ReceiverView",
    "RankedEntry",
    "SchedulerConfig",
    "score_record",
    "rank",
    "filter_broadcast",
    "SweepSpec",
    "SweepSeries",
    "CurveSet",
    "run_sweep",
    "figure_preset",
    "preset_names",
    "__version__",
]
