"""Conditional value-of-information scores and their weighted aggregation.

A sensed observation is valued along three attributes: how close the
receiving vehicle is (proximity), how fresh the observation is
(timeliness), and how reliable the sensing is (quality). Each conditional
score lies in [0, 1]; an application profile weights them into a single
overall score. Quality has two modes: ``processed`` uses the sensor
geometry alone, ``non_processed`` additionally discounts by the
line-of-sight probability at the observation distance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from . import ahp

PROCESSED = "processed"
NON_PROCESSED = "non_processed"
MODES = (PROCESSED, NON_PROCESSED)

# Weight vectors and comparison matrices are ordered like this throughout.
ATTRIBUTES = ("timeliness", "proximity", "quality")


@dataclass(frozen=True)
class LogisticParams:
    """Parameters of the generalized logistic proximity curve.

    upper is the score well inside the safety distance, lower the limit at
    large distance; offset and scale shape the denominator, decay (1/m)
    sets how fast the curve falls, shape the asymmetry exponent.
    """

    upper: float = 1.0
    lower: float = 0.0
    offset: float = 1.0
    scale: float = 1.0
    decay: float = 0.03
    shape: float = 0.2

    def __post_init__(self) -> None:
        for name in ("offset", "scale", "decay", "shape"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")


DEFAULT_LOGISTIC = LogisticParams()


def safety_distance(v_max: float) -> float:
    """Safety distance (m) for a speed limit: twice v_max."""
    if v_max <= 0:
        raise ValueError(f"speed limit must be positive, got {v_max}")
    return 2.0 * v_max


def focal_distance(resolution: float, fov: float) -> float:
    """Focal distance in pixels for a horizontal resolution and field of view.

    Args:
        resolution: horizontal resolution (px), > 0.
        fov: horizontal field of view (degrees), in (0, 180).
    """
    if resolution <= 0:
        raise ValueError(f"resolution must be positive, got {resolution}")
    if not (0.0 < fov < 180.0):
        raise ValueError(f"field of view must be in (0, 180) degrees, got {fov}")
    return (resolution / 2.0) / math.tan(math.radians(fov) / 2.0)


def _urban_los(distance: float) -> float:
    return min(1.0, 1.05 * math.exp(-0.0114 * distance))


def _highway_los(distance: float) -> float:
    if distance <= 475.0:
        return min(1.0, 2.1013e-6 * distance * distance - 0.002 * distance + 1.0193)
    return max(0.0, 0.54 - 0.001 * (distance - 475.0))


_BUILTIN_LOS = {"urban": _urban_los, "highway": _highway_los}


@dataclass(frozen=True)
class Scenario:
    """Road environment: scenario kind, speed limit, safety distance.

    los_model, when given, replaces the built-in line-of-sight
    probability model for the kind.
    """

    kind: str
    v_max: float
    safety_distance: float
    los_model: Callable[[float], float] | None = None

    def __post_init__(self) -> None:
        if self.los_model is None and self.kind not in _BUILTIN_LOS:
            raise ValueError(
                f"no built-in line-of-sight model for scenario kind {self.kind!r}; "
                f"pass los_model or use one of {sorted(_BUILTIN_LOS)}"
            )
        if self.v_max <= 0:
            raise ValueError(f"speed limit must be positive, got {self.v_max}")
        if self.safety_distance <= 0:
            raise ValueError(f"safety distance must be positive, got {self.safety_distance}")

    @classmethod
    def from_speed_limit(
        cls, kind: str, v_max: float, los_model: Callable[[float], float] | None = None
    ) -> "Scenario":
        return cls(kind, v_max, safety_distance(v_max), los_model)


URBAN = Scenario("urban", v_max=12.0, safety_distance=24.0)
HIGHWAY = Scenario("highway", v_max=36.0, safety_distance=72.0)
SCENARIOS = {"urban": URBAN, "highway": HIGHWAY}


@dataclass(frozen=True)
class TemporalClass:
    """How quickly an observation loses value: decay rate in 1/s."""

    name: str
    decay: float

    def __post_init__(self) -> None:
        if self.decay < 0:
            raise ValueError(f"temporal decay must be non-negative, got {self.decay}")


STATIC = TemporalClass("static", 0.0)
VARIABLE = TemporalClass("variable", 1.0)
DYNAMIC = TemporalClass("dynamic", 10.0)
TEMPORAL_CLASSES = {c.name: c for c in (STATIC, VARIABLE, DYNAMIC)}


def temporal_from_decay(decay: float) -> TemporalClass:
    """Temporal class for a decay rate, named if it matches a built-in."""
    for cls in TEMPORAL_CLASSES.values():
        if cls.decay == decay:
            return cls
    return TemporalClass("custom", decay)


@dataclass(frozen=True)
class SensorModel:
    """Camera geometry: mounting height (m), field of view (deg), resolution (px)."""

    height: float
    fov: float
    resolution: float
    focal: float = field(init=False)

    def __post_init__(self) -> None:
        if self.height <= 0:
            raise ValueError(f"sensor height must be positive, got {self.height}")
        object.__setattr__(self, "focal", focal_distance(self.resolution, self.fov))


SENSORS = {
    "low": SensorModel(height=1.2, fov=70.0, resolution=640.0),
    "medium": SensorModel(height=1.2, fov=70.0, resolution=1280.0),
    "high": SensorModel(height=1.2, fov=70.0, resolution=4096.0),
}


@dataclass(frozen=True)
class AssessmentContext:
    """One evaluation point for the conditional scores.

    obs_distance is the sensor-to-observation distance; when omitted it
    defaults to half the transmitter-receiver distance.
    """

    distance: float
    aoi: float
    scenario: Scenario
    temporal: TemporalClass
    sensor: SensorModel
    mode: str = PROCESSED
    obs_distance: float | None = None

    def __post_init__(self) -> None:
        if self.distance < 0:
            raise ValueError(f"distance must be non-negative, got {self.distance}")
        if self.aoi < 0:
            raise ValueError(f"age of information must be non-negative, got {self.aoi}")
        if self.obs_distance is not None and self.obs_distance < 0:
            raise ValueError(f"observation distance must be non-negative, got {self.obs_distance}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")

    @property
    def resolved_obs_distance(self) -> float:
        if self.obs_distance is not None:
            return self.obs_distance
        return self.distance / 2.0


@dataclass(frozen=True)
class AttributeScores:
    """The three conditional scores, each in [0, 1]."""

    proximity: float
    timeliness: float
    quality: float

    def __post_init__(self) -> None:
        for name in ("proximity", "timeliness", "quality"):
            value = getattr(self, name)
            if not (0.0 <= value <= 1.0):
                raise ValueError(f"{name} score {value!r} is outside [0, 1]")


@dataclass(frozen=True)
class ApplicationProfile:
    """Named attribute weights, constructed by attribute name.

    Weight vectors are ordered (timeliness, proximity, quality); the
    weights must be non-negative and sum to 1.
    """

    name: str
    timeliness: float
    proximity: float
    quality: float

    def __post_init__(self) -> None:
        weights = (self.timeliness, self.proximity, self.quality)
        if any(w < 0 for w in weights):
            raise ValueError(f"weights must be non-negative, got {weights}")
        if abs(sum(weights) - 1.0) > 1e-9:
            raise ValueError(f"weights sum to {sum(weights)!r}, expected 1")

    @property
    def weights(self) -> tuple[float, float, float]:
        return (self.timeliness, self.proximity, self.quality)


# Converged eigenvector weights of safety_matrix() and traffic_matrix();
# the live derivation must agree with these within 1e-4 (tested).
SAFETY = ApplicationProfile(
    "safety",
    timeliness=0.11938853460347487,
    proximity=0.7470528319243156,
    quality=0.13355863347220948,
)
TRAFFIC = ApplicationProfile(
    "traffic",
    timeliness=0.655355490660134,
    proximity=0.0549003994681273,
    quality=0.28974410987173876,
)
PROFILES = {"safety": SAFETY, "traffic": TRAFFIC}


def safety_matrix() -> ahp.ComparisonMatrix:
    """Pairwise comparison matrix behind the safety profile."""
    return ahp.build_matrix(
        ATTRIBUTES,
        {
            ("timeliness", "proximity"): 1.0 / 7.0,
            ("timeliness", "quality"): 1.0,
            ("proximity", "quality"): 5.0,
        },
    )


def traffic_matrix() -> ahp.ComparisonMatrix:
    """Pairwise comparison matrix behind the traffic-management profile."""
    return ahp.build_matrix(
        ATTRIBUTES,
        {
            ("timeliness", "proximity"): 9.0,
            ("timeliness", "quality"): 3.0,
            ("proximity", "quality"): 1.0 / 7.0,
        },
    )


BUILTIN_MATRICES = {"safety": safety_matrix, "traffic": traffic_matrix}


def profile_from_matrix(name: str, matrix: ahp.ComparisonMatrix) -> ApplicationProfile:
    """Derive a profile from a comparison matrix labeled with ATTRIBUTES."""
    if set(matrix.labels) != set(ATTRIBUTES):
        raise ValueError(f"profile matrices must be labeled with {ATTRIBUTES}, got {matrix.labels}")
    solution = ahp.principal_eigenvector(matrix)
    by_label = dict(zip(matrix.labels, solution.weights))
    return ApplicationProfile(
        name,
        timeliness=by_label["timeliness"],
        proximity=by_label["proximity"],
        quality=by_label["quality"],
    )


def proximity_voi(
    distance: float, safety_distance: float, params: LogisticParams = DEFAULT_LOGISTIC
) -> float:
    """Proximity score: a falling logistic curve in the receiver distance.

    Full value is kept up to roughly the safety distance, after which the
    score decays toward params.lower.
    """
    if distance < 0:
        raise ValueError(f"distance must be non-negative, got {distance}")
    denominator = (
        params.offset + params.scale * math.exp(-params.decay * (distance - safety_distance))
    ) ** (1.0 / params.shape)
    return params.upper + (params.lower - params.upper) / denominator


def timeliness_voi(aoi: float, temporal: TemporalClass) -> float:
    """Timeliness score: exponential decay of value with age."""
    if aoi < 0:
        raise ValueError(f"age of information must be non-negative, got {aoi}")
    return math.exp(-temporal.decay * aoi)


def quality_voi_processed(obs_distance: float, sensor: SensorModel) -> float:
    """Quality score from sensor geometry alone, clamped to [0, 1].

    Falls linearly with the observation distance and hits 0 at
    height * focal; observations beyond that carry no quality value.
    """
    if obs_distance < 0:
        raise ValueError(f"observation distance must be non-negative, got {obs_distance}")
    raw = 1.0 - obs_distance / (sensor.height * sensor.focal)
    return min(1.0, max(0.0, raw))


def los_probability(distance: float, scenario: Scenario) -> float:
    """Probability of an unobstructed line of sight at a distance."""
    if distance < 0:
        raise ValueError(f"distance must be non-negative, got {distance}")
    model = scenario.los_model or _BUILTIN_LOS[scenario.kind]
    return min(1.0, max(0.0, model(distance)))


def quality_voi_nonprocessed(
    obs_distance: float, sensor: SensorModel, scenario: Scenario
) -> float:
    """Quality score for unprocessed records: geometry discounted by LOS."""
    return quality_voi_processed(obs_distance, sensor) * los_probability(obs_distance, scenario)


def attribute_scores(
    ctx: AssessmentContext, params: LogisticParams = DEFAULT_LOGISTIC
) -> AttributeScores:
    """Evaluate the three conditional scores for one context."""
    obs = ctx.resolved_obs_distance
    if ctx.mode == PROCESSED:
        quality = quality_voi_processed(obs, ctx.sensor)
    else:
        quality = quality_voi_nonprocessed(obs, ctx.sensor, ctx.scenario)
    return AttributeScores(
        proximity=proximity_voi(ctx.distance, ctx.scenario.safety_distance, params),
        timeliness=timeliness_voi(ctx.aoi, ctx.temporal),
        quality=quality,
    )


def overall_voi(
    ctx: AssessmentContext,
    profile: ApplicationProfile,
    params: LogisticParams = DEFAULT_LOGISTIC,
) -> float:
    """Weighted overall value of information for one context, in [0, 1]."""
    scores = attribute_scores(ctx, params)
    return (
        profile.timeliness * scores.timeliness
        + profile.proximity * scores.proximity
        + profile.quality * scores.quality
    )
