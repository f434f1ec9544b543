"""Parameter sweeps producing labeled curves for golden-file comparison.

A sweep evaluates the overall score, or a single conditional, over a
fixed grid of distances or ages. Named presets pin the exact
parameterizations behind the reference curve files shipped with the
tests; `run_sweep` also accepts hand-built specs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from io import StringIO

from .voi import (
    DEFAULT_LOGISTIC,
    DYNAMIC,
    HIGHWAY,
    MODES,
    NON_PROCESSED,
    PROCESSED,
    SAFETY,
    SENSORS,
    STATIC,
    TRAFFIC,
    URBAN,
    VARIABLE,
    ApplicationProfile,
    AssessmentContext,
    LogisticParams,
    Scenario,
    SensorModel,
    TemporalClass,
    overall_voi,
    proximity_voi,
    quality_voi_nonprocessed,
    quality_voi_processed,
    timeliness_voi,
)

VARIABLES = ("distance", "aoi")
ATTRIBUTE_CHOICES = ("overall", "proximity", "timeliness", "quality")

# Sensor resolution used by the reference curves. The nominal 1080 px
# annotation does not reproduce them; 1280 px does, to machine precision.
RESOLUTION_NOTE = "resolution pinned to 1280 px (the nominal 1080 px does not reproduce the reference curves)"
FIG5A_NOTE = "temporal decay pinned to 0.5 (neither 0 nor 10 reproduces the reference curves)"


@dataclass(frozen=True)
class SweepSeries:
    """One labeled curve: which quantity to evaluate, and the fixed context.

    For distance sweeps, aoi holds the fixed age; for aoi sweeps,
    distance holds the fixed separation. A quality-attribute series
    reads the sweep variable as the observation distance itself.
    """

    label: str
    profile: ApplicationProfile | None = None
    scenario: Scenario | None = None
    temporal: TemporalClass | None = None
    sensor: SensorModel | None = None
    mode: str = PROCESSED
    attribute: str = "overall"
    aoi: float | None = None
    distance: float | None = None
    obs_distance: float | None = None

    def __post_init__(self) -> None:
        if self.attribute not in ATTRIBUTE_CHOICES:
            raise ValueError(
                f"attribute must be one of {ATTRIBUTE_CHOICES}, got {self.attribute!r}"
            )
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        required = {
            "overall": ("profile", "scenario", "temporal", "sensor"),
            "proximity": ("scenario",),
            "timeliness": ("temporal",),
            "quality": ("sensor",),
        }[self.attribute]
        for name in required:
            if getattr(self, name) is None:
                raise ValueError(f"series {self.label!r}: {self.attribute} needs {name}")
        if self.attribute == "quality" and self.mode == NON_PROCESSED and self.scenario is None:
            raise ValueError(f"series {self.label!r}: non-processed quality needs scenario")


@dataclass(frozen=True)
class SweepSpec:
    """Grid plus series definitions.

    obs_grid, when set, snaps the derived observation distance of
    overall-score series down to a multiple of itself (the reference
    curves sample d_o this way); explicit per-series obs_distance wins.
    """

    variable: str
    start: float
    stop: float
    step: float
    series: tuple[SweepSeries, ...]
    obs_grid: float | None = None
    name: str = "custom"
    notes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.variable not in VARIABLES:
            raise ValueError(f"variable must be one of {VARIABLES}, got {self.variable!r}")
        if self.step <= 0:
            raise ValueError(f"step must be positive, got {self.step}")
        if self.start > self.stop:
            raise ValueError(f"start {self.start} exceeds stop {self.stop}")
        if self.start < 0:
            raise ValueError(f"start must be non-negative, got {self.start}")
        if not self.series:
            raise ValueError("at least one series is required")
        if self.obs_grid is not None and self.obs_grid <= 0:
            raise ValueError(f"obs_grid must be positive, got {self.obs_grid}")
        labels = [s.label for s in self.series]
        if len(set(labels)) != len(labels):
            raise ValueError(f"series labels must be unique, got {labels}")
        for s in self.series:
            if s.attribute == "overall" and self.variable == "distance" and s.aoi is None:
                raise ValueError(f"series {s.label!r}: distance sweep needs a fixed aoi")
            if s.attribute in ("overall", "proximity") and self.variable == "aoi" and s.distance is None:
                raise ValueError(f"series {s.label!r}: aoi sweep needs a fixed distance")
            if s.attribute == "quality" and self.variable == "aoi" and s.distance is None and s.obs_distance is None:
                raise ValueError(f"series {s.label!r}: aoi sweep needs a fixed observation distance")

    def grid(self) -> tuple[float, ...]:
        # start + i*step keeps shared abscissae bitwise stable when the
        # step is refined by an integer factor.
        count = int(math.floor((self.stop - self.start) / self.step + 1e-9)) + 1
        return tuple(self.start + i * self.step for i in range(count))


@dataclass(frozen=True)
class CurveSet:
    """Evaluated sweep: the grid and one value tuple per series."""

    spec: SweepSpec
    xs: tuple[float, ...]
    curves: tuple[tuple[float, ...], ...]

    def values(self, label: str) -> tuple[float, ...]:
        for series, curve in zip(self.spec.series, self.curves):
            if series.label == label:
                return curve
        known = [s.label for s in self.spec.series]
        raise KeyError(f"no series labeled {label!r}; have {known}")

    def to_csv(self) -> str:
        out = StringIO()
        out.write(f"# sweep: {self.spec.name}\n")
        unit = "m" if self.spec.variable == "distance" else "s"
        out.write(f"# variable: {self.spec.variable} ({unit})\n")
        out.write(
            f"# grid: start={self.spec.start:g} stop={self.spec.stop:g} step={self.spec.step:g}\n"
        )
        if self.spec.obs_grid is not None:
            out.write(f"# obs-grid: {self.spec.obs_grid:g}\n")
        for series in self.spec.series:
            out.write(f"# series {series.label}: {_describe(series)}\n")
        for note in self.spec.notes:
            out.write(f"# note: {note}\n")
        out.write("x," + ",".join(s.label for s in self.spec.series) + "\n")
        for i, x in enumerate(self.xs):
            row = [format(x, ".6g")] + [format(curve[i], ".6g") for curve in self.curves]
            out.write(",".join(row) + "\n")
        return out.getvalue()


def _describe(series: SweepSeries) -> str:
    parts = [f"attribute={series.attribute}"]
    if series.profile is not None:
        parts.append(f"profile={series.profile.name}")
    if series.scenario is not None:
        parts.append(f"scenario={series.scenario.kind}")
    if series.temporal is not None:
        parts.append(f"temporal={series.temporal.name} decay={series.temporal.decay:g}")
    if series.sensor is not None:
        parts.append(f"sensor={series.sensor.resolution:g}px")
    parts.append(f"mode={series.mode}")
    if series.aoi is not None:
        parts.append(f"aoi={series.aoi:g}")
    if series.distance is not None:
        parts.append(f"distance={series.distance:g}")
    if series.obs_distance is not None:
        parts.append(f"obs_distance={series.obs_distance:g}")
    return " ".join(parts)


def _observation_distance(spec: SweepSpec, series: SweepSeries, distance: float) -> float:
    if series.obs_distance is not None:
        return series.obs_distance
    if spec.obs_grid is not None:
        return spec.obs_grid * math.floor(distance / (2.0 * spec.obs_grid))
    return distance / 2.0


def _evaluate(
    spec: SweepSpec, series: SweepSeries, x: float, params: LogisticParams
) -> float:
    if spec.variable == "distance":
        distance, aoi = x, series.aoi
    else:
        distance, aoi = series.distance, x

    if series.attribute == "proximity":
        return proximity_voi(distance, series.scenario.safety_distance, params)
    if series.attribute == "timeliness":
        return timeliness_voi(aoi if aoi is not None else 0.0, series.temporal)
    if series.attribute == "quality":
        # The sweep variable is the observation distance here.
        obs = distance if series.obs_distance is None else series.obs_distance
        if series.mode == PROCESSED:
            return quality_voi_processed(obs, series.sensor)
        return quality_voi_nonprocessed(obs, series.sensor, series.scenario)

    ctx = AssessmentContext(
        distance=distance,
        aoi=aoi,
        scenario=series.scenario,
        temporal=series.temporal,
        sensor=series.sensor,
        mode=series.mode,
        obs_distance=_observation_distance(spec, series, distance),
    )
    return overall_voi(ctx, series.profile, params)


def run_sweep(spec: SweepSpec, params: LogisticParams = DEFAULT_LOGISTIC) -> CurveSet:
    """Evaluate every series of the spec over its grid."""
    xs = spec.grid()
    curves = tuple(
        tuple(_evaluate(spec, series, x, params) for x in xs) for series in spec.series
    )
    return CurveSet(spec=spec, xs=xs, curves=curves)


def _distance_grid(**kwargs) -> dict:
    return dict(variable="distance", start=0.0, stop=500.0, step=10.0, **kwargs)


def _overall_series(
    figure: str,
    variant: str,
    profile: ApplicationProfile,
    scenario: Scenario,
    temporal: TemporalClass,
    sensor: SensorModel,
    mode: str,
    aoi: float,
) -> SweepSeries:
    label = f"{figure}:{scenario.kind}:{profile.name}:{variant}"
    return SweepSeries(
        label=label,
        profile=profile,
        scenario=scenario,
        temporal=temporal,
        sensor=sensor,
        mode=mode,
        aoi=aoi,
    )


def _preset_fig2a() -> SweepSpec:
    series = tuple(
        SweepSeries(
            label=f"fig2a:{sc.kind}:-:proximity", scenario=sc, attribute="proximity"
        )
        for sc in (URBAN, HIGHWAY)
    )
    return SweepSpec(name="fig2a", series=series, **_distance_grid())


def _preset_fig2b() -> SweepSpec:
    series = tuple(
        SweepSeries(
            label=f"fig2b:-:-:{t.name}", temporal=t, attribute="timeliness"
        )
        for t in (STATIC, VARIABLE, DYNAMIC)
    )
    return SweepSpec(name="fig2b", variable="aoi", start=0.0, stop=5.0, step=0.1, series=series)


def _preset_fig2c() -> SweepSpec:
    series = tuple(
        SweepSeries(
            label=f"fig2c:-:-:{name}", sensor=SENSORS[name], attribute="quality"
        )
        for name in ("low", "medium", "high")
    )
    notes = ("the sweep variable is the observation distance",)
    return SweepSpec(name="fig2c", series=series, notes=notes, **_distance_grid())


def _preset_fig2d() -> SweepSpec:
    series = tuple(
        SweepSeries(
            label=f"fig2d:{sc.kind}:-:non_processed",
            scenario=sc,
            sensor=SENSORS["medium"],
            mode=NON_PROCESSED,
            attribute="quality",
        )
        for sc in (URBAN, HIGHWAY)
    )
    notes = ("the sweep variable is the observation distance",)
    return SweepSpec(name="fig2d", series=series, notes=notes, **_distance_grid())


def _preset_fig3(name: str, mode: str) -> SweepSpec:
    variant = "processed" if mode == PROCESSED else "non_processed"
    series = tuple(
        _overall_series(name, variant, profile, scenario, VARIABLE, SENSORS["medium"], mode, 0.1)
        for scenario in (URBAN, HIGHWAY)
        for profile in (SAFETY, TRAFFIC)
    )
    return SweepSpec(
        name=name, series=series, obs_grid=10.0, notes=(RESOLUTION_NOTE,), **_distance_grid()
    )


def _preset_fig4() -> SweepSpec:
    series = tuple(
        _overall_series("fig4", t.name, profile, URBAN, t, SENSORS["medium"], PROCESSED, 0.1)
        for t in (STATIC, DYNAMIC)
        for profile in (SAFETY, TRAFFIC)
    )
    return SweepSpec(
        name="fig4", series=series, obs_grid=10.0, notes=(RESOLUTION_NOTE,), **_distance_grid()
    )


def _preset_fig5(name: str, temporal: TemporalClass, extra_notes: tuple[str, ...]) -> SweepSpec:
    series = tuple(
        _overall_series(name, f"aoi{aoi}", profile, URBAN, temporal, SENSORS["medium"], PROCESSED, aoi)
        for aoi in (0.1, 1.0)
        for profile in (SAFETY, TRAFFIC)
    )
    return SweepSpec(
        name=name,
        series=series,
        obs_grid=10.0,
        notes=(RESOLUTION_NOTE,) + extra_notes,
        **_distance_grid(),
    )


def _preset_fig6() -> SweepSpec:
    series = tuple(
        _overall_series("fig6", quality, profile, URBAN, VARIABLE, SENSORS[quality], PROCESSED, 0.1)
        for quality in ("high", "low")
        for profile in (SAFETY, TRAFFIC)
    )
    return SweepSpec(name="fig6", series=series, obs_grid=10.0, **_distance_grid())


_PRESETS = {
    "fig2a": _preset_fig2a,
    "fig2b": _preset_fig2b,
    "fig2c": _preset_fig2c,
    "fig2d": _preset_fig2d,
    "fig3a": lambda: _preset_fig3("fig3a", PROCESSED),
    "fig3b": lambda: _preset_fig3("fig3b", NON_PROCESSED),
    "fig4": _preset_fig4,
    "fig5a": lambda: _preset_fig5("fig5a", TemporalClass("slow", 0.5), (FIG5A_NOTE,)),
    "fig5b": lambda: _preset_fig5("fig5b", DYNAMIC, ()),
    "fig6": _preset_fig6,
}


def preset_names() -> tuple[str, ...]:
    return tuple(_PRESETS)


def figure_preset(name: str) -> SweepSpec:
    """The exact sweep behind one of the shipped reference figures."""
    try:
        builder = _PRESETS[name]
    except KeyError:
        raise ValueError(
            f"unknown preset {name!r}; valid presets: {', '.join(_PRESETS)}"
        ) from None
    return builder()
