"""Threshold scheduling of perception records over candidate receivers.

Each record is scored against every receiver; a record's rank is set by
its best achievable value. The scheduler is stateless: one config, one
clock instant, and the same batch always produce the same ordering.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .voi import (
    DEFAULT_LOGISTIC,
    MODES,
    PROCESSED,
    ApplicationProfile,
    AssessmentContext,
    LogisticParams,
    Scenario,
    SensorModel,
    TemporalClass,
    overall_voi,
)


@dataclass(frozen=True)
class PerceptionRecord:
    """A sensed observation held by one vehicle, awaiting a send decision."""

    id: str
    source_vehicle: str
    generated_at: float
    object_distance: float
    temporal: TemporalClass
    sensor: SensorModel
    mode: str = PROCESSED

    def __post_init__(self) -> None:
        if self.object_distance < 0:
            raise ValueError(f"object distance must be non-negative, got {self.object_distance}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")


@dataclass(frozen=True)
class ReceiverView:
    """A candidate receiver: its id, distance from the sender, and scenario."""

    receiver_id: str
    distance: float
    scenario: Scenario

    def __post_init__(self) -> None:
        if self.distance < 0:
            raise ValueError(f"receiver distance must be non-negative, got {self.distance}")


@dataclass(frozen=True)
class SchedulerConfig:
    """Profile, send threshold in [0, 1], and the evaluation instant."""

    profile: ApplicationProfile
    threshold: float
    now: float
    params: LogisticParams = DEFAULT_LOGISTIC

    def __post_init__(self) -> None:
        if not (0.0 <= self.threshold <= 1.0):
            raise ValueError(f"threshold must be in [0, 1], got {self.threshold}")


@dataclass(frozen=True)
class RankedEntry:
    """One record's scores: the best receiver and the full per-receiver map."""

    record_id: str
    best_value: float
    best_receiver: str
    per_receiver_values: tuple[tuple[str, float], ...]


def score_record(
    record: PerceptionRecord, view: ReceiverView, cfg: SchedulerConfig
) -> float:
    """Overall value of one record for one receiver at cfg.now."""
    aoi = cfg.now - record.generated_at
    if aoi < 0:
        raise ValueError(
            f"record {record.id!r} was generated at {record.generated_at}, "
            f"after the scheduler clock {cfg.now}"
        )
    ctx = AssessmentContext(
        distance=view.distance,
        aoi=aoi,
        scenario=view.scenario,
        temporal=record.temporal,
        sensor=record.sensor,
        mode=record.mode,
        obs_distance=record.object_distance,
    )
    return overall_voi(ctx, cfg.profile, cfg.params)


def rank(
    records: Sequence[PerceptionRecord],
    receivers: Sequence[ReceiverView],
    cfg: SchedulerConfig,
) -> list[RankedEntry]:
    """Rank records by their best per-receiver value, descending.

    Ties break on record id, and the best receiver for a record is the
    lexicographically first among equal-valued ones, so the ordering is
    independent of input permutation.
    """
    if not receivers:
        raise ValueError("at least one receiver is required")
    seen: set[str] = set()
    for record in records:
        if record.id in seen:
            raise ValueError(f"duplicate record id {record.id!r}")
        seen.add(record.id)

    entries = []
    for record in records:
        values = tuple((v.receiver_id, score_record(record, v, cfg)) for v in receivers)
        best_receiver, best_value = min(values, key=lambda rv: (-rv[1], rv[0]))
        entries.append(RankedEntry(record.id, best_value, best_receiver, values))
    entries.sort(key=lambda e: (-e.best_value, e.record_id))
    return entries


def filter_broadcast(
    entries: Sequence[RankedEntry], cfg: SchedulerConfig
) -> tuple[list[RankedEntry], list[RankedEntry]]:
    """Split a ranked batch into (transmit, cancelled) at the threshold.

    An entry transmits when its best value reaches cfg.threshold; both
    returned lists preserve the rank order.
    """
    transmit = [e for e in entries if e.best_value >= cfg.threshold]
    cancelled = [e for e in entries if e.best_value < cfg.threshold]
    return transmit, cancelled
