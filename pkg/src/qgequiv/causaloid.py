"""Measurement data indexed by elementary regions, and the set algebra over it.

A datum is the triple (region coordinate, setting, outcome). Regions are
identified by exact coordinate equality, so the re-keying done by
:func:`scale_region` / :func:`rekey_store` is deterministic (``eta * x``).

Because data are kept with set semantics, the procedure set of a scope holds
the same triples as its measurement information; the outcome set narrows it
to a selection of settings.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DomainError, UnknownSymbolError


class Space(str, enum.Enum):
    S = "S"
    QG = "QG"


class EventRole(str, enum.Enum):
    REFERENCE = "A"
    INTEREST = "B"
    COORDINATOR = "Coordinator"


@dataclass(frozen=True, order=True)
class Datum:
    region_coord: float
    setting: str
    outcome: str


@dataclass(frozen=True)
class ElementaryRegion:
    coord: float
    space: Space = Space.S

    def __post_init__(self):
        if not math.isfinite(self.coord):
            raise DomainError(f"region coordinate must be finite, got {self.coord!r}")


@dataclass(frozen=True)
class MeasurementInfo:
    region: ElementaryRegion | None
    data: frozenset[Datum]

    def __post_init__(self):
        if self.region is not None:
            bad = [d for d in self.data if d.region_coord != self.region.coord]
            if bad:
                raise DomainError(f"data outside region {self.region.coord}: {sorted(bad)}")


@dataclass(frozen=True)
class CompositeRegion:
    regions: frozenset[ElementaryRegion]
    space: Space

    def __post_init__(self):
        if not self.regions:
            raise DomainError("composite region must contain at least one elementary region")
        tags = {r.space for r in self.regions}
        if tags != {self.space}:
            raise DomainError(f"mixed space tags in composite region: {sorted(t.value for t in tags)}")

    @classmethod
    def of(cls, coords: Iterable[float], space: Space) -> "CompositeRegion":
        return cls(frozenset(ElementaryRegion(float(x), space) for x in coords), space)

    @property
    def coords(self) -> frozenset[float]:
        return frozenset(r.coord for r in self.regions)


Scope = ElementaryRegion | CompositeRegion


@dataclass(frozen=True)
class ProcedureSet:
    scope: Scope
    entries: frozenset[Datum]


@dataclass(frozen=True)
class OutcomeSet:
    scope: Scope
    entries: frozenset[Datum]
    settings: frozenset[str] = field(default_factory=frozenset)


@dataclass(frozen=True)
class EventSpec:
    procedure: ProcedureSet
    outcomes: OutcomeSet
    role: EventRole

    def __post_init__(self):
        if not self.outcomes.entries <= self.procedure.entries:
            raise DomainError("event outcome set is not contained in its procedure set")


def _coords(scope: Scope) -> frozenset[float]:
    if isinstance(scope, ElementaryRegion):
        return frozenset([scope.coord])
    return scope.coords


def measurement_info(region: ElementaryRegion, store: Iterable[Datum]) -> MeasurementInfo:
    return MeasurementInfo(region, frozenset(d for d in store if d.region_coord == region.coord))


def composite_info(comp: CompositeRegion, store: Iterable[Datum]) -> frozenset[Datum]:
    store = frozenset(store)
    out: set[Datum] = set()
    for region in comp.regions:
        out |= measurement_info(region, store).data
    return frozenset(out)


def global_info(regions: Iterable[ElementaryRegion], store: Iterable[Datum]) -> frozenset[Datum]:
    """Union of the measurement information over every declared region."""
    store = frozenset(store)
    out: set[Datum] = set()
    for region in regions:
        out |= measurement_info(region, store).data
    return frozenset(out)


def scope_info(scope: Scope, store: Iterable[Datum]) -> frozenset[Datum]:
    if isinstance(scope, ElementaryRegion):
        return measurement_info(scope, store).data
    return composite_info(scope, store)


def procedure_set(scope: Scope, store: Iterable[Datum]) -> ProcedureSet:
    return ProcedureSet(scope, scope_info(scope, store))


def outcome_set(
    scope: Scope,
    store: Iterable[Datum],
    selected: Iterable[str],
    alphabet: Sequence[str] | None = None,
) -> OutcomeSet:
    """Data of ``scope`` whose setting is in ``selected``.

    ``alphabet`` is the declared setting alphabet; when omitted, the settings
    present in the scope's data are used.
    """
    proc = procedure_set(scope, store)
    selected = frozenset(selected)
    known = set(alphabet) if alphabet is not None else {d.setting for d in proc.entries}
    unknown = selected - known
    if unknown:
        raise UnknownSymbolError(f"unknown setting symbol(s): {sorted(unknown)}")
    return OutcomeSet(scope, frozenset(d for d in proc.entries if d.setting in selected), selected)


def event_spec(
    role: EventRole,
    region: ElementaryRegion,
    store: Iterable[Datum],
    selected: Iterable[str],
    alphabet: Sequence[str] | None = None,
) -> EventSpec:
    store = frozenset(store)
    return EventSpec(
        procedure_set(region, store),
        outcome_set(region, store, selected, alphabet),
        role,
    )


def _check_eta(eta: float) -> float:
    eta = float(eta)
    if not (math.isfinite(eta) and eta >= 1.0):
        raise DomainError(f"eta must be >= 1, got {eta!r}")
    return eta


def scale_region(comp: CompositeRegion, eta: float) -> CompositeRegion:
    """Map a QG composite region onto S-space coordinates ``eta * x'``."""
    eta = _check_eta(eta)
    if comp.space is not Space.QG:
        raise DomainError("scale_region expects a QG-tagged composite region")
    return CompositeRegion.of((eta * x for x in comp.coords), Space.S)


def rekey_store(store: Iterable[Datum], eta: float) -> frozenset[Datum]:
    eta = _check_eta(eta)
    return frozenset(Datum(eta * d.region_coord, d.setting, d.outcome) for d in store)


@dataclass(frozen=True)
class RegionSets:
    """The Y, F, R sets of one composite region, in one space."""

    space: Space
    outcomes: frozenset[Datum]
    procedure: frozenset[Datum]
    info: frozenset[Datum]


def region_sets(
    comp: CompositeRegion,
    store: Iterable[Datum],
    selected: Iterable[str],
    alphabet: Sequence[str] | None = None,
) -> RegionSets:
    store = frozenset(store)
    return RegionSets(
        comp.space,
        outcome_set(comp, store, selected, alphabet).entries,
        procedure_set(comp, store).entries,
        composite_info(comp, store),
    )


@dataclass(frozen=True)
class InclusionReport:
    """Named subset checks between QG-space (primed) and S-space sets.

    ``within`` holds the chains Y <= F <= R inside each space, which must
    hold. ``cross`` holds the primed/unprimed comparisons, reported as
    diagnostics only.
    """

    within: dict[str, bool]
    cross: dict[str, bool]

    @property
    def within_space_ok(self) -> bool:
        return all(self.within.values())

    @property
    def all_hold(self) -> bool:
        return self.within_space_ok and all(self.cross.values())

    def to_dict(self) -> dict:
        return {"within": dict(self.within), "cross": dict(self.cross)}


def inclusion_report(qg: RegionSets, s: RegionSets) -> InclusionReport:
    if qg.space is not Space.QG or s.space is not Space.S:
        raise DomainError("inclusion_report expects (QG sets, S sets)")
    within = {
        "Y_C' <= F_C'": qg.outcomes <= qg.procedure,
        "F_C' <= R_C'": qg.procedure <= qg.info,
        "Y_C <= F_C": s.outcomes <= s.procedure,
        "F_C <= R_C": s.procedure <= s.info,
    }
    # Superset claims across spaces, then the interleaved chain link by link.
    cross = {
        "R_C' <= R_C": qg.info <= s.info,
        "F_C' <= F_C": qg.procedure <= s.procedure,
        "Y_C' <= Y_C": qg.outcomes <= s.outcomes,
        "Y_C <= F_C'": s.outcomes <= qg.procedure,
        "F_C <= R_C'": s.procedure <= qg.info,
    }
    return InclusionReport(within, cross)
