"""Scenario files, flag planning, equivalence reports and the dx-versus-dx' curve CSV.

A scenario is one UTF-8 JSON document::

    {
      "c": 1.0,
      "beta": 0.6,                      # or "theta": <degrees>
      "space": "QG",                    # how event coordinates are given
      "events": [
        {"id": "O", "role": "Coordinator", "x_prime": 0.0},
        {"id": "A", "role": "A", "x_prime": 1.0},
        {"id": "B", "role": "B", "x_prime": 2.0}
      ],                                # S-space events use "x" and "ct"
      "alphabets": {"A": ["0", "1"], "B": ["0", "1"]},
      "settings": {"A": ["z"], "B": ["z"]},
      "pmf": [{"settings": ["z", "z"], "table": [[0.5, 0.0], [0.0, 0.5]]}],
      "reference": {"settings": ["z", "z"], "outcome_a": "0"},
      "ensemble": {"priors": [0.5, 0.5], "states": [<matrix>, <matrix>]},
      "channel": {"kind": "identity"},  # or "classical" + "matrix", "kraus" + "operators"
      "measures": ["entropy", "mutual_information"],
      "past_data_tag": "D_A"
    }

Matrix entries are either real numbers or ``[re, im]`` pairs. ``pmf`` tables
have one row per A outcome and one column per B outcome.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from . import causaloid as cm
from .errors import DomainError, QGEquivError, ScenarioError
from .eta import QGStrength, QGEvent, dt_between, dx_between, lift_to_s, project_to_qg
from .measures import (
    ClassicalChannel,
    ConditionalJointPMF,
    CqEnsemble,
    DensityMatrix,
    MeasureId,
    QuantumChannel,
    Reference,
    ScenarioProbability,
    evaluate,
    pmf_violations,
    qg_measure,
)
from .minkowski import ORIGIN, Event, gradient

DEFAULT_TOLERANCE = 1e-12


class Role(str, enum.Enum):
    COORDINATOR = "Coordinator"
    A = "A"
    B = "B"
    OTHER = "Other"


@dataclass(frozen=True)
class ScenarioEvent:
    id: str
    role: Role
    x_prime: float | None = None
    x: float | None = None
    ct: float | None = None

    def qg(self, s: QGStrength) -> QGEvent:
        if self.x_prime is not None:
            return QGEvent(self.x_prime)
        return project_to_qg(Event.at(self.x, self.ct), s)

    def s_event(self, s: QGStrength) -> Event:
        if self.x_prime is None:
            return Event.at(self.x, self.ct)
        return lift_to_s(QGEvent(self.x_prime), s)


@dataclass(frozen=True, eq=False)
class Scenario:
    c: float
    strength: QGStrength
    space: cm.Space
    events: tuple[ScenarioEvent, ...]
    pmf: ConditionalJointPMF
    reference: Reference
    measures: tuple[MeasureId, ...]
    ensemble: CqEnsemble | None = None
    channel: ClassicalChannel | QuantumChannel | None = None
    past_data_tag: str | None = None

    def event(self, role: Role) -> ScenarioEvent:
        role = Role(role)
        return next(e for e in self.events if e.role is role)

    def probability(self, space: cm.Space) -> ScenarioProbability:
        """Probability data bound to the A/B regions in the requested space."""
        s = self.strength
        if space is cm.Space.QG:
            coords = {e.id: e.qg(s).x_prime for e in self.events}
        else:
            coords = {e.id: e.s_event(s).x for e in self.events}
        a, b = self.event(Role.A), self.event(Role.B)
        return ScenarioProbability(
            pmf=self.pmf,
            binding={"A": coords[a.id], "B": coords[b.id]},
            space=space,
            reference=self.reference,
            past_data_tag=self.past_data_tag,
            ensemble=self.ensemble,
            channel=self.channel,
            declared_coords=frozenset(coords.values()),
        )


# --------------------------------------------------------------------------
# parsing

def _num(v: Any) -> float | None:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        return None
    v = float(v)
    return v if math.isfinite(v) else None


def _complex_matrix(raw: Any, where: str, problems: list[str]) -> np.ndarray | None:
    if not isinstance(raw, list) or not raw or not all(isinstance(r, list) for r in raw):
        problems.append(f"{where}: expected a non-empty list of rows")
        return None
    rows = []
    for i, row in enumerate(raw):
        out = []
        for j, v in enumerate(row):
            if isinstance(v, list) and len(v) == 2 and all(_num(p) is not None for p in v):
                out.append(complex(float(v[0]), float(v[1])))
            elif _num(v) is not None:
                out.append(complex(float(v), 0.0))
            else:
                problems.append(f"{where}[{i}][{j}]: expected a number or [re, im] pair")
                return None
        rows.append(out)
    if len({len(r) for r in rows}) != 1:
        problems.append(f"{where}: rows have different lengths")
        return None
    return np.array(rows, dtype=complex)


def _symbols(raw: Any, where: str, problems: list[str]) -> tuple[str, ...]:
    if not isinstance(raw, list) or not raw or not all(isinstance(s, str) for s in raw):
        problems.append(f"{where}: expected a non-empty list of strings")
        return ()
    return tuple(raw)


def _parse_strength(doc: dict, problems: list[str]) -> QGStrength | None:
    if "beta" in doc and "theta" in doc:
        problems.append("give either 'beta' or 'theta', not both")
        return None
    try:
        if "theta" in doc:
            theta = _num(doc["theta"])
            if theta is None:
                problems.append("theta: expected a finite number")
                return None
            return QGStrength.from_theta(theta)
        if "beta" not in doc:
            problems.append("missing 'beta' (or 'theta')")
            return None
        beta = _num(doc["beta"])
        if beta is None:
            problems.append("beta: expected a finite number")
            return None
        return QGStrength.from_beta(beta)
    except DomainError as exc:
        problems.append(str(exc))
        return None


def _parse_events(doc: dict, space: cm.Space | None, problems: list[str]) -> tuple[ScenarioEvent, ...]:
    raw = doc.get("events")
    if not isinstance(raw, list) or not raw:
        problems.append("events: expected a non-empty list")
        return ()
    events = []
    for k, ev in enumerate(raw):
        where = f"events[{k}]"
        if not isinstance(ev, dict):
            problems.append(f"{where}: expected an object")
            continue
        eid = ev.get("id")
        if not isinstance(eid, str) or not eid:
            problems.append(f"{where}: missing string 'id'")
            continue
        try:
            role = Role(ev.get("role"))
        except ValueError:
            problems.append(f"{where} ({eid}): role must be one of {[r.value for r in Role]}")
            continue
        if space is cm.Space.QG:
            if "x" in ev or "ct" in ev:
                problems.append(f"{where} ({eid}): QG scenario events take 'x_prime' only")
            xp = _num(ev.get("x_prime"))
            if xp is None:
                problems.append(f"{where} ({eid}): 'x_prime' must be a finite number")
                continue
            events.append(ScenarioEvent(eid, role, x_prime=xp))
        elif space is cm.Space.S:
            if "x_prime" in ev:
                problems.append(f"{where} ({eid}): S scenario events take 'x' and 'ct'")
            x, ct = _num(ev.get("x")), _num(ev.get("ct"))
            if x is None or ct is None:
                problems.append(f"{where} ({eid}): 'x' and 'ct' must be finite numbers")
                continue
            events.append(ScenarioEvent(eid, role, x=x, ct=ct))
    ids = [e.id for e in events]
    dupes = sorted({i for i in ids if ids.count(i) > 1})
    if dupes:
        problems.append(f"duplicate event ids: {dupes}")
    for role in (Role.COORDINATOR, Role.A, Role.B):
        n = sum(e.role is role for e in events)
        if n != 1:
            problems.append(f"exactly one event with role {role.value} is required, found {n}")
    for e in events:
        if e.role is Role.COORDINATOR:
            at_origin = e.x_prime == 0.0 if e.x_prime is not None else (e.x == 0.0 and e.ct == 0.0)
            if not at_origin:
                problems.append(f"coordinator {e.id} must sit at the origin")
    return tuple(events)


def _parse_pmf(doc: dict, problems: list[str]):
    alph = doc.get("alphabets")
    sett = doc.get("settings")
    if not isinstance(alph, dict):
        problems.append("alphabets: expected an object with keys 'A' and 'B'")
        alph = {}
    if not isinstance(sett, dict):
        problems.append("settings: expected an object with keys 'A' and 'B'")
        sett = {}
    a_out = _symbols(alph.get("A"), "alphabets.A", problems)
    b_out = _symbols(alph.get("B"), "alphabets.B", problems)
    a_set = _symbols(sett.get("A"), "settings.A", problems)
    b_set = _symbols(sett.get("B"), "settings.B", problems)
    if not (a_out and b_out and a_set and b_set):
        return None
    table = np.full((len(a_set), len(b_set), len(a_out), len(b_out)), np.nan)
    raw = doc.get("pmf")
    if not isinstance(raw, list):
        problems.append("pmf: expected a list of {settings, table} entries")
        return None
    n_before = len(problems)
    for k, entry in enumerate(raw):
        where = f"pmf[{k}]"
        if not isinstance(entry, dict):
            problems.append(f"{where}: expected an object")
            continue
        pair = entry.get("settings")
        if not (isinstance(pair, list) and len(pair) == 2 and pair[0] in a_set and pair[1] in b_set):
            problems.append(f"{where}: settings must be [A setting, B setting] from the declared alphabets")
            continue
        i, j = a_set.index(pair[0]), b_set.index(pair[1])
        if not np.all(np.isnan(table[i, j])):
            problems.append(f"{where}: duplicate entry for settings ({pair[0]}, {pair[1]})")
            continue
        block = entry.get("table")
        try:
            arr = np.array(block, dtype=float)
        except (TypeError, ValueError):
            arr = None
        if arr is None or arr.shape != (len(a_out), len(b_out)):
            problems.append(f"{where}: table must be {len(a_out)}x{len(b_out)} numbers")
            continue
        table[i, j] = arr
    for i, fa in enumerate(a_set):
        for j, fb in enumerate(b_set):
            if np.all(np.isnan(table[i, j])):
                problems.append(f"pmf: no table for settings ({fa}, {fb})")
    if len(problems) > n_before:
        return None
    found = pmf_violations(a_out, b_out, a_set, b_set, table)
    if found:
        problems.extend(found)
        return None
    return ConditionalJointPMF(a_out, b_out, a_set, b_set, table)


def _parse_reference(doc: dict, pmf: ConditionalJointPMF | None, problems: list[str]) -> Reference | None:
    if pmf is None:
        return None
    raw = doc.get("reference")
    if raw is None:
        return Reference(pmf.a_settings[0], pmf.b_settings[0])
    if not isinstance(raw, dict):
        problems.append("reference: expected an object")
        return None
    pair = raw.get("settings", [pmf.a_settings[0], pmf.b_settings[0]])
    if not (isinstance(pair, list) and len(pair) == 2 and pair[0] in pmf.a_settings and pair[1] in pmf.b_settings):
        problems.append("reference.settings: must be [A setting, B setting] from the declared alphabets")
        return None
    outcome = raw.get("outcome_a")
    if outcome is not None:
        if outcome not in pmf.a_outcomes:
            problems.append(f"reference.outcome_a: unknown A outcome {outcome!r}")
            return None
        if pmf.at(pair[0], pair[1])[pmf.a_outcomes.index(outcome)].sum() <= 0:
            problems.append(f"reference.outcome_a: {outcome!r} has zero probability at the reference settings")
            return None
    return Reference(pair[0], pair[1], outcome)


def _parse_ensemble(raw: Any, problems: list[str]) -> CqEnsemble | None:
    if raw is None:
        return None
    if not isinstance(raw, dict) or not isinstance(raw.get("states"), list):
        problems.append("ensemble: expected an object with 'priors' and 'states'")
        return None
    states = []
    for k, m in enumerate(raw["states"]):
        arr = _complex_matrix(m, f"ensemble.states[{k}]", problems)
        if arr is None:
            continue
        try:
            states.append(DensityMatrix(arr))
        except QGEquivError as exc:
            problems.append(f"ensemble.states[{k}]: {exc}")
    if len(states) != len(raw["states"]):
        return None
    try:
        return CqEnsemble(np.array(raw.get("priors"), dtype=float), tuple(states))
    except (QGEquivError, TypeError, ValueError) as exc:
        problems.append(f"ensemble: {exc}")
        return None


def _parse_channel(raw: Any, problems: list[str]):
    if raw is None:
        return None
    if not isinstance(raw, dict):
        problems.append("channel: expected an object with 'kind'")
        return None
    kind = raw.get("kind")
    try:
        if kind == "identity":
            dim = raw.get("dim")
            return None if dim is None else QuantumChannel.identity(int(dim))
        if kind == "classical":
            return ClassicalChannel(np.array(raw.get("matrix"), dtype=float))
        if kind == "kraus":
            ops = raw.get("operators")
            if not isinstance(ops, list) or not ops:
                problems.append("channel.operators: expected a non-empty list of matrices")
                return None
            mats = [_complex_matrix(m, f"channel.operators[{k}]", problems) for k, m in enumerate(ops)]
            if any(m is None for m in mats):
                return None
            return QuantumChannel(tuple(mats))
    except (QGEquivError, TypeError, ValueError) as exc:
        problems.append(f"channel: {exc}")
        return None
    problems.append(f"channel.kind must be 'identity', 'classical' or 'kraus', got {kind!r}")
    return None


def _parse_measures(raw: Any, problems: list[str]) -> tuple[MeasureId, ...]:
    if raw is None:
        return ()
    if not isinstance(raw, list):
        problems.append("measures: expected a list of measure names")
        return ()
    out = []
    for name in raw:
        try:
            out.append(MeasureId(name))
        except ValueError:
            problems.append(f"measures: unknown measure {name!r}; known {[m.value for m in MeasureId]}")
    return tuple(out)


def scenario_from_dict(doc: Any) -> Scenario:
    """Validate a decoded scenario document, collecting every violation."""
    if not isinstance(doc, dict):
        raise ScenarioError(["scenario must be a JSON object"])
    problems: list[str] = []
    c = 1.0
    if "c" in doc:
        c_val = _num(doc["c"])
        if c_val is None or c_val <= 0:
            problems.append(f"c must be a positive finite number, got {doc['c']!r}")
        else:
            c = c_val
    strength = _parse_strength(doc, problems)
    space = None
    try:
        space = cm.Space(doc.get("space", "QG"))
    except ValueError:
        problems.append(f"space must be 'QG' or 'S', got {doc.get('space')!r}")
    events = _parse_events(doc, space, problems)
    pmf = _parse_pmf(doc, problems)
    reference = _parse_reference(doc, pmf, problems)
    ensemble = _parse_ensemble(doc.get("ensemble"), problems)
    channel = _parse_channel(doc.get("channel"), problems)
    measures = _parse_measures(doc.get("measures"), problems)
    if ensemble is not None and isinstance(channel, QuantumChannel) and channel.d_in != ensemble.dim:
        problems.append(f"channel input dimension {channel.d_in} != ensemble dimension {ensemble.dim}")
    tag = doc.get("past_data_tag")
    if tag is not None and not isinstance(tag, str):
        problems.append("past_data_tag: expected a string")
    known = {"c", "beta", "theta", "space", "events", "alphabets", "settings", "pmf", "reference",
             "ensemble", "channel", "measures", "past_data_tag"}
    for key in sorted(set(doc) - known):
        problems.append(f"unknown key {key!r}")
    if problems:
        raise ScenarioError(problems)
    return Scenario(c, strength, space, events, pmf, reference, measures, ensemble, channel, tag)


def parse_scenario(data: bytes | str) -> Scenario:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ScenarioError([f"scenario is not valid UTF-8: {exc}"]) from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ScenarioError([f"malformed JSON: {exc}"]) from None
    return scenario_from_dict(doc)


# --------------------------------------------------------------------------
# flags

@dataclass(frozen=True)
class Flag:
    """A coordinator -> party lightline; ``emission`` is the program value i."""

    label: str
    party: str
    gradient: float | None
    connected: bool
    emission: int

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "party": self.party,
            "gradient": _json_float(self.gradient),
            "connected": self.connected,
            "emission": self.emission,
        }


@dataclass(frozen=True)
class FlagPlan:
    s_flags: tuple[Flag, ...]
    qg_flags: tuple[Flag, ...]

    @property
    def s_connected(self) -> int:
        return sum(f.connected for f in self.s_flags)

    @property
    def qg_connected(self) -> int:
        return sum(f.connected for f in self.qg_flags)

    def to_dict(self) -> dict:
        return {
            "S": [f.to_dict() for f in self.s_flags],
            "QG": [f.to_dict() for f in self.qg_flags],
            "connected": {"S": self.s_connected, "QG": self.qg_connected},
        }


def _flag_labels(events: Sequence[ScenarioEvent]) -> dict[str, str]:
    parties = [e for e in events if e.role is not Role.COORDINATOR]
    order = sorted(parties, key=lambda e: ({Role.A: 0, Role.B: 1}.get(e.role, 2), e.id))
    return {e.id: f"L_{k}" for k, e in enumerate(order, start=1)}


def _flag(label: str, party: str, origin: Event, target: Event) -> Flag:
    if target == origin:
        return Flag(label, party, None, False, 0)
    g = gradient(origin, target)
    return Flag(label, party, g.value, g.connected, int(g.connected))


def plan_flags(sc: Scenario) -> FlagPlan:
    """Coordinator lightlines to every party in both representations.

    In S-space a party is reached when the gradient is at most 1. In QG-space
    every event has ct' = 0, so no flag connects.
    """
    labels = _flag_labels(sc.events)
    s_flags, qg_flags = [], []
    for e in sc.events:
        if e.role is Role.COORDINATOR:
            continue
        s_flags.append(_flag(labels[e.id], e.id, ORIGIN, e.s_event(sc.strength)))
        qg_flags.append(_flag(labels[e.id], e.id, ORIGIN, Event.at(e.qg(sc.strength).x_prime, 0.0)))
    key = lambda f: f.label  # noqa: E731
    return FlagPlan(tuple(sorted(s_flags, key=key)), tuple(sorted(qg_flags, key=key)))


# --------------------------------------------------------------------------
# transform and equivalence

def _json_float(v: float | None):
    if v is None:
        return None
    if math.isfinite(v):
        return float(v)
    return "inf" if v > 0 else "-inf"


def transform(sc: Scenario) -> dict:
    """Both coordinate representations of every event, plus the A-B spacing."""
    s = sc.strength
    events = []
    for e in sc.events:
        se = e.s_event(s)
        events.append({
            "id": e.id,
            "role": e.role.value,
            "qg": {"x_prime": e.qg(s).x_prime, "ct_prime": 0.0},
            "s": {"x": se.x, "ct": se.ct},
        })
    dxp = abs(sc.event(Role.B).qg(s).x_prime - sc.event(Role.A).qg(s).x_prime)
    return {
        "c": sc.c,
        "source_space": sc.space.value,
        "strength": s.to_dict(),
        "events": events,
        "a_b": {"dx_prime": dxp, "dx": dx_between(s, dxp), "dt": dt_between(s, dxp, sc.c)},
    }


def _datum_store(sc: Scenario) -> frozenset[cm.Datum]:
    # Every (setting, outcome) pair of A and B, keyed by their QG coordinates.
    s = sc.strength
    out = set()
    for role, outcomes, settings in (
        (Role.A, sc.pmf.a_outcomes, sc.pmf.a_settings),
        (Role.B, sc.pmf.b_outcomes, sc.pmf.b_settings),
    ):
        xp = sc.event(role).qg(s).x_prime
        out.update(cm.Datum(xp, phi, y) for phi in settings for y in outcomes)
    return frozenset(out)


def inclusion_diagnostics(sc: Scenario) -> cm.InclusionReport:
    s = sc.strength
    store = _datum_store(sc)
    comp = cm.CompositeRegion.of(
        (sc.event(r).qg(s).x_prime for r in (Role.A, Role.B)), cm.Space.QG
    )
    selected = {sc.reference.setting_a, sc.reference.setting_b}
    alphabet = sorted(set(sc.pmf.a_settings) | set(sc.pmf.b_settings))
    qg_sets = cm.region_sets(comp, store, selected, alphabet)
    s_sets = cm.region_sets(cm.scale_region(comp, s.eta), cm.rekey_store(store, s.eta), selected, alphabet)
    return cm.inclusion_report(qg_sets, s_sets)


@dataclass(frozen=True)
class ReportEntry:
    measure: str
    qg_value: float | None = None
    s_value: float | None = None
    abs_diff: float | None = None
    equal: bool | None = None
    skipped: str | None = None

    def to_dict(self) -> dict:
        if self.skipped is not None:
            return {"measure": self.measure, "skipped": self.skipped}
        return {
            "measure": self.measure,
            "qg_value": self.qg_value,
            "s_value": self.s_value,
            "abs_diff": self.abs_diff,
            "equal": self.equal,
        }


@dataclass(frozen=True)
class Report:
    tolerance: float
    entries: tuple[ReportEntry, ...]
    flags: FlagPlan
    coordinates: dict
    inclusions: cm.InclusionReport

    @property
    def all_equal(self) -> bool:
        return all(e.equal for e in self.entries if e.skipped is None)

    def to_dict(self) -> dict:
        return {
            "tolerance": self.tolerance,
            "all_equal": self.all_equal,
            "measures": [e.to_dict() for e in self.entries],
            "transform": self.coordinates,
            "flags": self.flags.to_dict(),
            "inclusions": self.inclusions.to_dict(),
        }


def run_equivalence(
    sc: Scenario,
    tolerance: float = DEFAULT_TOLERANCE,
    measures: Sequence[MeasureId | str] | None = None,
) -> Report:
    """Evaluate each measure on the QG side (relabeled) and natively in S."""
    if not tolerance >= 0:
        raise DomainError(f"tolerance must be >= 0, got {tolerance!r}")
    qg_sp = sc.probability(cm.Space.QG)
    s_sp = sc.probability(cm.Space.S)
    entries = []
    for g in (sc.measures if measures is None else measures):
        g = MeasureId(g)
        if not g.computable:
            entries.append(ReportEntry(g.value, skipped=(
                f"{g.value} has no computational procedure; only representation "
                "invariance of a user-supplied functional can be checked"
            )))
            continue
        pair = qg_measure(qg_sp, sc.strength, g, s_counterpart=s_sp)
        entries.append(ReportEntry(g.value, pair.qg_value, pair.s_value, pair.abs_diff, bool(pair.abs_diff <= tolerance)))
    return Report(tolerance, tuple(entries), plan_flags(sc), transform(sc), inclusion_diagnostics(sc))


def measure_values(sc: Scenario, measures: Sequence[MeasureId | str] | None = None) -> dict:
    """Measures evaluated once, on the scenario's S-space representation."""
    sp = sc.probability(cm.Space.S)
    values = {}
    for g in (sc.measures if measures is None else measures):
        g = MeasureId(g)
        values[g.value] = evaluate(sp, g) if g.computable else None
    return {"source_space": sc.space.value, "values": values}


# --------------------------------------------------------------------------
# dx = eta dx' curves (the `fig3` CSV)

def fmt(v: float) -> str:
    """Shortest round-trip decimal for a float (at most 17 significant digits)."""
    v = float(v)
    if v == 0.0:
        return "0.0"
    return repr(v)


def emit_fig3_curves(
    betas: Sequence[float],
    dx_prime_range: tuple[float, float] = (0.0, 10.0),
    samples: int = 11,
) -> bytes:
    """CSV of S-space spacing dx = eta dx' against dx' for each beta."""
    strengths = [QGStrength.from_beta(b) for b in betas]
    if not strengths:
        raise DomainError("need at least one beta")
    if samples < 2:
        raise DomainError(f"samples must be >= 2, got {samples!r}")
    lo, hi = (float(v) for v in dx_prime_range)
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise DomainError(f"dx' range must be finite and increasing, got {dx_prime_range!r}")
    xs = np.linspace(lo, hi, samples)
    header = ["dx_prime"] + [f"dx_beta_{fmt(s.beta)}" for s in strengths]
    lines = [",".join(header)]
    for xp in xs:
        lines.append(",".join([fmt(xp)] + [fmt(dx_between(s, float(xp))) for s in strengths]))
    return ("\n".join(lines) + "\n").encode("utf-8")


def to_json_bytes(obj: Any) -> bytes:
    return (json.dumps(obj, indent=2, ensure_ascii=False, allow_nan=False) + "\n").encode("utf-8")

