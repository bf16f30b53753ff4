"""Minkowski event algebra, QG <-> S representation transform, and the
correlation measures whose QG-side and S-side values coincide."""

from .errors import QGEquivError, ScenarioError
from .eta import QGStrength, dt_between, beta_from, lift_to_s, project_to_qg
from .measures import MeasureId, evaluate, qg_measure
from .minkowski import Boost, Event, boost, classify, interval_squared
from .scenario import Scenario, parse_scenario, plan_flags, run_equivalence

__version__ = "0.1.0"

__all__ = [
    "Boost",
    "Event",
    "MeasureId",
    "QGEquivError",
    "QGStrength",
    "Scenario",
    "ScenarioError",
    "beta_from",
    "boost",
    "classify",
    "dt_between",
    "evaluate",
    "interval_squared",
    "lift_to_s",
    "parse_scenario",
    "plan_flags",
    "project_to_qg",
    "qg_measure",
    "run_equivalence",
]
