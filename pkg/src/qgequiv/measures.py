"""Entropies, correlation measures and capacities, in bits.

Classical measures act on a 2-D joint table ``p[a, b]`` (rows: A outcomes,
columns: B outcomes) taken at one fixed pair of settings; use
:meth:`ConditionalJointPMF.at` to pick it out of a full scenario table.
Quantum measures act on small density matrices (dimension <= ``D_MAX``).

:func:`qg_measure` evaluates a measure on a QG-tagged scenario after moving
its region bindings to S-space coordinates, next to the direct S-space
evaluation, so the two can be compared.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Mapping, Sequence

import numpy as np

from .causaloid import Space
from .errors import (
    ConvergenceError,
    DimensionMismatchError,
    DomainError,
    InvariantViolation,
    UnknownSymbolError,
    UnsupportedMeasureError,
)
from .eta import QGStrength

PMF_TOL = 1e-9
MATRIX_TOL = 1e-10
KRAUS_TOL = 1e-9
D_MAX = 16
CAPACITY_TOL = 1e-9
CAPACITY_MAX_ITER = 100_000


# --------------------------------------------------------------------------
# classical entropies

def _as_pmf(p, tol: float = PMF_TOL) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.size == 0:
        raise InvariantViolation("empty probability table")
    if not np.all(np.isfinite(p)):
        raise InvariantViolation("probability table has non-finite entries")
    if np.any(p < 0):
        raise InvariantViolation(f"negative probability {p.min()!r}")
    total = p.sum()
    if abs(total - 1.0) > tol:
        raise InvariantViolation(f"probabilities sum to {total!r}, not 1")
    return p


def _h(p: np.ndarray) -> float:
    nz = p[p > 0]
    return float(0.0 - np.sum(nz * np.log2(nz)))


def shannon_entropy(p) -> float:
    """-sum p log2 p with 0 log 0 = 0."""
    return _h(_as_pmf(p).ravel())


def _joint(joint) -> np.ndarray:
    joint = _as_pmf(joint)
    if joint.ndim != 2:
        raise DimensionMismatchError(f"joint table must be 2-D, got shape {joint.shape}")
    return joint


def conditional_entropy(joint, condition_on: str = "A") -> float:
    """H(B|A) when ``condition_on == "A"``, H(A|B) when it is ``"B"``."""
    joint = _joint(joint)
    if condition_on == "A":
        return _h(joint.ravel()) - _h(joint.sum(axis=1))
    if condition_on == "B":
        return _h(joint.ravel()) - _h(joint.sum(axis=0))
    raise DomainError(f"condition_on must be 'A' or 'B', got {condition_on!r}")


def mutual_information(joint) -> float:
    joint = _joint(joint)
    return _h(joint.sum(axis=0)) - conditional_entropy(joint, "A")


def coherent_information(joint) -> float:
    """-H(A|B) evaluated on the classical table (so never positive)."""
    return 0.0 - conditional_entropy(joint, "B")


# --------------------------------------------------------------------------
# scenario probability tables

def pmf_violations(a_outcomes, b_outcomes, a_settings, b_settings, table) -> list[str]:
    """Every problem with a conditional joint table, one message each."""
    out = []
    for name, symbols in (
        ("A outcomes", a_outcomes),
        ("B outcomes", b_outcomes),
        ("A settings", a_settings),
        ("B settings", b_settings),
    ):
        if not symbols:
            out.append(f"{name} alphabet is empty")
        if len(set(symbols)) != len(symbols):
            out.append(f"{name} alphabet has duplicate symbols")
    table = np.asarray(table, dtype=float)
    shape = (len(a_settings), len(b_settings), len(a_outcomes), len(b_outcomes))
    if table.shape != shape:
        out.append(f"pmf table shape {table.shape} does not match alphabets {shape}")
        return out
    for i, fa in enumerate(a_settings):
        for j, fb in enumerate(b_settings):
            block = table[i, j]
            if not np.all(np.isfinite(block)) or np.any(block < 0):
                out.append(f"pmf at settings ({fa}, {fb}): entries must be finite and >= 0")
                continue
            total = float(block.sum())
            if abs(total - 1.0) > PMF_TOL:
                out.append(f"pmf at settings ({fa}, {fb}) sums to {total!r}, not 1")
    return out


@dataclass(frozen=True, eq=False)
class ConditionalJointPMF:
    """p(y_A, y_B | phi_A, phi_B), stored as ``table[phi_A, phi_B, y_A, y_B]``."""

    a_outcomes: tuple[str, ...]
    b_outcomes: tuple[str, ...]
    a_settings: tuple[str, ...]
    b_settings: tuple[str, ...]
    table: np.ndarray

    def __post_init__(self):
        for name in ("a_outcomes", "b_outcomes", "a_settings", "b_settings"):
            object.__setattr__(self, name, tuple(str(s) for s in getattr(self, name)))
        table = np.array(self.table, dtype=float)
        table.setflags(write=False)
        object.__setattr__(self, "table", table)
        problems = pmf_violations(self.a_outcomes, self.b_outcomes, self.a_settings, self.b_settings, table)
        if problems:
            raise InvariantViolation("; ".join(problems))

    def _index(self, symbols: tuple[str, ...], sym: str, what: str) -> int:
        try:
            return symbols.index(sym)
        except ValueError:
            raise UnknownSymbolError(f"unknown {what} {sym!r}; declared {list(symbols)}") from None

    def at(self, setting_a: str, setting_b: str) -> np.ndarray:
        i = self._index(self.a_settings, setting_a, "A setting")
        j = self._index(self.b_settings, setting_b, "B setting")
        return self.table[i, j]

    def b_given_a(self, setting_a: str, setting_b: str, outcome_a: str) -> np.ndarray:
        """p(y_B | y_A, phi_A, phi_B) for one fixed A outcome."""
        joint = self.at(setting_a, setting_b)
        row = joint[self._index(self.a_outcomes, outcome_a, "A outcome")]
        mass = row.sum()
        if mass <= 0:
            raise DomainError(f"A outcome {outcome_a!r} has zero probability at ({setting_a}, {setting_b})")
        return row / mass


# --------------------------------------------------------------------------
# quantum states and channels

def _check_square(m: np.ndarray, what: str) -> np.ndarray:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"{what} must be square, got shape {m.shape}")
    if not 1 <= m.shape[0] <= D_MAX:
        raise DimensionMismatchError(f"{what} dimension must be 1..{D_MAX}, got {m.shape[0]}")
    return m


def _clipped_eigvals(m: np.ndarray) -> np.ndarray:
    w = np.linalg.eigvalsh(m)
    if w.min() < -MATRIX_TOL:
        raise InvariantViolation(f"density matrix has eigenvalue {w.min()!r} < 0")
    return np.clip(w, 0.0, 1.0)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    matrix: np.ndarray

    def __post_init__(self):
        m = _check_square(np.array(self.matrix, dtype=complex), "density matrix")
        if np.max(np.abs(m - m.conj().T)) > MATRIX_TOL:
            raise InvariantViolation("density matrix is not Hermitian")
        tr = np.trace(m).real
        if abs(tr - 1.0) > MATRIX_TOL:
            raise InvariantViolation(f"density matrix trace is {tr!r}, not 1")
        _clipped_eigvals(m)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def pure(cls, ket) -> "DensityMatrix":
        v = np.asarray(ket, dtype=complex).ravel()
        v = v / np.linalg.norm(v)
        return cls(np.outer(v, v.conj()))

    @classmethod
    def diagonal(cls, probs) -> "DensityMatrix":
        return cls(np.diag(np.asarray(probs, dtype=float)))


@dataclass(frozen=True, eq=False)
class CqEnsemble:
    priors: np.ndarray
    states: tuple[DensityMatrix, ...]

    def __post_init__(self):
        states = tuple(self.states)
        if not states:
            raise DomainError("ensemble needs at least one state")
        if len({s.dim for s in states}) != 1:
            raise DimensionMismatchError("ensemble states have different dimensions")
        priors = _as_pmf(self.priors).ravel().copy()
        if priors.size != len(states):
            raise DimensionMismatchError(f"{priors.size} priors for {len(states)} states")
        priors.setflags(write=False)
        object.__setattr__(self, "priors", priors)
        object.__setattr__(self, "states", states)

    @property
    def dim(self) -> int:
        return self.states[0].dim

    def average(self) -> np.ndarray:
        return sum(p * s.matrix for p, s in zip(self.priors, self.states))


@dataclass(frozen=True, eq=False)
class ClassicalChannel:
    """Row-stochastic transition matrix W[x, y] = p(y | x)."""

    matrix: np.ndarray

    def __post_init__(self):
        w = np.array(self.matrix, dtype=float)
        if w.ndim != 2 or w.size == 0:
            raise DimensionMismatchError(f"channel matrix must be a non-empty 2-D array, got shape {w.shape}")
        if not np.all(np.isfinite(w)) or np.any(w < 0):
            raise InvariantViolation("channel matrix entries must be finite and >= 0")
        bad = np.flatnonzero(np.abs(w.sum(axis=1) - 1.0) > PMF_TOL)
        if bad.size:
            raise InvariantViolation(f"channel rows {bad.tolist()} do not sum to 1")
        w.setflags(write=False)
        object.__setattr__(self, "matrix", w)


@dataclass(frozen=True, eq=False)
class QuantumChannel:
    """Channel given by Kraus operators K_k of shape (d_out, d_in)."""

    kraus: tuple[np.ndarray, ...]

    def __post_init__(self):
        ops = tuple(np.array(k, dtype=complex) for k in self.kraus)
        if not ops:
            raise DomainError("quantum channel needs at least one Kraus operator")
        shapes = {k.shape for k in ops}
        if len(shapes) != 1 or len(next(iter(shapes))) != 2:
            raise DimensionMismatchError(f"Kraus operators have inconsistent shapes {sorted(shapes)}")
        d_out, d_in = ops[0].shape
        if not (1 <= d_in <= D_MAX and 1 <= d_out <= D_MAX):
            raise DimensionMismatchError(f"Kraus dimensions must be 1..{D_MAX}")
        completeness = sum(k.conj().T @ k for k in ops)
        if np.max(np.abs(completeness - np.eye(d_in))) > KRAUS_TOL:
            raise InvariantViolation("Kraus operators do not satisfy sum K^dag K = I")
        for k in ops:
            k.setflags(write=False)
        object.__setattr__(self, "kraus", ops)

    @classmethod
    def identity(cls, dim: int) -> "QuantumChannel":
        return cls((np.eye(dim),))

    @property
    def d_in(self) -> int:
        return self.kraus[0].shape[1]

    def apply(self, rho: np.ndarray) -> np.ndarray:
        if rho.shape != (self.d_in, self.d_in):
            raise DimensionMismatchError(f"channel input dimension {self.d_in}, state shape {rho.shape}")
        return sum(k @ rho @ k.conj().T for k in self.kraus)


Channel = ClassicalChannel | QuantumChannel


def von_neumann_entropy(rho) -> float:
    """-sum lambda log2 lambda over eigenvalues clipped to [0, 1]."""
    if isinstance(rho, DensityMatrix):
        m = rho.matrix
    else:
        m = _check_square(np.asarray(rho, dtype=complex), "density matrix")
    return _h(_clipped_eigvals(m))


def _quantum_channel(ch: Channel | None, dim: int) -> QuantumChannel:
    if ch is None:
        return QuantumChannel.identity(dim)
    if isinstance(ch, ClassicalChannel):
        raise DimensionMismatchError("a classical channel cannot act on density matrices")
    if ch.d_in != dim:
        raise DimensionMismatchError(f"channel input dimension {ch.d_in} != state dimension {dim}")
    return ch


def holevo(ens: CqEnsemble, ch: QuantumChannel | None = None) -> float:
    """chi = S(N(sum p rho)) - sum p S(N(rho)); ``ch=None`` is the identity."""
    ch = _quantum_channel(ch, ens.dim)
    outputs = [ch.apply(s.matrix) for s in ens.states]
    avg = sum(p * o for p, o in zip(ens.priors, outputs))
    return float(von_neumann_entropy(avg) - sum(p * von_neumann_entropy(o) for p, o in zip(ens.priors, outputs)))


# --------------------------------------------------------------------------
# capacities

@dataclass(frozen=True, eq=False)
class CapacityResult:
    value: float
    input_distribution: np.ndarray
    converged: bool
    iterations: int
    gap: float


def _check_solver_args(tol: float, max_iter: int) -> None:
    if not tol > 0:
        raise DomainError(f"tol must be > 0, got {tol!r}")
    if max_iter < 1:
        raise DomainError(f"max_iter must be >= 1, got {max_iter!r}")


def _row_divergences(w: np.ndarray, q: np.ndarray) -> np.ndarray:
    # D(W_x || q) in bits for every input row x.
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(w > 0, w * np.log2(w / q), 0.0)
    return terms.sum(axis=1)


def _blahut_arimoto(divergences, n: int, tol: float, max_iter: int) -> CapacityResult:
    """Maximise sum_x p_x d_x(p) over the simplex, where ``divergences(p)``
    returns the vector d_x = D(output_x || average output).

    Multiplicative update p_x <- p_x 2^(mu d_x). The step mu grows while the
    objective increases and falls back towards the classical mu = 1 (always
    an ascent step) when it does not, which speeds up flat, low-capacity
    problems a lot. Stops when max_x d_x - I <= tol; that gap bounds C - I.
    """
    p = np.full(n, 1.0 / n)
    d = divergences(p)
    value = float(p @ d)
    mu = 1.0
    for it in range(1, max_iter + 1):
        gap = float(d.max()) - value
        if gap <= tol:
            return CapacityResult(max(value, 0.0), p, True, it, gap)
        while True:
            step = np.maximum(mu * (d - d.max()), -200.0)
            trial = np.maximum(p * np.exp2(step), 1e-300)
            trial /= trial.sum()
            d_trial = divergences(trial)
            v_trial = float(trial @ d_trial)
            if v_trial >= value or mu <= 1.0:
                break
            mu = max(1.0, mu / 2)
        p, d, value = trial, d_trial, v_trial
        mu *= 1.5
    gap = float(d.max()) - value
    return CapacityResult(max(value, 0.0), p, False, max_iter, gap)


def classical_capacity(ch, tol: float = CAPACITY_TOL, max_iter: int = CAPACITY_MAX_ITER) -> CapacityResult:
    """Capacity of a discrete memoryless channel by accelerated Blahut-Arimoto.

    The returned value is within ``tol`` of the capacity when ``converged``.
    """
    if not isinstance(ch, ClassicalChannel):
        ch = ClassicalChannel(ch)
    _check_solver_args(tol, max_iter)
    w = ch.matrix
    return _blahut_arimoto(lambda p: _row_divergences(w, p @ w), w.shape[0], tol, max_iter)


def holevo_capacity_fixed_states(
    states: Sequence[DensityMatrix],
    ch: QuantumChannel | None = None,
    tol: float = CAPACITY_TOL,
    max_iter: int = CAPACITY_MAX_ITER,
) -> CapacityResult:
    """Maximise the Holevo quantity over priors for a fixed list of input states.

    Same iteration as :func:`classical_capacity` with the relative entropies
    D(sigma_i || sigma_avg) of the channel outputs in place of row divergences.
    """
    states = tuple(states)
    if not states:
        raise DomainError("need at least one state")
    if len({s.dim for s in states}) != 1:
        raise DimensionMismatchError("states have different dimensions")
    _check_solver_args(tol, max_iter)
    ch = _quantum_channel(ch, states[0].dim)
    sig = np.array([ch.apply(s.matrix) for s in states])
    own = np.array([von_neumann_entropy(s) for s in sig])

    def divergences(p: np.ndarray) -> np.ndarray:
        avg = np.einsum("i,iab->ab", p, sig)
        lam, vec = np.linalg.eigh(avg)
        with np.errstate(divide="ignore"):
            log_lam = np.where(lam > 0, np.log2(np.where(lam > 0, lam, 1.0)), 0.0)
        weights = np.einsum("ak,iab,bk->ik", vec.conj(), sig, vec).real
        return -own - weights @ log_lam

    return _blahut_arimoto(divergences, len(states), tol, max_iter)


# --------------------------------------------------------------------------
# measure registry and the QG-side evaluation

class MeasureId(str, enum.Enum):
    ENTROPY = "entropy"
    CONDITIONAL_ENTROPY = "conditional_entropy"
    MUTUAL_INFORMATION = "mutual_information"
    COHERENT_INFORMATION = "coherent_information"
    HOLEVO = "holevo"
    CLASSICAL_CAPACITY = "classical_capacity"
    HOLEVO_CAPACITY = "holevo_capacity"
    PRIVATE_CAPACITY = "private_capacity"
    QUANTUM_CAPACITY = "quantum_capacity"

    @property
    def computable(self) -> bool:
        return self not in DECLARED_ONLY


DECLARED_ONLY = frozenset({MeasureId.PRIVATE_CAPACITY, MeasureId.QUANTUM_CAPACITY})


@dataclass(frozen=True)
class Reference:
    """The conditioning choice: both settings, and optionally A's outcome."""

    setting_a: str
    setting_b: str
    outcome_a: str | None = None


@dataclass(frozen=True, eq=False)
class ScenarioProbability:
    pmf: ConditionalJointPMF
    binding: Mapping[str, float]
    space: Space
    reference: Reference
    past_data_tag: str | None = None
    ensemble: CqEnsemble | None = None
    channel: Channel | None = None
    declared_coords: frozenset[float] | None = field(default=None)

    def __post_init__(self):
        missing = {"A", "B"} - set(self.binding)
        if missing:
            raise DomainError(f"region binding lacks roles {sorted(missing)}")
        if self.declared_coords is not None:
            stray = {r: x for r, x in self.binding.items() if x not in self.declared_coords}
            if stray:
                raise DomainError(f"bound coordinates not among declared regions: {stray}")
        self.pmf.at(self.reference.setting_a, self.reference.setting_b)


def _derived_channel(sp: ScenarioProbability) -> ClassicalChannel:
    # p(y_B | y_A) at the reference settings, over A outcomes that can occur.
    joint = sp.pmf.at(sp.reference.setting_a, sp.reference.setting_b)
    mass = joint.sum(axis=1)
    rows = joint[mass > 0] / mass[mass > 0, None]
    return ClassicalChannel(rows)


def _require_converged(res: CapacityResult, g: MeasureId) -> float:
    if not res.converged:
        raise ConvergenceError(f"{g.value} solver did not converge (gap {res.gap!r} after {res.iterations} iterations)")
    return res.value


def evaluate(sp: ScenarioProbability, g: MeasureId | str) -> float:
    """Evaluate measure ``g`` on a scenario's probability data."""
    g = MeasureId(g)
    if not g.computable:
        raise UnsupportedMeasureError(f"{g.value} is declared only; no computational procedure is available")
    ref = sp.reference
    joint = sp.pmf.at(ref.setting_a, ref.setting_b)
    if g is MeasureId.ENTROPY:
        if ref.outcome_a is None:
            return shannon_entropy(joint.sum(axis=0))
        return shannon_entropy(sp.pmf.b_given_a(ref.setting_a, ref.setting_b, ref.outcome_a))
    if g is MeasureId.CONDITIONAL_ENTROPY:
        return conditional_entropy(joint, "A")
    if g is MeasureId.MUTUAL_INFORMATION:
        return mutual_information(joint)
    if g is MeasureId.COHERENT_INFORMATION:
        return coherent_information(joint)
    if g is MeasureId.CLASSICAL_CAPACITY:
        ch = sp.channel if isinstance(sp.channel, ClassicalChannel) else _derived_channel(sp)
        return _require_converged(classical_capacity(ch), g)
    if sp.ensemble is None:
        raise DomainError(f"{g.value} needs an ensemble")
    qch = None if sp.channel is None else _quantum_channel(sp.channel, sp.ensemble.dim)
    if g is MeasureId.HOLEVO:
        return holevo(sp.ensemble, qch)
    return _require_converged(holevo_capacity_fixed_states(sp.ensemble.states, qch), g)


def relabel(sp: ScenarioProbability, s: QGStrength) -> ScenarioProbability:
    """Move a QG scenario's region bindings to S coordinates ``eta * x'``.

    Only the bindings change; the probability data are carried over as is.
    """
    if sp.space is not Space.QG:
        raise DomainError("relabel expects a QG-tagged scenario")
    declared = None if sp.declared_coords is None else frozenset(s.eta * x for x in sp.declared_coords)
    return replace(
        sp,
        binding={role: s.eta * x for role, x in sp.binding.items()},
        space=Space.S,
        declared_coords=declared,
    )


@dataclass(frozen=True)
class MeasurePair:
    measure: MeasureId
    qg_value: float
    s_value: float

    @property
    def abs_diff(self) -> float:
        return abs(self.qg_value - self.s_value)


def qg_measure(
    sp: ScenarioProbability,
    s: QGStrength,
    g: MeasureId | str,
    s_counterpart: ScenarioProbability | None = None,
) -> MeasurePair:
    """QG-side value of ``g`` (via relabeling) next to the direct S-space value.

    ``s_counterpart`` is the scenario as described natively in S-space; when
    omitted it is rebuilt from the QG scenario with fresh copies of its data.
    """
    g = MeasureId(g)
    if not g.computable:
        raise UnsupportedMeasureError(f"{g.value} is declared only; no computational procedure is available")
    qg_value = evaluate(relabel(sp, s), g)
    if s_counterpart is None:
        s_counterpart = _native_copy(sp, s)
    if s_counterpart.space is not Space.S:
        raise DomainError("s_counterpart must be S-tagged")
    return MeasurePair(g, qg_value, evaluate(s_counterpart, g))


def _native_copy(sp: ScenarioProbability, s: QGStrength) -> ScenarioProbability:
    pmf = sp.pmf
    pmf = ConditionalJointPMF(pmf.a_outcomes, pmf.b_outcomes, pmf.a_settings, pmf.b_settings, pmf.table.copy())
    ens = sp.ensemble
    if ens is not None:
        ens = CqEnsemble(ens.priors.copy(), tuple(DensityMatrix(st.matrix.copy()) for st in ens.states))
    return ScenarioProbability(
        pmf=pmf,
        binding={role: x * s.eta for role, x in sp.binding.items()},
        space=Space.S,
        reference=sp.reference,
        past_data_tag=sp.past_data_tag,
        ensemble=ens,
        channel=sp.channel,
    )
