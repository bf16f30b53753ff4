"""Random scenarios, states and channels for property sweeps.

The seed comes from the ``CMK_SEED`` environment variable (default 0), so a
failing sweep can be replayed exactly.
"""

from __future__ import annotations

import os

import numpy as np

from .causaloid import Space
from .eta import QGStrength
from .measures import (
    ClassicalChannel,
    ConditionalJointPMF,
    CqEnsemble,
    DensityMatrix,
    QuantumChannel,
    Reference,
    ScenarioProbability,
)


def seed_from_env(default: int = 0) -> int:
    raw = os.environ.get("CMK_SEED")
    return default if raw in (None, "") else int(raw)


def rng_from_env() -> np.random.Generator:
    return np.random.default_rng(seed_from_env())


def random_simplex(rng: np.random.Generator, n: int, sparse: bool = False) -> np.ndarray:
    p = rng.dirichlet(np.ones(n))
    if sparse and n > 1:
        # zero out some entries so the 0 log 0 convention gets exercised
        p[rng.random(n) < 0.3] = 0.0
        if p.sum() == 0:
            p[rng.integers(n)] = 1.0
    return p / p.sum()


def random_pmf(rng: np.random.Generator, max_outcomes: int = 4, max_settings: int = 3) -> ConditionalJointPMF:
    na, nb = rng.integers(1, max_outcomes + 1, size=2)
    sa, sb = rng.integers(1, max_settings + 1, size=2)
    table = np.empty((sa, sb, na, nb))
    for i in range(sa):
        for j in range(sb):
            table[i, j] = random_simplex(rng, na * nb, sparse=bool(rng.random() < 0.3)).reshape(na, nb)
    return ConditionalJointPMF(
        tuple(f"a{k}" for k in range(na)),
        tuple(f"b{k}" for k in range(nb)),
        tuple(f"s{k}" for k in range(sa)),
        tuple(f"t{k}" for k in range(sb)),
        table,
    )


def random_density_matrix(rng: np.random.Generator, dim: int, rank: int | None = None) -> DensityMatrix:
    rank = dim if rank is None else rank
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ g.conj().T
    rho = (rho + rho.conj().T) / 2
    return DensityMatrix(rho / np.trace(rho).real)


def random_kraus_channel(rng: np.random.Generator, dim: int, n_ops: int) -> QuantumChannel:
    # Split a random isometry C^d -> C^(d k) into k blocks.
    g = rng.normal(size=(dim * n_ops, dim)) + 1j * rng.normal(size=(dim * n_ops, dim))
    q, _ = np.linalg.qr(g)
    return QuantumChannel(tuple(q[k * dim:(k + 1) * dim] for k in range(n_ops)))


def random_stochastic(rng: np.random.Generator, n_in: int, n_out: int) -> ClassicalChannel:
    return ClassicalChannel(np.array([random_simplex(rng, n_out) for _ in range(n_in)]))


def random_beta(rng: np.random.Generator, hi: float = 0.99) -> float:
    return float(rng.uniform(0.0, hi))


def random_qg_scenario(
    rng: np.random.Generator,
    quantum: bool = False,
    max_dim: int = 8,
    max_states: int = 4,
) -> tuple[ScenarioProbability, QGStrength]:
    """A QG-tagged scenario with distinct random A/B locations and a random beta."""
    pmf = random_pmf(rng)
    xa, xb = rng.uniform(-10, 10, size=2)
    while xb == xa:
        xb = rng.uniform(-10, 10)
    ref = Reference(
        pmf.a_settings[rng.integers(len(pmf.a_settings))],
        pmf.b_settings[rng.integers(len(pmf.b_settings))],
    )
    ensemble = channel = None
    if quantum:
        dim = int(rng.integers(2, max_dim + 1))
        n = int(rng.integers(1, max_states + 1))
        states = tuple(
            random_density_matrix(rng, dim, int(rng.integers(1, dim + 1))) for _ in range(n)
        )
        ensemble = CqEnsemble(random_simplex(rng, n), states)
        if rng.random() < 0.75:
            channel = random_kraus_channel(rng, dim, int(rng.integers(1, 4)))
    else:
        channel = random_stochastic(rng, int(rng.integers(2, 5)), int(rng.integers(2, 5)))
    sp = ScenarioProbability(
        pmf=pmf,
        binding={"A": float(xa), "B": float(xb)},
        space=Space.QG,
        reference=ref,
        ensemble=ensemble,
        channel=channel,
    )
    return sp, QGStrength.from_beta(random_beta(rng))
