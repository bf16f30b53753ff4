import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qgequiv.causaloid import Space
from qgequiv.errors import (
    DimensionMismatchError,
    DomainError,
    InvariantViolation,
    UnknownSymbolError,
    UnsupportedMeasureError,
)
from qgequiv.eta import QGStrength
from qgequiv.measures import (
    ClassicalChannel,
    ConditionalJointPMF,
    CqEnsemble,
    DensityMatrix,
    MeasureId,
    QuantumChannel,
    Reference,
    ScenarioProbability,
    classical_capacity,
    coherent_information,
    conditional_entropy,
    evaluate,
    holevo,
    holevo_capacity_fixed_states,
    mutual_information,
    qg_measure,
    relabel,
    shannon_entropy,
    von_neumann_entropy,
)
from qgequiv.sampling import random_density_matrix, random_kraus_channel, random_pmf

mpmath.mp.dps = 40


def h2(p):
    """Binary entropy in bits, high precision."""
    if p in (0, 1):
        return 0.0
    p = mpmath.mpf(p)
    return float(-p * mpmath.log(p, 2) - (1 - p) * mpmath.log(1 - p, 2))


def bsc(p):
    return np.array([[1 - p, p], [p, 1 - p]])


CORRELATED = np.array([[0.5, 0.0], [0.0, 0.5]])
INDEPENDENT = np.full((2, 2), 0.25)
BSC_JOINT = 0.5 * bsc(0.1)

KET0 = np.array([1, 0])
KET1 = np.array([0, 1])
PLUS = np.array([1, 1]) / math.sqrt(2)
MINUS = np.array([1, -1]) / math.sqrt(2)

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def test_h2_oracle_values():
    assert h2(0.1) == pytest.approx(0.468996, abs=5e-7)
    assert h2(0.25) == pytest.approx(0.811278, abs=5e-7)


@pytest.mark.parametrize(
    "p, expected",
    [((0.5, 0.5), 1.0), ((1.0, 0.0), 0.0), ((0.25, 0.75), h2(0.25))],
)
def test_shannon_examples(p, expected):
    assert shannon_entropy(p) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("bad", [(0.5, 0.4), (1.2, -0.2), (), (math.nan, 1.0)])
def test_shannon_rejects_invalid(bad):
    with pytest.raises(InvariantViolation):
        shannon_entropy(bad)


@pytest.mark.parametrize(
    "joint, h_b_given_a, mi, icoh",
    [
        (CORRELATED, 0.0, 1.0, 0.0),
        (INDEPENDENT, 1.0, 0.0, -1.0),
        (BSC_JOINT, h2(0.1), 1 - h2(0.1), -h2(0.1)),
    ],
)
def test_classical_measure_examples(joint, h_b_given_a, mi, icoh):
    assert conditional_entropy(joint, "A") == pytest.approx(h_b_given_a, abs=1e-14)
    assert mutual_information(joint) == pytest.approx(mi, abs=1e-14)
    assert coherent_information(joint) == pytest.approx(icoh, abs=1e-14)


def test_bsc_reported_values():
    assert mutual_information(BSC_JOINT) == pytest.approx(0.531004, abs=5e-7)
    assert coherent_information(BSC_JOINT) == pytest.approx(-0.468996, abs=5e-7)


def test_conditional_entropy_bad_role():
    with pytest.raises(DomainError):
        conditional_entropy(CORRELATED, "C")


def _random_joint(seed):
    rng = np.random.default_rng(seed)
    na, nb = rng.integers(1, 5, size=2)
    p = rng.dirichlet(np.ones(na * nb)).reshape(na, nb)
    p[rng.random(p.shape) < 0.2] = 0.0
    if p.sum() == 0:
        p[0, 0] = 1.0
    return p / p.sum()


@settings(max_examples=300)
@given(seeds)
def test_classical_inequalities(seed):
    p = _random_joint(seed)
    ha, hb = shannon_entropy(p.sum(axis=1)), shannon_entropy(p.sum(axis=0))
    mi = mutual_information(p)
    tol = 1e-12
    assert -tol <= mi <= min(ha, hb) + tol
    assert mi == pytest.approx(mutual_information(p.T), abs=tol)
    assert conditional_entropy(p, "A") <= hb + tol
    assert coherent_information(p) <= tol
    assert all(math.isfinite(v) for v in (ha, hb, mi, coherent_information(p)))


def test_brute_force_mutual_information():
    p = _random_joint(7)
    pa, pb = p.sum(axis=1), p.sum(axis=0)
    oracle = sum(
        p[i, j] * math.log2(p[i, j] / (pa[i] * pb[j]))
        for i in range(p.shape[0])
        for j in range(p.shape[1])
        if p[i, j] > 0
    )
    assert mutual_information(p) == pytest.approx(oracle, abs=1e-13)


# --- quantum ------------------------------------------------------------

def test_von_neumann_examples():
    assert von_neumann_entropy(DensityMatrix.pure(PLUS)) == pytest.approx(0.0, abs=1e-14)
    assert von_neumann_entropy(DensityMatrix(np.eye(2) / 2)) == pytest.approx(1.0, abs=1e-15)
    assert von_neumann_entropy(DensityMatrix.diagonal([0.25, 0.75])) == pytest.approx(h2(0.25), abs=1e-15)


@given(seeds)
def test_von_neumann_diagonal_matches_shannon(seed):
    rng = np.random.default_rng(seed)
    p = rng.dirichlet(np.ones(int(rng.integers(1, 9))))
    assert von_neumann_entropy(DensityMatrix.diagonal(p)) == pytest.approx(shannon_entropy(p), abs=1e-12)


@given(seeds)
def test_pure_states_have_zero_entropy(seed):
    rng = np.random.default_rng(seed)
    d = int(rng.integers(1, 9))
    v = rng.normal(size=d) + 1j * rng.normal(size=d)
    assert von_neumann_entropy(DensityMatrix.pure(v)) == pytest.approx(0.0, abs=1e-12)


def test_density_matrix_invariants():
    with pytest.raises(InvariantViolation):
        DensityMatrix(np.array([[0.5, 0.1], [0.0, 0.5]]))  # not Hermitian
    with pytest.raises(InvariantViolation):
        DensityMatrix(np.eye(2))  # trace 2
    with pytest.raises(InvariantViolation):
        DensityMatrix(np.diag([1.5, -0.5]))  # negative eigenvalue
    with pytest.raises(DimensionMismatchError):
        DensityMatrix(np.eye(17) / 17)
    with pytest.raises(InvariantViolation):
        von_neumann_entropy(np.diag([1.0 + 1e-6, -1e-6]))
    # tiny negative noise is clipped
    assert von_neumann_entropy(np.diag([1.0 + 1e-12, -1e-12])) == pytest.approx(0.0, abs=1e-10)


def test_holevo_examples():
    single = CqEnsemble([1.0], (DensityMatrix.pure(PLUS),))
    assert holevo(single) == pytest.approx(0.0, abs=1e-14)
    basis = CqEnsemble([0.5, 0.5], (DensityMatrix.pure(KET0), DensityMatrix.pure(KET1)))
    assert holevo(basis) == pytest.approx(1.0, abs=1e-14)
    four = CqEnsemble(
        [0.25] * 4, tuple(DensityMatrix.pure(v) for v in (KET0, KET1, PLUS, MINUS))
    )
    # direct matrix sum of the four projectors / 4 is I/2
    avg = sum(np.outer(v, v.conj()) for v in (KET0, KET1, PLUS, MINUS)) / 4
    assert np.allclose(avg, np.eye(2) / 2)
    assert holevo(four) == pytest.approx(1.0, abs=1e-14)


def _depolarizing(d):
    # Kraus form of rho -> I/d: K_ij = |i><j| / sqrt(d)
    ops = []
    for i in range(d):
        for j in range(d):
            k = np.zeros((d, d))
            k[i, j] = 1 / math.sqrt(d)
            ops.append(k)
    return QuantumChannel(tuple(ops))


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_holevo_bounds(seed):
    rng = np.random.default_rng(seed)
    d = int(rng.integers(2, 9))
    n = int(rng.integers(1, 5))
    ens = CqEnsemble(rng.dirichlet(np.ones(n)), tuple(random_density_matrix(rng, d) for _ in range(n)))
    ch = random_kraus_channel(rng, d, int(rng.integers(1, 4)))
    chi = holevo(ens, ch)
    assert -1e-12 <= chi <= math.log2(d) + 1e-12
    assert holevo(ens, _depolarizing(d)) == pytest.approx(0.0, abs=1e-12)


def test_holevo_zero_iff_outputs_coincide():
    same = CqEnsemble([0.3, 0.7], (DensityMatrix.pure(PLUS), DensityMatrix.pure(PLUS)))
    assert holevo(same) == pytest.approx(0.0, abs=1e-14)
    differ = CqEnsemble([0.3, 0.7], (DensityMatrix.pure(PLUS), DensityMatrix.pure(KET0)))
    assert holevo(differ) > 1e-3


def test_holevo_dimension_mismatch():
    ens = CqEnsemble([1.0], (DensityMatrix.pure(KET0),))
    with pytest.raises(DimensionMismatchError):
        holevo(ens, QuantumChannel.identity(3))
    with pytest.raises(DimensionMismatchError):
        CqEnsemble([0.5, 0.5], (DensityMatrix.pure(KET0), DensityMatrix(np.eye(3) / 3)))


def test_channel_invariants():
    with pytest.raises(InvariantViolation):
        ClassicalChannel([[0.5, 0.4], [0.5, 0.5]])
    with pytest.raises(InvariantViolation):
        QuantumChannel((np.eye(2) * 0.9,))
    amp = 0.3
    k0 = np.array([[1, 0], [0, math.sqrt(1 - amp)]])
    k1 = np.array([[0, math.sqrt(amp)], [0, 0]])
    ch = QuantumChannel((k0, k1))
    out = ch.apply(np.diag([0.0, 1.0]).astype(complex))
    assert np.allclose(out, np.diag([amp, 1 - amp]))


# --- capacities -----------------------------------------------------------

@pytest.mark.parametrize("p", [0.0, 0.05, 0.1, 0.25, 0.5])
def test_bsc_capacity(p):
    res = classical_capacity(bsc(p))
    assert res.converged
    assert res.value == pytest.approx(1 - h2(p), abs=1e-6)


@pytest.mark.parametrize("p", [0.49, 0.499, 0.4999])
def test_nearly_useless_bsc_converges(p):
    # plain Blahut-Arimoto stalls on such flat problems
    res = classical_capacity(bsc(p))
    assert res.converged and res.iterations < 1000
    assert res.value == pytest.approx(1 - h2(p), abs=1e-9)


def test_noiseless_capacity():
    assert classical_capacity(np.eye(2)).value == pytest.approx(1.0, abs=1e-12)
    assert classical_capacity(np.eye(3)).value == pytest.approx(math.log2(3), abs=1e-9)


def _grid_capacity_2in(w, n=200_001):
    # brute-force I(p) over a fine grid of binary input distributions
    ps = np.linspace(0, 1, n)
    px = np.stack([ps, 1 - ps], axis=1)
    q = px @ w
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = np.where(w[None] > 0, px[:, :, None] * w[None] * np.log2(w[None] / q[:, None, :]), 0.0)
    return terms.sum(axis=(1, 2)).max()


def test_capacity_matches_grid_search():
    w = np.array([[0.7, 0.2, 0.1], [0.1, 0.3, 0.6]])
    assert classical_capacity(w).value == pytest.approx(_grid_capacity_2in(w), abs=1e-8)


def test_capacity_nonconvergence_reported():
    w = np.array([[0.7, 0.2, 0.1], [0.1, 0.1, 0.8], [0.3, 0.3, 0.4]])
    res = classical_capacity(w, max_iter=2)
    assert not res.converged and res.iterations == 2
    assert 0 < res.value <= classical_capacity(w).value + 1e-12


def test_capacity_argument_checks():
    with pytest.raises(DomainError):
        classical_capacity(np.eye(2), tol=0.0)
    with pytest.raises(DomainError):
        classical_capacity(np.eye(2), max_iter=0)


def _chi_two_pure(p, overlap):
    # average of two pure states: eigenvalues (1 +- sqrt(1 - 4 p (1-p)(1-|<a|b>|^2))) / 2
    disc = math.sqrt(1 - 4 * p * (1 - p) * (1 - overlap**2))
    lam = (1 + disc) / 2
    return h2(lam) if 0 < lam < 1 else 0.0


def test_holevo_capacity_examples():
    assert holevo_capacity_fixed_states([DensityMatrix.pure(PLUS)]).value == pytest.approx(0.0, abs=1e-12)
    res = holevo_capacity_fixed_states([DensityMatrix.pure(KET0), DensityMatrix.pure(KET1)])
    assert res.value == pytest.approx(1.0, abs=1e-12)
    assert np.allclose(res.input_distribution, [0.5, 0.5])
    res = holevo_capacity_fixed_states([DensityMatrix.pure(KET0), DensityMatrix.pure(PLUS)])
    grid = max(_chi_two_pure(k / 20000, 1 / math.sqrt(2)) for k in range(20001))
    assert res.value == pytest.approx(grid, abs=1e-9)
    assert res.value == pytest.approx(0.600876, abs=5e-7)


def test_holevo_capacity_at_least_any_prior():
    rng = np.random.default_rng(3)
    states = [random_density_matrix(rng, 3, 1) for _ in range(3)]
    ch = random_kraus_channel(rng, 3, 2)
    cap = holevo_capacity_fixed_states(states, ch)
    assert cap.converged
    for _ in range(200):
        ens = CqEnsemble(rng.dirichlet(np.ones(3)), tuple(states))
        assert holevo(ens, ch) <= cap.value + 1e-9


# --- scenario probability & relabeling --------------------------------------

def _sp(pmf, space=Space.QG, outcome_a=None, **kw):
    return ScenarioProbability(
        pmf=pmf,
        binding={"A": 1.0, "B": 2.0},
        space=space,
        reference=Reference(pmf.a_settings[0], pmf.b_settings[0], outcome_a),
        **kw,
    )


def _pmf(joint):
    joint = np.asarray(joint, dtype=float)
    return ConditionalJointPMF(
        [f"a{i}" for i in range(joint.shape[0])],
        [f"b{j}" for j in range(joint.shape[1])],
        ["z"],
        ["z"],
        joint[None, None],
    )


def test_pmf_validation_names_settings():
    table = np.full((1, 2, 2, 2), 0.25)
    table[0, 1] *= 0.98
    with pytest.raises(InvariantViolation, match=r"\(z, w\)"):
        ConditionalJointPMF(["0", "1"], ["0", "1"], ["z"], ["z", "w"], table)


def test_pmf_lookup_errors():
    pmf = _pmf(CORRELATED)
    with pytest.raises(UnknownSymbolError):
        pmf.at("q", "z")
    with pytest.raises(DomainError):
        _pmf([[1.0, 0.0], [0.0, 0.0]]).b_given_a("z", "z", "a1")


def test_entropy_measure_conditioning():
    pmf = _pmf(BSC_JOINT)
    assert evaluate(_sp(pmf, Space.S), "entropy") == pytest.approx(1.0, abs=1e-15)
    assert evaluate(_sp(pmf, Space.S, outcome_a="a0"), "entropy") == pytest.approx(h2(0.1), abs=1e-14)


def test_qg_measure_beta_zero_and_bitwise():
    pmf = _pmf(BSC_JOINT)
    for beta in (0.0, 0.6):
        pair = qg_measure(_sp(pmf, outcome_a="a1"), QGStrength.from_beta(beta), "entropy")
        assert pair.qg_value == pair.s_value
        assert pair.abs_diff == 0.0


def test_relabel_moves_only_bindings():
    pmf = _pmf(BSC_JOINT)
    sp = _sp(pmf, declared_coords=frozenset({0.0, 1.0, 2.0}))
    out = relabel(sp, QGStrength.from_beta(0.6))
    assert out.space is Space.S
    assert dict(out.binding) == {"A": 1.25, "B": 2.5}
    assert out.declared_coords == {0.0, 1.25, 2.5}
    assert out.pmf is sp.pmf
    with pytest.raises(DomainError):
        relabel(out, QGStrength.from_beta(0.6))


def test_binding_must_use_declared_coords():
    with pytest.raises(DomainError):
        _sp(_pmf(CORRELATED), declared_coords=frozenset({5.0}))


@pytest.mark.parametrize("g", [MeasureId.PRIVATE_CAPACITY, MeasureId.QUANTUM_CAPACITY])
def test_declared_only_measures(g):
    sp = _sp(_pmf(CORRELATED))
    assert not g.computable
    with pytest.raises(UnsupportedMeasureError):
        qg_measure(sp, QGStrength.from_beta(0.3), g)
    with pytest.raises(UnsupportedMeasureError):
        evaluate(relabel(sp, QGStrength.from_beta(0.3)), g)


def test_quantum_measures_need_ensemble():
    with pytest.raises(DomainError):
        evaluate(_sp(_pmf(CORRELATED), Space.S), "holevo")


def test_classical_capacity_from_pmf():
    # no channel given: p(y_B | y_A) of the BSC joint is the BSC itself
    val = evaluate(_sp(_pmf(BSC_JOINT), Space.S), "classical_capacity")
    assert val == pytest.approx(1 - h2(0.1), abs=1e-6)


@settings(max_examples=80, deadline=None)
@given(seeds, st.floats(min_value=0.0, max_value=0.99))
def test_qg_measure_equals_s_measure(seed, beta):
    rng = np.random.default_rng(seed)
    pmf = random_pmf(rng)
    d = int(rng.integers(2, 5))
    ens = CqEnsemble(rng.dirichlet(np.ones(2)), (random_density_matrix(rng, d), random_density_matrix(rng, d)))
    sp = ScenarioProbability(
        pmf, {"A": float(rng.normal()), "B": float(rng.normal())}, Space.QG,
        Reference(pmf.a_settings[0], pmf.b_settings[-1]), ensemble=ens,
        channel=random_kraus_channel(rng, d, 2),
    )
    s = QGStrength.from_beta(beta)
    for g in ("entropy", "conditional_entropy", "mutual_information", "coherent_information", "holevo"):
        pair = qg_measure(sp, s, g)
        assert pair.qg_value == pair.s_value
