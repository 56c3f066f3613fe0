import dataclasses

import pytest

from gssflab.errors import CatalogError, ConfigError, PreconditionError
from gssflab.harness import (
    FAIL,
    FORWARD,
    IDENTITY,
    INCONCLUSIVE,
    PASS,
    HarnessConfig,
    Scenario,
    derivation_identity_check,
    dump_report,
    equivalence_matrix,
    load_config,
    run_theorem,
    theorem_ids,
)

THEOREM_IDS = ["T-QsigmaR", "T-QSsigma", "T-QSnablasigma", "T-QgRsigma", "T-QgCsigma", "T-pseudo"]
FAST = HarnessConfig(random_tuples=8)


def _result(report, name):
    return next(r for r in report.results if r["name"] == name)


def test_theorem_ids():
    assert theorem_ids() == THEOREM_IDS


@pytest.mark.parametrize("theorem_id", THEOREM_IDS)
def test_forward_on_totally_geodesic_sasakian(theorem_id):
    scenario = Scenario("sasakian-r5", "r3-in-r5-sasakian", samples=3, L1=0.5)
    report = run_theorem(theorem_id, scenario, config=FAST)
    assert report.direction == FORWARD
    assert report.verdict == PASS
    assert report.max_residual < 1e-7


@pytest.mark.parametrize("theorem_id", THEOREM_IDS)
def test_forward_on_totally_geodesic_kenmotsu(theorem_id):
    scenario = Scenario("kenmotsu-h5", "h3-in-h5-kenmotsu", samples=3, L1=0.5)
    report = run_theorem(theorem_id, scenario, config=FAST)
    assert report.max_residual < 1e-7
    expected = INCONCLUSIVE if theorem_id == "T-QgCsigma" else PASS
    assert report.verdict == expected


@pytest.mark.parametrize(
    "theorem_id, coefficient",
    [
        ("T-QsigmaR", -1.0),
        ("T-QSsigma", -4.0),
        ("T-QSnablasigma", -8.0),
        ("T-QgRsigma", 2.0),
        ("T-QgCsigma", -2.4),
        ("T-pseudo", 0.5),
    ],
)
def test_identity_chain_sasakian(theorem_id, coefficient):
    scenario = Scenario("sasakian-r5", sigma_mode="synthetic", samples=3, tol=1e-6, L1=0.5)
    report = derivation_identity_check(theorem_id, scenario, FAST)
    assert report.direction == IDENTITY
    assert report.verdict == PASS, report.results
    assert _result(report, "coefficient")["value"] == pytest.approx(coefficient)
    assert _result(report, "lhs-norm")["value"] > 1e-3


@pytest.mark.parametrize(
    "theorem_id, coefficient",
    [
        ("T-QsigmaR", 1.0),
        ("T-QSsigma", 4.0),
        ("T-QSnablasigma", -8.0),
        ("T-QgRsigma", -2.0),
        ("T-pseudo", -1.5),
    ],
)
def test_identity_chain_kenmotsu(theorem_id, coefficient):
    scenario = Scenario("kenmotsu-h5", sigma_mode="synthetic", samples=3, tol=1e-6, L1=0.5)
    report = run_theorem(theorem_id, scenario, IDENTITY, FAST)
    assert report.verdict == PASS, report.results
    assert _result(report, "coefficient")["value"] == pytest.approx(coefficient)


@pytest.mark.parametrize("seed", range(5))
@pytest.mark.parametrize(
    "theorem_id, L1, coefficient",
    [
        ("T-QsigmaR", None, -1.0),
        ("T-QSsigma", None, -4.0),
        ("T-QSnablasigma", None, -8.0),
        ("T-QgRsigma", None, 2.0),
        ("T-QgCsigma", None, -2.4),
        ("T-pseudo", 0.0, 1.0),
    ],
)
def test_identity_chain_across_synthetic_seeds(seed, theorem_id, L1, coefficient):
    scenario = Scenario("sasakian-r5", sigma_mode="synthetic", samples=2, tol=1e-6, L1=L1, seed=seed)
    report = derivation_identity_check(theorem_id, scenario, FAST)
    assert report.verdict == PASS, report.results
    assert _result(report, "identity")["residual"] < 1e-6
    assert _result(report, "coefficient")["value"] == pytest.approx(coefficient)
    assert _result(report, "lhs-norm")["value"] > 1e-3


@dataclasses.dataclass(frozen=True)
class StructureConstantsConfig(HarnessConfig):
    """Serves the catalog spaces with (alpha, beta) replaced."""

    alpha: float = 0.0
    beta: float = 0.0

    def space(self, name):
        return dataclasses.replace(super().space(name), alpha=self.alpha, beta=self.beta)


def test_identity_chain_with_vanishing_coefficient_fails():
    # σ = 0 makes the residual vanish, so only the coefficient can reject the chain
    scenario = Scenario("kenmotsu-h5", "h3-in-h5-kenmotsu", samples=2, tol=1e-6)
    report = derivation_identity_check("T-QSnablasigma", scenario, StructureConstantsConfig(random_tuples=8))
    assert all(p.satisfied for p in report.preconditions)
    assert _result(report, "identity")["passed"]
    coefficient = _result(report, "coefficient")
    assert coefficient["value"] == 0.0
    assert not coefficient["nonzero"] and not coefficient["passed"]
    assert report.verdict == FAIL


def test_identity_chain_on_zero_sigma_holds_trivially():
    scenario = Scenario("sasakian-r5", "r3-in-r5-sasakian", samples=2, tol=1e-6)
    report = derivation_identity_check("T-QSsigma", scenario, FAST)
    assert report.verdict == PASS
    assert _result(report, "lhs-norm")["value"] < 1e-8


def test_forward_fails_on_nonzero_sigma():
    scenario = Scenario("sasakian-r5", sigma_mode="synthetic", samples=2)
    assert run_theorem("T-QSsigma", scenario, config=FAST).verdict == FAIL


def test_preconditions():
    pseudo = Scenario("sasakian-r5", "r3-in-r5-sasakian", samples=2, L1=1.0)
    report = run_theorem("T-pseudo", pseudo, config=FAST)
    assert report.verdict == INCONCLUSIVE
    assert [p.satisfied for p in report.preconditions] == [True, False]

    concircular = run_theorem("T-QgCsigma", Scenario("kenmotsu-h5", samples=2), config=FAST)
    assert concircular.verdict == INCONCLUSIVE
    assert abs(concircular.preconditions[0].value) < 1e-9

    flat = run_theorem("T-QSsigma", Scenario("cosymplectic-flat-3", samples=2), config=FAST)
    assert flat.verdict == INCONCLUSIVE


def test_resolution_errors():
    with pytest.raises(CatalogError):
        run_theorem("T-unknown", Scenario("sasakian-r5", samples=1))
    with pytest.raises(PreconditionError):
        run_theorem("T-pseudo", Scenario("sasakian-r5", samples=1))
    with pytest.raises(PreconditionError):
        Scenario("sasakian-r5", "slice-anti-invariant").resolve()
    with pytest.raises(PreconditionError):
        Scenario("sasakian-r3", sigma_mode="synthetic").resolve()
    with pytest.raises(ConfigError):
        Scenario("sasakian-r5", samples=0)


def test_equivalence_sasakian():
    report = equivalence_matrix(Scenario("sasakian-r5", "r3-in-r5-sasakian", samples=2))
    assert len(report.results) == 12
    assert report.verdict == PASS
    assert all(r["verdict"] == PASS for r in report.results)


def test_equivalence_kenmotsu_flags_concircular_rows():
    report = equivalence_matrix(Scenario("kenmotsu-h5", "h3-in-h5-kenmotsu", samples=2))
    flagged = {r["name"] for r in report.results if r["verdict"] == INCONCLUSIVE}
    assert flagged == {"concircularly-semi-parallel", "concircularly-2-semi-parallel", "Q(g,𝒞·σ) = 0"}
    assert report.verdict == INCONCLUSIVE


def test_equivalence_cosymplectic_identity():
    report = equivalence_matrix(Scenario("cosymplectic-flat-3", "identity", samples=2))
    verdicts = {r["name"]: r["verdict"] for r in report.results}
    assert verdicts.pop("totally-geodesic") == PASS
    assert set(verdicts.values()) == {INCONCLUSIVE}


def test_equivalence_requires_geometric_sigma():
    with pytest.raises(PreconditionError):
        equivalence_matrix(Scenario("sasakian-r5", sigma_mode="synthetic", samples=1))


def test_report_is_deterministic():
    scenario = Scenario("sasakian-r5", sigma_mode="synthetic", samples=2, tol=1e-6, seed=3)
    a = dump_report(derivation_identity_check("T-QgRsigma", scenario, FAST))
    b = dump_report(derivation_identity_check("T-QgRsigma", scenario, FAST))
    assert a == b
    assert '"verdict": "pass"' in a


def test_load_config(tmp_path):
    path = tmp_path / "lab.cfg"
    path.write_text("# tolerances\nforward_tol = 1e-8\nsamples=7\nbox.kenmotsu-h3 = -0.5:0.5\n")
    cfg = load_config(str(path))
    assert cfg.forward_tol == 1e-8
    assert cfg.samples == 7
    assert cfg.identity_tol == 1e-6
    assert cfg.space("kenmotsu-h3").sample_box == ((-0.5, 0.5),) * 3


@pytest.mark.parametrize("text", ["colour=blue\n", "samples=many\n", "box.sasakian-r5=1:0\n", "novalue\n"])
def test_load_config_rejects(tmp_path, text):
    path = tmp_path / "bad.cfg"
    path.write_text(text)
    with pytest.raises(ConfigError):
        load_config(str(path))
