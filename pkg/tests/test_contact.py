import pytest
import torch

from gssflab.contact import (
    axiom_residuals,
    builtin_space,
    gssf_ansatz,
    phi_sectional_curvature,
    sasakian_params,
    space_names,
    validate_gssf,
    validate_space,
)
from gssflab.errors import CatalogError, DegeneratePlaneError
from gssflab.manifold import curvature_bundle
from gssflab.utils import random_vectors

D = torch.float64

EXPECTED_SCALAR = {
    "cosymplectic-flat-3": 0.0,
    "kenmotsu-h3": -6.0,
    "kenmotsu-h5": -20.0,
    "sasakian-r3": -2.0,
    "sasakian-r5": -4.0,
}


def test_sasakian_params():
    assert sasakian_params(-3.0).as_tuple() == (0.0, -1.0, -1.0)
    assert sasakian_params(1.0).f13 == pytest.approx(1.0)


def test_catalog_names_and_unknown():
    assert space_names() == list(EXPECTED_SCALAR)
    with pytest.raises(CatalogError) as err:
        builtin_space("sasakian-r7")
    assert "sasakian-r5" in str(err.value)
    assert isinstance(err.value, KeyError)


@pytest.mark.parametrize("name", list(EXPECTED_SCALAR))
def test_builtin_spaces_are_gssf(name):
    space = builtin_space(name)
    reports = validate_space(space, samples=50, seed=42, tol=1e-6)
    assert len(reports) == 50
    for report in reports:
        assert report.passed, report.residuals
        assert report.scalar == pytest.approx(EXPECTED_SCALAR[name], abs=1e-6)
    assert space.expected_scalar() == pytest.approx(EXPECTED_SCALAR[name])


def test_ricci_xi_xi_and_axioms(sasakian_r5, point5):
    report = validate_gssf(sasakian_r5, point5)
    assert report.ricci_xi_xi == pytest.approx(4.0, abs=1e-9)
    assert max(axiom_residuals(sasakian_r5.structure, point5).values()) < 1e-12


def test_printed_form_flags():
    assert builtin_space("sasakian-r5").printed_form_applies()
    assert builtin_space("cosymplectic-flat-3").printed_form_applies()
    assert not builtin_space("kenmotsu-h5").printed_form_applies()


def test_ansatz_matches_numeric_curvature(sasakian_r5, point5):
    cs = sasakian_r5.structure
    cb = curvature_bundle(sasakian_r5.metric, point5)
    gen = torch.Generator().manual_seed(3)
    X, Y, Z = torch.randn((3, 5), generator=gen, dtype=D)
    torch.testing.assert_close(
        gssf_ansatz(sasakian_r5.params, cs, X, Y, Z, point5), cb.riemann_vector(X, Y, Z), atol=1e-9, rtol=0
    )


def test_phi_sectional_curvature(sasakian_r5, kenmotsu_h5, point5):
    X = torch.tensor([1.0, 0.0, 0.3, 0.0, 0.2], dtype=D)
    assert phi_sectional_curvature(sasakian_r5, X, point5) == pytest.approx(-3.0, abs=1e-9)
    assert phi_sectional_curvature(kenmotsu_h5, torch.tensor([0.0, 1.0, 0.0, 0.5, 0.0], dtype=D), point5) == (
        pytest.approx(-1.0, abs=1e-9)
    )


@pytest.mark.parametrize("name, expected", [("kenmotsu-h5", -1.0), ("sasakian-r5", -3.0)])
def test_phi_sectional_curvature_random_directions(name, expected):
    space = builtin_space(name)
    points = space.metric.sample(20, 17)
    directions = random_vectors(space.dim, 20, 23)
    for p, X in zip(points, directions):
        assert phi_sectional_curvature(space, X, p) == pytest.approx(expected, abs=1e-5)


def test_phi_sectional_curvature_rejects_xi(sasakian_r5, point5):
    xi = sasakian_r5.structure.xi(point5)
    with pytest.raises(DegeneratePlaneError):
        phi_sectional_curvature(sasakian_r5, xi, point5)


def test_validate_space_is_seeded(kenmotsu_h3):
    a = validate_space(kenmotsu_h3, samples=4, seed=5)
    b = validate_space(kenmotsu_h3, samples=4, seed=5)
    assert [r.point for r in a] == [r.point for r in b]
    assert all(r.passed for r in a)
