import math

import pytest
import torch

from gssflab.contact import builtin_space, validate_gssf
from gssflab.errors import CatalogError, ImmersionError, InvalidNormalError, PreconditionError
from gssflab.manifold import curvature_bundle
from gssflab.submanifold import (
    EmbeddingModel,
    builtin_embedding,
    check_invariant,
    embedding_names,
    gauss_split,
    geometric_sigma,
    identity_embedding,
    induced_metric,
    induced_space,
    is_totally_geodesic,
    lemma31_check,
    nabla_sigma,
    point_geometry,
    second_fundamental_form,
    shape_operator,
    shape_operator_compatibility,
    submanifold_frame,
    synth_sigma,
)
from gssflab.tensor import finite_diff

D = torch.float64


def test_catalog():
    assert embedding_names() == [
        "r3-in-r5-sasakian",
        "h3-in-h5-kenmotsu",
        "slice-anti-invariant",
        "circle-calibration",
        "identity",
    ]
    with pytest.raises(CatalogError):
        builtin_embedding("torus")
    with pytest.raises(CatalogError):
        builtin_embedding("r3-in-r5-sasakian", "kenmotsu-h5")


def test_embedding_keeps_the_given_ambient_space():
    ambient = builtin_space("kenmotsu-h5", ((-0.5, 0.5),) * 5)
    e = builtin_embedding("h3-in-h5-kenmotsu", ambient)
    assert e.ambient is ambient
    assert e.ambient.sample_box == ((-0.5, 0.5),) * 5


def test_induced_metric_is_pullback(r3_in_r5, sasakian_r3, point3):
    g = induced_metric(r3_in_r5, point3)
    torch.testing.assert_close(g.entries, sasakian_r3.metric(point3))


def test_induced_metric_kenmotsu_slice(kenmotsu_h3):
    e = EmbeddingModel(lambda q: torch.stack([q[0], q[1], 0.0 * q[0]]), kenmotsu_h3, 2, name="tx-slice")
    q = torch.tensor([0.4, -0.7], dtype=D)
    expected = torch.diag(torch.tensor([1.0, math.exp(0.8)], dtype=D))
    torch.testing.assert_close(induced_metric(e, q).entries, expected)


def test_rank_deficient_embedding(flat3):
    e = EmbeddingModel(lambda q: torch.stack([q[0], q[0], q[0]]), flat3, 1, name="line")
    bad = EmbeddingModel(lambda q: torch.stack([q[0] ** 2, 0.0 * q[0], 0.0 * q[0]]), flat3, 1, name="fold")
    e.check(torch.tensor([0.2], dtype=D))
    with pytest.raises(ImmersionError):
        bad.check(torch.tensor([0.0], dtype=D))


def test_frame_is_orthonormal(r3_in_r5, circle, point3):
    for e, q in ((r3_in_r5, point3), (circle, torch.tensor([0.6], dtype=D))):
        frame = submanifold_frame(e, q)
        res = frame.residuals(e.ambient.metric(e(q)))
        assert res["tangent_normal"] < 1e-10
        assert res["normal_orthonormal"] < 1e-10


@pytest.mark.parametrize("name", ["r3-in-r5-sasakian", "h3-in-h5-kenmotsu"])
def test_invariant_builtins_are_totally_geodesic(name):
    e = builtin_embedding(name)
    assert check_invariant(e, e.sample(1, 0)[0]).invariant
    assert is_totally_geodesic(e, samples=5)
    for q in e.sample(5, 1):
        assert second_fundamental_form(e, q).abs().max() < 1e-8
        split = gauss_split(e, q)
        assert split["recombination"] < 1e-10
        assert split["connection"] < 1e-8


def test_identity_embedding(sasakian_r3, point3):
    e = identity_embedding(sasakian_r3)
    assert second_fundamental_form(e, point3).abs().max() == 0.0
    assert is_totally_geodesic(e, samples=3)
    torch.testing.assert_close(induced_metric(e, point3).entries, sasakian_r3.metric(point3))


def test_anti_invariant_slice(anti_invariant):
    report = check_invariant(anti_invariant, torch.tensor([0.2, 0.1], dtype=D))
    assert not report.invariant
    assert report.phi_normal > 1e-3
    with pytest.raises(PreconditionError):
        lemma31_check(anti_invariant, torch.tensor([0.2, 0.1], dtype=D))
    with pytest.raises(PreconditionError):
        synth_sigma(0, anti_invariant)


def test_circle_calibration(circle):
    q = torch.tensor([0.6], dtype=D)
    sig = second_fundamental_form(circle, q)
    assert torch.linalg.norm(sig[0, 0]).item() == pytest.approx(1.0, abs=1e-10)
    assert not is_totally_geodesic(circle, samples=3)
    outward = circle(q)
    A = shape_operator(circle, outward, q)
    assert A.abs().item() == pytest.approx(1.0, abs=1e-10)
    assert shape_operator_compatibility(circle, q) < 1e-8


def test_shape_operator_rejects_tangent_vector(circle):
    q = torch.tensor([0.6], dtype=D)
    with pytest.raises(InvalidNormalError):
        shape_operator(circle, circle.jacobian(q)[:, 0], q)


def test_totally_geodesic_shape_operator_vanishes(r3_in_r5, point3):
    N = torch.tensor([0.0, 0.0, 1.0, 0.0, 0.0], dtype=D)
    N = N / torch.sqrt(N @ r3_in_r5.ambient.metric(r3_in_r5(point3)) @ N)
    assert shape_operator(r3_in_r5, N, point3).abs().max() < 1e-8
    assert shape_operator_compatibility(r3_in_r5, point3) < 1e-8


@pytest.mark.parametrize("name", ["r3-in-r5-sasakian", "h3-in-h5-kenmotsu"])
def test_lemma31_on_builtins(name):
    e = builtin_embedding(name)
    for q in e.sample(4, 2):
        report = lemma31_check(e, q, tol=1e-6)
        assert report.passed, report.residuals


def test_lemma31_with_synthetic_sigma(synth_r5, synth_h5):
    for sigma in (synth_r5, synth_h5):
        q = sigma.embedding.sample(1, 3)[0]
        report = lemma31_check(sigma, q, tol=1e-6)
        assert report.passed, report.residuals


def test_induced_structure_is_a_gssf(r3_in_r5, h3_in_h5):
    for e in (r3_in_r5, h3_in_h5):
        space = induced_space(e)
        assert validate_gssf(space, e.sample(1, 4)[0]).passed


def test_synthetic_sigma_constraints(synth_r5, r3_in_r5):
    q = r3_in_r5.sample(1, 9)[0]
    geo = point_geometry(synth_r5, q)
    sig = geo.sigma
    torch.testing.assert_close(sig, sig.transpose(0, 1), atol=1e-12, rtol=0)
    assert torch.einsum("b,abk->ak", geo.xi, sig).abs().max() < 1e-10
    sigma_phi = torch.einsum("db,adk->abk", geo.phi, sig) - torch.einsum("kl,abl->abk", geo.phi_amb, sig)
    assert sigma_phi.abs().max() < 1e-10
    tangential = torch.einsum("abk,kl,lc->abc", sig, geo.g_amb, geo.J)
    assert tangential.abs().max() < 1e-10
    assert sig.abs().max() > 1e-3
    assert (synth_r5.raw(q) - sig).abs().max() > 1e-3


def test_synthetic_sigma_is_deterministic(r3_in_r5):
    q = torch.tensor([0.1, 0.2, -0.3], dtype=D)
    torch.testing.assert_close(synth_sigma(0, r3_in_r5)(q), synth_sigma(0, r3_in_r5)(q))
    assert (synth_sigma(0, r3_in_r5)(q) - synth_sigma(1, r3_in_r5)(q)).abs().max() > 1e-6


def test_nabla_sigma_vanishes_on_totally_geodesic(r3_in_r5, point3):
    X = torch.tensor([1.0, 0.5, -0.2], dtype=D)
    assert nabla_sigma(r3_in_r5, X, X, X, point3).abs().max() < 1e-8


def test_nabla_sigma_is_tensorial(synth_h5, h3_in_h5):
    q = torch.tensor([0.2, -0.1, 0.3], dtype=D)
    gen = torch.Generator().manual_seed(5)
    X, Y, Z = torch.randn((3, 3), generator=gen, dtype=D)
    base = nabla_sigma(synth_h5, X, Y, Z, q)
    torch.testing.assert_close(nabla_sigma(synth_h5, X, 2.5 * Y, Z, q), 2.5 * base, atol=1e-7, rtol=0)
    torch.testing.assert_close(nabla_sigma(synth_h5, X, Y, -0.5 * Z, q), -0.5 * base, atol=1e-7, rtol=0)


def test_nabla_sigma_matches_finite_differences(synth_h5, h3_in_h5):
    # (∇̃_a σ)_bc = P_N(∂a σ_bc + Γ̃(J_a, σ_bc)) - Γ^d_ab σ_dc - Γ^d_ac σ_bd
    q = torch.tensor([0.2, -0.1, 0.3], dtype=D)
    geo = point_geometry(synth_h5, q)
    dsig = finite_diff(synth_h5.values, q, 1e-5)
    gamma_amb = curvature_bundle(h3_in_h5.ambient.metric, geo.x).gamma
    amb = torch.einsum("bcka->abck", dsig) + torch.einsum("kij,ia,bcj->abck", gamma_amb, geo.J, geo.sigma)
    expected = (
        torch.einsum("kl,abcl->abck", geo.PN, amb)
        - torch.einsum("dab,dck->abck", geo.gamma, geo.sigma)
        - torch.einsum("dac,bdk->abck", geo.gamma, geo.sigma)
    )
    torch.testing.assert_close(geo.nabla_sigma, expected, atol=1e-6, rtol=0)


def test_flat_normal_connection(r3_in_r5):
    sigma = synth_sigma(2, r3_in_r5, normal_connection="flat")
    geo = point_geometry(sigma, torch.tensor([0.1, 0.0, 0.2], dtype=D))
    assert geo.rperp.abs().max() == 0.0
    with pytest.raises(ValueError):
        synth_sigma(2, r3_in_r5, normal_connection="twisted")


def test_geometric_sigma_of_circle_points_inward(circle):
    q = torch.tensor([1.2], dtype=D)
    sig = geometric_sigma(circle)(q)[0, 0]
    torch.testing.assert_close(sig, -circle(q), atol=1e-12, rtol=0)
