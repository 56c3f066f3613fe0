import pytest
import torch

from gssflab.errors import FieldEvaluationError, MetricInversionError, SlotIndexError, VarianceMismatchError
from gssflab.tensor import (
    DOWN,
    UP,
    TensorValue,
    contract,
    differentiate_field,
    finite_diff,
    finite_diff2,
    invert_metric,
    jet_derivatives,
    metric_adjust,
    relative_error,
    symmetrize,
)

D = torch.float64


def test_contract_identity_gives_dimension():
    t = TensorValue(3, (UP, DOWN), torch.eye(3, dtype=D))
    assert contract(t, 0, 1).entries.item() == pytest.approx(3.0)


def test_contract_phi_squared_trace(sasakian_r5, point5):
    _, phi, _, _ = sasakian_r5.structure.fields(point5)
    t = TensorValue(5, (UP, DOWN), phi @ phi)
    assert contract(t, 0, 1).entries.item() == pytest.approx(-4.0, abs=1e-12)


def test_contract_keeps_remaining_slot_order():
    entries = torch.arange(27, dtype=D).reshape(3, 3, 3)
    t = TensorValue(3, (UP, DOWN, DOWN), entries)
    out = contract(t, 0, 2)
    assert out.slots == (DOWN,)
    torch.testing.assert_close(out.entries, torch.einsum("iji->j", entries))


def test_contract_rejects_bad_slots():
    t = TensorValue(2, (UP, DOWN), torch.eye(2, dtype=D))
    with pytest.raises(SlotIndexError):
        contract(t, 0, 2)
    with pytest.raises(SlotIndexError):
        contract(t, 1, 1)
    with pytest.raises(VarianceMismatchError):
        contract(TensorValue(2, (DOWN, DOWN), torch.eye(2, dtype=D)), 0, 1)


def test_tensor_value_validates_shape_and_dims():
    with pytest.raises(ValueError):
        TensorValue(3, (UP, DOWN), torch.eye(2, dtype=D))
    with pytest.raises(ValueError):
        TensorValue(8, (UP,), torch.zeros(8, dtype=D))
    with pytest.raises(VarianceMismatchError):
        TensorValue(2, (UP,), torch.ones(2, dtype=D)) + TensorValue(2, (DOWN,), torch.ones(2, dtype=D))


def test_invert_metric_rejects_singular():
    g = torch.diag(torch.tensor([1.0, 1e-14], dtype=D))
    with pytest.raises(MetricInversionError) as err:
        invert_metric(g)
    assert err.value.cond > 1e12


def test_metric_adjust_lower_then_raise():
    g = TensorValue(2, (DOWN, DOWN), torch.tensor([[2.0, 0.5], [0.5, 1.0]], dtype=D))
    v = TensorValue(2, (UP,), torch.tensor([1.0, -3.0], dtype=D))
    lowered = metric_adjust(v, 0, g, DOWN)
    torch.testing.assert_close(lowered.entries, g.entries @ v.entries)
    back = metric_adjust(lowered, 0, g, UP)
    torch.testing.assert_close(back.entries, v.entries)
    with pytest.raises(VarianceMismatchError):
        metric_adjust(v, 0, g, UP)


def test_contract_is_linear_on_random_tensors():
    gen = torch.Generator().manual_seed(1)
    slots = (UP, DOWN, DOWN, UP)
    for _ in range(20):
        a = TensorValue(4, slots, torch.randn((4,) * 4, generator=gen, dtype=D))
        b = TensorValue(4, slots, torch.randn((4,) * 4, generator=gen, dtype=D))
        s, t = torch.randn(2, generator=gen, dtype=D).tolist()
        lhs = contract(s * a + t * b, 0, 2)
        rhs = s * contract(a, 0, 2) + t * contract(b, 0, 2)
        assert lhs.slots == (DOWN, UP)
        torch.testing.assert_close(lhs.entries, rhs.entries)


def test_metric_adjust_round_trips_on_random_metrics():
    gen = torch.Generator().manual_seed(2)
    for _ in range(100):
        a = torch.randn((3, 3), generator=gen, dtype=D)
        g = TensorValue(3, (DOWN, DOWN), a @ a.T + 0.5 * torch.eye(3, dtype=D))
        t = TensorValue(3, (UP, DOWN), torch.randn((3, 3), generator=gen, dtype=D))
        lowered = metric_adjust(t, 0, g, DOWN)
        assert lowered.slots == (DOWN, DOWN)
        back = metric_adjust(lowered, 0, g, UP)
        torch.testing.assert_close(back.entries, t.entries, atol=1e-9, rtol=1e-9)
        raised = metric_adjust(t, 1, g, UP)
        torch.testing.assert_close(metric_adjust(raised, 1, g, DOWN).entries, t.entries, atol=1e-9, rtol=1e-9)


def test_relative_error_scales_small_entries():
    assert relative_error(torch.tensor([1e-6]), torch.tensor([2e-6])) == pytest.approx(0.5)
    assert relative_error(torch.tensor([0.0]), torch.tensor([0.0])) == 0.0
    assert relative_error(torch.tensor([0.0]), torch.tensor([1e-3]), floor=1.0) == pytest.approx(1e-3)


def test_symmetrize_makes_mixed_partials_agree():
    t = torch.randn(3, 3, 3, dtype=D)
    s = symmetrize(t, 1)
    torch.testing.assert_close(s, s.transpose(1, 2))


def test_jets_match_finite_differences():
    def f(p):
        return torch.sin(p[0]) * torch.exp(p[1]) + p[0] * p[1] ** 2

    p = torch.tensor([0.4, -0.3], dtype=D)
    _, d1, d2 = jet_derivatives(f, p, 2)
    assert relative_error(d1, finite_diff(f, p)) < 1e-7
    assert relative_error(d2, finite_diff2(f, p, 1e-3)) < 1e-5


def test_differentiate_field_partials():
    jet = differentiate_field(lambda p: p[0] ** 2 * p[1], torch.tensor([1.5, 2.0], dtype=D), 2)
    assert jet.value == pytest.approx(4.5)
    assert jet.partial(0) == pytest.approx(6.0)
    assert jet.partial(0, 1) == pytest.approx(3.0)
    assert jet.partial(1, 0) == pytest.approx(3.0)


def test_differentiate_field_rejects_non_finite_and_bad_order():
    with pytest.raises(FieldEvaluationError):
        differentiate_field(lambda p: torch.log(p[0]), torch.tensor([-1.0], dtype=D))
    with pytest.raises(ValueError):
        differentiate_field(lambda p: p[0], torch.tensor([1.0], dtype=D), 4)
