import math

import numpy as np
import pytest

from gsdof.topology import (
    STATE_11,
    STATE_1A,
    STATE_A1,
    STATE_AA,
    ChannelRealization,
    TopologyProfile,
    draw_channels,
    realization_to_csv,
    receive,
    state_sequence,
)


def test_profile_sum_invariant_enforced():
    with pytest.raises(ValueError):
        TopologyProfile(alpha=0.5, lambda_11=0.5, lambda_1a=0.6)
    with pytest.raises(ValueError):
        TopologyProfile(alpha=1.5, lambda_11=1.0)
    with pytest.raises(ValueError):
        TopologyProfile(alpha=0.5, lambda_11=1.2, lambda_1a=-0.2)


def test_state_sequence_single_state():
    prof = TopologyProfile.fixed("1a", alpha=0.3)
    assert state_sequence(prof, 3) == (STATE_1A, STATE_1A, STATE_1A)


def test_state_sequence_symmetric_block():
    prof = TopologyProfile.symmetric_alternating(0.5)
    assert state_sequence(prof, 4) == (STATE_1A, STATE_1A, STATE_A1, STATE_A1)


def test_state_sequence_exact_count_rounding():
    prof = TopologyProfile(alpha=0.2, lambda_11=0.3, lambda_aa=0.7)
    seq = state_sequence(prof, 10)
    assert seq.count(STATE_11) == 3
    assert seq.count(STATE_AA) == 7
    assert len(seq) == 10


def test_state_sequence_largest_remainder_sums_to_n():
    prof = TopologyProfile(alpha=0.4, lambda_11=0.26, lambda_1a=0.26, lambda_a1=0.26, lambda_aa=0.22)
    for n in (1, 3, 7, 13, 50):
        seq = state_sequence(prof, n)
        assert len(seq) == n


def test_state_sequence_pure_function():
    prof = TopologyProfile.symmetric_alternating(0.7)
    assert state_sequence(prof, 12) == state_sequence(prof, 12)
    with pytest.raises(ValueError):
        state_sequence(prof, 0)


def test_draw_channels_deterministic():
    states = (STATE_1A,) * 5
    r1 = draw_channels(5, states, rho=1e6, seed=1234, mode="complex")
    r2 = draw_channels(5, states, rho=1e6, seed=1234, mode="complex")
    assert np.array_equal(r1.h, r2.h)
    assert np.array_equal(r1.g, r2.g)


def test_draw_channels_integer_exhaustive_scan():
    states = (STATE_1A,) * 100
    real = draw_channels(100, states, rho=1e6, seed=5, mode="integer")
    coeffs = np.concatenate([real.h.ravel(), real.g.ravel()])
    assert np.all(np.abs(np.imag(coeffs)) == 0)
    vals = np.real(coeffs).astype(int)
    assert np.all((vals >= -3) & (vals <= 3))
    for t in range(100):
        assert abs(np.linalg.det(real.state_matrix(t))) >= 1.0 - 1e-9


def test_draw_channels_complex_moment():
    states = (STATE_11,) * 1000
    real = draw_channels(1000, states, rho=1e6, seed=9)
    assert abs(float(np.mean(np.abs(real.h[:, 0]) ** 2)) - 1.0) < 0.1


def test_draw_channels_rank_invariant():
    for seed in range(20):
        real = draw_channels(10, (STATE_AA,) * 10, rho=1e6, seed=seed)
        assert real.min_abs_det() > 1e-9


def test_receive_zero_input_returns_noise():
    noise = np.array([0.3 + 0.1j, -0.2j])
    y, z = receive(
        np.zeros(2), STATE_1A, np.array([1.0, 2.0]), np.array([3.0, 4.0]),
        rho=100.0, alpha=0.5, noise=noise,
    )
    assert y == noise[0] and z == noise[1]


def test_receive_orthogonal_channels():
    y, z = receive(
        np.array([1.0, 0.0]), STATE_1A,
        np.array([1.0, 0.0]), np.array([0.0, 1.0]),
        rho=100.0, alpha=0.5, noise=np.zeros(2),
    )
    assert abs(y - 10.0) < 1e-12
    assert abs(z) < 1e-12


def test_receive_matches_scalar_oracle():
    rng = np.random.default_rng(3)
    rho, alpha = 250.0, 0.4
    for _ in range(25):
        h = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        g = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        x = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        x = x / np.linalg.norm(x)
        noise = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        y, z = receive(x, STATE_A1, h, g, rho, alpha, noise)
        # Independent scalar re-evaluation of the channel law.
        ey = math.sqrt(rho**alpha) * (h[0] * x[0] + h[1] * x[1]) + noise[0]
        ez = math.sqrt(rho**1.0) * (g[0] * x[0] + g[1] * x[1]) + noise[1]
        assert abs(y - ey) < 1e-12
        assert abs(z - ez) < 1e-12


def test_receive_rejects_overpowered_input():
    with pytest.raises(ValueError):
        receive(
            np.array([1.0, 1.0]), STATE_11, np.ones(2), np.ones(2),
            rho=10.0, alpha=0.5, noise=np.zeros(2),
        )


def test_average_received_snr():
    # Monte-Carlo check of the per-slot received power with unit inputs.
    rng = np.random.default_rng(11)
    rho, alpha = 16.0, 0.5
    total = 0.0
    draws = 10_000
    for _ in range(draws):
        h = (rng.standard_normal(2) + 1j * rng.standard_normal(2)) / math.sqrt(2)
        x = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        x = x / np.linalg.norm(x)
        y, _ = receive(x, STATE_1A, h, np.ones(2), rho, alpha, np.zeros(2))
        total += abs(y) ** 2
    assert abs(total / draws - rho) / rho < 0.03


def test_realization_csv_round_shape():
    real = draw_channels(4, (STATE_1A, STATE_1A, STATE_A1, STATE_AA), rho=1e6, seed=2)
    text = realization_to_csv(real, alpha=0.5)
    lines = text.strip().split("\n")
    assert lines[0].startswith("t,A1,A2,h1_re")
    assert len(lines) == 5
    # slot 2 is in the (alpha, 1) state
    fields = lines[3].split(",")
    assert float(fields[1]) == 0.5 and float(fields[2]) == 1.0


def test_realization_validation():
    states = (STATE_11,) * 2
    h = np.zeros((2, 2), dtype=complex)
    g = np.zeros((2, 2), dtype=complex)
    with pytest.raises(ValueError):
        ChannelRealization(n=2, h=h, g=g, states=states, rho=0.5)
    with pytest.raises(ValueError):
        ChannelRealization(n=3, h=h, g=g, states=states, rho=10.0)
