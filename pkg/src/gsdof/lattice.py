"""Desk-scale compute-and-forward on integer channels.

Artificial noise (and, in the no-secrecy scheme, message pairs) is drawn
from a scaled one-dimensional integer lattice with a mod-p message space.
Because integer linear combinations of lattice points are lattice points,
each receiver can recover its own combination of the noise codewords
exactly by nearest-point rounding, which is what makes the learned "secret
key" functionals exact on integer channels.  Shaping is deliberately
omitted: it does not affect DoF slopes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .schemes import (
    DecodeError,
    LinearScheme,
    SideChannel,
    SymbolGroup,
    _antenna1,
    _check_lattice_margin,
    _lattice_decode_rho,
    _normalize,
    _require,
    _row,
)
from .topology import STATE_1A, STATE_A1, ChannelRealization

__all__ = [
    "LatticeConfig",
    "computation_rate",
    "wiretap_computation_rate",
    "cf_encode",
    "cf_decode",
    "nearest_point",
    "build_wiretap_lattice",
    "build_int_sym_alt",
]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for d in range(2, int(math.isqrt(p)) + 1):
        if p % d == 0:
            return False
    return True


@dataclass(frozen=True)
class LatticeConfig:
    """Scaled integer lattice with a mod-p message space.

    ``scale`` maps codeword integers to transmit amplitudes and must keep
    the codeword power at or below one; the default p = 31 keeps integer
    combinations with coefficients in -3..3 unambiguous over the default
    channel range.
    """

    p: int = 31
    scale: float = 2.0 / 30.0
    a: tuple[int, int] = (1, 1)

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise ValueError(f"codebook size must be prime, got {self.p}")
        if self.scale * (self.p - 1) / 2.0 > 1.0 + 1e-12:
            raise ValueError("scale too large: codeword power would exceed 1")

    @property
    def centered_range(self) -> int:
        return (self.p - 1) // 2


def computation_rate(
    channel_row,
    a,
    rho_eff: float,
    interference_power: float = 0.0,
) -> float:
    """Decodable-combination rate in bits for coefficient vector ``a``.

    Evaluates log2+ of the inverse MMSE-style term
    ``(|a|^2 + interference_power - rho_eff*|row.a|^2 / (1 + rho_eff*|row|^2))^-1``.
    ``interference_power`` carries the receiver-1 variant's rho**(1-alpha)
    self-interference term; pass 0 for the plain variant.
    """
    a = np.asarray(a, dtype=float)
    row = np.asarray(channel_row, dtype=np.complex128)
    if not np.any(a != 0):
        raise ValueError("coefficient vector must be nonzero")
    norm_a = float(np.sum(a**2))
    norm_row = float(np.sum(np.abs(row) ** 2))
    cross = abs(complex(row @ a)) ** 2
    inner = norm_a + interference_power - rho_eff * cross / (1.0 + rho_eff * norm_row)
    if inner <= 0:
        raise ValueError("degenerate rate expression: nonpositive effective noise")
    return max(math.log2(1.0 / inner), 0.0)


def wiretap_computation_rate(h_row, g_row, rho: float, alpha: float) -> float:
    """Minimum of the two receivers' decodable-combination rates when each
    receiver targets its own channel row as coefficient vector."""
    h_row = np.asarray(h_row, dtype=np.complex128)
    r1 = computation_rate(
        h_row,
        np.real(h_row),
        rho_eff=rho,
        interference_power=rho ** (1.0 - alpha) * abs(h_row[0]) ** 2,
    )
    g_row = np.asarray(g_row, dtype=np.complex128)
    r2 = computation_rate(g_row, np.real(g_row), rho_eff=rho**alpha)
    return min(r1, r2)


def cf_encode(symbols, config: LatticeConfig) -> np.ndarray:
    """Map mod-p symbols to scaled centered-integer lattice amplitudes."""
    symbols = np.asarray(symbols, dtype=int)
    if np.any(symbols < 0) or np.any(symbols >= config.p):
        raise ValueError("symbols must lie in 0..p-1")
    return config.scale * (symbols - config.centered_range).astype(float)


def nearest_point(value: complex, config: LatticeConfig) -> float:
    """Nearest scaled-integer lattice point to the real part of ``value``."""
    return config.scale * round(float(np.real(value)) / config.scale)


def cf_decode(received: complex, config: LatticeConfig, integer_coeffs) -> tuple[int, float]:
    """Recover an integer combination of codewords mod p from a noisy sum.

    Returns ``(combination mod p, residual)`` where the residual is the
    distance to the nearest lattice point in units of the lattice spacing
    (0.5 is the failure boundary).  Correctness requires the total noise to
    stay below half the spacing; the residual reports how close the decode
    came to that boundary rather than failing silently.
    """
    coeffs = np.asarray(integer_coeffs)
    if np.any(np.mod(coeffs, 1) != 0):
        raise ValueError("combination coefficients must be integers")
    coeffs = coeffs.astype(int)
    scaled = float(np.real(received)) / config.scale
    nearest = round(scaled)
    residual = abs(scaled - nearest)
    # The encoder centers symbols at -(p-1)/2; shift the combination back.
    shift = int(np.sum(coeffs)) * config.centered_range
    return (nearest + shift) % config.p, residual


# ---------------------------------------------------------------------------
# Integer-channel scheme builders.
# ---------------------------------------------------------------------------


def build_wiretap_lattice(realization: ChannelRealization, alpha: float) -> LinearScheme:
    """Three-slot integer-channel confidential scheme meeting the upper bound.

    Slot 1 sends structured (lattice) noise from both antennas plus a fresh
    confidential symbol at power offset rho**(-alpha) on antenna 1; slots 2
    and 3 follow the Gaussian wiretap construction.  Receiver 1 first
    recovers the noise combination h1.u exactly by nearest-point decoding,
    treating the low-power layer as bounded interference, then peels that
    layer and inverts the remaining system.
    """
    _require(realization, 3, [STATE_1A] * 3)
    if realization.mode != "integer":
        raise ValueError("the lattice wiretap scheme requires an integer realization")
    h1, g1 = realization.h[0], realization.g[0]
    h2, g2 = realization.h[1], realization.g[1]
    g21 = realization.g[1][0]

    config = LatticeConfig()
    groups = (
        SymbolGroup("v_low", 1, -alpha, "rx1"),
        SymbolGroup("v", 2, 0.0, "rx1"),
        SymbolGroup("u", 2, 0.0, "noise", lattice=True),
    )
    one = np.zeros((2, 1), dtype=np.complex128)
    one[0, 0] = 1.0
    slot_maps = (
        {"u": np.eye(2, dtype=np.complex128), "v_low": one},
        {"v": np.eye(2, dtype=np.complex128), "u": _antenna1(h1, 2)},
        {"v": _antenna1(g2, 2), "u": _antenna1(g21 * h1, 2)},
    )
    norms = _normalize(slot_maps)

    def decoder(scheme, y, z, side, layers, rho):
        real = scheme.realization
        nrm = scheme.slot_norms
        sr = math.sqrt(rho)
        off = rho ** (-alpha / 2.0)
        _check_lattice_margin(off, config)
        y0 = y[0] / sr * nrm[0]
        key = nearest_point(y0, config)  # h1.u recovered exactly
        v1 = (y0 - key) / h1[0] / off
        eq_h = y[1] / sr * nrm[1] - h2[0] * key
        h31 = real.h[2][0]
        if abs(h31) < 1e-12:
            raise DecodeError("side-information slot lost: h31 = 0")
        eq_g = y[2] / sr * nrm[2] / h31 - g21 * key
        m = np.vstack([h2, g2])
        if abs(np.linalg.det(m)) < 1e-9:
            raise DecodeError("decode matrix [h2; g2] is singular")
        v = np.linalg.solve(m, np.array([eq_h, eq_g]))
        return {"v": v, "v_low": np.array([v1])}

    return LinearScheme(
        name="wiretap-lattice",
        alpha=alpha,
        realization=realization,
        groups=groups,
        slot_maps=slot_maps,
        slot_norms=norms,
        keys={1: {"u": _row(h1, 2)}, 2: {"u": _row(g1, 2)}},
        decode_order={1: ("v_low", "v")},
        ledger={"v_low": 1.0 - alpha, "v": 2.0},
        decoder=decoder,
        meta={
            "decode_rho": _lattice_decode_rho(realization.rho, alpha, config),
            "lattice": config,
        },
    )


def build_int_sym_alt(realization: ChannelRealization, alpha: float) -> LinearScheme:
    """Four-slot integer-channel scheme on the symmetric alternating topology.

    Slot 1 sends structured noise plus a low-power receiver-1 layer; slot 2
    sends the receiver-1 pair with the learned h1.u on antenna 1; slot 3
    (receiver-2 link now strong) sends the receiver-2 pair with g1.u; slot 4
    multicasts the quantized sum of the overheard side information plus a
    low-power receiver-2 layer.  Both receivers decode their noise
    combinations exactly from the lattice, which makes the slot-3
    interference cancellation at receiver 2 exact at full link strength.
    """
    _require(realization, 4, [STATE_1A, STATE_1A, STATE_A1, STATE_A1])
    if realization.mode != "integer":
        raise ValueError("the integer alternating scheme requires an integer realization")
    h1, g1 = realization.h[0], realization.g[0]
    h2, g2 = realization.h[1], realization.g[1]
    h3, g3 = realization.h[2], realization.g[2]

    config = LatticeConfig()
    groups = (
        SymbolGroup("v_low", 1, -alpha, "rx1"),
        SymbolGroup("v", 2, 0.0, "rx1"),
        SymbolGroup("w", 2, 0.0, "rx2"),
        SymbolGroup("w_low", 1, -alpha, "rx2"),
        SymbolGroup("u", 2, 0.0, "noise", lattice=True),
        SymbolGroup("c", 1, 0.0, "common"),
    )
    one = np.zeros((2, 1), dtype=np.complex128)
    one[0, 0] = 1.0
    slot_maps = (
        {"u": np.eye(2, dtype=np.complex128), "v_low": one.copy()},
        {"v": np.eye(2, dtype=np.complex128), "u": _antenna1(h1, 2)},
        {"w": np.eye(2, dtype=np.complex128), "u": _antenna1(g1, 2)},
        {"c": one.copy(), "w_low": one.copy()},
    )
    norms = _normalize(slot_maps)

    z2_v = (g2 @ slot_maps[1]["v"]) / norms[1]
    z2_u = (g2 @ slot_maps[1]["u"]) / norms[1]
    y3_w = (h3 @ slot_maps[2]["w"]) / norms[2]
    y3_u = (h3 @ slot_maps[2]["u"]) / norms[2]
    side_channels = (
        SideChannel(1, "z2_hat", alpha, {"v": z2_v[None, :], "u": z2_u[None, :]}),
        SideChannel(2, "y3_hat", alpha, {"w": y3_w[None, :], "u": y3_u[None, :]}),
    )

    def decoder(scheme, y, z, side, layers, rho):
        real = scheme.realization
        nrm = scheme.slot_norms
        sr, sra = math.sqrt(rho), math.sqrt(rho**alpha)
        off = rho ** (-alpha / 2.0)
        _check_lattice_margin(off, config)
        # Receiver 1: exact noise key, low layer, then the 2x2 inversion.
        y0 = y[0] / sr * nrm[0]
        k1 = nearest_point(y0, config)  # h1.u
        v1 = (y0 - k1) / h1[0] / off
        eq_h = y[1] / sr * nrm[1] - h2[0] * k1
        eq_g = side["z2_hat"][0] * nrm[1] - g2[0] * k1
        m1 = np.vstack([h2, g2])
        # Receiver 2: exact noise key makes the slot-3 cancellation exact.
        z0 = z[0] / sra * nrm[0]
        k2 = nearest_point(z0, config)  # g1.u
        eq_g2 = z[2] / sr * nrm[2] - g3[0] * k2
        eq_h2 = side["y3_hat"][0] * nrm[2] - h3[0] * k2
        m2 = np.vstack([g3, h3])
        if abs(np.linalg.det(m1)) < 1e-9 or abs(np.linalg.det(m2)) < 1e-9:
            raise DecodeError("singular decode matrix")
        v = np.linalg.solve(m1, np.array([eq_h, eq_g]))
        w = np.linalg.solve(m2, np.array([eq_g2, eq_h2]))
        g41 = real.g[3][0]
        if abs(g41) < 1e-12:
            raise DecodeError("slot-4 antenna path lost at receiver 2")
        w3 = (z[3] / sr * nrm[3] / g41 - layers["c"][0]) / off
        return {"v_low": np.array([v1]), "v": v, "w": w, "w_low": np.array([w3])}

    return LinearScheme(
        name="int-sym-alt",
        alpha=alpha,
        realization=realization,
        groups=groups,
        slot_maps=slot_maps,
        slot_norms=norms,
        side_channels=side_channels,
        keys={1: {"u": _row(h1, 2)}, 2: {"u": _row(g1, 2)}},
        decode_order={1: ("v_low", "v"), 2: ("w", "w_low")},
        ledger={
            "v_low": 1.0 - alpha,
            "v": 1.0 + alpha,
            "w": 1.0 + alpha,
            "w_low": 1.0 - alpha,
        },
        decoder=decoder,
        meta={
            "decode_rho": _lattice_decode_rho(realization.rho, alpha, config),
            "lattice": config,
            "granted_layers": ("c",),
        },
    )
