"""Transmission schemes as structured linear maps over a channel realization.

A scheme maps confidential symbols, artificial noise, and common (digitized
side-information) symbols to per-slot channel inputs.  Each symbol group has
a power exponent: its variance scales as rho**exponent relative to the unit
slot budget.  Per-slot inputs are normalized by an SNR-independent constant
so the expected transmit power never exceeds one.

Two views of every scheme coexist:

* a closed-form linear-Gaussian observation model per receiver (physical
  slot outputs plus digitized side channels with unit-variance quantization
  noise), used for exact rate and leakage accounting; and
* a declared decode plan, run on simulated noiseless transmissions with
  exact side information to verify algebraic decodability by inversion.

Reliability accounting conditions each receiver on its decoded noise
functionals (for example h1.u from the first slot) and on the common
digitized layer.  The integer-channel variants realize those functionals
exactly via lattice decoding; the layered common symbols' decodability is
certified separately by their own mutual information.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .gaussian_mi import conditional_mi
from .topology import (
    STATE_1A,
    STATE_A1,
    ChannelRealization,
    TopologyState,
    draw_channels,
)

__all__ = [
    "SymbolGroup",
    "SideChannel",
    "LinearScheme",
    "SCHEME_KINDS",
    "SECURE_SCHEMES",
    "build_wiretap_gaussian",
    "build_yang_baseline",
    "build_bc_fixed",
    "build_sym_alt",
    "build_gdof_no_secrecy",
    "build_no_noise_canary",
    "build_scheme",
    "scheme_requirements",
    "smallest_t1",
    "reliability_bits",
    "leakage_bits",
    "joint_leakage_bits",
    "common_layer_bits",
    "scheme_block_length",
    "simulate_noiseless",
    "noiseless_decode_check",
    "audit_causality",
    "max_slot_power",
    "UniformQuantizer",
    "quantizer_for_power",
    "xor_bits",
    "digitized_side_info_roundtrip",
    "DecodeError",
]

GAUSS_CLIP = 3.5  # truncation radius for symbol draws in decode simulations


class DecodeError(RuntimeError):
    """Raised when a declared decode plan cannot run (rank or margin failure)."""


@dataclass(frozen=True)
class SymbolGroup:
    name: str
    size: int
    exponent: float  # symbol variance = rho**exponent, exponent <= 0
    owner: str  # "rx1" | "rx2" | "noise" | "common"
    lattice: bool = False

    def __post_init__(self) -> None:
        if self.exponent > 1e-12:
            raise ValueError("symbol power exponents must be <= 0")
        if self.owner not in ("rx1", "rx2", "noise", "common"):
            raise ValueError(f"unknown owner {self.owner!r}")


@dataclass(frozen=True)
class SideChannel:
    """Digitized side information delivered to one receiver.

    Observation model: rho**(gain_exponent/2) * content + unit noise, where
    the unit noise stands for the bounded quantization distortion.
    """

    receiver: int
    label: str
    gain_exponent: float
    coeffs: dict  # group name -> (k, size) array


@dataclass(frozen=True)
class LinearScheme:
    name: str
    alpha: float
    realization: ChannelRealization
    groups: tuple[SymbolGroup, ...]
    slot_maps: tuple  # per slot: dict group name -> (2, size) array
    slot_norms: tuple[float, ...]
    side_channels: tuple[SideChannel, ...] = ()
    keys: dict = field(default_factory=dict)  # receiver -> {group: (k, size)}
    decode_order: dict = field(default_factory=dict)  # receiver -> own groups
    ledger: dict = field(default_factory=dict)  # group -> log2(rho) multiple per block
    decoder: Callable = None
    meta: dict = field(default_factory=dict)

    def group(self, name: str) -> SymbolGroup:
        for g in self.groups:
            if g.name == name:
                return g
        raise KeyError(name)


def _normalize(slot_maps) -> tuple[float, ...]:
    norms = []
    for maps in slot_maps:
        total = sum(float(np.sum(np.abs(m) ** 2)) for m in maps.values())
        norms.append(math.sqrt(total) if total > 0 else 1.0)
    return tuple(norms)


def scheme_block_length(scheme: LinearScheme) -> int:
    return scheme.realization.n


# ---------------------------------------------------------------------------
# Observation model assembly.
# ---------------------------------------------------------------------------


class _ReceiverStructure:
    """Pre-assembled stripped coefficients for one receiver's observations."""

    def __init__(self, scheme: LinearScheme, receiver: int):
        real = scheme.realization
        alpha = scheme.alpha
        offsets = {}
        pos = 0
        for g in scheme.groups:
            offsets[g.name] = (pos, g.size)
            pos += g.size
        self.total = pos
        self.col_exp = np.zeros(pos)
        for g in scheme.groups:
            off, size = offsets[g.name]
            self.col_exp[off : off + size] = g.exponent
        self.masks = {}
        for g in scheme.groups:
            mask = np.zeros(pos, dtype=bool)
            off, size = offsets[g.name]
            mask[off : off + size] = True
            self.masks[g.name] = mask

        rows = []
        row_exp = []
        for t in range(real.n):
            row_vec = real.h[t] if receiver == 1 else real.g[t]
            a1, a2 = real.states[t].exponents(alpha)
            gain = a1 if receiver == 1 else a2
            coef = np.zeros(pos, dtype=np.complex128)
            for name, m in scheme.slot_maps[t].items():
                off, size = offsets[name]
                coef[off : off + size] = (row_vec @ m) / scheme.slot_norms[t]
            rows.append(coef)
            row_exp.append(gain)
        for ch in scheme.side_channels:
            if ch.receiver != receiver:
                continue
            k = next(iter(ch.coeffs.values())).shape[0]
            block = np.zeros((k, pos), dtype=np.complex128)
            for name, m in ch.coeffs.items():
                off, size = offsets[name]
                block[:, off : off + size] = m
            for r in range(k):
                rows.append(block[r])
                row_exp.append(ch.gain_exponent)
        self.coef = np.vstack(rows)
        self.row_exp = np.asarray(row_exp, dtype=float)

        key_map = scheme.keys.get(receiver, {})
        if key_map:
            k = next(iter(key_map.values())).shape[0]
            kc = np.zeros((k, pos), dtype=np.complex128)
            for name, m in key_map.items():
                off, size = offsets[name]
                kc[:, off : off + size] = m
            self.key_coef = kc
        else:
            self.key_coef = np.zeros((0, pos), dtype=np.complex128)

        self.owner_masks = {}
        for owner in ("rx1", "rx2", "noise", "common"):
            mask = np.zeros(pos, dtype=bool)
            for g in scheme.groups:
                if g.owner == owner:
                    mask |= self.masks[g.name]
            self.owner_masks[owner] = mask

    def scaled(self, rho: float) -> tuple[np.ndarray, np.ndarray]:
        a = self.coef * rho ** ((self.row_exp[:, None] + self.col_exp[None, :]) / 2.0)
        k = self.key_coef * rho ** (self.col_exp[None, :] / 2.0)
        return a, k


def receiver_structure(scheme: LinearScheme, receiver: int) -> _ReceiverStructure:
    cache = scheme.meta.setdefault("_structures", {})
    if receiver not in cache:
        cache[receiver] = _ReceiverStructure(scheme, receiver)
    return cache[receiver]


def _own_owner(receiver: int) -> str:
    return "rx1" if receiver == 1 else "rx2"


def reliability_bits(scheme: LinearScheme, rho: float) -> dict:
    """Per-group decodable information in bits at one SNR.

    Chain accounting in declared decode order: each receiver conditions on
    the other receiver's message groups, the common layer, its granted noise
    functionals, and its own already-decoded groups.
    """
    out = {}
    for receiver in (1, 2):
        order = scheme.decode_order.get(receiver, ())
        if not order:
            continue
        st = receiver_structure(scheme, receiver)
        a, k = st.scaled(rho)
        other = _own_owner(2 if receiver == 1 else 1)
        given = st.owner_masks[other] | st.owner_masks["common"]
        for name in order:
            out[name] = conditional_mi(a, k, st.masks[name], given)
            given = given | st.masks[name]
    return out


def leakage_bits(scheme: LinearScheme, rho: float, owner: int) -> dict:
    """Per-group information leaked to the unintended receiver, in bits.

    The eavesdropping receiver is conditioned on its own messages, the
    common layer, and its granted noise functionals (conservative: granting
    side knowledge can only increase the measured leakage).
    """
    other = 2 if owner == 1 else 1
    order = scheme.decode_order.get(owner, ())
    if not order:
        return {}
    st = receiver_structure(scheme, other)
    a, k = st.scaled(rho)
    given = st.owner_masks[_own_owner(other)] | st.owner_masks["common"]
    out = {}
    for name in order:
        out[name] = conditional_mi(a, k, st.masks[name], given)
        given = given | st.masks[name]
    return out


def joint_leakage_bits(scheme: LinearScheme, rho: float, owner: int) -> float:
    return sum(leakage_bits(scheme, rho, owner).values())


def common_layer_bits(scheme: LinearScheme, rho: float, receiver: int) -> float:
    """I(common layer ; receiver's observations), the layered-decode budget."""
    st = receiver_structure(scheme, receiver)
    a, k = st.scaled(rho)
    none = np.zeros(st.total, dtype=bool)
    return conditional_mi(a, k, st.owner_masks["common"], none)


def max_slot_power(scheme: LinearScheme, rhos=(1e6, 1e12)) -> float:
    """Largest per-slot expected input power with all variances instantiated."""
    worst = 0.0
    for maps, norm in zip(scheme.slot_maps, scheme.slot_norms):
        for rho in rhos:
            p = 0.0
            for name, m in maps.items():
                g = scheme.group(name)
                p += float(np.sum(np.abs(m) ** 2)) * rho**g.exponent
            worst = max(worst, p / norm**2)
    return worst


# ---------------------------------------------------------------------------
# Quantization and bitwise-XOR digitization of side information.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UniformQuantizer:
    """Uniform scalar quantizer on real and imaginary parts.

    The dynamic range covers six standard deviations of the quantized signal
    in each real dimension; saturated samples are clipped and counted.
    """

    bits_per_complex: int
    sigma: float  # per-real-dimension standard deviation

    @property
    def bits_re(self) -> int:
        return (self.bits_per_complex + 1) // 2

    @property
    def bits_im(self) -> int:
        return self.bits_per_complex // 2

    def _axis(self, bits: int) -> tuple[float, int]:
        levels = 1 << bits
        span = 12.0 * self.sigma
        return span / levels, levels

    def _enc(self, value: float, bits: int) -> tuple[int, bool]:
        step, levels = self._axis(bits)
        idx = int(math.floor((value + 6.0 * self.sigma) / step))
        sat = idx < 0 or idx >= levels
        return min(max(idx, 0), levels - 1), sat

    def _dec(self, idx: int, bits: int) -> float:
        step, _ = self._axis(bits)
        return -6.0 * self.sigma + (idx + 0.5) * step

    def encode(self, value: complex) -> tuple[int, bool]:
        """Index packing the real and imaginary sub-indices; flag = saturated."""
        ire, sre = self._enc(value.real, self.bits_re)
        iim, sim = self._enc(value.imag, self.bits_im)
        return (ire << self.bits_im) | iim, (sre or sim)

    def decode(self, index: int) -> complex:
        iim = index & ((1 << self.bits_im) - 1)
        ire = index >> self.bits_im
        return complex(self._dec(ire, self.bits_re), self._dec(iim, self.bits_im))

    @property
    def max_error(self) -> float:
        er = self._axis(self.bits_re)[0] / 2
        ei = self._axis(self.bits_im)[0] / 2 if self.bits_im else 6.0 * self.sigma
        return math.hypot(er, ei)


def quantizer_for_power(signal_power: float, rate_bits: int) -> UniformQuantizer:
    """Quantizer for a complex signal of the given power at the given rate."""
    return UniformQuantizer(rate_bits, math.sqrt(max(signal_power, 1e-300) / 2.0))


def xor_bits(i1: int, i2: int) -> int:
    """Bitwise XOR of two equal-width quantization indices."""
    return i1 ^ i2


def _serialize(indices, bits_each: int) -> int:
    out = 0
    for idx in indices:
        out = (out << bits_each) | int(idx)
    return out


def _deserialize(packed: int, bits_each: int, count: int) -> list[int]:
    mask = (1 << bits_each) - 1
    out = [0] * count
    for i in range(count - 1, -1, -1):
        out[i] = packed & mask
        packed >>= bits_each
    return out


def digitized_side_info_roundtrip(scheme: LinearScheme, rho: float, seed: int = 0):
    """Run the real digitization path of the common multicast on a scheme.

    Fixed-topology four-phase schemes quantize the two overheard streams
    separately (the weak-side stream at ceil(alpha*log2 rho) bits per
    complex sample over its rho**alpha level, the strong-side stream at
    ceil(log2 rho) bits over its rho level), bit-serialize and XOR them.
    Alternating schemes instead sum the two same-level signals first and
    quantize the sum once.  Either way receiver 1 reconstructs the
    receiver-2 stream from the common message and its own operand.  Returns
    (max reconstruction error, quantizer error bound, saturation rate).
    """
    if not scheme.side_channels:
        raise ValueError("scheme has no digitized side information")
    alpha = scheme.alpha
    symbols, y, z, side = simulate_noiseless(scheme, rho, seed)
    z2 = side["z2_hat"] * rho ** (alpha / 2.0)  # weak-side stream, level rho**alpha
    strong = scheme.side_channels[1]
    y3 = side["y3_hat"] * rho ** (strong.gain_exponent / 2.0)
    bits_z = math.ceil(alpha * math.log2(rho))

    if abs(strong.gain_exponent - alpha) < 1e-12 and len(y3) == len(z2):
        # Alternating path: quantize the analog sum, subtract the operand.
        summed = y3 + z2
        qs = quantizer_for_power(2.0 * rho**alpha, bits_z)
        saturated = 0
        rec = np.empty(len(z2), dtype=np.complex128)
        for i, s in enumerate(summed):
            idx, sat = qs.encode(complex(s))
            saturated += int(sat)
            rec[i] = qs.decode(idx) - y3[i]
        err = float(np.max(np.abs(rec - z2)))
        return err, qs.max_error, saturated / len(summed)

    # Fixed-topology path: two streams, bit-serialized and XORed.
    bits_y = math.ceil(strong.gain_exponent * math.log2(rho))
    qz = quantizer_for_power(rho**alpha, bits_z)
    qy = quantizer_for_power(rho**strong.gain_exponent, bits_y)
    saturated = 0
    iz, iy = [], []
    for v in z2:
        idx, sat = qz.encode(complex(v))
        saturated += int(sat)
        iz.append(idx)
    for v in y3:
        idx, sat = qy.encode(complex(v))
        saturated += int(sat)
        iy.append(idx)
    # Pad the serialized streams to a common width before the XOR.
    total_z = len(iz) * bits_z
    total_y = len(iy) * bits_y
    width = max(total_z, total_y)
    common = xor_bits(_serialize(iz, bits_z) << (width - total_z),
                      _serialize(iy, bits_y) << (width - total_y))
    # Receiver 1 knows its own strong-side stream exactly (noiseless run),
    # quantizes it identically, and strips it from the common message.
    own = _serialize([qy.encode(complex(v))[0] for v in y3], bits_y) << (width - total_y)
    recovered = _deserialize(xor_bits(common, own) >> (width - total_z), bits_z, len(iz))
    rec = np.array([qz.decode(i) for i in recovered])
    err = float(np.max(np.abs(rec - z2)))
    return err, qz.max_error, saturated / (len(iz) + len(iy))


# ---------------------------------------------------------------------------
# Builders: Gaussian-noise schemes.
# ---------------------------------------------------------------------------


def _require(realization: ChannelRealization, n: int, states) -> None:
    if realization.n != n:
        raise ValueError(f"scheme needs {n} slots, realization has {realization.n}")
    for t, s in enumerate(states):
        if realization.states[t] != s:
            raise ValueError(f"slot {t} must be in state {s.label}")


def _row(vec, size: int, offset: int = 0) -> np.ndarray:
    """(1, size) row with ``vec`` placed at ``offset``."""
    out = np.zeros((1, size), dtype=np.complex128)
    out[0, offset : offset + len(vec)] = vec
    return out


def _antenna1(vec, size: int, offset: int = 0) -> np.ndarray:
    """(2, size) map sending ``vec @ symbols`` on antenna 1 only."""
    out = np.zeros((2, size), dtype=np.complex128)
    out[0, offset : offset + len(vec)] = vec
    return out


def build_wiretap_gaussian(
    realization: ChannelRealization,
    alpha: float,
    state: TopologyState = STATE_1A,
) -> LinearScheme:
    """Three-slot confidential scheme for receiver 1 on a fixed topology.

    Slot 1 injects artificial noise from both antennas; slot 2 sends the two
    confidential symbols with the learned receiver-1 noise observation
    repeated on antenna 1; slot 3 retransmits the receiver-2 side
    information.  With ``state=STATE_A1`` the same construction runs on the
    weak-legitimate-link topology, where each symbol carries alpha bits per
    log2(rho).
    """
    _require(realization, 3, [state] * 3)
    h1, g1 = realization.h[0], realization.g[0]
    h2, g2 = realization.h[1], realization.g[1]
    g21 = realization.g[1][0]

    groups = [
        SymbolGroup("v", 2, 0.0, "rx1"),
        SymbolGroup("u", 2, 0.0, "noise"),
    ]
    slot0 = {"u": np.eye(2, dtype=np.complex128)}
    slot1 = {"v": np.eye(2, dtype=np.complex128), "u": _antenna1(h1, 2)}
    slot2 = {"v": _antenna1(g2, 2), "u": _antenna1(g21 * h1, 2)}
    slot_maps = (slot0, slot1, slot2)
    norms = _normalize(slot_maps)

    per_symbol = 1.0 if state == STATE_1A else alpha
    keys = {1: {"u": _row(h1, 2)}, 2: {"u": _row(g1, 2)}}

    def decoder(scheme, y, z, side, layers, rho):
        real = scheme.realization
        a = [real.states[t].exponents(alpha)[0] for t in range(3)]
        ys = [y[t] / math.sqrt(rho ** a[t]) * scheme.slot_norms[t] for t in range(3)]
        k1 = complex(ys[0])  # h1.u
        eq1 = ys[1] - h2[0] * k1  # h2.v
        h31 = real.h[2][0]
        if abs(h31) < 1e-12:
            raise DecodeError("side-information slot lost: h31 = 0")
        eq2 = ys[2] / h31 - g21 * k1  # g2.v
        m = np.vstack([h2, g2])
        if abs(np.linalg.det(m)) < 1e-9:
            raise DecodeError("decode matrix [h2; g2] is singular")
        v = np.linalg.solve(m, np.array([eq1, eq2]))
        return {"v": v}

    return LinearScheme(
        name="wiretap-gaussian" if state == STATE_1A else "wiretap-gaussian-a1",
        alpha=alpha,
        realization=realization,
        groups=tuple(groups),
        slot_maps=slot_maps,
        slot_norms=norms,
        keys=keys,
        decode_order={1: ("v",)},
        ledger={"v": 2.0 * per_symbol},
        decoder=decoder,
        meta={"decode_rho": max(realization.rho, 1e8)},
    )


def build_no_noise_canary(realization: ChannelRealization, alpha: float) -> LinearScheme:
    """Deliberately broken scheme: one uncoded confidential symbol, no cover.

    With the artificial noise omitted the unintended receiver sees the
    secret at its full link level, so the leakage slope equals the
    eavesdropper's link exponent.  Used as a regression canary for the
    leakage engine.
    """
    _require(realization, 1, [STATE_1A])

    groups = (SymbolGroup("v", 1, 0.0, "rx1"),)
    one = np.zeros((2, 1), dtype=np.complex128)
    one[0, 0] = 1.0
    slot_maps = ({"v": one},)
    norms = _normalize(slot_maps)

    def decoder(scheme, y, z, side, layers, rho):
        h11 = scheme.realization.h[0][0]
        if abs(h11) < 1e-12:
            raise DecodeError("antenna path lost")
        return {"v": np.array([y[0] / math.sqrt(rho) * scheme.slot_norms[0] / h11])}

    return LinearScheme(
        name="wiretap-nonoise",
        alpha=alpha,
        realization=realization,
        groups=groups,
        slot_maps=slot_maps,
        slot_norms=norms,
        decode_order={1: ("v",)},
        ledger={"v": 1.0},
        decoder=decoder,
        meta={"decode_rho": max(realization.rho, 1e8)},
    )


def build_yang_baseline(realization: ChannelRealization, alpha: float) -> LinearScheme:
    """Four-slot baseline sending two confidential symbols to each receiver.

    Slot 1: noise; slot 2: receiver-1 symbols plus the learned receiver-1
    noise combination; slot 3: receiver-2 symbols plus the learned
    receiver-2 noise combination; slot 4: the sum of the two overheard
    side-information forms, retransmitted on antenna 1.
    """
    _require(realization, 4, [STATE_1A] * 4)
    h1, g1 = realization.h[0], realization.g[0]
    h2, g2 = realization.h[1], realization.g[1]
    h3, g3 = realization.h[2], realization.g[2]
    g21 = realization.g[1][0]
    h31 = realization.h[2][0]

    groups = (
        SymbolGroup("v", 2, 0.0, "rx1"),
        SymbolGroup("w", 2, 0.0, "rx2"),
        SymbolGroup("u", 2, 0.0, "noise"),
    )
    slot_maps = (
        {"u": np.eye(2, dtype=np.complex128)},
        {"v": np.eye(2, dtype=np.complex128), "u": _antenna1(h1, 2)},
        {"w": np.eye(2, dtype=np.complex128), "u": _antenna1(g1, 2)},
        {
            "v": _antenna1(g2, 2),
            "w": _antenna1(h3, 2),
            "u": _antenna1(h31 * g1 + g21 * h1, 2),
        },
    )
    norms = _normalize(slot_maps)

    def decoder(scheme, y, z, side, layers, rho):
        sr = math.sqrt(rho)
        sra = math.sqrt(rho**alpha)
        nrm = scheme.slot_norms
        ys = [y[t] / sr * nrm[t] for t in range(4)]
        zs = [z[t] / sra * nrm[t] for t in range(4)]
        k1 = complex(ys[0])  # h1.u
        k2 = complex(zs[0])  # g1.u
        # Receiver 1: remove own slot-3 observation from slot 4, then invert.
        y3_form = complex(ys[2])  # h3.w + h31*g1.u
        h41 = scheme.realization.h[3][0]
        if abs(h41) < 1e-12:
            raise DecodeError("slot-4 antenna path lost at receiver 1")
        z2_form = ys[3] / h41 - y3_form  # g2.v + g21*h1.u
        eqs = np.array([ys[1] - h2[0] * k1, z2_form - g21 * k1])
        m1 = np.vstack([h2, g2])
        # Receiver 2: remove own slot-2 observation from slot 4, then invert.
        z2_own = complex(zs[1])
        g41 = scheme.realization.g[3][0]
        if abs(g41) < 1e-12:
            raise DecodeError("slot-4 antenna path lost at receiver 2")
        y3_est = zs[3] / g41 - z2_own  # h3.w + h31*g1.u
        eqs2 = np.array([zs[2] - g3[0] * k2, y3_est - h31 * k2])
        m2 = np.vstack([g3, h3])
        if abs(np.linalg.det(m1)) < 1e-9 or abs(np.linalg.det(m2)) < 1e-9:
            raise DecodeError("singular decode matrix")
        return {"v": np.linalg.solve(m1, eqs), "w": np.linalg.solve(m2, eqs2)}

    return LinearScheme(
        name="yang",
        alpha=alpha,
        realization=realization,
        groups=groups,
        slot_maps=slot_maps,
        slot_norms=norms,
        keys={1: {"u": _row(h1, 2)}, 2: {"u": _row(g1, 2)}},
        decode_order={1: ("v",), 2: ("w",)},
        ledger={"v": 2.0, "w": 2.0 * alpha},
        decoder=decoder,
        meta={"decode_rho": max(realization.rho, 1e8)},
    )


def smallest_t1(alpha: float, limit: int = 20) -> int:
    """Smallest phase length T1 <= limit making alpha*T1 a positive integer."""
    for t1 in range(1, limit + 1):
        t2 = alpha * t1
        if t2 > 0.5 and abs(t2 - round(t2)) < 1e-9:
            return t1
    raise ValueError(f"no T1 <= {limit} makes alpha*T1 a positive integer (alpha={alpha})")


def build_bc_fixed(
    t1: int,
    realization: ChannelRealization,
    alpha: float,
    theta1: np.ndarray | None = None,
    theta2: np.ndarray | None = None,
    psi1: np.ndarray | None = None,
) -> LinearScheme:
    """Four-phase broadcast scheme on the fixed (strong, weak) topology.

    Phase 1 (T1 slots): artificial noise.  Phase 2 (T1 slots): receiver-1
    symbols plus a known mixing of the phase-1 receiver-1 observations.
    Phase 3 (T2 = alpha*T1 slots): receiver-2 symbols plus a mixing of the
    phase-1 receiver-2 observations.  Phase 4 (T1 slots): common symbols
    carrying the XOR of the two quantized overheard side-information
    streams, with a fresh receiver-1 layer at power offset rho**(-alpha).

    The mixing matrices theta1 (2*T1, T1), theta2 (2*T2, T1) and psi1
    (T1, T2) are known at all nodes; identity-padded defaults are used when
    not supplied, and decode rank is validated at build time.
    """
    t2f = alpha * t1
    t2 = int(round(t2f))
    if t2 < 1 or abs(t2f - t2) > 1e-9:
        raise ValueError(f"alpha*T1 must be a positive integer, got {t2f}")
    n = 3 * t1 + t2
    _require(realization, n, [STATE_1A] * n)

    if theta1 is None:
        theta1 = np.zeros((2 * t1, t1), dtype=np.complex128)
        for t in range(t1):
            theta1[2 * t, t] = 1.0
    if theta2 is None:
        theta2 = np.zeros((2 * t2, t1), dtype=np.complex128)
        for t in range(t2):
            theta2[2 * t, t] = 1.0
    if psi1 is None:
        psi1 = np.zeros((t1, t2), dtype=np.complex128)
        psi1[:t2, :t2] = np.eye(t2)
    theta1 = np.asarray(theta1, dtype=np.complex128)
    theta2 = np.asarray(theta2, dtype=np.complex128)
    psi1 = np.asarray(psi1, dtype=np.complex128)
    if theta1.shape != (2 * t1, t1) or theta2.shape != (2 * t2, t1):
        raise ValueError("theta matrix dimensions do not match the phase lengths")
    if psi1.shape != (t1, t2) or np.linalg.matrix_rank(psi1) < t2:
        raise ValueError("psi1 must be (T1, T2) with full column rank")

    groups = (
        SymbolGroup("v", 2 * t1, 0.0, "rx1"),
        SymbolGroup("w", 2 * t2, 0.0, "rx2"),
        SymbolGroup("v_low", t1, -alpha, "rx1"),
        SymbolGroup("u", 2 * t1, 0.0, "noise"),
        SymbolGroup("c", t1, 0.0, "common"),
    )

    # Phase-1 receiver observations as coefficient rows over u.
    y1_rows = np.zeros((t1, 2 * t1), dtype=np.complex128)
    z1_rows = np.zeros((t1, 2 * t1), dtype=np.complex128)
    for t in range(t1):
        y1_rows[t, 2 * t : 2 * t + 2] = realization.h[t]
        z1_rows[t, 2 * t : 2 * t + 2] = realization.g[t]

    slot_maps = []
    for t in range(t1):  # phase 1
        m = np.zeros((2, 2 * t1), dtype=np.complex128)
        m[:, 2 * t : 2 * t + 2] = np.eye(2)
        slot_maps.append({"u": m})
    theta1_y1 = theta1 @ y1_rows  # (2*T1, 2*T1) over u
    for t in range(t1):  # phase 2
        mv = np.zeros((2, 2 * t1), dtype=np.complex128)
        mv[:, 2 * t : 2 * t + 2] = np.eye(2)
        slot_maps.append({"v": mv, "u": theta1_y1[2 * t : 2 * t + 2, :]})
    theta2_z1 = theta2 @ z1_rows  # (2*T2, 2*T1) over u
    for t in range(t2):  # phase 3
        mw = np.zeros((2, 2 * t2), dtype=np.complex128)
        mw[:, 2 * t : 2 * t + 2] = np.eye(2)
        slot_maps.append({"w": mw, "u": theta2_z1[2 * t : 2 * t + 2, :]})
    for t in range(t1):  # phase 4
        mc = np.zeros((2, t1), dtype=np.complex128)
        mc[0, t] = 1.0
        ml = np.zeros((2, t1), dtype=np.complex128)
        ml[0, t] = 1.0
        slot_maps.append({"c": mc, "v_low": ml})
    slot_maps = tuple(slot_maps)
    norms = _normalize(slot_maps)

    # Overheard side information as symbol rows (normalized slot signals).
    z2_v = np.zeros((t1, 2 * t1), dtype=np.complex128)
    z2_u = np.zeros((t1, 2 * t1), dtype=np.complex128)
    for t in range(t1):
        g = realization.g[t1 + t]
        sm = slot_maps[t1 + t]
        z2_v[t] = (g @ sm["v"]) / norms[t1 + t]
        z2_u[t] = (g @ sm["u"]) / norms[t1 + t]
    y3_w = np.zeros((t2, 2 * t2), dtype=np.complex128)
    y3_u = np.zeros((t2, 2 * t1), dtype=np.complex128)
    for t in range(t2):
        h = realization.h[2 * t1 + t]
        sm = slot_maps[2 * t1 + t]
        y3_w[t] = (h @ sm["w"]) / norms[2 * t1 + t]
        y3_u[t] = (h @ sm["u"]) / norms[2 * t1 + t]

    side_channels = (
        SideChannel(1, "z2_hat", alpha, {"v": z2_v, "u": z2_u}),
        SideChannel(2, "y3_hat", 1.0, {"w": y3_w, "u": y3_u}),
    )

    # Per-slot decode systems must be invertible.
    for t in range(t1):
        m = np.vstack([realization.h[t1 + t], realization.g[t1 + t]])
        if abs(np.linalg.det(m)) < 1e-9:
            raise ValueError(f"phase-2 slot {t}: decode matrix is singular")
    for t in range(t2):
        m = np.vstack([realization.g[2 * t1 + t], realization.h[2 * t1 + t]])
        if abs(np.linalg.det(m)) < 1e-9:
            raise ValueError(f"phase-3 slot {t}: decode matrix is singular")

    def decoder(scheme, y, z, side, layers, rho):
        real = scheme.realization
        nrm = scheme.slot_norms
        sr, sra = math.sqrt(rho), math.sqrt(rho**alpha)
        # Receiver 1.
        y1 = np.array([y[t] / sr * nrm[t] for t in range(t1)])  # h_t.u_t
        c_true = layers["c"]
        v = np.zeros(2 * t1, dtype=np.complex128)
        z2_hat = side["z2_hat"]  # exact side information
        mix = theta1 @ y1
        for t in range(t1):
            hrow = real.h[t1 + t]
            grow = real.g[t1 + t]
            eq_h = y[t1 + t] / sr * nrm[t1 + t] - hrow @ mix[2 * t : 2 * t + 2]
            eq_g = z2_hat[t] * nrm[t1 + t] - grow @ mix[2 * t : 2 * t + 2]
            sol = np.linalg.solve(np.vstack([hrow, grow]), np.array([eq_h, eq_g]))
            v[2 * t : 2 * t + 2] = sol
        v_low = np.zeros(t1, dtype=np.complex128)
        for t in range(t1):
            slot = 2 * t1 + t2 + t
            h41 = real.h[slot][0]
            if abs(h41) < 1e-12:
                raise DecodeError("phase-4 antenna path lost at receiver 1")
            resid = y[slot] / sr * nrm[slot] / h41 - c_true[t]
            v_low[t] = resid * math.sqrt(rho**alpha)
        # Receiver 2.
        z1 = np.array([z[t] / sra * nrm[t] for t in range(t1)])  # g_t.u_t
        w = np.zeros(2 * t2, dtype=np.complex128)
        y3_hat = side["y3_hat"]
        mix2 = theta2 @ z1
        for t in range(t2):
            grow = real.g[2 * t1 + t]
            hrow = real.h[2 * t1 + t]
            eq_g = z[2 * t1 + t] / sra * nrm[2 * t1 + t] - grow @ mix2[2 * t : 2 * t + 2]
            eq_h = y3_hat[t] * nrm[2 * t1 + t] - hrow @ mix2[2 * t : 2 * t + 2]
            sol = np.linalg.solve(np.vstack([grow, hrow]), np.array([eq_g, eq_h]))
            w[2 * t : 2 * t + 2] = sol
        return {"v": v, "v_low": v_low, "w": w}

    return LinearScheme(
        name="bc-fixed",
        alpha=alpha,
        realization=realization,
        groups=groups,
        slot_maps=slot_maps,
        slot_norms=norms,
        side_channels=side_channels,
        keys={1: {"u": y1_rows}, 2: {"u": z1_rows}},
        decode_order={1: ("v", "v_low"), 2: ("w",)},
        ledger={
            "v": (1 + alpha) * t1,
            "v_low": (1 - alpha) * t1,
            "w": (1 + alpha) * t2,
        },
        decoder=decoder,
        meta={
            "decode_rho": max(realization.rho, 1e8),
            "t1": t1,
            "t2": t2,
            "theta1": theta1,
            "theta2": theta2,
            "psi1": psi1,
            "granted_layers": ("c",),
        },
    )


def build_sym_alt(realization: ChannelRealization, alpha: float) -> LinearScheme:
    """Four-slot scheme alternating (1, alpha) then (alpha, 1).

    Slots 1-2 run the noise-injection phases for receiver 1; slot 3 sends
    receiver-2 symbols over the now-strong receiver-2 link with the learned
    receiver-2 noise observation on antenna 1; slot 4 multicasts the
    quantized sum of the two overheard side-information signals together
    with a fresh receiver-2 layer at power offset rho**(-alpha).
    """
    _require(realization, 4, [STATE_1A, STATE_1A, STATE_A1, STATE_A1])
    h1, g1 = realization.h[0], realization.g[0]
    h2, g2 = realization.h[1], realization.g[1]
    h3, g3 = realization.h[2], realization.g[2]

    groups = (
        SymbolGroup("v", 2, 0.0, "rx1"),
        SymbolGroup("w", 2, 0.0, "rx2"),
        SymbolGroup("w_low", 1, -alpha, "rx2"),
        SymbolGroup("u", 2, 0.0, "noise"),
        SymbolGroup("c", 1, 0.0, "common"),
    )
    one = np.ones((2, 1), dtype=np.complex128)
    one[1, 0] = 0.0
    slot_maps = (
        {"u": np.eye(2, dtype=np.complex128)},
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
        k1 = y[0] / sr * nrm[0]  # h1.u
        k2 = z[0] / sra * nrm[0]  # g1.u
        # Receiver 1: slot-2 equation plus exact digitized side information.
        eq_h = y[1] / sr * nrm[1] - h2[0] * k1
        eq_g = side["z2_hat"][0] * nrm[1] - g2[0] * k1
        m1 = np.vstack([h2, g2])
        # Receiver 2: slot-3 equation plus the mirrored side information.
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
        w_low = (z[3] / sr * nrm[3] / g41 - layers["c"][0]) * sra
        return {"v": v, "w": w, "w_low": np.array([w_low])}

    return LinearScheme(
        name="sym-alt",
        alpha=alpha,
        realization=realization,
        groups=groups,
        slot_maps=slot_maps,
        slot_norms=norms,
        side_channels=side_channels,
        keys={1: {"u": _row(h1, 2)}, 2: {"u": _row(g1, 2)}},
        decode_order={1: ("v",), 2: ("w", "w_low")},
        ledger={"v": 1.0 + alpha, "w": 1.0 + alpha, "w_low": 1.0 - alpha},
        decoder=decoder,
        meta={"decode_rho": max(realization.rho, 1e8), "granted_layers": ("c",)},
    )


def build_gdof_no_secrecy(realization: ChannelRealization, alpha: float) -> LinearScheme:
    """Three-slot scheme without secrecy constraints on integer channels.

    Slot 1: a lattice pair for receiver 1 plus a fresh layer at power offset
    rho**(-alpha); slot 2: a lattice pair for receiver 2 plus another fresh
    layer; slot 3: the combination g1.v + h2.w (itself a lattice point on
    integer channels) plus a third fresh layer.  Each receiver reconstructs
    its visible lattice combinations by nearest-point decoding, peels the
    low-power layers, and inverts a 2x2 integer system.
    """
    from .lattice import LatticeConfig

    _require(realization, 3, [STATE_1A] * 3)
    if realization.mode != "integer":
        raise ValueError("the no-secrecy scheme requires an integer realization")
    h1, g1 = realization.h[0], realization.g[0]
    h2, g2 = realization.h[1], realization.g[1]

    config = LatticeConfig()
    groups = (
        SymbolGroup("v", 2, 0.0, "rx1", lattice=True),
        SymbolGroup("w", 2, 0.0, "rx2", lattice=True),
        SymbolGroup("v_low", 3, -alpha, "rx1"),
    )

    def _low(col: int) -> np.ndarray:
        m = np.zeros((2, 3), dtype=np.complex128)
        m[0, col] = 1.0
        return m

    slot_maps = (
        {"v": np.eye(2, dtype=np.complex128), "v_low": _low(0)},
        {"w": np.eye(2, dtype=np.complex128), "v_low": _low(1)},
        {"v": _antenna1(g1, 2), "w": _antenna1(h2, 2), "v_low": _low(2)},
    )
    norms = _normalize(slot_maps)

    def decoder(scheme, y, z, side, layers, rho):
        from .lattice import nearest_point

        real = scheme.realization
        nrm = scheme.slot_norms
        sr, sra = math.sqrt(rho), math.sqrt(rho**alpha)
        off = rho ** (-alpha / 2.0)
        _check_lattice_margin(off, config)
        # Receiver 1: three nearest-point decodes, peel the fresh layers.
        y0 = y[0] / sr * nrm[0]
        k_h1v = nearest_point(y0, config)
        v3 = (y0 - k_h1v) / h1[0] / off
        y1 = y[1] / sr * nrm[1]
        k_h2w = nearest_point(y1, config)
        v4 = (y1 - k_h2w) / h2[0] / off
        h31 = real.h[2][0]
        g31 = real.g[2][0]
        if abs(h31) < 1e-12 or abs(g31) < 1e-12:
            raise DecodeError("slot-3 antenna path lost")
        y2 = y[2] / sr * nrm[2] / h31
        k_comb = nearest_point(y2, config)
        v5 = (y2 - k_comb) / off
        k_g1v = k_comb - k_h2w
        v = np.linalg.solve(np.vstack([h1, g1]), np.array([k_h1v, k_g1v])) / config.scale
        # Receiver 2: mirrored decode of the other lattice pair.
        z0 = z[0] / sra * nrm[0]
        k_g1v2 = nearest_point(z0, config)
        z1 = z[1] / sra * nrm[1]
        k_g2w = nearest_point(z1, config)
        z2 = z[2] / sra * nrm[2] / g31
        k_comb2 = nearest_point(z2, config)
        k_h2w2 = k_comb2 - k_g1v2
        w = np.linalg.solve(np.vstack([g2, h2]), np.array([k_g2w, k_h2w2])) / config.scale
        return {
            "v": np.round(np.real(v)).astype(int),
            "w": np.round(np.real(w)).astype(int),
            "v_low": np.array([v3, v4, v5]),
        }

    return LinearScheme(
        name="gdof",
        alpha=alpha,
        realization=realization,
        groups=groups,
        slot_maps=slot_maps,
        slot_norms=norms,
        decode_order={1: ("v", "v_low"), 2: ("w",)},
        ledger={"v": 2.0 * alpha, "v_low": 3.0 * (1 - alpha), "w": 2.0 * alpha},
        decoder=decoder,
        meta={
            "decode_rho": _lattice_decode_rho(realization.rho, alpha, config),
            "lattice": config,
        },
    )


def _check_lattice_margin(offset_amplitude: float, config) -> None:
    """Low-power layers must stay below half the lattice spacing."""
    margin = 3.0 * GAUSS_CLIP * offset_amplitude  # |channel coefficient| <= 3
    if margin >= config.scale / 2.0:
        raise DecodeError(
            f"residual layer amplitude {margin:.3g} exceeds half the lattice "
            f"spacing {config.scale / 2.0:.3g}; increase rho"
        )


def _lattice_decode_rho(rho: float, alpha: float, config) -> float:
    """SNR at which every low-power layer sits safely below half the spacing."""
    worst = 2.0 * 3.0 * GAUSS_CLIP / config.scale
    need = worst ** (2.0 / max(alpha, 1e-9))
    return max(rho, 10.0 * need, 1e8)


# ---------------------------------------------------------------------------
# Noiseless simulation and decode verification.
# ---------------------------------------------------------------------------


def _draw_symbols(scheme: LinearScheme, rng: np.random.Generator) -> dict:
    """Stripped symbol draws: truncated CN(0,1) for Gaussian groups, scaled
    centered integers for lattice groups."""
    out = {}
    for g in scheme.groups:
        if g.lattice:
            config = scheme.meta["lattice"]
            ints = rng.integers(0, config.p, size=g.size)
            out[g.name] = config.scale * (ints - (config.p - 1) // 2).astype(float)
            out[f"{g.name}_ints"] = (ints - (config.p - 1) // 2).astype(int)
        else:
            vals = np.empty(g.size, dtype=np.complex128)
            for i in range(g.size):
                while True:
                    s = (rng.standard_normal() + 1j * rng.standard_normal()) / math.sqrt(2)
                    if abs(s) <= GAUSS_CLIP:
                        vals[i] = s
                        break
            out[g.name] = vals
    return out


def simulate_noiseless(scheme: LinearScheme, rho: float, seed: int = 0):
    """Draw symbols and run the block through the channel with noise zeroed.

    Returns (symbols, y, z, side_values) where side_values holds the exact
    (unquantized) side-information content per channel label.
    """
    rng = np.random.default_rng(seed)
    symbols = _draw_symbols(scheme, rng)
    real = scheme.realization
    phys = {
        g.name: np.asarray(symbols[g.name], dtype=np.complex128) * rho ** (g.exponent / 2.0)
        for g in scheme.groups
    }
    y = np.zeros(real.n, dtype=np.complex128)
    z = np.zeros(real.n, dtype=np.complex128)
    for t in range(real.n):
        x = np.zeros(2, dtype=np.complex128)
        for name, m in scheme.slot_maps[t].items():
            x += m @ phys[name]
        x /= scheme.slot_norms[t]
        a1, a2 = real.states[t].exponents(scheme.alpha)
        y[t] = math.sqrt(rho**a1) * (real.h[t] @ x)
        z[t] = math.sqrt(rho**a2) * (real.g[t] @ x)
    side = {}
    for ch in scheme.side_channels:
        val = np.zeros(next(iter(ch.coeffs.values())).shape[0], dtype=np.complex128)
        for name, m in ch.coeffs.items():
            val = val + m @ phys[name]
        side[ch.label] = val
    return symbols, y, z, side


def noiseless_decode_check(scheme: LinearScheme, seed: int = 0, rel_tol: float = 1e-6) -> bool:
    """Run the declared decode plan with zero receiver noise and exact side
    information; True iff every intended symbol is recovered.

    Gaussian symbols must match to ``rel_tol`` relative error; lattice
    symbols must match exactly.
    """
    rho = float(scheme.meta.get("decode_rho", scheme.realization.rho))
    symbols, y, z, side = simulate_noiseless(scheme, rho, seed)
    layers = {}
    for name in scheme.meta.get("granted_layers", ()):
        layers[name] = np.asarray(symbols[name], dtype=np.complex128)
    try:
        recovered = scheme.decoder(scheme, y, z, side, layers, rho)
    except (DecodeError, np.linalg.LinAlgError):
        return False
    for name, rec in recovered.items():
        group = scheme.group(name)
        if group.lattice:
            truth = symbols[f"{name}_ints"]
            if not np.array_equal(np.asarray(rec, dtype=int), truth):
                return False
        else:
            truth = np.asarray(symbols[name], dtype=np.complex128)
            rec = np.asarray(rec, dtype=np.complex128)
            scale = max(float(np.max(np.abs(truth))), 1e-12)
            if float(np.max(np.abs(rec - truth))) > rel_tol * scale:
                return False
    return True


# ---------------------------------------------------------------------------
# Audits.
# ---------------------------------------------------------------------------


def audit_causality(kind: str, alpha: float, seed: int = 0) -> bool:
    """Check the delayed-CSIT contract functionally: the slot-t input map may
    depend only on channel rows from slots before t.

    For every t, rows at slots >= t are replaced by fresh draws and the
    scheme is rebuilt; the maps for slots 0..t must be unchanged.
    """
    base_real = _draw_for(kind, alpha, seed=seed)
    base = _dispatch(kind, alpha, base_real)
    n = base_real.n
    for t in range(n):
        alt = _draw_for(kind, alpha, seed=seed + 7919)
        h = base_real.h.copy()
        g = base_real.g.copy()
        h[t:] = alt.h[t:]
        g[t:] = alt.g[t:]
        mutated = ChannelRealization(
            n=n, h=h, g=g, states=base_real.states, rho=base_real.rho, mode=base_real.mode
        )
        rebuilt = _dispatch(kind, alpha, mutated)
        for s in range(t + 1):
            b, r = base.slot_maps[s], rebuilt.slot_maps[s]
            if set(b) != set(r):
                return False
            for name in b:
                if not np.allclose(b[name], r[name], atol=1e-12):
                    return False
    return True


# ---------------------------------------------------------------------------
# Registry.
# ---------------------------------------------------------------------------

SCHEME_KINDS = (
    "wiretap-gaussian",
    "wiretap-gaussian-a1",
    "yang",
    "bc-fixed",
    "sym-alt",
    "wiretap-lattice",
    "int-sym-alt",
    "gdof",
    "wiretap-nonoise",
)

# Schemes whose confidential symbols must not leak to the unintended receiver.
SECURE_SCHEMES = (
    "wiretap-gaussian",
    "wiretap-gaussian-a1",
    "yang",
    "bc-fixed",
    "sym-alt",
    "wiretap-lattice",
    "int-sym-alt",
)


def scheme_requirements(kind: str, alpha: float) -> tuple[int, tuple, str]:
    """(slot count, states, channel mode) needed to build the scheme."""
    sym_states = (STATE_1A, STATE_1A, STATE_A1, STATE_A1)
    if kind == "wiretap-gaussian":
        return 3, (STATE_1A,) * 3, "complex"
    if kind == "wiretap-nonoise":
        return 1, (STATE_1A,), "complex"
    if kind == "wiretap-gaussian-a1":
        return 3, (STATE_A1,) * 3, "complex"
    if kind == "yang":
        return 4, (STATE_1A,) * 4, "complex"
    if kind == "bc-fixed":
        t1 = smallest_t1(alpha)
        n = 3 * t1 + int(round(alpha * t1))
        return n, (STATE_1A,) * n, "complex"
    if kind == "sym-alt":
        return 4, sym_states, "complex"
    if kind == "wiretap-lattice":
        return 3, (STATE_1A,) * 3, "integer"
    if kind == "int-sym-alt":
        return 4, sym_states, "integer"
    if kind == "gdof":
        return 3, (STATE_1A,) * 3, "integer"
    raise ValueError(f"unknown scheme kind {kind!r}")


def _draw_for(kind: str, alpha: float, seed) -> ChannelRealization:
    n, states, mode = scheme_requirements(kind, alpha)
    if isinstance(seed, np.random.SeedSequence):
        seed = int(seed.generate_state(1)[0])
    return draw_channels(n, states, rho=1e8, seed=seed, mode=mode)


def _dispatch(kind: str, alpha: float, realization: ChannelRealization) -> LinearScheme:
    if kind == "wiretap-gaussian":
        return build_wiretap_gaussian(realization, alpha)
    if kind == "wiretap-nonoise":
        return build_no_noise_canary(realization, alpha)
    if kind == "wiretap-gaussian-a1":
        return build_wiretap_gaussian(realization, alpha, state=STATE_A1)
    if kind == "yang":
        return build_yang_baseline(realization, alpha)
    if kind == "bc-fixed":
        return build_bc_fixed(smallest_t1(alpha), realization, alpha)
    if kind == "sym-alt":
        return build_sym_alt(realization, alpha)
    if kind == "gdof":
        return build_gdof_no_secrecy(realization, alpha)
    if kind == "wiretap-lattice":
        from .lattice import build_wiretap_lattice

        return build_wiretap_lattice(realization, alpha)
    if kind == "int-sym-alt":
        from .lattice import build_int_sym_alt

        return build_int_sym_alt(realization, alpha)
    raise ValueError(f"unknown scheme kind {kind!r}")


def build_scheme(kind: str, alpha: float, seed) -> LinearScheme:
    """Draw a fresh realization matching the scheme's needs and build it."""
    return _dispatch(kind, alpha, _draw_for(kind, alpha, seed))
