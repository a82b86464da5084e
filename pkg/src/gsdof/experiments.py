"""SNR sweeps, slope fitting, cross-validation suite, and figure-data emission.

All results are deterministic functions of the configuration seed: trials
use spawned seed sequences and reductions happen in trial order, so repeated
runs produce byte-identical CSV artifacts regardless of the thread count
(capped by the GSDOF_THREADS environment variable).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import regions
from .gaussian_mi import SLOPE_TOL, EntropyLedger, fit_slope, lemma1_margins
from .schemes import (
    SCHEME_KINDS,
    SECURE_SCHEMES,
    build_scheme,
    leakage_bits,
    noiseless_decode_check,
    reliability_bits,
    scheme_block_length,
)
from .topology import TopologyProfile

__all__ = [
    "SweepConfig",
    "RateReport",
    "CheckResult",
    "run_sweep",
    "verify_all",
    "figure_data",
    "rho_from_db",
    "LEDGER_TOL",
    "LEAK_CANARY_MIN",
]

LEDGER_TOL = 0.03  # slope tolerance for scheme-rate checks
LEAK_CANARY_MIN = 0.5

_FMT = ".12g"


def _f(x) -> str:
    return format(float(x), _FMT)


def _pmap(fn, items):
    workers = int(os.environ.get("GSDOF_THREADS", "1") or "1")
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def rho_from_db(db) -> np.ndarray:
    return 10.0 ** (np.asarray(db, dtype=float) / 10.0)


@dataclass(frozen=True)
class SweepConfig:
    scheme: str
    alpha: float
    rho_db: tuple
    trials: int = 100
    seed: int = 0
    out: str | None = None

    def __post_init__(self) -> None:
        if self.scheme not in SCHEME_KINDS:
            raise ValueError(f"unknown scheme {self.scheme!r}")
        grid = tuple(float(x) for x in self.rho_db)
        object.__setattr__(self, "rho_db", grid)
        if len(grid) < 4 or any(b <= a for a, b in zip(grid, grid[1:])):
            raise ValueError("rho grid must be strictly increasing with >= 4 points")
        if self.trials < 10:
            raise ValueError("need at least 10 trials")


@dataclass
class RateReport:
    """Per-SNR mutual-information ledger with fitted DoF and leakage slopes.

    Slopes are per slot and fitted on the top half of the SNR grid; the
    subrange used is recorded in ``fit_rho_db``.
    """

    scheme: str
    alpha: float
    n_slots: int
    rho_db: tuple
    fit_rho_db: tuple
    group_owner: dict
    mean_mi: dict = field(default_factory=dict)  # (rho_db, group) -> bits
    mean_leak: dict = field(default_factory=dict)
    slopes: dict = field(default_factory=dict)  # group -> (slope, stderr)
    leak_slopes: dict = field(default_factory=dict)
    d1: float = 0.0
    d2: float = 0.0
    csv_text: str = ""

    def entropy_ledger(self) -> EntropyLedger:
        """Mean per-group mutual informations as a serializable ledger."""
        ledger = EntropyLedger()
        for (db, group), bits in sorted(self.mean_mi.items()):
            ledger.add(f"I({group})", float(rho_from_db(db)), bits)
        for (db, group), bits in sorted(self.mean_leak.items()):
            ledger.add(f"leak({group})", float(rho_from_db(db)), bits)
        return ledger


def run_sweep(config: SweepConfig) -> RateReport:
    """Average scheme reliability and leakage over fresh realizations, then
    fit per-slot slopes against log2 rho."""
    rho_lin = rho_from_db(config.rho_db)
    seeds = np.random.SeedSequence(config.seed).spawn(config.trials)

    def one_trial(args):
        idx, seq = args
        try:
            scheme = build_scheme(config.scheme, config.alpha, seq)
            per_rho = []
            for rho in rho_lin:
                rel = reliability_bits(scheme, float(rho))
                leak = {}
                for owner in (1, 2):
                    if scheme.decode_order.get(owner):
                        leak.update(leakage_bits(scheme, float(rho), owner))
                per_rho.append((rel, leak))
            owners = {g.name: g.owner for g in scheme.groups}
            return per_rho, scheme_block_length(scheme), owners
        except Exception as exc:  # attach the trial index for reproducibility
            raise RuntimeError(f"trial {idx} failed: {exc}") from exc

    results = _pmap(one_trial, list(enumerate(seeds)))
    n_slots = results[0][1]
    owners = results[0][2]
    group_names = list(results[0][0][0][0].keys())

    k = max(2, math.ceil(len(config.rho_db) / 2))
    report = RateReport(
        scheme=config.scheme,
        alpha=config.alpha,
        n_slots=n_slots,
        rho_db=config.rho_db,
        fit_rho_db=config.rho_db[-k:],
        group_owner={g: owners[g] for g in group_names},
    )

    lines = ["scheme,alpha,rho_db,trial,symbol_group,mi_bits,leak_bits"]
    sums_mi = {(db, g): 0.0 for db in config.rho_db for g in group_names}
    sums_leak = dict(sums_mi)
    for trial, (per_rho, _, _) in enumerate(results):
        for db, (rel, leak) in zip(config.rho_db, per_rho):
            for g in group_names:
                sums_mi[(db, g)] += rel[g]
                sums_leak[(db, g)] += leak.get(g, 0.0)
                lines.append(
                    f"{config.scheme},{_f(config.alpha)},{_f(db)},{trial},{g},"
                    f"{_f(rel[g])},{_f(leak.get(g, 0.0))}"
                )
    for key, total in sums_mi.items():
        report.mean_mi[key] = total / config.trials
    for key, total in sums_leak.items():
        report.mean_leak[key] = total / config.trials

    x = np.log2(rho_lin)
    for g in group_names:
        y_mi = [report.mean_mi[(db, g)] / n_slots for db in config.rho_db]
        report.slopes[g] = fit_slope(x, y_mi)
        y_leak = [report.mean_leak[(db, g)] / n_slots for db in config.rho_db]
        report.leak_slopes[g] = fit_slope(x, y_leak)[0]
    report.d1 = sum(s for g, (s, _) in report.slopes.items() if owners[g] == "rx1")
    report.d2 = sum(s for g, (s, _) in report.slopes.items() if owners[g] == "rx2")
    report.csv_text = "\n".join(lines) + "\n"
    if config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            fh.write(report.csv_text)
    return report


# ---------------------------------------------------------------------------
# Cross-validation suite.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    margin: float
    detail: str = ""


# Target per-slot (d1, d2) slopes per scheme as functions of alpha.
SCHEME_TARGETS = {
    "wiretap-gaussian": lambda a: (2.0 / 3.0, 0.0),
    "wiretap-gaussian-a1": lambda a: (2.0 * a / 3.0, 0.0),
    "yang": lambda a: (0.5, a / 2.0),
    "bc-fixed": lambda a: (2.0 / (3.0 + a), a * (1.0 + a) / (3.0 + a)),
    "sym-alt": lambda a: ((1.0 + a) / 4.0, 0.5),
    "wiretap-lattice": lambda a: (1.0 - a / 3.0, 0.0),
    "int-sym-alt": lambda a: (0.5, 0.5),
    "gdof": lambda a: (1.0 - a / 3.0, 2.0 * a / 3.0),
}

_LEMMA1_PROFILES = ("11", "1a", "a1", "aa", "sym")


def _profile(label: str, alpha: float) -> TopologyProfile:
    if label == "sym":
        return TopologyProfile.symmetric_alternating(alpha)
    return TopologyProfile.fixed(label, alpha)


def _region_checks(alpha_grid) -> list[CheckResult]:
    out = []
    for a in alpha_grid:
        outer_1a = regions.bc_outer(TopologyProfile.fixed("1a", a))
        outer_sym = regions.bc_outer(TopologyProfile.symmetric_alternating(a))
        pairs = [
            ("prop2-in-outer", regions.prop2_inner(a), outer_1a),
            ("yang-in-outer", regions.yang_inner(a), outer_1a),
            ("sym-alt-in-outer", regions.sym_alt_inner(a), outer_sym),
            ("int-sym-alt-in-outer", regions.integer_sym_alt_inner(a), outer_sym),
            ("prop2-in-gdof", regions.prop2_inner(a), regions.gdof_fixed(a)),
        ]
        for name, inner, outer in pairs:
            ok = regions.is_subset(inner, outer)
            out.append(CheckResult(f"region/{name}/alpha={a:g}", ok, 0.0))
        sum_gap = regions.sum_max(regions.prop2_inner(a)) - regions.yang_corner_sum(a)
        want_strict = a < 1.0 - 1e-12
        ok = sum_gap > 1e-12 if want_strict else abs(sum_gap) <= 1e-9
        out.append(CheckResult(f"region/sum-gain/alpha={a:g}", ok, float(sum_gap)))
        int_sum = regions.sum_max(regions.integer_sym_alt_inner(a))
        outer_sum = regions.sum_max(outer_sym)
        ok = abs(int_sum - 1.0) <= 1e-9 and abs(outer_sum - 1.0) <= 1e-9
        out.append(
            CheckResult(
                f"region/int-sum-meets-outer/alpha={a:g}", ok, float(int_sum - outer_sum)
            )
        )
        wt = regions.wiretap_upper(TopologyProfile.fixed("1a", a))
        gap = float(wt - (1.0 - a / 3.0))
        gap2 = float(wt - regions.axis_max(outer_1a, 0))
        ok = abs(gap) <= 1e-9 and abs(gap2) <= 1e-9
        out.append(CheckResult(f"region/wiretap-upper/alpha={a:g}", ok, max(abs(gap), abs(gap2))))
    return out


def _lemma1_checks(alphas, rho_db, seed) -> list[CheckResult]:
    out = []
    rho = rho_from_db(rho_db)
    for label in _LEMMA1_PROFILES:
        for a in alphas:
            prof = _profile(label, a)
            for ineq in ("4a", "4b", "4c", "4d"):
                lhs, rhs = lemma1_margins(prof, a, ineq, rho, seed)
                margin = rhs - lhs
                out.append(
                    CheckResult(
                        f"lemma1/{ineq}/{label}/alpha={a:g}",
                        margin >= -SLOPE_TOL,
                        float(margin),
                    )
                )
    return out


def _scheme_checks(alphas, rho_db, trials, seed) -> list[CheckResult]:
    out = []
    for kind in SCHEME_TARGETS:
        for a in alphas:
            cfg = SweepConfig(kind, a, tuple(rho_db), trials=trials, seed=seed)
            rep = run_sweep(cfg)
            d1_t, d2_t = SCHEME_TARGETS[kind](a)
            gap = max(abs(rep.d1 - d1_t), abs(rep.d2 - d2_t))
            out.append(
                CheckResult(
                    f"slopes/{kind}/alpha={a:g}",
                    gap <= LEDGER_TOL,
                    float(gap),
                    detail=f"d=({rep.d1:.4f},{rep.d2:.4f}) target=({d1_t:.4f},{d2_t:.4f})",
                )
            )
            # Per-group agreement between the claimed ledger and fitted MI.
            scheme = build_scheme(kind, a, np.random.SeedSequence(seed))
            ledger_gap = 0.0
            for g, claim in scheme.ledger.items():
                ledger_gap = max(
                    ledger_gap, abs(rep.slopes[g][0] - claim / rep.n_slots)
                )
            out.append(
                CheckResult(
                    f"ledger-mi/{kind}/alpha={a:g}", ledger_gap <= LEDGER_TOL, float(ledger_gap)
                )
            )
            if kind in SECURE_SCHEMES:
                worst = max(rep.leak_slopes.values())
                out.append(
                    CheckResult(
                        f"leakage/{kind}/alpha={a:g}", worst <= SLOPE_TOL, float(worst)
                    )
                )
    return out


def _canary_check(rho_db, trials, seed) -> CheckResult:
    cfg = SweepConfig("wiretap-nonoise", 0.75, tuple(rho_db), trials=trials, seed=seed)
    rep = run_sweep(cfg)
    slope = max(rep.leak_slopes.values())
    return CheckResult("leakage/canary-no-noise", slope > LEAK_CANARY_MIN, float(slope))


def _decode_checks(alphas, trials, seed) -> list[CheckResult]:
    out = []
    for kind in SCHEME_TARGETS:
        a = 0.5 if 0.5 in alphas else alphas[0]
        failures = 0
        for i in range(trials):
            scheme = build_scheme(kind, a, np.random.SeedSequence((seed, i)))
            if not noiseless_decode_check(scheme, seed=i):
                failures += 1
        out.append(
            CheckResult(
                f"decode/{kind}/alpha={a:g}",
                failures == 0,
                float(failures),
                detail=f"{trials - failures}/{trials} decoded",
            )
        )
    return out


def _figure8_check() -> CheckResult:
    rows = {name: float(val) for name, _, val in _figure8_rows([0.0])}
    ok = (
        abs(rows["yang"] - 0.5) <= 1e-9
        and abs(rows["fixed-inner"] - 2.0 / 3.0) <= 1e-9
        and abs(rows["sym-alt"] - 0.75) <= 1e-9
    )
    rows1 = {name: float(val) for name, _, val in _figure8_rows([1.0])}
    secure = ("yang", "fixed-inner", "sym-alt", "int-sym-alt")
    ok = ok and all(abs(rows1[name] - 1.0) <= 1e-9 for name in secure)
    ok = ok and abs(rows1["gdof"] - 4.0 / 3.0) <= 1e-9
    return CheckResult("figure8/endpoints", ok, 0.0)


def verify_all(
    alpha_grid,
    seed: int = 0,
    trials: int = 20,
    rho_db=(60, 70, 80, 90, 100, 110, 120),
    scheme_alphas=(0.25, 0.5, 0.75),
) -> list[CheckResult]:
    """Run the full cross-validation suite; every entry must pass.

    ``alpha_grid`` drives region checks; scheme slope, leakage and decode
    checks run at ``scheme_alphas``.
    """
    checks = []
    checks += _region_checks(alpha_grid)
    checks += _lemma1_checks(scheme_alphas, rho_db, seed)
    checks += _scheme_checks(scheme_alphas, rho_db, trials, seed)
    checks.append(_canary_check(rho_db, trials, seed))
    checks += _decode_checks(scheme_alphas, trials, seed)
    checks.append(_figure8_check())
    return checks


def checks_to_csv(checks) -> str:
    lines = ["check,passed,margin,detail"]
    for c in checks:
        lines.append(f"{c.name},{int(c.passed)},{_f(c.margin)},{c.detail}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Figure data.
# ---------------------------------------------------------------------------

REGION_BUILDERS = {
    "yang": regions.yang_inner,
    "prop2": regions.prop2_inner,
    "sym-alt": regions.sym_alt_inner,
    "int-sym-alt": regions.integer_sym_alt_inner,
    "gdof": regions.gdof_fixed,
}


def named_region(name: str, alpha: float, profile: TopologyProfile | None = None):
    if name == "outer":
        if profile is None:
            profile = TopologyProfile.fixed("1a", alpha)
        return regions.bc_outer(profile)
    if name in REGION_BUILDERS:
        return REGION_BUILDERS[name](alpha)
    raise ValueError(f"unknown bound name {name!r}")


def region_csv(names, alpha: float, profile: TopologyProfile | None = None) -> tuple[str, str]:
    """(vertex CSV, summary CSV) for the named bounds at one alpha."""
    vrows = ["bound_name,alpha,vertex_index,d1,d2"]
    srows = ["bound_name,alpha,sum_max,d1_axis_max,d2_axis_max"]
    for name in names:
        reg = named_region(name, alpha, profile)
        for i, (d1, d2) in enumerate(regions.vertices(reg)):
            vrows.append(f"{name},{_f(alpha)},{i},{_f(d1)},{_f(d2)}")
        srows.append(
            f"{name},{_f(alpha)},{_f(regions.sum_max(reg))},"
            f"{_f(regions.axis_max(reg, 0))},{_f(regions.axis_max(reg, 1))}"
        )
    return "\n".join(vrows) + "\n", "\n".join(srows) + "\n"


_FIGURES = {
    3: ("outer", "yang", "prop2"),
    4: ("outer-sym", "sym-alt"),
    6: ("outer-sym", "int-sym-alt"),
    7: ("gdof", "prop2"),
}


def _figure8_rows(alpha_grid):
    rows = []
    for a in alpha_grid:
        rows.append(("yang", a, regions.yang_corner_sum(a)))
        rows.append(("fixed-inner", a, regions.sum_max(regions.prop2_inner(a))))
        rows.append(("sym-alt", a, regions.sum_max(regions.sym_alt_inner(a))))
        rows.append(
            ("int-sym-alt", a, regions.sum_max(regions.integer_sym_alt_inner(a)))
        )
        rows.append(("gdof", a, regions.sum_max(regions.gdof_fixed(a))))
    return rows


def figure_data(figure_id: int, alpha: float | None = None, alpha_grid=None) -> str:
    """CSV behind one of the region/sum-DoF figures.

    Figures 3, 4, 6 and 7 need a single ``alpha`` and emit vertex lists;
    figure 8 sweeps ``alpha_grid`` and emits sum-DoF curves.
    """
    if figure_id == 8:
        if alpha_grid is None:
            alpha_grid = [round(0.05 * k, 10) for k in range(21)]
        lines = ["curve,alpha,sum_dof"]
        for name, a, val in _figure8_rows(alpha_grid):
            lines.append(f"{name},{_f(a)},{_f(val)}")
        return "\n".join(lines) + "\n"
    if figure_id not in _FIGURES:
        raise ValueError(f"unknown figure id {figure_id}; choose from 3, 4, 6, 7, 8")
    if alpha is None:
        raise ValueError("figures 3, 4, 6 and 7 need an alpha")
    vrows = ["bound_name,alpha,vertex_index,d1,d2"]
    for name in _FIGURES[figure_id]:
        if name == "outer-sym":
            reg = regions.bc_outer(TopologyProfile.symmetric_alternating(alpha))
            label = "outer"
        elif name == "outer":
            reg = regions.bc_outer(TopologyProfile.fixed("1a", alpha))
            label = "outer"
        else:
            reg = REGION_BUILDERS[name](alpha)
            label = name
        for i, (d1, d2) in enumerate(regions.vertices(reg)):
            vrows.append(f"{label},{_f(alpha)},{i},{_f(d1)},{_f(d2)}")
    return "\n".join(vrows) + "\n"
