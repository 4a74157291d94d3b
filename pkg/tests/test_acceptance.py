"""Acceptance gate: one test per headline criterion, each printing a verdict.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  Two criteria are knowingly red against the literal formula set and
carry the measured values in their failure messages; docs/DISCREPANCIES.md
holds the full analysis:

* C2a - the quoted low-loss window is wider than the formulas deliver (the
  loss bound is exceeded by ~10% in the last ~3% sliver of the window);
* C2c - the quoted probe confinement Re(k1) ~ 1/um is not reproducible from
  the interface dispersion at the operating point (Re(k1) ~ 31/m there).
"""

import math
import warnings

import mpmath as mp
import numpy as np
import pytest

from polariton_lab.cli import EXIT_OK, main
from polariton_lab.csvio import read_csv
from polariton_lab.dispersion import (
    AbyssNotFoundError,
    Polarization,
    find_abyss,
    group_velocity,
    sp_wavevector,
    swap_eps_mu,
)
from polariton_lab.eit import (
    LambdaMediumParams,
    alpha_closed,
    alpha_quadrature,
    alpha_resonant,
    hyp2f1_special,
)
from polariton_lab.materials import (
    OMEGA_E_SILVER,
    DrudeParams,
    HalfSpaceMaterial,
    dielectric,
    nimm,
    silver,
)
from polariton_lab.propagation import (
    PropagationScenario,
    delay_vs_control,
    propagate_pulse,
)
from polariton_lab.quantization import DIPOLE_EA0, coupling_constant, mode_normalization

WE = OMEGA_E_SILVER
C = 299792458.0
KAPPA0 = 1e4
GAMMA31 = 1e9
DT = 100e-9


def report(cid: str, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {cid}: {'PASS' if ok else 'FAIL'} — {detail}")


@pytest.fixture(scope="module")
def abyss():
    return find_abyss(dielectric(), nimm(), (0.3 * WE, 0.5 * WE))


@pytest.fixture(scope="module")
def operating_v0():
    return group_velocity(dielectric(), nimm(), 0.4092 * WE)


def reference_scenario(x: float, omega_rabi: float = GAMMA31, **kw) -> PropagationScenario:
    return PropagationScenario(
        delta_t=DT,
        x=x,
        v0=0.6269886348893801 * C,
        kappa31=100.0,
        alpha0=1e7,
        eit=LambdaMediumParams(Omega=omega_rabi),
        **kw,
    )


# ---------------------------------------------------------------- quantitative

def test_c01_abyss_frequency(abyss):
    edge_lo = abs(sp_wavevector(dielectric(), nimm(), 0.3 * WE).kappa)
    edge_hi = abs(sp_wavevector(dielectric(), nimm(), 0.5 * WE).kappa)
    deep = abs(abyss.kappa_at_omega0) < 0.01 * min(edge_lo, edge_hi)
    ok = abs(abyss.omega0 / WE - 0.4092) < 5e-4 and deep
    report(
        "C1 abyss frequency",
        ok,
        f"omega0/we = {abyss.omega0 / WE:.6f}, |kappa(omega0)| = "
        f"{abs(abyss.kappa_at_omega0):.3e} 1/m vs band edges "
        f"{edge_lo:.3e}/{edge_hi:.3e}",
    )
    assert abs(abyss.omega0 / WE - 0.4092) < 5e-4
    assert deep


def test_c02a_low_loss_window():
    grid = np.linspace(0.4087, 0.4097, 103)[1:-1]
    kappas = np.array(
        [abs(sp_wavevector(dielectric(), nimm(), x * WE).kappa) for x in grid]
    )
    worst = float(kappas.max())
    below = grid[kappas < 0.01 * KAPPA0]
    ok = worst < 0.01 * KAPPA0
    report(
        "C2a low-loss window",
        ok,
        f"max |kappa| over (0.4087, 0.4097) = {worst:.1f} 1/m vs bound 100; "
        f"|kappa| < 0.01*kappa0 holds on ({below.min():.5f}, {below.max():.5f})",
    )
    assert ok, (
        f"max |kappa| = {worst:.1f} 1/m exceeds 0.01*kappa0 = 100 1/m near the "
        "upper edge of the quoted window; see docs/DISCREPANCIES.md (the "
        f"formula-accurate low-loss window is ({below.min():.5f}, {below.max():.5f}))"
    )


def test_c02b_group_velocity_window():
    # group velocity is defined on the bound side of the cancellation point
    grid = np.linspace(0.40917, 0.4097, 9)
    v0s = np.array([group_velocity(dielectric(), nimm(), x * WE) for x in grid])
    ok = bool(np.all(np.abs(v0s - 0.6 * C) < 0.1 * 0.6 * C))
    report(
        "C2b group velocity",
        ok,
        f"v0/c in [{v0s.min() / C:.4f}, {v0s.max() / C:.4f}] vs 0.6 +/- 10%",
    )
    assert ok


def test_c02c_transverse_confinement():
    dp = sp_wavevector(dielectric(), nimm(), 0.4092 * WE)
    re_k1 = dp.k1.real
    ok = abs(re_k1 - 1e6) < 0.2e6
    report(
        "C2c transverse confinement",
        ok,
        f"Re k1 = {re_k1:.3e} 1/m (|k1| = {abs(dp.k1):.3e}) vs quoted 1e6 +/- 20%",
    )
    assert ok, (
        f"Re k1 = {re_k1:.3e} 1/m at the operating point, far from the quoted "
        f"1e6 1/m (the mode is only marginally confined there, |k1| = "
        f"{abs(dp.k1):.3e} 1/m); see docs/DISCREPANCIES.md"
    )


def test_c03_metal_contrast(abyss):
    ratios = []
    for x in np.linspace(0.4087, 0.4097, 11):
        nim = abs(sp_wavevector(dielectric(), nimm(), x * WE).kappa)
        met = abs(sp_wavevector(dielectric(), silver(), x * WE).kappa)
        ratios.append(met / max(nim, 1e-300))
    contrast_ok = min(ratios) >= 1e2
    try:
        find_abyss(dielectric(), silver(), (0.3 * WE, 0.5 * WE))
        no_cancellation = False
    except AbyssNotFoundError:
        no_cancellation = True
    ok = contrast_ok and no_cancellation
    report(
        "C3 metal contrast",
        ok,
        f"min metal/NIMM loss ratio = {min(ratios):.1f} (>= 100), "
        f"silver cancellation search: {'no interior minimum' if no_cancellation else 'found'}",
    )
    assert contrast_ok
    assert no_cancellation


def test_c04_resonant_absorption(operating_v0):
    dp = sp_wavevector(dielectric(), nimm(), 0.4092 * WE)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        mn = mode_normalization(dielectric(), nimm(), dp, 2.5e-6)
    cc = coupling_constant(mn, dp, DIPOLE_EA0)
    params = LambdaMediumParams(k1s=abs(dp.k1), k1c=abs(dp.k1))
    alpha0 = alpha_resonant(params, abs(cc.g) ** 2, operating_v0)
    ratio = alpha0 / 1e7
    ok = 1.0 / 3.0 <= ratio <= 3.0
    report(
        "C4 resonant absorption",
        ok,
        f"alpha0 = {alpha0 * 1e-6:.2f} 1/um from E0 = {mn.E0:.1f} V/m, "
        f"|g| = {abs(cc.g):.3e} rad/s, |k1| = {abs(dp.k1):.3e} 1/m "
        f"(x{ratio:.2f} of 10 1/um)",
    )
    assert ok


def test_c05_pulse_metrics():
    _, _, m1 = propagate_pulse(reference_scenario(1e-3))
    _, _, m3 = propagate_pulse(reference_scenario(3e-3))
    ballistic1 = 1e-3 / reference_scenario(1e-3).v0
    ballistic3 = 3e-3 / reference_scenario(3e-3).v0
    eit1 = (m1.delay - ballistic1) / DT
    eit3 = (m3.delay - ballistic3) / DT
    checks = {
        "delay(1mm)/dt": (eit1, abs(eit1 - 2.0) < 0.5),
        "delay(3mm)/dt": (eit3, abs(eit3 - 6.0) < 1.5),
        "amp(1mm)": (m1.amp_ratio, abs(m1.amp_ratio - 0.85) < 0.1),
        "amp(3mm)": (m3.amp_ratio, abs(m3.amp_ratio - 0.65) < 0.1),
        "vg": (m3.vg, 2500.0 <= m3.vg <= 10000.0),
        "l_sp": (m3.l_sp, 2.5e-4 <= m3.l_sp <= 1e-3),
    }
    ok = all(flag for _, flag in checks.values())
    report(
        "C5 pulse metrics",
        ok,
        ", ".join(f"{k}={v:.4g}" for k, (v, _) in checks.items()),
    )
    for name, (value, flag) in checks.items():
        assert flag, f"{name} = {value}"


def test_c06_control_scaling():
    sweep = delay_vs_control(
        reference_scenario(1e-3), [0.5e9, 1e9, 2e9, 4e9]
    )
    ok = sweep.slope is not None and abs(sweep.slope + 2.0) < 0.2
    report("C6 control scaling", ok, f"log-log delay slope = {sweep.slope:.3f} vs -2.0 +/- 0.2")
    assert ok


# --------------------------------------------------------------- property-based

def test_c07_oracle_equivalence():
    rng = np.random.default_rng(77)
    worst = 0.0
    checked = 0
    while checked < 200:
        Gamma31 = 10 ** rng.uniform(8, 10)
        gamma21 = 10 ** rng.uniform(0, 5)
        omega_rabi = Gamma31 * 10 ** rng.uniform(-1, 1)
        k1s = 10 ** rng.uniform(5, 7)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            p = LambdaMediumParams(
                n=10 ** rng.uniform(22, 25),
                z0=10 ** rng.uniform(-8, -5),
                gamma21=gamma21,
                Gamma31=Gamma31,
                Omega=omega_rabi,
                k1s=k1s,
                k1c=k1s * 10 ** rng.uniform(-0.7, 0.7),
                Ly=10 ** rng.uniform(-6, -5),
            )
        nu = rng.uniform(-5, 5) * Gamma31
        alpha0 = 1e7
        gsq_v0 = alpha0 * p.k1s * p.Gamma31 / (math.pi * p.n * p.Ly)
        ref = alpha_quadrature(p, gsq_v0, nu)
        if abs(ref) < 1e-30:
            continue
        rel = abs(alpha_closed(p, alpha0, nu).alpha - ref) / abs(ref)
        worst = max(worst, rel)
        checked += 1
    ok = worst < 1e-6
    report("C7 oracle equivalence", ok, f"worst relative deviation over 200 draws = {worst:.2e}")
    assert ok


def test_c08_resonant_formula_consistency():
    p = LambdaMediumParams(Omega=0.0, z0=25 / 1e6)  # k1s*z0 = 25 > 20
    gsq_v0 = 1e7 * p.k1s * p.Gamma31 / (math.pi * p.n * p.Ly)
    quad_value = alpha_quadrature(p, gsq_v0, 0.0)
    closed_value = alpha_resonant(p, gsq_v0, 1.0)
    rel = abs(quad_value - closed_value) / closed_value
    ok = rel < 1e-8
    report("C8 resonant consistency", ok, f"quadrature vs closed form: rel = {rel:.2e}")
    assert ok


def test_c09_duality_and_boundary_condition():
    m1, m2 = dielectric(), nimm()
    d1, d2 = swap_eps_mu(m1), swap_eps_mu(m2)
    worst_dual = 0.0
    worst_res = 0.0
    n_bound = 0
    for x in np.linspace(0.31, 0.49, 31):
        te = sp_wavevector(m1, m2, x * WE, Polarization.TE)
        tm = sp_wavevector(d1, d2, x * WE, Polarization.TM)
        worst_dual = max(
            worst_dual, abs(te.k_parallel - tm.k_parallel) / abs(tm.k_parallel)
        )
        for dp in (te, sp_wavevector(m1, m2, x * WE, Polarization.TM)):
            if dp.bound:
                n_bound += 1
                worst_res = max(worst_res, dp.bc_residual)
    for x in np.linspace(0.1, 0.6, 21):
        dp = sp_wavevector(m1, silver(), x * WE)
        if dp.bound:
            n_bound += 1
            worst_res = max(worst_res, dp.bc_residual)
    ok = worst_dual <= 1e-12 and worst_res < 1e-8 and n_bound > 30
    report(
        "C9 duality + matching",
        ok,
        f"duality deviation {worst_dual:.2e}, worst matching residual "
        f"{worst_res:.2e} over {n_bound} bound points",
    )
    assert ok


def test_c10_lossless_limit():
    m1 = dielectric()
    nim0 = HalfSpaceMaterial(DrudeParams(WE, 0.0), DrudeParams(0.5 * WE, 0.0))
    ag0 = HalfSpaceMaterial(DrudeParams(WE, 0.0), 1.0)
    worst = 0.0
    n_bound = 0
    for m2, grid in ((nim0, np.linspace(0.441, 0.499, 20)), (ag0, np.linspace(0.05, 0.65, 20))):
        for x in grid:
            dp = sp_wavevector(m1, m2, x * WE)
            if dp.bound:
                n_bound += 1
                worst = max(worst, abs(dp.kappa) / dp.k_par)
    ok = worst < 1e-12 and n_bound > 30
    report("C10 lossless limit", ok, f"max |kappa|/k_par = {worst:.2e} over {n_bound} bound points")
    assert ok


def test_c11_propagation_sanity():
    s = reference_scenario(1e-3)
    s0 = PropagationScenario(
        delta_t=DT, x=1e-3, v0=s.v0, kappa31=100.0, alpha0=1e7,
        eit=LambdaMediumParams(n=0.0),
    )
    t, env, m = propagate_pulse(s0)
    grid_step = t[1] - t[0]
    shift_ok = abs(m.delay - s0.x / s0.v0) < grid_step
    amp_ok = abs(m.amp_ratio - math.exp(-0.1)) < 1e-6

    dt_grid = t[1] - t[0]
    energy_out = float((np.abs(env) ** 2).sum() * dt_grid)
    energy_in = DT * math.sqrt(math.pi)
    parseval_ok = energy_out <= energy_in * (1 + 1e-12)

    m_a = propagate_pulse(reference_scenario(1e-3, n_nu=4096))[2]
    m_b = propagate_pulse(reference_scenario(1e-3, n_nu=8192))[2]
    stab = max(
        abs(m_a.delay - m_b.delay) / m_b.delay,
        abs(m_a.amp_ratio - m_b.amp_ratio) / m_b.amp_ratio,
    )
    grid_ok = stab < 1e-4
    ok = shift_ok and amp_ok and parseval_ok and grid_ok
    report(
        "C11 propagation sanity",
        ok,
        f"shift error {abs(m.delay - s0.x / s0.v0):.2e} s, amp err "
        f"{abs(m.amp_ratio - math.exp(-0.1)):.2e}, energy out/in = "
        f"{energy_out / energy_in:.12f}, grid-doubling drift {stab:.2e}",
    )
    assert ok


def test_c12_hypergeometric_kernel():
    mp.mp.dps = 40
    rng = np.random.default_rng(4242)
    worst = 0.0
    checked = 0
    while checked < 500:
        b = complex(rng.uniform(0.3, 4.0), rng.uniform(-2.0, 2.0))
        z = complex(rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0))
        if abs(z.imag) < 0.05 and z.real > 0.9:
            continue
        ref = complex(mp.hyp2f1(1, mp.mpmathify(b), mp.mpmathify(b) + 1, mp.mpmathify(z)))
        rel = abs(hyp2f1_special(b, z) - ref) / max(abs(ref), 1e-30)
        worst = max(worst, rel)
        checked += 1
    series_ok = worst < 1e-10

    worst_log = 0.0
    for _ in range(100):
        r = rng.uniform(0.05, 4.0)
        th = rng.uniform(0.05, 2 * math.pi - 0.05)
        z = r * complex(math.cos(th), math.sin(th))
        ref = -np.log(1 - z) / z
        worst_log = max(worst_log, abs(hyp2f1_special(1.0, z) - ref) / abs(ref))
    log_ok = worst_log <= 1e-12
    ok = series_ok and log_ok
    report(
        "C12 hypergeometric kernel",
        ok,
        f"500-draw worst rel = {worst:.2e} (<=1e-10), b=1 closed-form worst "
        f"rel = {worst_log:.2e} (<=1e-12)",
    )
    assert ok


def test_c13_determinism(tmp_path):
    cfg = tmp_path / "det.ini"
    cfg.write_text(
        "[band]\nn_points = 24\n\n[pulse]\nn_nu = 1024\nx = 1e-3\nomega = 1e9, 2e9\n"
    )
    digests = []
    for jobs in (1, 3):
        out = tmp_path / f"jobs{jobs}"
        assert main(["dispersion", "--config", str(cfg), "--out", str(out),
                     "--jobs", str(jobs)]) == EXIT_OK
        assert main(["propagate", "--config", str(cfg), "--out", str(out),
                     "--jobs", str(jobs)]) == EXIT_OK
        digests.append(
            tuple(
                (name, (out / name).read_bytes())
                for name in ("dispersion.csv", "metrics.csv", "slope.csv",
                             "pulse_x0_om0.csv", "pulse_x0_om1.csv")
            )
        )
    ok = digests[0] == digests[1]
    report("C13 determinism", ok, "byte-identical CSV output at --jobs 1 and --jobs 3")
    assert ok
