"""Complex surface-polariton dispersion at a planar two-media interface.

The guided wave vector along the interface is

    k_par + i*kappa = (w/c) * sqrt(a1*a2*(a2*b1 - a1*b2) / (a2**2 - a1**2))

with (a, b) = (eps, mu) for TM polarization and (mu, eps) for TE; the square
root branch is fixed so the propagation constant has a non-negative real
part.  The transverse constants k1, k2 follow from

    kj**2 = k**2 - (w/c)**2 * eps_j * mu_j

with the decaying branch Re(kj) >= 0.  A point is *bound* when the field
decays on both sides strictly and the unsquared matching condition
k1*s2 + k2*s1 = 0 holds (s = eps for TM, mu for TE): squaring the matching
condition introduces spurious roots with the wrong decay signature, and the
residual check rejects them.

Sign note: kappa is reported as computed from the chosen branch.  At a
dielectric/negative-index interface the TM mode changes the sign of kappa
through the loss-cancellation frequency (and the TE mode carries kappa < 0
over most of its band); these are backward-wave regions where energy flows
against the phase, so the attenuation along the energy flow is |kappa|.
Loss-minimum searches therefore operate on |kappa|.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy import constants as sc
from scipy.optimize import minimize_scalar

from .errors import AbyssNotFoundError, NumericError
from .materials import HalfSpaceMaterial, eval_material

C = sc.c

_BC_RESIDUAL_TOL = 1e-8
_DEGENERATE_TOL = 1e-12


class Polarization(Enum):
    TM = "TM"
    TE = "TE"


@dataclass(frozen=True)
class DispersionPoint:
    """One frequency point of the complex interface dispersion."""

    omega: float
    k_par: float
    kappa: float
    k1: complex
    k2: complex
    polarization: Polarization
    bound: bool
    bc_residual: float

    @property
    def k_parallel(self) -> complex:
        return complex(self.k_par, self.kappa)


@dataclass(frozen=True)
class AbyssResult:
    """Location and depth of the loss minimum plus the cancellation residual."""

    omega0: float
    kappa_at_omega0: float
    residual: float

    @property
    def is_cancellation(self) -> bool:
        return self.residual <= 0.05


def _principal_sqrt(z: complex) -> complex:
    """Square root with Re >= 0; on the Re = 0 ray pick Im >= 0."""
    s = cmath.sqrt(z)
    if s.real < 0 or (s.real == 0 and s.imag < 0):
        s = -s
    return s


def sp_wavevector(
    m1: HalfSpaceMaterial,
    m2: HalfSpaceMaterial,
    omega: float,
    pol: Polarization = Polarization.TM,
) -> DispersionPoint:
    """Solve the interface dispersion at one frequency.

    Returns a :class:`DispersionPoint`; an unbound solution is returned with
    ``bound=False`` rather than raising.  A degenerate denominator
    (a2**2 == a1**2 for the active polarization) raises :class:`NumericError`.
    """
    r1 = eval_material(m1, omega)
    r2 = eval_material(m2, omega)
    if pol is Polarization.TM:
        a1, a2, b1, b2 = r1.epsilon, r2.epsilon, r1.mu, r2.mu
    else:
        a1, a2, b1, b2 = r1.mu, r2.mu, r1.epsilon, r2.epsilon

    denom = a2 * a2 - a1 * a1
    if abs(denom) < _DEGENERATE_TOL * abs(a1) ** 2:
        raise NumericError(
            f"degenerate interface for {pol.value}: |a2^2 - a1^2| = {abs(denom):.3e} "
            f"at omega = {omega:.6e}"
        )
    radicand = a1 * a2 * (a2 * b1 - a1 * b2) / denom
    w_c = omega / C
    k = w_c * _principal_sqrt(radicand)

    k1 = _principal_sqrt(k * k - w_c * w_c * r1.epsilon * r1.mu)
    k2 = _principal_sqrt(k * k - w_c * w_c * r2.epsilon * r2.mu)

    s1, s2 = (a1, a2)
    num = abs(k1 * s2 + k2 * s1)
    residual = num / max(abs(k1 * s2), abs(k2 * s1), 1e-300)
    bound = k1.real > 0 and k2.real > 0 and residual < _BC_RESIDUAL_TOL

    return DispersionPoint(
        omega=omega,
        k_par=k.real,
        kappa=k.imag,
        k1=k1,
        k2=k2,
        polarization=pol,
        bound=bound,
        bc_residual=residual,
    )


def polarization_support(
    m1: HalfSpaceMaterial, m2: HalfSpaceMaterial, omega: float
) -> set[Polarization]:
    """Subset of {TM, TE} that is bound at ``omega``.

    A polarization whose dispersion formula is degenerate at this interface
    (e.g. TE with equal constant permeabilities) is simply not supported.
    """
    supported = set()
    for pol in Polarization:
        try:
            if sp_wavevector(m1, m2, omega, pol).bound:
                supported.add(pol)
        except NumericError:
            continue
    return supported


def group_velocity(
    m1: HalfSpaceMaterial,
    m2: HalfSpaceMaterial,
    omega: float,
    pol: Polarization = Polarization.TM,
    rel_tol: float = 1e-7,
) -> float:
    """Group velocity dw/dk_par of the bare surface mode at ``omega``.

    Centered finite difference on k_par(w) with step halving until two
    successive estimates agree to ``rel_tol``; the stencil is refined when
    k_par is not monotonic across it.
    """
    center = sp_wavevector(m1, m2, omega, pol)
    if not center.bound:
        raise ValueError(f"no bound {pol.value} mode at omega = {omega:.6e}")

    def k_par(w: float) -> float:
        return sp_wavevector(m1, m2, w, pol).k_par

    h = 1e-4 * omega
    prev = None
    for _ in range(48):
        lo, hi = k_par(omega - h), k_par(omega + h)
        if not (lo < center.k_par < hi or lo > center.k_par > hi):
            h *= 0.5
            prev = None
            continue
        deriv = (hi - lo) / (2.0 * h)
        if prev is not None and abs(deriv - prev) <= rel_tol * abs(deriv):
            return 1.0 / deriv
        prev = deriv
        h *= 0.5
        if h < 1e-13 * omega:
            break
    raise NumericError(f"group-velocity stencil did not converge at omega = {omega:.6e}")


def loss_cancellation_residual(
    m1: HalfSpaceMaterial, m2: HalfSpaceMaterial, omega: float
) -> float:
    """Mismatch of the electric/magnetic loss-interference condition.

    The minimum of |kappa| is a genuine cancellation point when the loss
    ratio Im(mu2)/Im(eps2) equals

        (Re(mu2)*(Re(eps2)**2 + eps1**2) - 2*Re(eps2)*eps1)
        / (Re(eps2)*(Re(eps2)**2 - eps1**2)).

    Returned as a symmetric cross-multiplied relative mismatch in [0, 1]:
    ~0 at a cancellation point, ~1 when one side vanishes (e.g. a metal with
    lossless unit permeability, for which the condition has no solution).
    """
    r1 = eval_material(m1, omega)
    r2 = eval_material(m2, omega)
    e1 = r1.epsilon.real
    er, ei = r2.epsilon.real, r2.epsilon.imag
    mr, mi = r2.mu.real, r2.mu.imag
    lhs = mi * er * (er * er - e1 * e1)
    rhs = ei * (mr * (er * er + e1 * e1) - 2.0 * er * e1)
    scale = abs(lhs) + abs(rhs)
    if scale == 0.0:
        return 0.0
    return abs(lhs - rhs) / scale


def find_abyss(
    m1: HalfSpaceMaterial,
    m2: HalfSpaceMaterial,
    search_band: tuple[float, float],
    pol: Polarization = Polarization.TM,
    n_grid: int = 512,
) -> AbyssResult:
    """Locate the minimum of |kappa(w)| inside ``search_band``.

    A coarse scan of ``n_grid`` points brackets the minimum and golden-section
    refinement narrows it to a relative frequency tolerance of 1e-9.  If the
    coarse minimum sits on a band edge there is no interior minimum and
    :class:`AbyssNotFoundError` is raised.  The loss-interference residual at
    the minimizer is evaluated as a diagnostic; ``is_cancellation`` is False
    when it exceeds 0.05 (a minimum exists but losses do not cancel there).
    """
    lo, hi = search_band
    if not (0 < lo < hi):
        raise ValueError(f"invalid search band {search_band!r}")
    n_grid = max(int(n_grid), 512)

    def abs_kappa(w: float) -> float:
        return abs(sp_wavevector(m1, m2, w, pol).kappa)

    grid = np.linspace(lo, hi, n_grid)
    kappas = np.array([abs_kappa(w) for w in grid])
    i = int(np.argmin(kappas))
    if i == 0 or i == n_grid - 1:
        raise AbyssNotFoundError(
            f"no interior |kappa| minimum in [{lo:.6e}, {hi:.6e}] "
            f"(edge value {kappas[i]:.6e} 1/m)"
        )

    res = minimize_scalar(
        abs_kappa,
        bracket=(grid[i - 1], grid[i], grid[i + 1]),
        method="golden",
        options={"xtol": 1e-9},
    )
    if not res.success:
        raise NumericError(f"golden-section refinement failed: {res.message}")
    omega0 = float(res.x)
    point = sp_wavevector(m1, m2, omega0, pol)
    residual = loss_cancellation_residual(m1, m2, omega0)
    return AbyssResult(omega0=omega0, kappa_at_omega0=point.kappa, residual=residual)


def swap_eps_mu(m: HalfSpaceMaterial) -> HalfSpaceMaterial:
    """Material with electric and magnetic responses interchanged."""
    return HalfSpaceMaterial(
        epsilon_model=m.mu_model, mu_model=m.epsilon_model, label=f"{m.label}-dual"
    )
