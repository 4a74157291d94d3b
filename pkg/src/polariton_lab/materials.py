"""Complex permittivity and permeability of the two half-spaces.

Each half-space carries an electric and a magnetic response that is either a
real frequency-independent constant or a Drude pole

    s(w) = 1 - wf**2 / (w * (w + i*gf)),

with plasma frequency ``wf`` and loss rate ``gf`` in rad/s.  All frequencies
are angular.  The derivative d(w*s)/dw needed by the mode normalization is
available in closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

# Drude parameters for Ag and the dielectric constant used throughout the
# numerical studies in this package.
OMEGA_E_SILVER = 1.37e16  # rad/s
GAMMA_E_SILVER = 2.73e13  # rad/s
EPSILON_DIELECTRIC = 1.3


@dataclass(frozen=True)
class DrudeParams:
    """Plasma frequency and loss rate of one Drude pole (rad/s)."""

    plasma_frequency: float
    loss_rate: float = 0.0

    def __post_init__(self) -> None:
        if not self.plasma_frequency > 0:
            raise ValueError("plasma_frequency must be positive")
        if self.loss_rate < 0:
            raise ValueError("loss_rate must be non-negative")


Response = Union[float, DrudeParams]


@dataclass(frozen=True)
class HalfSpaceMaterial:
    """Electric and magnetic response models of one half-space.

    A ``float`` model is a real dispersionless constant; a :class:`DrudeParams`
    model is the lossy Drude form above.
    """

    epsilon_model: Response
    mu_model: Response = 1.0
    label: str = ""

    def __post_init__(self) -> None:
        if isinstance(self.epsilon_model, (int, float)) and self.epsilon_model < 1.0:
            raise ValueError("constant permittivity must be >= 1")
        if isinstance(self.mu_model, (int, float)) and not self.mu_model > 0:
            raise ValueError("constant permeability must be positive")


@dataclass(frozen=True)
class MaterialResponse:
    """epsilon(w) and mu(w) of one half-space at a single frequency."""

    epsilon: complex
    mu: complex
    omega: float


def _drude(omega: float, p: DrudeParams) -> complex:
    return 1.0 - p.plasma_frequency**2 / (omega * (omega + 1j * p.loss_rate))


def _drude_domega(omega: float, p: DrudeParams) -> complex:
    # d(w*s)/dw for the Drude form.
    return 1.0 + p.plasma_frequency**2 / (omega + 1j * p.loss_rate) ** 2


def _eval_one(model: Response, omega: float) -> complex:
    if isinstance(model, DrudeParams):
        return _drude(omega, model)
    return complex(model)


def _deriv_one(model: Response, omega: float) -> complex:
    if isinstance(model, DrudeParams):
        return _drude_domega(omega, model)
    return complex(model)


def eval_material(m: HalfSpaceMaterial, omega: float) -> MaterialResponse:
    """Evaluate epsilon and mu of ``m`` at angular frequency ``omega``."""
    if not omega > 0:
        raise ValueError(f"omega must be positive, got {omega!r}")
    return MaterialResponse(
        epsilon=_eval_one(m.epsilon_model, omega),
        mu=_eval_one(m.mu_model, omega),
        omega=omega,
    )


def d_omega_material(m: HalfSpaceMaterial, omega: float) -> tuple[complex, complex]:
    """Analytic d(w*eps)/dw and d(w*mu)/dw at ``omega``."""
    if not omega > 0:
        raise ValueError(f"omega must be positive, got {omega!r}")
    return _deriv_one(m.epsilon_model, omega), _deriv_one(m.mu_model, omega)


def silver() -> HalfSpaceMaterial:
    """Ag half-space: Drude permittivity, unit permeability."""
    return HalfSpaceMaterial(
        epsilon_model=DrudeParams(OMEGA_E_SILVER, GAMMA_E_SILVER),
        mu_model=1.0,
        label="silver",
    )


def nimm(gamma_m: float = 1e11, omega_m: float = 0.5 * OMEGA_E_SILVER) -> HalfSpaceMaterial:
    """Negative-index half-space: silver-like electric pole plus a magnetic pole.

    The magnetic plasma frequency defaults to half the electric one and the
    magnetic loss rate is a free knob.
    """
    return HalfSpaceMaterial(
        epsilon_model=DrudeParams(OMEGA_E_SILVER, GAMMA_E_SILVER),
        mu_model=DrudeParams(omega_m, gamma_m),
        label="nimm",
    )


def dielectric(epsilon: float = EPSILON_DIELECTRIC) -> HalfSpaceMaterial:
    """Dispersionless dielectric half-space with mu = 1."""
    return HalfSpaceMaterial(epsilon_model=epsilon, mu_model=1.0, label="dielectric")


_PRESETS = {
    "silver": silver,
    "nimm-default": nimm,
    "dielectric-1.3": dielectric,
}


def preset(name: str) -> HalfSpaceMaterial:
    """Return a named material preset (silver, nimm-default, dielectric-1.3)."""
    try:
        factory = _PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown material preset {name!r}; options: {sorted(_PRESETS)}") from None
    return factory()
