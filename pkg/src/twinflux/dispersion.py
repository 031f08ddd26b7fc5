"""Sellmeier dispersion for the dielectric axes of a nonlinear crystal.

Coefficients are data, not code: they ship in crystal-definition files (see
``twinflux.crystal``) and this module only evaluates the published functional
forms. Two forms are supported, both with the wavelength in microns:

``fan1987``
    n^2 = A + B / (1 - C / L^2) - D * L^2, with coefficients (A, B, C, D).
    Used by the Fan et al. (1987) KTiOPO4 fits.

``kato2002``
    n^2 = A + B1 / (L^2 - C1) + B2 / (L^2 - C2), with coefficients
    (A, B1, C1, B2, C2). Used by the Kato & Takaoka (2002) KTiOPO4 fits.

Derivatives are evaluated analytically from the same forms; a central
finite difference is provided only as a test oracle. Evaluation outside the
declared validity range raises ``OutOfTransparencyRange`` rather than
extrapolating silently, since downstream phase-matching roots are sensitive
to index errors at the 1e-5 level.

All functions accept scalars or numpy arrays of wavelengths in meters.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OutOfTransparencyRange

_FORMS = ("fan1987", "kato2002")


@dataclass(frozen=True)
class DispersionModel:
    """One dielectric axis of a crystal.

    axis
        Dielectric-frame label, 'y' or 'z'.
    form
        Name of the Sellmeier functional form (see module docstring).
    coefficients
        Published constants, in the order the form expects.
    validity_m
        (lambda_min, lambda_max) in meters; hard limits for evaluation.
    """

    axis: str
    form: str
    coefficients: tuple[float, ...]
    validity_m: tuple[float, float]
    source: str = ""

    def __post_init__(self):
        if self.form not in _FORMS:
            raise ValueError(f"unknown Sellmeier form {self.form!r}")
        if self.axis not in ("y", "z"):
            raise ValueError(f"axis must be 'y' or 'z', got {self.axis!r}")


def _check_range(model: DispersionModel, wavelength_m) -> None:
    lo, hi = model.validity_m
    w = np.asarray(wavelength_m)
    if np.any(w < lo) or np.any(w > hi):
        bad = w[(w < lo) | (w > hi)]
        first = float(np.atleast_1d(bad)[0])
        raise OutOfTransparencyRange(
            f"{first * 1e9:.1f} nm outside validity "
            f"[{lo * 1e9:.0f}, {hi * 1e9:.0f}] nm for axis {model.axis!r}"
        )


def _n_squared(model: DispersionModel, lam_um):
    l2 = lam_um * lam_um
    if model.form == "fan1987":
        a, b, cc, d = model.coefficients
        return a + b / (1.0 - cc / l2) - d * l2
    a, b1, c1, b2, c2 = model.coefficients
    return a + b1 / (l2 - c1) + b2 / (l2 - c2)


def _dn_squared_dlam(model: DispersionModel, lam_um):
    """d(n^2)/d(lambda), per micron."""
    l2 = lam_um * lam_um
    if model.form == "fan1987":
        _, b, cc, d = model.coefficients
        return -b * (2.0 * cc / lam_um**3) / (1.0 - cc / l2) ** 2 - 2.0 * d * lam_um
    _, b1, c1, b2, c2 = model.coefficients
    return -2.0 * lam_um * (b1 / (l2 - c1) ** 2 + b2 / (l2 - c2) ** 2)


def refractive_index(model: DispersionModel, wavelength_m):
    """Refractive index n(lambda) on the model's axis."""
    _check_range(model, wavelength_m)
    lam_um = np.asarray(wavelength_m, dtype=float) * 1e6
    n = np.sqrt(_n_squared(model, lam_um))
    return float(n) if np.isscalar(wavelength_m) else n


def index_derivative(model: DispersionModel, wavelength_m):
    """dn/dlambda in 1/m, from the analytic derivative of the Sellmeier form."""
    _check_range(model, wavelength_m)
    lam_um = np.asarray(wavelength_m, dtype=float) * 1e6
    n = np.sqrt(_n_squared(model, lam_um))
    d = _dn_squared_dlam(model, lam_um) / (2.0 * n) * 1e6
    return float(d) if np.isscalar(wavelength_m) else d


def group_index(model: DispersionModel, wavelength_m):
    """Group index n_g = n - lambda * dn/dlambda."""
    _check_range(model, wavelength_m)
    lam = np.asarray(wavelength_m, dtype=float)
    lam_um = lam * 1e6
    n = np.sqrt(_n_squared(model, lam_um))
    dn = _dn_squared_dlam(model, lam_um) / (2.0 * n) * 1e6
    ng = n - lam * dn
    return float(ng) if np.isscalar(wavelength_m) else ng


def finite_difference_derivative(model: DispersionModel, wavelength_m: float,
                                 rel_step: float = 1e-6) -> float:
    """Central-difference dn/dlambda (1/m); test oracle for index_derivative."""
    h = wavelength_m * rel_step
    hi = refractive_index(model, wavelength_m + h)
    lo = refractive_index(model, wavelength_m - h)
    return (hi - lo) / (2.0 * h)
