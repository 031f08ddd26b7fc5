"""Crystal definitions: dispersion axes plus the type II axis assignment.

A crystal file is JSON with documented keys:

    name        free-text label
    comment     optional list of strings (coefficient provenance)
    pump_axis, signal_axis, idler_axis   each 'y' or 'z'
    axes        mapping axis -> {form, coefficients, validity_nm}

Parse errors are reported with line/column context. Two definitions ship with
the package and can be addressed by bare name: ``ktp_fan1987`` (default) and
``ktp_kato2002``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .dispersion import DispersionModel, refractive_index
from .errors import ParseError, ValidationError

BUILTIN_CRYSTALS = ("ktp_fan1987", "ktp_kato2002")
DEFAULT_CRYSTAL = "ktp_fan1987"

_AXIS_KEYS = ("form", "coefficients", "validity_nm")


@dataclass(frozen=True)
class Crystal:
    """Dispersion axes and polarization assignment of one crystal cut."""

    name: str
    axes: dict  # axis label -> DispersionModel
    pump_axis: str = "y"
    signal_axis: str = "z"
    idler_axis: str = "y"

    def model(self, axis: str) -> DispersionModel:
        try:
            return self.axes[axis]
        except KeyError:
            raise ValidationError(f"axes.{axis}", "axis not defined for this crystal")

    def index(self, axis: str, wavelength_m):
        return refractive_index(self.model(axis), wavelength_m)


def _parse_crystal(text: str, origin: str) -> Crystal:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{origin}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(raw, dict):
        raise ParseError(f"{origin}: top level must be an object")

    known = {"name", "comment", "pump_axis", "signal_axis", "idler_axis", "axes"}
    for key in raw:
        if key not in known:
            raise ValidationError(key, f"unknown key in crystal file {origin}")
    if "axes" not in raw:
        raise ValidationError("axes", f"missing in crystal file {origin}")

    axes = {}
    for axis, spec in raw["axes"].items():
        if axis not in ("y", "z"):
            raise ValidationError(f"axes.{axis}", "axis label must be 'y' or 'z'")
        for key in spec:
            if key not in _AXIS_KEYS:
                raise ValidationError(f"axes.{axis}.{key}", "unknown key")
        for key in _AXIS_KEYS:
            if key not in spec:
                raise ValidationError(f"axes.{axis}.{key}", "missing")
        lo, hi = (float(v) for v in spec["validity_nm"])
        if not 0.0 < lo < hi:
            raise ValidationError(f"axes.{axis}.validity_nm", "must satisfy 0 < min < max")
        axes[axis] = DispersionModel(
            axis=axis,
            form=str(spec["form"]),
            coefficients=tuple(float(v) for v in spec["coefficients"]),
            validity_m=(lo * 1e-9, hi * 1e-9),
            source=str(raw.get("name", origin)),
        )

    crystal = Crystal(
        name=str(raw.get("name", origin)),
        axes=axes,
        pump_axis=str(raw.get("pump_axis", "y")),
        signal_axis=str(raw.get("signal_axis", "z")),
        idler_axis=str(raw.get("idler_axis", "y")),
    )
    for role in ("pump_axis", "signal_axis", "idler_axis"):
        axis = getattr(crystal, role)
        if axis not in axes:
            raise ValidationError(role, f"axis {axis!r} not present in axes")
    return crystal


def load_crystal(name_or_path: str | Path = DEFAULT_CRYSTAL) -> Crystal:
    """Load a crystal definition from a builtin name or a JSON file path."""
    name = str(name_or_path)
    if name in BUILTIN_CRYSTALS:
        text = resources.files("twinflux.data").joinpath(f"{name}.json").read_text()
        return _parse_crystal(text, name)
    path = Path(name_or_path)
    if not path.exists():
        raise ParseError(f"crystal file not found: {path}")
    return _parse_crystal(path.read_text(), str(path))
