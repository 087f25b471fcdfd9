"""Born scattering of twisted electron wave-packets.

All quantities are in Hartree atomic units; angles are in radians.
"""

from ._core import (
    Beam,
    Budget,
    ConfigError,
    DomainError,
    Hydrogen1s,
    UnknownPreset,
    Yukawa,
    __version__,
    asymmetry_a,
    bessel_i0,
    bessel_j,
    born_amplitude,
    dcs_macroscopic,
    density,
    events_single,
    kernel_im,
    luminosity,
    plane_wave_dcs,
    plane_wave_total,
    preset_names,
    preset_texts,
    ratio_r,
    run_config,
    selfcheck,
    total_macroscopic,
)

__all__ = [
    "Beam",
    "Budget",
    "ConfigError",
    "DomainError",
    "Hydrogen1s",
    "UnknownPreset",
    "Yukawa",
    "__version__",
    "asymmetry_a",
    "bessel_i0",
    "bessel_j",
    "born_amplitude",
    "dcs_macroscopic",
    "density",
    "events_single",
    "kernel_im",
    "luminosity",
    "plane_wave_dcs",
    "plane_wave_total",
    "preset_names",
    "preset_texts",
    "ratio_r",
    "run_config",
    "selfcheck",
    "total_macroscopic",
]
