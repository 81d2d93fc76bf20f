"""Scattering of polarizable atoms off a charged wire in a magnetic field."""

from ._core import (
    AccuracyError,
    ConvergenceError,
    DomainError,
    ScatterParams,
    __version__,
    abel_partial_wave,
    bessel_j,
    bessel_y,
    channel_bounds,
    derive_params,
    digamma,
    f_ab_exact,
    f_ab_mod,
    f_total,
    f_w,
    hankel1,
    imag_order_integral,
    nu_squared,
    s_matrix,
    scaled_dcs,
    sigma_absorption,
)

__all__ = [
    "AccuracyError",
    "ConvergenceError",
    "DomainError",
    "ScatterParams",
    "__version__",
    "abel_partial_wave",
    "bessel_j",
    "bessel_y",
    "channel_bounds",
    "derive_params",
    "digamma",
    "f_ab_exact",
    "f_ab_mod",
    "f_total",
    "f_w",
    "hankel1",
    "imag_order_integral",
    "nu_squared",
    "s_matrix",
    "scaled_dcs",
    "sigma_absorption",
]
