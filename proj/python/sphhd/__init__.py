"""Helmholtz-Hodge decomposition of tangent fields on the sphere."""

from ._core import (
    CoefficientTable,
    HHDResult,
    ScalarSpectrum,
    TangentField,
    ZSpectrum,
    decompose,
    differentiate,
    kappa_bound,
    kappa_numeric,
    random_spectrum,
    relative_l2_error,
    verify,
)

__all__ = [
    "CoefficientTable",
    "HHDResult",
    "ScalarSpectrum",
    "TangentField",
    "ZSpectrum",
    "decompose",
    "differentiate",
    "kappa_bound",
    "kappa_numeric",
    "random_spectrum",
    "relative_l2_error",
    "verify",
]
