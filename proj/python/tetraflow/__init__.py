"""Tetrahedral steady flows of the 2D Euler equations on the sphere.

Thin wrapper around the compiled core: spherical-harmonic transforms,
Liapunov-Schmidt branch expansion, and energy-Casimir stability
classification of the four profile nonlinearities.
"""

from tetraflow._core import (
    __version__,
    classify,
    critical_lambda,
    eta_curve,
    expand,
    gamma,
    gauss_legendre,
    hessian_spectrum,
    invariant_dimension,
    residual_norms,
    table1,
    unperturbed_hessian_eigenvalue,
    verify,
)

__all__ = [
    "__version__",
    "classify",
    "critical_lambda",
    "eta_curve",
    "expand",
    "gamma",
    "gauss_legendre",
    "hessian_spectrum",
    "invariant_dimension",
    "residual_norms",
    "table1",
    "unperturbed_hessian_eigenvalue",
    "verify",
]
