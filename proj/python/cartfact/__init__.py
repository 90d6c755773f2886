from ._cartfact import (
    DomainError,
    MomentumRadial,
    RadialState,
    energy,
    energy_exact,
    fourier_check,
    harmonic_basis,
    momentum,
    momentum_routes_agree,
    multiplet_table,
    ode_residual_zero,
    radial,
    radial_routes_agree,
    verify_eigen_zero,
)

__all__ = [
    "DomainError",
    "MomentumRadial",
    "RadialState",
    "energy",
    "energy_exact",
    "fourier_check",
    "harmonic_basis",
    "momentum",
    "momentum_routes_agree",
    "multiplet_table",
    "ode_residual_zero",
    "radial",
    "radial_routes_agree",
    "verify_eigen_zero",
]
