"""Gauges, invariant metrics, Schwarz inclusions and squeezing bounds for
bounded balanced convex domains in C^n."""

from ._squeezekit import (
    ArgumentError,
    Automorphism,
    CertificateError,
    Domain,
    DomainError,
    Error,
    PreconditionError,
    alpha,
    boundary_growth_scan,
    curve_length_upper,
    epsilon_sequence,
    infinitesimal_upper,
    inner_radius,
    kobayashi_balanced,
    kobayashi_homogeneous,
    kobayashi_lower_functional,
    radius_chain,
    lempert_upper,
    main,
    poincare,
    run_scan,
    sharpness_probe,
    squeeze_identity,
    squeeze_transport,
    transport_to_origin,
    verify_inclusion,
)

__all__ = [
    "ArgumentError",
    "Automorphism",
    "CertificateError",
    "Domain",
    "DomainError",
    "Error",
    "PreconditionError",
    "alpha",
    "boundary_growth_scan",
    "curve_length_upper",
    "epsilon_sequence",
    "infinitesimal_upper",
    "inner_radius",
    "kobayashi_balanced",
    "kobayashi_homogeneous",
    "kobayashi_lower_functional",
    "radius_chain",
    "lempert_upper",
    "main",
    "poincare",
    "run_scan",
    "sharpness_probe",
    "squeeze_identity",
    "squeeze_transport",
    "transport_to_origin",
    "verify_inclusion",
]
