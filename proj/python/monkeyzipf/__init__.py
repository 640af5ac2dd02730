"""Random-typing word model: exponent, exact rank structure, bounds, simulation and fits."""

from ._monkeyzipf import (
    Alphabet,
    BoundCertificate,
    FitResult,
    GammaSolution,
    IoError,
    Level,
    ResourceError,
    ValidationError,
    certify,
    fit,
    levels,
    predicted_exponent,
    q_tilde,
    q_tilde_recursive,
    rank_of_probability,
    simulate,
    solve_gamma,
)

__all__ = [
    "Alphabet",
    "BoundCertificate",
    "FitResult",
    "GammaSolution",
    "IoError",
    "Level",
    "ResourceError",
    "ValidationError",
    "certify",
    "fit",
    "levels",
    "predicted_exponent",
    "q_tilde",
    "q_tilde_recursive",
    "rank_of_probability",
    "simulate",
    "solve_gamma",
]
