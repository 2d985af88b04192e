"""Exact steady states and spin helices of the boundary-driven elliptic XYZ brickwork circuit."""

__version__ = "0.1.0"

from .channels import KrausPair, QubitVector, Side, boundary_state, kraus_pair, reset_channel_direct
from .circuit import find_ness, trace_distance
from .gate import ModelParams, Regime, build_gate
from .helix import (
    Chirality,
    HelixSpec,
    eta_scan,
    helix_state,
    indicators,
    magnetization_profile,
    periodic_checks,
)
from .mpa import Parity, contract_ness, reduced_density
from .theta import theta, theta_bar

__all__ = [
    "__version__",
    "ModelParams",
    "Regime",
    "build_gate",
    "Side",
    "QubitVector",
    "KrausPair",
    "boundary_state",
    "kraus_pair",
    "reset_channel_direct",
    "find_ness",
    "trace_distance",
    "Parity",
    "contract_ness",
    "reduced_density",
    "Chirality",
    "HelixSpec",
    "helix_state",
    "magnetization_profile",
    "indicators",
    "eta_scan",
    "periodic_checks",
    "theta",
    "theta_bar",
]
