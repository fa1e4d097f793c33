"""
Câblages de boîtes et développement des inégalités
"""

from .engine import expand_inequality, stochastic_wire, wire
from .protocol import (
    StochasticWiring,
    WiringGroup,
    WiringProtocol,
    coarse_graining_protocol,
    identity_protocol,
    random_protocol,
    restrict_settings_protocol,
)
from .storage import load_wiring, parse_wiring, save_wiring, serialize_wiring

__all__ = [
    "StochasticWiring",
    "WiringGroup",
    "WiringProtocol",
    "coarse_graining_protocol",
    "expand_inequality",
    "identity_protocol",
    "load_wiring",
    "parse_wiring",
    "random_protocol",
    "restrict_settings_protocol",
    "save_wiring",
    "serialize_wiring",
    "stochastic_wire",
    "wire",
]
