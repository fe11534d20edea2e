"""Collective attestation swarm simulator (Python bindings)."""

import json as _json

from ._core import (
    ConfigError,
    ProtocolError,
    coverage,
    combine,
    decode_message,
    encode_message,
    mac_sign,
    memory_bits,
    message_bits,
    representativity,
)
from . import _core

COMPROMISED, HEALTHY, UNKNOWN = 0, 2, 3


def _text(config):
    return config if isinstance(config, str) else _json.dumps(config)


def validate(config):
    """Returns (normalized config dict, warnings)."""
    text, warnings = _core.validate_config(_text(config))
    return _json.loads(text), warnings


def simulate(config, seed=1):
    return _core.simulate(_text(config), seed)


def run_batch(config, out_dir, jobs=1):
    return _core.run_batch(_text(config), str(out_dir), jobs)


def tree_baseline(config):
    return _core.tree_baseline(_text(config))


__all__ = [
    "COMPROMISED", "HEALTHY", "UNKNOWN", "ConfigError", "ProtocolError",
    "combine", "coverage", "decode_message", "encode_message", "mac_sign",
    "memory_bits", "message_bits", "representativity",
    "validate", "simulate", "run_batch", "tree_baseline",
]
