"""Report and configuration records shared by the CLI and the suites.

Exact rationals are always serialized as numerator/denominator strings plus
an integer power of pi; floats carry explicit error bars where available.
Suite reports omit wall-clock timestamps so that identical (command, config,
seed) produce byte-identical streams.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exactnum import PiScaledRational

__all__ = ["Report", "SuiteConfig", "ConfigError", "exact_json"]


class ConfigError(ValueError):
    pass


def exact_json(value) -> dict:
    """Lossless serialization of an exact rational or pi-scaled rational."""
    if isinstance(value, PiScaledRational):
        return value.to_json()
    value = Fraction(value)
    return {
        "num": str(value.numerator),
        "den": str(value.denominator),
        "pi_power": 0,
        "float": float(value),
    }


@dataclass(frozen=True)
class Report:
    command: str
    inputs: dict
    outputs: dict
    verdict: str  # PASS | FAIL | INFO
    seed: Optional[int] = None
    timestamp: Optional[str] = None

    def __post_init__(self):
        if self.verdict not in ("PASS", "FAIL", "INFO"):
            raise ValueError(f"bad verdict {self.verdict!r}")

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "verdict": self.verdict,
            "seed": self.seed,
            "timestamp": self.timestamp,
        }
        return json.dumps(payload, sort_keys=True)

    @staticmethod
    def from_json(line: str) -> "Report":
        d = json.loads(line)
        return Report(command=d["command"], inputs=d["inputs"],
                      outputs=d["outputs"], verdict=d["verdict"],
                      seed=d.get("seed"), timestamp=d.get("timestamp"))


@dataclass(frozen=True)
class SuiteConfig:
    quadrature_nodes: int = 120
    mc_budget: int = 1_000_000
    seed: int = 0
    tolerance_abs: float = 1e-10
    tolerance_rel: float = 1e-6
    convention: str = "corrected"

    def __post_init__(self):
        if self.quadrature_nodes < 8 or self.mc_budget < 1:
            raise ConfigError("budgets must be positive")
        if not (0 < self.tolerance_abs < 1 and 0 < self.tolerance_rel < 1):
            raise ConfigError("tolerances must lie in (0, 1)")
        if self.convention not in ("paper", "corrected"):
            raise ConfigError("convention must be 'paper' or 'corrected'")
