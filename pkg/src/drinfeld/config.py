"""Dataclass configuration knobs shared across the package."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class TorsionConfig:
    """Caps for the brute-force torsion oracle."""

    max_splitting_steps: int = 10_000  # cap on the splitting-extension search


@dataclass(frozen=True)
class WeilConfig:
    """Auxiliary-modulus budget for the general-rank Weil polynomial."""

    aux_modulus_degree_cap: int = 2  # per-modulus degree cap (keeps kernels small)
    torsion: TorsionConfig = field(default_factory=TorsionConfig)


@dataclass(frozen=True)
class LatticeConfig:
    """Stabilization-window policy for the endomorphism-lattice search."""

    window_growth: int | None = None  # defaults to 2r at call time
    hard_cap_factor: int = 4  # cap D <= factor * (n + r^2)


@dataclass(frozen=True)
class SurveyOptions:
    """Options for the prime-survey engine."""

    strict: bool = False  # fail fast on a required per-record check
    with_lattice_checks: bool = False  # cross-validate b_p via the SNF path
    with_abhyankar: bool = True  # factor the Abhyankar polynomial mod p
    jobs: int = 1
    c_k: int = 1  # constant-field degree input for CM density reports
