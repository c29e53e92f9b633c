"""
Harness Settings
Tunable margins, tolerances and sweep ranges for verification campaigns
"""
from dataclasses import dataclass, replace


DEFAULT_SEED = 0


@dataclass(frozen=True)
class HarnessSettings:
    """Configuration shared by every campaign"""

    # Threshold comparison
    margin: float = 1e-8
    borderline_window: float = 1e-6
    tolerance: float = 1e-10
    high_precision_tolerance: float = 1e-13
    precision_digits: int = 40

    # Execution
    workers: int = 1
    batch_size: int = 256

    # Sampling
    edge_probability: float = 0.5
    max_exhaustive_order: int = 8

    # Polynomial sign sweeps
    poly_k_max: int = 12
    poly_s_max: int = 50
    line_n_max: int = 60

    # Property suite
    win_scan_max_order: int = 7
    radius_tie: float = 1e-9

    def __post_init__(self):
        if self.workers < 1 or self.batch_size < 1:
            raise ValueError("workers and batch_size must be positive")
        if min(self.margin, self.borderline_window, self.radius_tie) < 0:
            raise ValueError("Margins and windows must be non-negative")
        if self.tolerance <= 0 or self.high_precision_tolerance <= 0:
            raise ValueError("Eigensolver tolerances must be positive")
        if not 0.0 < self.edge_probability <= 1.0:
            raise ValueError(f"edge_probability must be in (0, 1], got {self.edge_probability}")

    def with_overrides(self, **overrides) -> 'HarnessSettings':
        known = {key: value for key, value in overrides.items() if value is not None}
        return replace(self, **known)


class CampaignParameterError(ValueError):
    """Campaign parameters outside the ranges the checked statement covers"""


class UnspecifiedThresholdError(CampaignParameterError):
    """No threshold graph exists for this (k, n)"""
