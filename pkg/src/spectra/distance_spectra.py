"""
Distance Spectra
Distance matrices, Wiener index, distance spectral radius and full spectrum
"""
import logging
import math
from dataclasses import dataclass
from typing import List, Optional

import mpmath
import numpy as np

from ..graphs.graph_core import Graph, bits, require_connected


logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-10
HIGH_PRECISION_TOLERANCE = 1e-13
MAX_ITERATIONS = 100_000
ROTATION_THRESHOLD = 1e-12
MAX_SWEEPS = 100


class ConvergenceError(ArithmeticError):
    """Iterative eigensolver hit its iteration cap"""

    def __init__(self, message: str, estimate: float, residual: float, iterations: int):
        super().__init__(message)
        self.estimate = estimate
        self.residual = residual
        self.iterations = iterations


@dataclass(frozen=True, eq=False)
class DistMatrix:
    """Hop distances of a connected graph as a read-only uint16 matrix"""

    entries: np.ndarray

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def __getitem__(self, index):
        return self.entries[index]

    def as_float(self) -> np.ndarray:
        return self.entries.astype(np.float64)


@dataclass(frozen=True, eq=False)
class SpectralResult:
    """Perron root and unit Perron vector of a distance matrix"""

    lambda1: float
    perron: np.ndarray
    iterations: int
    residual: float


# ============================================================================
# DISTANCES
# ============================================================================

def all_pairs_distances(g: Graph) -> DistMatrix:
    """
    All-pairs hop distances via one breadth-first search per vertex

    Args:
        g: Connected graph

    Returns:
        Distance matrix

    Raises:
        DisconnectedGraphError: If some pair has no path
    """
    require_connected(g)
    n = g.order
    entries = np.zeros((n, n), dtype=np.uint16)
    for source in range(n):
        seen = 1 << source
        frontier = seen
        depth = 0
        while frontier:
            depth += 1
            grown = 0
            for u in bits(frontier):
                grown |= g.rows[u]
            frontier = grown & ~seen
            seen |= frontier
            for v in bits(frontier):
                entries[source, v] = depth
    entries.setflags(write=False)
    return DistMatrix(entries)


def wiener(d: DistMatrix) -> int:
    """Wiener index: sum of distances over unordered pairs"""
    return int(np.triu(d.entries.astype(np.int64), 1).sum())


def wiener_bound(d: DistMatrix) -> float:
    """Lower bound 2W/n on the distance spectral radius"""
    return 2.0 * wiener(d) / d.order


# ============================================================================
# SPECTRAL RADIUS
# ============================================================================

def lambda1(d: DistMatrix,
            tolerance: float = DEFAULT_TOLERANCE,
            max_iterations: int = MAX_ITERATIONS) -> SpectralResult:
    """
    Distance spectral radius and Perron vector by power iteration

    Starts from the all-ones vector and stops once the max-norm residual
    ``|D x - λ x|`` drops to ``tolerance * λ``.

    Args:
        d: Distance matrix of a connected graph with n >= 2
        tolerance: Relative residual target
        max_iterations: Iteration cap

    Returns:
        SpectralResult

    Raises:
        ConvergenceError: If the cap is reached first
    """
    matrix = d.as_float()
    n = d.order
    if n < 2:
        raise ValueError("Spectral radius needs at least two vertices")

    x = np.full(n, 1.0 / math.sqrt(n))
    y = matrix @ x
    estimate = float(x @ y)
    residual = float(np.max(np.abs(y - estimate * x)))

    for iteration in range(1, max_iterations + 1):
        if residual <= tolerance * estimate:
            return SpectralResult(estimate, x, iteration - 1, residual)
        x = y / np.linalg.norm(y)
        y = matrix @ x
        estimate = float(x @ y)
        residual = float(np.max(np.abs(y - estimate * x)))

    if residual <= tolerance * estimate:
        return SpectralResult(estimate, x, max_iterations, residual)
    raise ConvergenceError(
        f"Power iteration did not converge in {max_iterations} iterations",
        estimate, residual, max_iterations,
    )


def spectral_radius(g: Graph, tolerance: float = DEFAULT_TOLERANCE) -> float:
    """λ1(D(g)) for a connected graph"""
    return lambda1(all_pairs_distances(g), tolerance=tolerance).lambda1


def lambda1_high_precision(d: DistMatrix,
                           start: Optional[SpectralResult] = None,
                           dps: int = 40,
                           steps: int = 60) -> mpmath.mpf:
    """
    Refine λ1 in multiprecision arithmetic

    Runs Rayleigh-quotient power steps in mpmath starting from a converged
    float Perron vector, so the error contracts far below double precision.

    Args:
        d: Distance matrix
        start: Converged float result (computed when omitted)
        dps: Decimal digits of working precision
        steps: Number of multiprecision power steps

    Returns:
        λ1 as an mpmath number
    """
    start = start or lambda1(d, tolerance=HIGH_PRECISION_TOLERANCE)
    rows = d.entries.tolist()
    with mpmath.workdps(dps):
        x = [mpmath.mpf(float(value)) for value in start.perron]
        estimate = mpmath.mpf(start.lambda1)
        for _ in range(steps):
            y = [mpmath.fdot(row, x) for row in rows]
            estimate = mpmath.fdot(x, y) / mpmath.fdot(x, x)
            norm = mpmath.sqrt(mpmath.fdot(y, y))
            x = [value / norm for value in y]
        return +estimate


# ============================================================================
# FULL SPECTRUM
# ============================================================================

def full_spectrum(d: DistMatrix,
                  threshold: float = ROTATION_THRESHOLD,
                  max_sweeps: int = MAX_SWEEPS) -> List[float]:
    """
    All distance eigenvalues by cyclic plane rotations

    Sweeps over every above-diagonal pair, zeroing it with one rotation,
    until the off-diagonal Frobenius norm is at most ``threshold`` times the
    matrix norm.

    Args:
        d: Distance matrix
        threshold: Relative off-diagonal target
        max_sweeps: Sweep cap

    Returns:
        Eigenvalues, nonincreasing
    """
    a = d.as_float()
    n = d.order
    scale = max(np.linalg.norm(a), 1.0)

    for sweep in range(max_sweeps + 1):
        off = math.sqrt(2.0) * float(np.linalg.norm(np.triu(a, 1)))
        if off <= threshold * scale:
            logger.debug(f"Rotation sweeps converged after {sweep} sweeps")
            return sorted((float(value) for value in np.diag(a)), reverse=True)
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] != 0.0:
                    _rotate(a, p, q)

    raise ConvergenceError(
        f"Rotation sweeps did not converge in {max_sweeps} sweeps",
        float(np.max(np.diag(a))), off, max_sweeps,
    )


def _rotate(a: np.ndarray, p: int, q: int) -> None:
    """Apply the rotation that zeroes a[p, q] in place"""
    apq = float(a[p, q])
    diff = float(a[q, q] - a[p, p])
    if abs(diff) + 100.0 * abs(apq) == abs(diff):
        # |θ| too large for θ²; t = 1 / (2θ) to working precision.
        t = apq / diff
    else:
        theta = diff / (2.0 * apq)
        t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c

    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q

    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q

    a[p, q] = 0.0
    a[q, p] = 0.0
