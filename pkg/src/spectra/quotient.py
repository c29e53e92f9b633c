"""
Quotient Matrices
Vertex partitions, distance quotient matrices and their spectral radius
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from .distance_spectra import DistMatrix
from .sturm import largest_real_root, real_roots


MAX_QUOTIENT_SIZE = 4


class QuotientError(ValueError):
    """Invalid partition or quotient request"""


@dataclass(frozen=True)
class Partition:
    """Ordered blocks of vertex indices covering 0..n-1"""

    blocks: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> 'Partition':
        return cls(tuple(tuple(sorted(block)) for block in blocks))

    @classmethod
    def singletons(cls, n: int) -> 'Partition':
        return cls(tuple((v,) for v in range(n)))

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(block) for block in self.blocks)

    def validate(self, order: int) -> None:
        """
        Check blocks are nonempty, disjoint and cover 0..order-1

        Raises:
            QuotientError: On any violation
        """
        seen = set()
        for index, block in enumerate(self.blocks):
            if not block:
                raise QuotientError(f"Block {index} is empty")
            for v in block:
                if not 0 <= v < order:
                    raise QuotientError(f"Vertex {v} outside 0..{order - 1}")
                if v in seen:
                    raise QuotientError(f"Vertex {v} appears in two blocks")
                seen.add(v)
        if len(seen) != order:
            raise QuotientError(f"Partition covers {len(seen)} of {order} vertices")


@dataclass(frozen=True)
class QuotientMatrix:
    """Average block row sums b_ij, kept as exact rationals"""

    entries: Tuple[Tuple[Fraction, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> 'QuotientMatrix':
        size = len(rows)
        if any(len(row) != size for row in rows):
            raise QuotientError("Quotient matrix must be square")
        return cls(tuple(tuple(Fraction(value) for value in row) for row in rows))

    @property
    def size(self) -> int:
        return len(self.entries)

    def as_array(self) -> np.ndarray:
        return np.array([[float(value) for value in row] for row in self.entries])


# ============================================================================
# CONSTRUCTION
# ============================================================================

def _block_sums(d: DistMatrix, p: Partition) -> List[List[np.ndarray]]:
    """Row sums of every block M_ij, one array per block pair"""
    p.validate(d.order)
    entries = d.entries.astype(np.int64)
    return [
        [entries[np.ix_(rows, cols)].sum(axis=1) for cols in p.blocks]
        for rows in p.blocks
    ]


def quotient_matrix(d: DistMatrix, p: Partition) -> QuotientMatrix:
    """
    Quotient matrix of the distance matrix

    Args:
        d: Distance matrix
        p: Partition of d's index set

    Returns:
        B with b_ij = (sum of block (i, j)) / n_i
    """
    sums = _block_sums(d, p)
    return QuotientMatrix(tuple(
        tuple(Fraction(int(block.sum()), len(block)) for block in row) for row in sums
    ))


def is_equitable(d: DistMatrix, p: Partition) -> bool:
    """True iff every block M_ij has constant row sums"""
    return all(
        int(block.min()) == int(block.max()) for row in _block_sums(d, p) for block in row
    )


# ============================================================================
# SPECTRUM
# ============================================================================

def characteristic_polynomial(b: QuotientMatrix) -> List[Fraction]:
    """
    det(xI - B) by Faddeev-LeVerrier in exact rationals

    Returns:
        Monic coefficients, highest power first
    """
    n = b.size
    a = [list(row) for row in b.entries]
    coefficients = [Fraction(1)]
    m = [[Fraction(0)] * n for _ in range(n)]
    c = Fraction(1)
    for step in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I
        m = [[sum(a[i][t] * m[t][j] for t in range(n)) + (c if i == j else 0)
              for j in range(n)] for i in range(n)]
        am = [[sum(a[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        c = -sum(am[i][i] for i in range(n)) / step
        coefficients.append(c)
    return coefficients


def quotient_lambda1(b: QuotientMatrix) -> float:
    """
    Largest eigenvalue of a quotient matrix with r <= 4

    Closed form for r <= 2; Sturm-bracketed bisection on the exact
    characteristic polynomial for r = 3, 4.
    """
    if b.size == 0:
        raise QuotientError("Quotient matrix is empty")
    if b.size > MAX_QUOTIENT_SIZE:
        raise QuotientError(f"Root isolation supports r <= {MAX_QUOTIENT_SIZE}, got {b.size}")
    if b.size == 1:
        return float(b.entries[0][0])
    if b.size == 2:
        (p, q), (r, s) = b.entries
        half_trace = (p + s) / 2
        discriminant = half_trace * half_trace - (p * s - q * r)
        return float(half_trace) + math.sqrt(max(float(discriminant), 0.0))
    return largest_real_root(characteristic_polynomial(b))


def quotient_eigenvalues(b: QuotientMatrix) -> List[float]:
    """Distinct real eigenvalues of B, descending"""
    if b.size > MAX_QUOTIENT_SIZE:
        raise QuotientError(f"Root isolation supports r <= {MAX_QUOTIENT_SIZE}, got {b.size}")
    return real_roots(characteristic_polynomial(b))


def quotient_lambda1_numeric(b: QuotientMatrix) -> float:
    """Largest real eigenvalue of B in floating point, any size"""
    eigenvalues = np.linalg.eigvals(b.as_array())
    return float(np.max(eigenvalues.real))
