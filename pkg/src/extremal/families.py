"""
Extremal Families
Split-join constructions K_s ∨ (K_a ∪ b·K1) and their closed-form invariants
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Sequence

import mpmath

from ..graphs.graph_core import Graph
from ..spectra.quotient import Partition, QuotientMatrix


class ExtremalParameterError(ValueError):
    """Family parameters outside their defined range"""


@dataclass(frozen=True)
class SplitJoinParams:
    """
    Shape K_s ∨ (K_a ∪ b·K1)

    Vertex layout: [0, s) join clique, [s, s+a) clique part, [s+a, n) singletons.
    """

    s: int
    a: int
    b: int

    def __post_init__(self):
        if self.s < 1 or self.a < 0 or self.b < 0:
            raise ExtremalParameterError(f"Need s >= 1, a >= 0, b >= 0; got {self}")
        if self.order < 2:
            raise ExtremalParameterError(f"Split-join needs n >= 2; got {self}")

    @property
    def order(self) -> int:
        return self.s + self.a + self.b


# ============================================================================
# CONSTRUCTORS
# ============================================================================

def build_clique_join(s: int, parts: Sequence[int]) -> Graph:
    """
    K_s ∨ (K_{n_1} ∪ ... ∪ K_{n_t}) with blocks laid out in order

    Args:
        s: Join clique size (>= 1)
        parts: Clique sizes of G - S; zero-size parts are skipped
    """
    if s < 1 or any(part < 0 for part in parts):
        raise ExtremalParameterError(f"Invalid clique join s={s}, parts={list(parts)}")
    n = s + sum(parts)
    if n < 2:
        raise ExtremalParameterError("Clique join needs n >= 2")

    edges = [(i, j) for i in range(s) for j in range(i + 1, n)]
    start = s
    for part in parts:
        edges.extend((i, j) for i in range(start, start + part) for j in range(i + 1, start + part))
        start += part
    return Graph.from_edges(n, edges)


def build_split_join(params: SplitJoinParams) -> Graph:
    """Realize K_s ∨ (K_a ∪ b·K1) with the deterministic layout"""
    return build_clique_join(params.s, [params.a] + [1] * params.b)


def gstar_params(n: int, k: int) -> SplitJoinParams:
    if k < 4 or n < k + 2:
        raise ExtremalParameterError(f"G* needs k >= 4 and n >= k + 2; got n={n}, k={k}")
    return SplitJoinParams(1, n - k - 1, k)


def gsharp_params(n: int) -> SplitJoinParams:
    if n < 6 or n % 3:
        raise ExtremalParameterError(
            f"G# is undefined for this order: needs n ≡ 0 (mod 3) and n >= 6, got {n}"
        )
    return SplitJoinParams((n - 3) // 3, 0, (2 * n + 3) // 3)


def gtilde_params(n: int, k: int, s: int) -> SplitJoinParams:
    a = n - (k - 1) * s - 2
    if k < 2 or s < 1 or a < 0:
        raise ExtremalParameterError(
            f"G~ needs s >= 1 and n >= (k-1)s + 2; got n={n}, k={k}, s={s}"
        )
    return SplitJoinParams(s, a, (k - 2) * s + 2)


def gprime_params(n: int, s: int, t: int) -> SplitJoinParams:
    a = n - s - t + 1
    if s < 1 or t < 1 or a < 1:
        raise ExtremalParameterError(f"G' needs s, t >= 1 and n >= s + t; got n={n}, s={s}, t={t}")
    return SplitJoinParams(s, a, t - 1)


def gstar(n: int, k: int) -> Graph:
    """K_1 ∨ (K_{n-k-1} ∪ k·K1)"""
    return build_split_join(gstar_params(n, k))


def gsharp(n: int) -> Graph:
    """K_{(n-3)/3} ∨ ((2n+3)/3)·K1, defined only for n ≡ 0 (mod 3)"""
    return build_split_join(gsharp_params(n))


def gtilde(n: int, k: int, s: int) -> Graph:
    """K_s ∨ (K_{n-(k-1)s-2} ∪ ((k-2)s+2)·K1)"""
    return build_split_join(gtilde_params(n, k, s))


def gprime(n: int, s: int, t: int) -> Graph:
    """K_s ∨ (K_{n-s-t+1} ∪ (t-1)·K1): t components after removing the join clique"""
    return build_split_join(gprime_params(n, s, t))


def all_split_joins(n: int) -> Iterator[SplitJoinParams]:
    """
    Every split-join shape of order n

    Shapes with a = 1 coincide with a = 0, b + 1 and are yielded once.
    """
    for s in range(1, n):
        for a in range(0, n - s + 1):
            if a == 1:
                continue
            yield SplitJoinParams(s, a, n - s - a)


def split_join_partition(params: SplitJoinParams) -> Partition:
    """Blocks {join clique, clique part, singletons}, empty blocks dropped"""
    s, a, n = params.s, params.a, params.order
    blocks = [range(0, s), range(s, s + a), range(s + a, n)]
    return Partition.from_blocks(block for block in blocks if len(block))


# ============================================================================
# CLOSED FORMS
# ============================================================================

def split_join_quotient(params: SplitJoinParams) -> QuotientMatrix:
    """Exact quotient over the nonempty blocks of split_join_partition"""
    s, a, b = params.s, params.a, params.b
    rows = [[s - 1, a, b], [s, a - 1, 2 * b], [s, 2 * a, 2 * (b - 1)]]
    keep = [index for index, size in enumerate((s, a, b)) if size]
    return QuotientMatrix.from_rows([[rows[i][j] for j in keep] for i in keep])


def gtilde_quotient(n: int, k: int, s: int) -> QuotientMatrix:
    """Distance quotient of G~ over {K_s, clique part, singletons}"""
    if gtilde_params(n, k, s).a < 1:
        raise ExtremalParameterError(f"Three-block quotient needs n >= (k-1)s + 3; got n={n}")
    return QuotientMatrix.from_rows([
        [s - 1, n - (k - 1) * s - 2, (k - 2) * s + 2],
        [s, n - (k - 1) * s - 3, 2 * (k - 2) * s + 4],
        [s, 2 * n - 2 * (k - 1) * s - 4, 2 * (k - 2) * s + 2],
    ])


def gsharp_quotient(n: int) -> QuotientMatrix:
    """Distance quotient of G# over {join clique, singletons}"""
    gsharp_params(n)
    return QuotientMatrix.from_rows([
        [Fraction(n - 6, 3), Fraction(2 * n + 3, 3)],
        [Fraction(n - 3, 3), Fraction(4 * n, 3)],
    ])


def rho_sharp_closed(n: int) -> float:
    """λ1(D(G#)) = (5n - 6 + sqrt(17n² + 24n)) / 6"""
    gsharp_params(n)
    return (5 * n - 6 + math.sqrt(17 * n * n + 24 * n)) / 6


def rho_sharp_closed_mp(n: int, dps: int = 40) -> mpmath.mpf:
    gsharp_params(n)
    with mpmath.workdps(dps):
        return (5 * n - 6 + mpmath.sqrt(17 * n * n + 24 * n)) / 6


def gstar_wiener_closed(n: int, k: int) -> int:
    """
    Wiener index of G*: (n² + (2k-1)n - k² - 3k) / 2

    Raises:
        ExtremalParameterError: Outside k >= 4, n >= k + 2
    """
    gstar_params(n, k)
    numerator = n * n + (2 * k - 1) * n - k * k - 3 * k
    if numerator % 2:
        raise ExtremalParameterError(f"Odd Wiener numerator at n={n}, k={k}")
    return numerator // 2


def sharp_orders(n_max: int) -> List[int]:
    """Orders where G# exists, up to n_max"""
    return list(range(6, n_max + 1, 3))
