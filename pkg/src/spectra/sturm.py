"""
Sturm Root Isolation
Exact real-root isolation for small integer/rational polynomials
"""
from fractions import Fraction
from typing import List, Sequence


ROOT_TOLERANCE = 1e-12

# Coefficients in descending powers
Poly = List[Fraction]


def normalize(coefficients: Sequence) -> Poly:
    poly = [Fraction(c) for c in coefficients]
    while len(poly) > 1 and poly[0] == 0:
        poly.pop(0)
    return poly


def evaluate(poly: Sequence, x) -> object:
    """Horner evaluation; exact for Fraction input"""
    value = 0
    for c in poly:
        value = value * x + c
    return value


def derivative(poly: Poly) -> Poly:
    degree = len(poly) - 1
    if degree == 0:
        return [Fraction(0)]
    return [c * (degree - i) for i, c in enumerate(poly[:-1])]


def _remainder(num: Poly, den: Poly) -> Poly:
    num = list(num)
    while len(num) >= len(den) and any(num):
        factor = num[0] / den[0]
        for i in range(len(den)):
            num[i] -= factor * den[i]
        num.pop(0)
    return normalize(num) if num else [Fraction(0)]


def sturm_sequence(poly: Poly) -> List[Poly]:
    chain = [poly, derivative(poly)]
    while len(chain[-1]) > 1 or chain[-1][0] != 0:
        rem = _remainder(chain[-2], chain[-1])
        if len(rem) == 1 and rem[0] == 0:
            break
        chain.append([-c for c in rem])
        if len(rem) == 1:
            break
    return chain


def _sign_changes(chain: List[Poly], x: Fraction) -> int:
    signs = [v for v in (evaluate(p, x) for p in chain) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a < 0) != (b < 0))


def root_bound(poly: Poly) -> Fraction:
    """Cauchy bound: every real root lies in (-bound, bound)"""
    lead = poly[0]
    return 1 + max((abs(c / lead) for c in poly[1:]), default=Fraction(0))


def count_roots(chain: List[Poly], lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots in (lo, hi]"""
    return _sign_changes(chain, lo) - _sign_changes(chain, hi)


def real_roots(coefficients: Sequence, tolerance: float = ROOT_TOLERANCE) -> List[float]:
    """
    All distinct real roots, descending

    Args:
        coefficients: Polynomial coefficients, highest power first
        tolerance: Bisection width relative to max(1, |root|)

    Returns:
        Roots as floats
    """
    poly = normalize(coefficients)
    if len(poly) == 1:
        return []
    chain = sturm_sequence(poly)
    bound = root_bound(poly)
    roots = []
    _isolate(chain, -bound, bound, count_roots(chain, -bound, bound), tolerance, roots)
    return sorted(roots, reverse=True)


def largest_real_root(coefficients: Sequence, tolerance: float = ROOT_TOLERANCE) -> float:
    """
    Largest real root by Sturm-counted bisection

    Keeps the invariant that (lo, hi] contains the largest distinct root.

    Raises:
        ValueError: If the polynomial has no real root
    """
    poly = normalize(coefficients)
    if len(poly) == 1:
        raise ValueError("Constant polynomial has no roots")
    chain = sturm_sequence(poly)
    hi = root_bound(poly)
    lo = -hi
    if count_roots(chain, lo, hi) == 0:
        raise ValueError("Polynomial has no real root")
    while hi - lo > tolerance * max(1, abs(hi)):
        mid = (lo + hi) / 2
        if count_roots(chain, mid, hi) > 0:
            lo = mid
        else:
            hi = mid
    return float((lo + hi) / 2)


def _isolate(chain, lo, hi, count, tolerance, out):
    if count == 0:
        return
    if count == 1:
        while hi - lo > tolerance * max(1, abs(hi)):
            mid = (lo + hi) / 2
            if count_roots(chain, lo, mid) == 1:
                hi = mid
            else:
                lo = mid
        out.append(float((lo + hi) / 2))
        return
    mid = (lo + hi) / 2
    left = count_roots(chain, lo, mid)
    _isolate(chain, lo, mid, left, tolerance, out)
    _isolate(chain, mid, hi, count - left, tolerance, out)
