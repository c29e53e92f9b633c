"""
Extremal Polynomials
Characteristic and auxiliary polynomials of the split-join families,
assembled with integer coefficients
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

import mpmath

from ..spectra.sturm import largest_real_root
from .families import ExtremalParameterError


class PolyTag(str, Enum):
    F = 'F'        # char. polynomial of the G~ quotient, in x
    G = 'G'        # F at s = 1 (the G* quotient), in x
    PHI = 'PHI'    # char. polynomial of the G# quotient, in x
    P = 'P'        # (F - G) / (s - 1), in θ
    H = 'H'        # P at θ = n + k - 1, in n
    Q = 'Q'        # H at n = (k-1)s + 4, in s
    R = 'R'        # H at n = (k-1)s + 3, in s


# Parameters fixed by the id; the remaining quantity is the evaluation point.
_REQUIRED = {
    PolyTag.F: ('n', 'k', 's'),
    PolyTag.G: ('n', 'k'),
    PolyTag.PHI: ('n',),
    PolyTag.P: ('n', 'k', 's'),
    PolyTag.H: ('k',),
    PolyTag.Q: ('k',),
    PolyTag.R: ('k',),
}


@dataclass(frozen=True)
class PolyId:
    """
    Identifies one closed-form polynomial

    H is evaluated at n; with ``s`` given it is the general form, and with
    k = 4 and no ``s`` it is the form printed for the line n = 3s + 3.
    Q and R are evaluated at s.
    """

    tag: PolyTag
    n: Optional[int] = None
    k: Optional[int] = None
    s: Optional[int] = None

    def __post_init__(self):
        try:
            object.__setattr__(self, 'tag', PolyTag(self.tag))
        except ValueError:
            raise ExtremalParameterError(f"Unknown polynomial tag {self.tag!r}")
        missing = [name for name in _REQUIRED[self.tag] if getattr(self, name) is None]
        if missing:
            raise ExtremalParameterError(f"{self.tag.value} needs {', '.join(missing)}")
        if self.tag is PolyTag.H and self.s is None and self.k != 4:
            raise ExtremalParameterError("H without s is only defined on the k = 4 line")


def poly_coefficients(pid: PolyId) -> Tuple[Tuple[int, ...], int]:
    """
    Integer coefficients and common denominator

    Returns:
        (coefficients highest power first, scale); the polynomial is
        sum(c_i x^i) / scale
    """
    n, k, s = pid.n, pid.k, pid.s

    if pid.tag is PolyTag.F:
        return (
            1,
            -(n + (k - 2) * s - 2),
            -(2 * (k - 2) * s * n + 7 * n - (k - 2) * (2 * k - 1) * s ** 2 - (7 * k - 8) * s - 11),
            (k - 2) * s ** 2 * n - 2 * (k - 3) * s * n - 6 * n - (k - 2) * (k - 1) * s ** 3
            + (2 * k ** 2 - 9 * k + 8) * s ** 2 + 2 * (4 * k - 7) * s + 10,
        ), 1

    if pid.tag is PolyTag.G:
        return (
            1,
            -(n + k - 4),
            -((2 * k + 3) * n - 2 * k ** 2 - 2 * k - 5),
            -(k + 2) * n + k ** 2 + 2 * k + 2,
        ), 1

    if pid.tag is PolyTag.PHI:
        return (9, -3 * (5 * n - 6), 2 * n ** 2 - 21 * n + 9), 9

    if pid.tag is PolyTag.P:
        return (
            -(k - 2),
            -2 * (k - 2) * n + (k - 2) * (2 * k - 1) * s + 2 * k ** 2 + 2 * k - 6,
            (k - 2) * s * n - (k - 4) * n - (k - 2) * (k - 1) * s ** 2
            + (k ** 2 - 6 * k + 6) * s + k ** 2 + 2 * k - 8,
        ), 1

    if pid.tag is PolyTag.H:
        if s is None:
            return (-4, 34, 168), 3
        return (
            -3 * (k - 2),
            2 * k * (k - 2) * s - 2 * k ** 2 + 13 * k - 10,
            -(k - 2) * (k - 1) * s ** 2 + (2 * k ** 3 - 6 * k ** 2 + k + 4) * s
            + k ** 3 + 5 * k ** 2 - 11 * k,
        ), 1

    if pid.tag is PolyTag.Q:
        return (
            -(k - 1) * (k - 2) ** 2,
            -(7 * k ** 2 - 34 * k + 34),
            k ** 3 - 3 * k ** 2 - 7 * k + 56,
        ), 1

    return (
        -(k - 1) * (k - 2) ** 2,
        -(3 * k ** 2 - 20 * k + 22),
        k ** 3 - k ** 2 + k + 24,
    ), 1


def eval_poly(pid: PolyId, x) -> float:
    """
    Evaluate a closed-form polynomial

    Integer points are accumulated exactly and divided once; real points are
    evaluated by Horner in floating point from the exact coefficients.
    """
    coefficients, scale = poly_coefficients(pid)
    value = 0
    for c in coefficients:
        value = value * x + c
    return value / scale


def eval_poly_exact(pid: PolyId, x: int):
    """Exact value at an integer point (int, or Fraction for scaled forms)"""
    coefficients, scale = poly_coefficients(pid)
    value = 0
    for c in coefficients:
        value = value * x + c
    return Fraction(value, scale) if scale != 1 else value


def eval_poly_mp(pid: PolyId, x, dps: int = 40) -> mpmath.mpf:
    coefficients, scale = poly_coefficients(pid)
    with mpmath.workdps(dps):
        return mpmath.polyval(list(coefficients), mpmath.mpf(x)) / scale


def derivative_value(pid: PolyId, x) -> float:
    coefficients, scale = poly_coefficients(pid)
    degree = len(coefficients) - 1
    value = 0
    for i, c in enumerate(coefficients[:-1]):
        value = value * x + c * (degree - i)
    return value / scale


def largest_root(pid: PolyId) -> float:
    """Largest real root by exact Sturm bisection"""
    coefficients, _ = poly_coefficients(pid)
    return largest_real_root(coefficients)


def largest_root_mp(pid: PolyId, dps: int = 40) -> mpmath.mpf:
    """Largest real root in multiprecision"""
    coefficients, _ = poly_coefficients(pid)
    with mpmath.workdps(dps):
        roots = mpmath.polyroots(list(coefficients), maxsteps=200, extraprec=2 * dps)
        cutoff = mpmath.mpf(10) ** (-(dps // 2))
        real = [mpmath.re(root) for root in roots if abs(mpmath.im(root)) < cutoff]
        return max(real)
