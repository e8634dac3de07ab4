"""Euler characteristics of Hilbert schemes of points on P1 x P1.

chi(Hilb(l)) is the t^l coefficient of prod_{k>=1} (1 - t^k)^(-4); the exponent
is the Euler characteristic of the surface.
"""
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import ParameterError

SURFACE_EULER = 4


@dataclass(frozen=True)
class TruncatedSeries:
    coefficients: tuple
    order: int

    def __getitem__(self, n):
        return self.coefficients[n] if n <= self.order else 0

    def __len__(self):
        return len(self.coefficients)


def _mul_truncated(a, b, order):
    out = [0] * (order + 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j in range(min(len(b), order + 1 - i)):
            out[i + j] += x * b[j]
    return out


def expand_euler_product(order, exponent=SURFACE_EULER):
    """Multiply out the Euler product factor by factor up to ``t^order``."""
    if order < 0:
        raise ParameterError("requires order >= 0")
    coeffs = [1] + [0] * order
    for k in range(1, order + 1):
        # (1 - t^k)^(-e) = sum_j C(j + e - 1, e - 1) t^(kj)
        factor = [0] * (order + 1)
        for j in range(order // k + 1):
            factor[k * j] = comb(j + exponent - 1, exponent - 1)
        coeffs = _mul_truncated(coeffs, factor, order)
    return TruncatedSeries(tuple(coeffs), order)


def _sigma1(n):
    return sum(d for d in range(1, n + 1) if n % d == 0)


def log_derivative_series(order, exponent=SURFACE_EULER):
    """Same coefficients via n a_n = sum_{j=1}^n e sigma_1(j) a_{n-j}."""
    if order < 0:
        raise ParameterError("requires order >= 0")
    a = [1]
    for n in range(1, order + 1):
        s = sum(exponent * _sigma1(j) * a[n - j] for j in range(1, n + 1))
        q, r = divmod(s, n)
        assert r == 0, "recurrence produced a non-integer coefficient"
        a.append(q)
    return TruncatedSeries(tuple(a), order)


@lru_cache(maxsize=None)
def chi_hilb(l):
    if l < 0:
        raise ParameterError("requires l >= 0")
    return expand_euler_product(l)[l]
