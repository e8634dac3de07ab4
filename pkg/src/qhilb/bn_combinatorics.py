"""Counting Brill-Noether strata of Hilb(l) on P1 x P1.

Route A sums over the single profiles ``Phi`` and the ordered profile pairs
``Psi``.  Route B (``chi_T_stratified``/``chi_S_stratified``) instead runs over
the multiplicity pattern of the lines, weighting each pattern by the Euler
characteristic of its discriminant locus.  The two must agree.
"""
from functools import lru_cache

from .errors import ParameterError
from .partitions import (
    bipartition_count,
    check_partition,
    enumerate_partitions,
    partitions_with_length,
)


def excess(rho, m):
    return sum(r - m - 1 for r in rho if r > m + 1)


@lru_cache(maxsize=None)
def _by_excess(total, m):
    """Partitions of ``total`` grouped by excess over ``m + 1``."""
    groups = {}
    for rho in enumerate_partitions(total):
        groups.setdefault(excess(rho, m), []).append(rho)
    return {e: tuple(v) for e, v in groups.items()}


def _max_excess(total, m):
    return max(total - m - 1, 0)


def enumerate_phi(k, l, m):
    if l < 1:
        return []
    return list(_by_excess(l, m).get(k, ()))


def enumerate_psi(k, l, m):
    """Ordered pairs of nonempty partitions with total size ``l`` and excess ``k``."""
    out = []
    for a in range(1, l):
        b = l - a
        for e1 in range(0, min(k, _max_excess(a, m)) + 1):
            e2 = k - e1
            if e2 > _max_excess(b, m):
                continue
            firsts = _by_excess(a, m).get(e1, ())
            seconds = _by_excess(b, m).get(e2, ())
            out.extend((r1, r2) for r1 in firsts for r2 in seconds)
    return sorted(out, reverse=True)


def enumerate_theta(k, l, m, lengths):
    """Tuples of partitions with prescribed lengths, total ``l`` and excess ``k``."""
    lengths = tuple(lengths)
    out = []

    def rec(idx, rem, need, acc):
        if idx == len(lengths):
            if rem == 0 and need == 0:
                out.append(tuple(acc))
            return
        nu = lengths[idx]
        tail = sum(lengths[idx + 1:])
        for size in range(nu, rem - tail + 1):
            for rho in partitions_with_length(size, nu):
                e = excess(rho, m)
                if e > need:
                    continue
                acc.append(rho)
                rec(idx + 1, rem - size, need - e, acc)
                acc.pop()

    rec(0, l, k, [])
    return out


def xi(l, m):
    if l < 1:
        raise ParameterError("requires l >= 1")
    if m < 0:
        raise ParameterError("requires m >= 0")
    total = 0
    for k in range(1, l - m):
        single = sum(2 * k * bipartition_count(rho) for rho in enumerate_phi(k, l, m))
        pairs = sum(
            k * bipartition_count(r1) * bipartition_count(r2)
            for r1, r2 in enumerate_psi(k, l, m)
        )
        total += single + pairs
    return total


def _chi_stratum(k, l, twist):
    if k < 1 or l < 1 or twist < 0:
        raise ParameterError("requires k >= 1, l >= 1 and a non-negative twist")
    single = sum(2 * bipartition_count(s) for s in enumerate_phi(k, l, twist))
    pairs = sum(
        bipartition_count(s1) * bipartition_count(s2)
        for s1, s2 in enumerate_psi(k, l, twist)
    )
    return single + pairs


def chi_S(k, l, n):
    """Euler characteristic of the vertical stratum S(k, l, n)."""
    return _chi_stratum(k, l, n)


def chi_T(k, l, m):
    """Euler characteristic of the horizontal stratum T(k, l, m)."""
    return _chi_stratum(k, l, m)


def discriminant_euler(eps):
    """chi of the locus of divisors e_1 p_1 + ... + e_h p_h with distinct p_i on P1."""
    eps = check_partition(eps)
    if len(eps) >= 3:
        return 0
    if len(eps) == 2:
        return 2 if eps[0] > eps[1] else 1
    return 2


def _chi_stratified(k, l, twist):
    if k < 1 or l < 1 or twist < 0:
        raise ParameterError("requires k >= 1, l >= 1 and a non-negative twist")
    total = 0
    # each line carries at least one point, so nu <= l
    for nu in range(1, l + 1):
        for pattern in enumerate_partitions(nu):
            weight = discriminant_euler(pattern)
            if weight == 0:
                continue
            for profiles in enumerate_theta(k, l, twist, pattern):
                term = 1
                for rho in profiles:
                    term *= bipartition_count(rho)
                total += weight * term
    return total


def chi_T_stratified(k, l, m):
    return _chi_stratified(k, l, m)


def chi_S_stratified(k, l, n):
    return _chi_stratified(k, l, n)


def check_bn_hypotheses(l, m, n, k=None):
    if k is not None and k < 1:
        raise ParameterError("requires k >= 1")
    if l < 2:
        raise ParameterError("requires l >= 2")
    if m < 0 or n < 0:
        raise ParameterError("requires m, n >= 0")
    if m + n < l - 1:
        raise ParameterError("requires m+n >= l-1")


def chi_BN(k, l, m, n):
    """chi(BN(k, l, (m, n))) as the sum over the disjoint vertical and horizontal parts."""
    check_bn_hypotheses(l, m, n, k)
    return chi_S(k, l, n) + chi_T(k, l, m)


def k_max(l, m, n):
    return max(l - m - 1, l - n - 1, 0)
