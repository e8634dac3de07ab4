"""Integer partitions and bipartition counts.

Partitions are plain tuples of positive integers in non-increasing order.
"""
from functools import lru_cache
from math import prod

from .errors import ParameterError

Partition = tuple


def is_partition(parts):
    return all(p >= 1 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def check_partition(parts):
    parts = tuple(int(p) for p in parts)
    if not parts:
        raise ParameterError("partition must be nonempty")
    if not is_partition(parts):
        raise ParameterError(f"{parts} is not a non-increasing string of positive integers")
    return parts


def _partitions_bounded(l, bound):
    # reverse-lexicographic: largest first part first
    if l == 0:
        yield ()
        return
    for first in range(min(l, bound), 0, -1):
        for rest in _partitions_bounded(l - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partition_tuple(l):
    return tuple(_partitions_bounded(l, l))


def enumerate_partitions(l):
    """All partitions of ``l`` in reverse-lexicographic order."""
    if l < 1:
        raise ParameterError("requires l >= 1")
    return list(_partition_tuple(l))


def partitions_with_length(total, length):
    """Partitions of ``total`` with exactly ``length`` parts, reverse-lex order."""
    def rec(rem, slots, bound):
        if slots == 0:
            if rem == 0:
                yield ()
            return
        # every remaining slot needs at least 1
        for first in range(min(rem - (slots - 1), bound), 0, -1):
            if first * slots < rem:
                break
            for rest in rec(rem - first, slots - 1, first):
                yield (first,) + rest

    if total < 0 or length < 0:
        return []
    return list(rec(total, length, total))


def nonincreasing_strings(bounds):
    """Non-increasing strings ``s`` of non-negative integers with ``s[j] <= bounds[j]``.

    Zero entries are allowed, so the results are not partitions; they only serve
    as summands in the bipartition brute force.
    """
    out = []

    def rec(j, prev, acc):
        if j == len(bounds):
            out.append(tuple(acc))
            return
        for v in range(min(prev, bounds[j]), -1, -1):
            acc.append(v)
            rec(j + 1, v, acc)
            acc.pop()

    rec(0, max(bounds, default=0), [])
    return out


def bipartition_count(tau):
    """Closed-form number of ways to split ``tau`` into two non-increasing strings."""
    tau = check_partition(tau)
    diffs = [a - b + 1 for a, b in zip(tau, tau[1:])]
    return prod(diffs) * (tau[-1] + 1)


def bipartition_bruteforce(tau):
    tau = check_partition(tau)
    count = 0
    for first in nonincreasing_strings(tau):
        second = [t - f for t, f in zip(tau, first)]
        if all(a >= b for a, b in zip(second, second[1:])):
            count += 1
    return count


def punctual_cell_dimension(tau):
    tau = check_partition(tau)
    return sum(tau) - tau[0]


def punctual_euler(l):
    # one affine cell per partition, each contributing 1
    return len(enumerate_partitions(l))


def partition_number(l):
    """p(l) from Euler's pentagonal-number recurrence."""
    if l < 0:
        return 0
    p = [1] + [0] * l
    for n in range(1, l + 1):
        total = 0
        for k in range(1, n + 1):
            for g in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
                if g > n:
                    continue
                total += p[n - g] if k % 2 else -p[n - g]
            if k * (3 * k - 1) // 2 > n:
                break
        p[n] = total
    return p[l]


def add_strings(*strings):
    """Componentwise sum of strings, zero-padded to the longest one."""
    width = max((len(s) for s in strings), default=0)
    return tuple(sum(s[j] if j < len(s) else 0 for s in strings) for j in range(width))


def split_string(tau, first):
    """Return ``tau - first`` with trailing zeros removed from both summands."""
    second = tuple(t - f for t, f in zip(tau, first))
    return strip_zeros(first), strip_zeros(second)


def strip_zeros(s):
    return tuple(x for x in s if x != 0)


def all_bipartitions(tau):
    """Every ordered pair ``(a, b)`` of non-increasing strings with ``a + b = tau``."""
    tau = check_partition(tau)
    pairs = []
    for first in nonincreasing_strings(tau):
        second = tuple(t - f for t, f in zip(tau, first))
        if all(a >= b for a, b in zip(second, second[1:])):
            pairs.append((first, second))
    return pairs


__all__ = [
    "Partition",
    "add_strings",
    "all_bipartitions",
    "bipartition_bruteforce",
    "bipartition_count",
    "check_partition",
    "enumerate_partitions",
    "is_partition",
    "nonincreasing_strings",
    "partition_number",
    "partitions_with_length",
    "punctual_cell_dimension",
    "punctual_euler",
    "split_string",
    "strip_zeros",
]
