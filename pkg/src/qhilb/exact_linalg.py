"""Exact matrix rank over Q, with an optional modular fast path."""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import BadPrimeError

DEFAULT_PRIME = 2_147_483_647  # 2^31 - 1


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple

    @classmethod
    def from_rows(cls, rows, cols=None):
        entries = tuple(tuple(Fraction(x) for x in row) for row in rows)
        ncols = cols if cols is not None else (len(entries[0]) if entries else 0)
        if any(len(r) != ncols for r in entries):
            raise ValueError("ragged matrix")
        return cls(len(entries), ncols, entries)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, tuple((Fraction(0),) * cols for _ in range(rows)))

    def transpose(self):
        return RationalMatrix(
            self.cols, self.rows, tuple(tuple(r[j] for r in self.entries) for j in range(self.cols))
        )

    def columns(self, indices):
        return RationalMatrix(self.rows, len(indices), tuple(tuple(r[j] for j in indices) for r in self.entries))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def _integer_rows(rows):
    out = []
    for row in rows:
        den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        ints = [int(Fraction(x) * den) for x in row]
        if any(ints):
            out.append(ints)
    return out


def _entries(M):
    return M.entries if isinstance(M, RationalMatrix) else M


def rank(M):
    """Rank by fraction-free Gaussian elimination on denominator-cleared rows.

    Pivots are taken as the first nonzero entry in column order.
    """
    rows = _integer_rows(_entries(M))
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r]
        pc = p[c]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f == 0:
                continue
            new = [pc * a - f * b for a, b in zip(rows[i], p)]
            g = 0
            for x in new:
                if x:
                    g = gcd(g, x)
                    if g == 1:
                        break
            if g > 1:
                new = [x // g for x in new]
            rows[i] = new
        r += 1
        if r == len(rows):
            break
    return r


def rank_modular(M, prime=DEFAULT_PRIME):
    """Rank of the reduction modulo ``prime``; never exceeds the rational rank."""
    rows = []
    for row in _entries(M):
        red = []
        for x in row:
            x = Fraction(x)
            den = x.denominator % prime
            if den == 0:
                raise BadPrimeError(f"denominator {x.denominator} vanishes mod {prime}")
            red.append(x.numerator * pow(den, -1, prime) % prime)
        rows.append(red)
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, prime)
        p = [x * inv % prime for x in rows[r]]
        rows[r] = p
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                rows[i] = [(a - f * b) % prime for a, b in zip(rows[i], p)]
        r += 1
        if r == len(rows):
            break
    return r


def rank_checked(M, prime=DEFAULT_PRIME):
    """Rational rank, cross-checked against the modular one; a disagreement is a defect."""
    exact = rank(M)
    try:
        fast = rank_modular(M, prime)
    except BadPrimeError:
        return exact
    if fast != exact:
        raise AssertionError(f"modular rank {fast} != rational rank {exact} (prime {prime})")
    return exact


def row_echelon(rows, ncols):
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    rows = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots
