"""Punctual subschemes of the plane given by normal-form ideals.

Local coordinates at a support point are ``u`` (along the thickening line) and
``v`` (transverse to it).  An ideal with profile ``t = (t_0, ..., t_{nu-1})`` is

    (f_0, ..., f_{nu-2}, u^{t_{nu-1}} v^{nu-1}, v^nu),
    f_k = u^{t_k} v^k + sum_{j>k} sum_{i<t_j} a[i, j, k] u^i v^j,

and the staircase monomials ``u^i v^j`` (``j < nu``, ``i < t_j``) form a basis
of the quotient algebra.
"""
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import comb

from ..errors import ColengthMismatch, ParameterError
from ..exact_linalg import rank, row_echelon
from ..partitions import check_partition, strip_zeros

HORIZONTAL = "horizontal"
VERTICAL = "vertical"
ORIENTATIONS = (HORIZONTAL, VERTICAL)


def staircase(tau):
    return [(i, j) for j, t in enumerate(tau) for i in range(t)]


def _poly_mul(p, q, max_deg):
    out = {}
    for (a, b), x in p.items():
        for (c, d), y in q.items():
            if a + b + c + d < max_deg:
                key = (a + c, b + d)
                out[key] = out.get(key, 0) + x * y
    return {k: v for k, v in out.items() if v != 0}


def _poly_pow(p, e, max_deg):
    out = {(0, 0): Fraction(1)}
    for _ in range(e):
        out = _poly_mul(out, p, max_deg)
    return out


def random_coordinate_change(tau, rng):
    """A substitution u -> g(u, v) fixing v, with nonzero integer coefficients.

    Such substitutions preserve the transverse filtration, hence the profile.
    """
    nu = len(tau)
    l = sum(tau)
    terms = {(1, 0): Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))}
    for b in range(1, nu):
        terms[(0, b)] = Fraction(rng.choice([x for x in range(-9, 10) if x]))
    for key in ((2, 0), (1, 1)):
        if sum(key) < l:
            terms[key] = Fraction(rng.choice([x for x in range(-9, 10) if x]))
    return terms


def normal_form_coefficients(tau, substitution):
    """Tail coefficients of the ideal obtained from the monomial one by ``u -> g(u, v)``."""
    tau = check_partition(tau)
    l = sum(tau)
    stair = staircase(tau)
    stair_set = set(stair)
    # the ideal contains (u, v)^l, so everything happens modulo monomials of degree >= l
    monos = [(i, j) for d in range(l) for j in range(d + 1) for i in [d - j]]
    outside = [mn for mn in monos if mn not in stair_set]
    order = outside + stair
    col = {mn: c for c, mn in enumerate(order)}
    v_poly = {(0, 1): Fraction(1)}
    rows = []
    for i, j in outside:
        img = _poly_mul(_poly_pow(substitution, i, l), _poly_pow(v_poly, j, l), l)
        row = [Fraction(0)] * len(order)
        for mn, x in img.items():
            row[col[mn]] += x
        rows.append(row)
    echelon, pivots = row_echelon(rows, len(order))
    if pivots != list(range(len(outside))):
        raise ColengthMismatch(f"staircase of {tau} is not a complement of the transformed ideal")
    coeffs = {}
    nu = len(tau)
    for k in range(nu - 1):
        row = echelon[col[(tau[k], k)]]
        for (i, j) in stair:
            x = row[col[(i, j)]]
            if x == 0:
                continue
            if j <= k:
                raise ColengthMismatch(f"tail of f_{k} has transverse degree {j} <= {k}")
            coeffs[(i, j, k)] = x
    return coeffs


@dataclass(frozen=True)
class PunctualComponent:
    support: tuple
    orientation: str
    profile: tuple
    coefficients: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "profile", check_partition(self.profile))
        object.__setattr__(self, "support", tuple(Fraction(x) for x in self.support))
        if self.orientation not in ORIENTATIONS:
            raise ParameterError(f"orientation must be one of {ORIENTATIONS}")
        coeffs = tuple(sorted((tuple(k), Fraction(v)) for k, v in dict(self.coefficients).items() if v != 0))
        object.__setattr__(self, "coefficients", coeffs)
        tau = self.profile
        for (i, j, k), _ in coeffs:
            if not (0 <= k < j < len(tau) and 0 <= i < tau[j]):
                raise ParameterError(f"coefficient index {(i, j, k)} outside the normal form of {tau}")

    @classmethod
    def from_seed(cls, support, orientation, profile, seed):
        """Seeded nonzero tails; ``seed=None`` gives the monomial ideal."""
        profile = check_partition(profile)
        if seed is None:
            return cls(support, orientation, profile)
        rng = random.Random(seed)
        g = random_coordinate_change(profile, rng)
        return cls(support, orientation, profile, tuple(normal_form_coefficients(profile, g).items()))

    @property
    def length(self):
        return sum(self.profile)

    @cached_property
    def basis(self):
        return staircase(self.profile)

    @cached_property
    def _index(self):
        return {mn: c for c, mn in enumerate(self.basis)}

    @cached_property
    def _tails(self):
        tails = {}
        for (i, j, k), x in self.coefficients:
            tails.setdefault(k, []).append((i, j, x))
        return tails

    def generators(self):
        """Ideal generators as ``{(i, j): coeff}`` polynomials in ``u, v``."""
        tau = self.profile
        nu = len(tau)
        gens = []
        for k in range(nu - 1):
            f = {(tau[k], k): Fraction(1)}
            for i, j, x in self._tails.get(k, ()):
                f[(i, j)] = f.get((i, j), 0) + x
            gens.append(f)
        gens.append({(tau[nu - 1], nu - 1): Fraction(1)})
        gens.append({(0, nu): Fraction(1)})
        return gens

    @cached_property
    def _reduced(self):
        return {}

    def reduce_monomial(self, i, j):
        """Staircase coordinates of ``u^i v^j`` modulo the ideal.

        Each rewrite strictly raises the transverse degree, which is capped by nu.
        """
        memo = self._reduced
        key = (i, j)
        if key in memo:
            return memo[key]
        tau = self.profile
        nu = len(tau)
        vec = [Fraction(0)] * self.length
        if j >= nu:
            pass
        elif i < tau[j]:
            vec[self._index[key]] = Fraction(1)
        elif j < nu - 1:
            shift = i - tau[j]
            for a, b, x in self._tails.get(j, ()):
                sub = self.reduce_monomial(a + shift, b)
                for c, y in enumerate(sub):
                    if y:
                        vec[c] -= x * y
        memo[key] = vec
        return vec

    def reduce(self, poly):
        vec = [Fraction(0)] * self.length
        for (i, j), x in poly.items():
            if x == 0:
                continue
            for c, y in enumerate(self.reduce_monomial(i, j)):
                if y:
                    vec[c] += x * y
        return vec

    def colength(self):
        """Colength of the ideal by linear algebra in C[u, v]/(u, v)^(l+1).

        Independent of the rewriting in ``reduce``; it bounds the true colength
        from below, while the staircase bounds it from above.
        """
        cap = self.length + 1
        monos = [(d - j, j) for d in range(cap) for j in range(d + 1)]
        col = {mn: c for c, mn in enumerate(monos)}
        rows = []
        for g in self.generators():
            for a, b in monos:
                row = [0] * len(monos)
                nonzero = False
                for (i, j), x in g.items():
                    if i + a + j + b < cap:
                        row[col[(i + a, j + b)]] += x
                        nonzero = True
                if nonzero:
                    rows.append(row)
        return len(monos) - rank(rows)

    def validate(self):
        got = self.colength()
        if got != self.length:
            raise ColengthMismatch(f"ideal with profile {self.profile} has colength {got}, expected {self.length}")
        return self

    def multiplication_matrix(self, coordinate):
        """Matrix (columns = images of basis vectors) of multiplication by u or v."""
        du, dv = {"u": (1, 0), "v": (0, 1)}[coordinate]
        cols = [self.reduce_monomial(i + du, j + dv) for i, j in self.basis]
        n = self.length
        return [[cols[c][r] for c in range(n)] for r in range(n)]

    def operator_profile(self, coordinate):
        """Ranks of powers of a nilpotent multiplication operator, differenced.

        ``r_i = rank(M^i) - rank(M^(i+1))``; for the transverse coordinate this is
        the layer-by-layer length of the scheme along its line.
        """
        M = self.multiplication_matrix(coordinate)
        n = self.length
        power = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
        ranks = [n]
        while ranks[-1] > 0:
            power = _matmul(power, M)
            ranks.append(rank(power))
            if len(ranks) > n + 1:
                raise AssertionError("multiplication operator is not nilpotent")
        return strip_zeros(tuple(a - b for a, b in zip(ranks, ranks[1:])))

    def profile_along_x(self):
        """Profile for the vertical line x = const through the support."""
        return self.operator_profile("v" if self.orientation == VERTICAL else "u")

    def profile_along_z(self):
        """Profile for the horizontal line z = const through the support."""
        return self.operator_profile("v" if self.orientation == HORIZONTAL else "u")

    def evaluate_monomial(self, a, b):
        """Image of the global monomial x^a z^b in the local quotient algebra."""
        x0, z0 = self.support
        poly = {}
        for i in range(a + 1):
            cx = comb(a, i) * x0 ** (a - i)
            if cx == 0:
                continue
            for j in range(b + 1):
                cz = comb(b, j) * z0 ** (b - j)
                if cz == 0:
                    continue
                key = (i, j) if self.orientation == HORIZONTAL else (j, i)
                poly[key] = poly.get(key, 0) + cx * cz
        return self.reduce(poly)


def _matmul(A, B):
    n, k, p = len(A), len(B), len(B[0]) if B else 0
    out = [[Fraction(0)] * p for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        row = out[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(p):
                    if Bt[j]:
                        row[j] += a * Bt[j]
    return out


def extract_profile(component):
    """Profile of a component with respect to its own thickening direction."""
    return component.operator_profile("v")
