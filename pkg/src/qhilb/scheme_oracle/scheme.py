"""Finite subschemes of P1 x P1 inside the chart {y != 0, w != 0}.

A vertical line is ``x = const`` (bidegree (1, 0)); a horizontal line is
``z = const`` (bidegree (0, 1)).
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from ..errors import DisjointnessViolation, ParameterError
from ..exact_linalg import RationalMatrix, rank, rank_checked
from ..partitions import add_strings
from .local import PunctualComponent


@dataclass(frozen=True)
class LineData:
    coordinate: Fraction
    components: tuple
    profile: tuple

    @property
    def multiplicity(self):
        return len(self.profile)

    @property
    def length(self):
        # length of the intersection of Z with the reduced line
        return self.profile[0]


@dataclass(frozen=True)
class FiniteSchemeSpec:
    components: tuple

    def __post_init__(self):
        supports = [c.support for c in self.components]
        if len(set(supports)) != len(supports):
            raise ParameterError("component supports must be pairwise distinct")
        if not self.components:
            raise ParameterError("a scheme needs at least one component")
        sigma_total = sum(sum(d.profile) for d in self.vertical_lines)
        tau_total = sum(sum(e.profile) for e in self.horizontal_lines)
        if not sigma_total == tau_total == self.length:
            raise AssertionError("line profiles do not add up to the length")

    @property
    def length(self):
        return sum(c.length for c in self.components)

    def _lines(self, axis):
        groups = {}
        for c in self.components:
            groups.setdefault(c.support[axis], []).append(c)
        out = []
        for coord in sorted(groups):
            comps = tuple(groups[coord])
            if axis == 0:
                profile = add_strings(*(c.profile_along_x() for c in comps))
            else:
                profile = add_strings(*(c.profile_along_z() for c in comps))
            out.append(LineData(coord, comps, profile))
        return tuple(out)

    @cached_property
    def vertical_lines(self):
        """Lines D_i (x = const) meeting Z, with sigma(X_i)."""
        return self._lines(0)

    @cached_property
    def horizontal_lines(self):
        """Lines E_j (z = const) meeting Z, with tau(Y_j)."""
        return self._lines(1)

    @property
    def kappa(self):
        return len(self.vertical_lines)

    @property
    def lam(self):
        return len(self.horizontal_lines)

    @property
    def mu(self):
        return sum(d.multiplicity for d in self.vertical_lines)

    @property
    def nu(self):
        return sum(e.multiplicity for e in self.horizontal_lines)

    @property
    def sigma_profiles(self):
        return [d.profile for d in self.vertical_lines]

    @property
    def tau_profiles(self):
        return [e.profile for e in self.horizontal_lines]

    @cached_property
    def _evaluations(self):
        return {}

    def evaluation(self, a, b):
        """Column of x^a z^b in the stacked staircase coordinates of all components."""
        key = (a, b)
        col = self._evaluations.get(key)
        if col is None:
            col = []
            for c in self.components:
                col.extend(c.evaluate_monomial(a, b))
            self._evaluations[key] = col
        return col


def build_scheme(specs, validate=True):
    """``specs``: iterable of ``(support, orientation, profile, seed)`` tuples."""
    comps = []
    for support, orientation, profile, seed in specs:
        comp = PunctualComponent.from_seed(support, orientation, profile, seed)
        if validate:
            comp.validate()
        comps.append(comp)
    return FiniteSchemeSpec(tuple(comps))


def monomial_exponents(m, n):
    return [(a, b) for a in range(m + 1) for b in range(n + 1)]


def restriction_matrix(Z, m, n):
    """Evaluation map H^0(O(m, n)) -> H^0(O_Z); rows = staircase coordinates."""
    if m < 0 or n < 0:
        raise ParameterError("requires m, n >= 0")
    cols = [Z.evaluation(a, b) for a, b in monomial_exponents(m, n)]
    rows = tuple(tuple(col[r] for col in cols) for r in range(Z.length))
    return RationalMatrix(Z.length, len(cols), rows)


@dataclass(frozen=True)
class CohomologyReport:
    l: int
    m: int
    n: int
    rank: int
    h0: int
    h1: int
    predicted_k: object = None
    agrees: object = None

    def as_dict(self):
        return {
            "l": self.l,
            "m": self.m,
            "n": self.n,
            "rank": self.rank,
            "h0": self.h0,
            "h1": self.h1,
            "predicted_k": self.predicted_k,
            "agrees": self.agrees,
        }


def in_bn_range(l, m, n):
    return m >= 0 and n >= 0 and (m, n) != (0, 0) and m + n >= l - 1


def cohomology(Z, m, n, checked=False):
    M = restriction_matrix(Z, m, n)
    r = rank_checked(M) if checked else rank(M)
    l = Z.length
    h0 = (m + 1) * (n + 1) - r
    h1 = l - r
    assert h0 - h1 == (m + 1) * (n + 1) - l
    predicted = predict_h1(Z, m, n) if in_bn_range(l, m, n) else None
    agrees = None if predicted is None else predicted == h1
    return CohomologyReport(l, m, n, r, h0, h1, predicted, agrees)


def _excess_sum(profiles, bound):
    return sum(r - bound for rho in profiles for r in rho if r > bound)


def predict_h1(Z, m, n):
    """h^1(I_Z(m, n)) predicted from the line profiles, for m + n >= l - 1."""
    l = Z.length
    if m < 0 or n < 0:
        raise ParameterError("requires m, n >= 0")
    if m + n < l - 1:
        raise ParameterError("requires m+n >= l-1")
    long_vertical = any(d.length >= n + 2 for d in Z.vertical_lines)
    long_horizontal = any(e.length >= m + 2 for e in Z.horizontal_lines)
    if long_vertical and long_horizontal:
        raise DisjointnessViolation(
            f"scheme of length {l} meets a vertical line in >= {n + 2} and a horizontal line in >= {m + 2}"
        )
    if long_vertical:
        return _excess_sum(Z.sigma_profiles, n + 1)
    if long_horizontal:
        return _excess_sum(Z.tau_profiles, m + 1)
    return 0


def predict_h1_multiline(profiles, m, n, ruling):
    """h^1 for a scheme on multiple lines of one ruling, from their profiles alone.

    ``ruling="vertical"`` needs m >= mu - 1 and n >= -1; ``"horizontal"`` needs
    n >= nu - 1 and m >= -1, where mu / nu is the total line multiplicity.
    """
    mult = sum(len(p) for p in profiles)
    if ruling == "vertical":
        if m < mult - 1 or n < -1:
            raise ParameterError(f"requires m >= {mult - 1} and n >= -1")
        return _excess_sum(profiles, n + 1)
    if ruling == "horizontal":
        if n < mult - 1 or m < -1:
            raise ParameterError(f"requires n >= {mult - 1} and m >= -1")
        return _excess_sum(profiles, m + 1)
    raise ParameterError("ruling must be 'vertical' or 'horizontal'")


def graph_curve_h1(l, c, m, n):
    """h^1 for l points on an irreducible curve x = g(z) with deg g = c."""
    if m < 0 or n < c - 1:
        raise ParameterError(f"requires m >= 0 and n >= {c - 1}")
    return max(0, l - 1 - c * m - n)
