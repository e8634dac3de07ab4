"""Deterministic streams of test schemes and their JSON form."""
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..bn_combinatorics import chi_BN
from ..partitions import all_bipartitions, enumerate_partitions, strip_zeros
from .local import HORIZONTAL, ORIENTATIONS, VERTICAL
from .scheme import build_scheme, in_bn_range, predict_h1

SCHEMA_VERSION = 1
COORD_RANGE = range(-9, 10)


@dataclass(frozen=True)
class InstanceSpec:
    supports: tuple
    orientations: tuple
    profiles: tuple
    coefficient_seed: object = None
    kind: str = ""
    params: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def length(self):
        return sum(sum(p) for p in self.profiles)

    def component_seed(self, index):
        if self.coefficient_seed is None:
            return None
        return self.coefficient_seed * 1_000_003 + index

    def with_seed(self, seed):
        return InstanceSpec(self.supports, self.orientations, self.profiles, seed, self.kind, dict(self.params))

    def build(self, validate=True):
        specs = [
            (s, o, p, self.component_seed(i))
            for i, (s, o, p) in enumerate(zip(self.supports, self.orientations, self.profiles))
        ]
        return build_scheme(specs, validate=validate)

    def to_dict(self):
        return {
            "schema": SCHEMA_VERSION,
            "kind": self.kind,
            "l": self.length,
            "supports": [[str(Fraction(a)), str(Fraction(b))] for a, b in self.supports],
            "orientations": list(self.orientations),
            "profiles": [list(p) for p in self.profiles],
            "coefficient_seed": self.coefficient_seed,
            "params": self.params,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d):
        if d.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported instance schema {d.get('schema')!r}")
        inst = cls(
            tuple((Fraction(a), Fraction(b)) for a, b in d["supports"]),
            tuple(d["orientations"]),
            tuple(tuple(p) for p in d["profiles"]),
            d.get("coefficient_seed"),
            d.get("kind", ""),
            dict(d.get("params", {})),
        )
        if "l" in d and d["l"] != inst.length:
            raise ValueError(f"declared l={d['l']} but profiles sum to {inst.length}")
        return inst

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def _make(points, kind, seed, **params):
    """``points``: list of ``((x, z), orientation, profile)``."""
    return InstanceSpec(
        tuple((Fraction(x), Fraction(z)) for (x, z), _, _ in points),
        tuple(o for _, o, _ in points),
        tuple(tuple(p) for _, _, p in points),
        seed,
        kind,
        params,
    )


def _fresh(rng, used, count):
    pool = [c for c in COORD_RANGE if c not in used]
    picked = rng.sample(pool, count)
    used.update(picked)
    return picked


def generic_points(l, rng):
    """l reduced points, no two on a common line of either ruling."""
    xs = rng.sample(list(COORD_RANGE), l)
    zs = rng.sample(list(COORD_RANGE), l)
    return [((x, z), HORIZONTAL, (1,)) for x, z in zip(xs, zs)]


def aligned_instance(l, a, ruling, style, rng, seed):
    """``a`` units of length on one line of ``ruling``, the rest in general position.

    ``style``: "reduced" (a distinct points), "fat" (one curvilinear point of
    length a along the line) or "mixed" (a fat point of length a-1 plus a point).
    """
    line = rng.choice(list(COORD_RANGE))
    used_along = set()
    used_line = {line}
    if style == "reduced":
        pieces = [1] * a
    elif style == "fat":
        pieces = [a]
    else:
        pieces = [a - 1, 1] if a >= 2 else [a]
    along = _fresh(rng, used_along, len(pieces))
    orient = VERTICAL if ruling == "vertical" else HORIZONTAL
    pts = []
    for pos, size in zip(along, pieces):
        xz = (line, pos) if ruling == "vertical" else (pos, line)
        pts.append((xz, orient, (size,)))
    rest = l - a
    if rest:
        others = _fresh(rng, used_line, rest)
        alongs = _fresh(rng, used_along, rest)
        for o, p in zip(others, alongs):
            xz = (o, p) if ruling == "vertical" else (p, o)
            pts.append((xz, HORIZONTAL, (1,)))
    return _make(pts, "aligned", seed, ruling=ruling, run=a, style=style)


def _profile_tuples(l, max_lines=3):
    """Unordered tuples of partitions (as sorted tuples) of total size l."""
    out = []

    def rec(rem, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        if len(acc) == max_lines:
            return
        for size in range(rem, 0, -1):
            for rho in enumerate_partitions(size):
                if acc and (size, rho) > (sum(acc[-1]), acc[-1]):
                    continue
                acc.append(rho)
                rec(rem - size, acc)
                acc.pop()

    rec(l, [])
    return out


def thickened_instance(profiles, ruling, split, rng, seed):
    """Schemes on distinct lines of one ruling realising a given profile tuple.

    With ``split`` a line's profile is shared between two points when it has a
    bipartition into two nonzero strings.
    """
    orient = VERTICAL if ruling == "vertical" else HORIZONTAL
    used_line, used_along = set(), set()
    lines = _fresh(rng, used_line, len(profiles))
    pts = []
    for line, rho in zip(lines, profiles):
        parts = [rho]
        if split:
            options = [
                (strip_zeros(a), strip_zeros(b))
                for a, b in all_bipartitions(rho)
                if any(a) and any(b)
            ]
            if options:
                parts = list(rng.choice(options))
        for along, piece in zip(_fresh(rng, used_along, len(parts)), parts):
            xz = (line, along) if ruling == "vertical" else (along, line)
            pts.append((xz, orient, piece))
    return _make(pts, "thickened", seed, ruling=ruling, profiles=[list(p) for p in profiles], split=split)


def graph_curve_instance(l, c, rng, seed):
    """l reduced points on x = g(z), deg g = c, with distinct z (and distinct x when c >= 1)."""
    while True:
        if c == 0:
            coeffs = [rng.choice(list(COORD_RANGE))]
        else:
            coeffs = [rng.choice(range(-3, 4)) for _ in range(c)] + [rng.choice([-2, -1, 1, 2])]
        zs = rng.sample(list(COORD_RANGE), l)
        xs = [sum(a * z**i for i, a in enumerate(coeffs)) for z in zs]
        if c == 0 or len(set(xs)) == l:
            break
    pts = [((x, z), HORIZONTAL, (1,)) for x, z in zip(xs, zs)]
    return _make(pts, "graph", seed, degree=c, g=coeffs)


def random_instance(l, rng, seed):
    """Random components on a small grid, so lines are often shared."""
    sizes = []
    rem = l
    while rem:
        s = rng.randint(1, rem)
        sizes.append(s)
        rem -= s
    grid = [(x, z) for x in range(4) for z in range(4)]
    supports = rng.sample(grid, len(sizes))
    pts = []
    for s, xz in zip(sizes, supports):
        rho = rng.choice(enumerate_partitions(s))
        pts.append((xz, rng.choice(ORIENTATIONS), rho))
    return _make(pts, "random", seed)


def stratum_instances(k, l, m, n, seed=1):
    """Schemes with h^1(I_Z(m, n)) = k, built on one long line of either ruling."""
    rng = random.Random(f"stratum:{seed}:{k}:{l}:{m}:{n}")
    out = []
    for ruling, bound in (("vertical", n), ("horizontal", m)):
        a = k + bound + 1
        if k < 1 or a > l:
            continue
        for style in ("reduced", "fat", "mixed"):
            out.append(aligned_instance(l, a, ruling, style, rng, rng.randrange(1, 10**6)))
    return out


@dataclass(frozen=True)
class CampaignConfig:
    l_range: tuple = (1, 6)
    m_range: tuple = (0, 7)
    n_range: tuple = (0, 7)
    trials: int = 200
    seed: int = 42

    def mn_pairs(self, l):
        return [
            (m, n)
            for m in range(self.m_range[0], self.m_range[1] + 1)
            for n in range(self.n_range[0], self.n_range[1] + 1)
            if in_bn_range(l, m, n)
        ]


def generate_instances(config):
    """The campaign's instance stream; identical for identical configs."""
    rng = random.Random(f"campaign:{config.seed}")

    def seed():
        return rng.randrange(1, 10**6)

    lo, hi = config.l_range
    for l in range(lo, hi + 1):
        yield _make(generic_points(l, rng), "generic", seed())
        for a in range(2, l + 1):
            for ruling in ("vertical", "horizontal"):
                for style in ("reduced", "fat", "mixed"):
                    yield aligned_instance(l, a, ruling, style, rng, seed())
        for profiles in _profile_tuples(l):
            for ruling in ("vertical", "horizontal"):
                for split in (False, True):
                    yield thickened_instance(profiles, ruling, split, rng, seed())
        for c in range(0, 4):
            yield graph_curve_instance(l, c, rng, seed())
    for _ in range(config.trials):
        l = rng.randint(max(lo, 1), hi)
        yield random_instance(l, rng, seed())


def coverage(config, instances=None):
    """(k, l, m, n) with chi_BN > 0 that no instance in the stream predicts."""
    if instances is None:
        instances = list(generate_instances(config))
    hit = set()
    for inst in instances:
        Z = inst.build(validate=False)
        for m, n in config.mn_pairs(Z.length):
            k = predict_h1(Z, m, n)
            if k:
                hit.add((k, Z.length, m, n))
    missing = []
    lo, hi = config.l_range
    for l in range(max(lo, 2), hi + 1):
        for m, n in config.mn_pairs(l):
            for k in range(1, l + 1):
                if chi_BN(k, l, m, n) > 0 and (k, l, m, n) not in hit:
                    missing.append((k, l, m, n))
    return missing
