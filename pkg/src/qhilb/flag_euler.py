"""Euler characteristics of flag Hilbert schemes Hilb(l, (m, n)) and the four tables."""
import csv
import io
import json
import os
from dataclasses import dataclass
from pathlib import Path

from .bn_combinatorics import chi_BN, xi
from .errors import ParameterError
from .euler_series import chi_hilb

SCHEMA_VERSION = 1
GOLDEN_ENV = "QH_GOLDEN_DIR"
TABLE_NAMES = ("t1", "t2", "t3", "t4")

# index columns, value columns
TABLE_COLUMNS = {
    "t1": (("l",), ("chi_hilb",)),
    "t2": (("l", "m"), ("xi",)),
    "t3": (("l", "m", "n"), ("chi_flag",)),
    "t4": (("l", "m"), ("slope", "intercept")),
}

TABLE_TITLES = {
    "t1": "chi(Hilb(l)), 2 <= l <= 8",
    "t2": "xi(l, m), 2 <= l <= 8, 0 <= m <= l-2",
    "t3": "chi(Hilb(l,(m,n))), 3 <= l <= 8, m+n >= l-1, 1 <= m <= n <= l-2",
    "t4": "chi(Hilb(l,(m,n))) = slope*n + intercept, 2 <= l <= 8, 0 <= m <= l-2 < n",
}


@dataclass(frozen=True)
class LinearInN:
    slope: int
    intercept: int

    def __call__(self, n):
        return self.slope * n + self.intercept

    def __str__(self):
        sign = "-" if self.intercept < 0 else "+"
        return f"{self.slope}n {sign} {abs(self.intercept)}"


def _check_flag_args(l, m, n):
    if l < 1:
        raise ParameterError("requires l >= 1")
    if m < 0 or n < 0:
        raise ParameterError("requires m, n >= 0")
    if m == 0 and n == 0:
        raise ParameterError("requires (m,n) != (0,0)")
    if m + n < l - 1:
        raise ParameterError("requires m+n >= l-1")


def _sections(l, m, n):
    return m * n + m + n + 1 - l


def chi_flag(l, m, n):
    _check_flag_args(l, m, n)
    if l == 1:
        # a single point never fails to impose a condition, so the BN sum is empty
        return _sections(l, m, n) * chi_hilb(1)
    return _sections(l, m, n) * chi_hilb(l) + xi(l, m) + xi(l, n)


def chi_flag_bnhe(l, m, n):
    """Same quantity assembled from the Brill-Noether strata, stratum by stratum."""
    _check_flag_args(l, m, n)
    total = _sections(l, m, n) * chi_hilb(l)
    if l >= 2:
        total += sum(k * chi_BN(k, l, m, n) for k in range(1, l + 1))
    return total


def chi_flag_linear(l, m):
    if l < 2:
        raise ParameterError("requires l >= 2")
    if not 0 <= m <= l - 2:
        raise ParameterError("requires 0 <= m <= l-2")
    h = chi_hilb(l)
    # for n >= l-1 the xi(l, n) term vanishes
    return LinearInN((m + 1) * h, (m + 1 - l) * h + xi(l, m))


def table_indices(name):
    if name == "t1":
        return [(l,) for l in range(2, 9)]
    if name in ("t2", "t4"):
        return [(l, m) for l in range(2, 9) for m in range(0, l - 1)]
    if name == "t3":
        return [
            (l, m, n)
            for l in range(3, 9)
            for m in range(1, l - 1)
            for n in range(m, l - 1)
            if m + n >= l - 1
        ]
    raise KeyError(name)


def table_cell(name, index):
    if name == "t1":
        return (chi_hilb(*index),)
    if name == "t2":
        return (xi(*index),)
    if name == "t3":
        return (chi_flag(*index),)
    if name == "t4":
        lin = chi_flag_linear(*index)
        return (lin.slope, lin.intercept)
    raise KeyError(name)


def emit_tables():
    """All four tables as ``{name: {index_tuple: value_tuple}}``."""
    return {name: {idx: table_cell(name, idx) for idx in table_indices(name)} for name in TABLE_NAMES}


def golden_dir():
    override = os.environ.get(GOLDEN_ENV)
    if override:
        return Path(override)
    return Path(__file__).resolve().parent / "tables"


def read_table_csv(path, name):
    ncols = len(TABLE_COLUMNS[name][0])
    rows = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        expected = list(TABLE_COLUMNS[name][0] + TABLE_COLUMNS[name][1])
        if header != expected:
            raise ValueError(f"{path}: header {header} != {expected}")
        for rec in reader:
            if not rec:
                continue
            ints = tuple(int(x) for x in rec)
            rows[ints[:ncols]] = ints[ncols:]
    return rows


def load_golden(directory=None):
    directory = Path(directory) if directory is not None else golden_dir()
    missing = [n for n in TABLE_NAMES if not (directory / f"{n}.csv").is_file()]
    if missing:
        raise FileNotFoundError(f"missing golden files in {directory}: {', '.join(missing)}")
    return {n: read_table_csv(directory / f"{n}.csv", n) for n in TABLE_NAMES}


def compare_tables(computed, golden):
    """Per-cell differences as ``(table, index, expected, got)``; ``None`` marks an absent side."""
    diffs = []
    for name in TABLE_NAMES:
        want, got = golden.get(name, {}), computed.get(name, {})
        for idx in sorted(set(want) | set(got)):
            if want.get(idx) != got.get(idx):
                diffs.append((name, idx, want.get(idx), got.get(idx)))
    return diffs


def cell_count(tables):
    return sum(len(t) for t in tables.values())


def _index_key(idx):
    return "(" + ", ".join(str(i) for i in idx) + ")"


def tables_to_csv(tables):
    buf = io.StringIO()
    for i, name in enumerate(TABLE_NAMES):
        if i:
            buf.write("\n")
        buf.write(f"# {name}: {TABLE_TITLES[name]}\n")
        writer = csv.writer(buf, lineterminator="\n")
        idx_cols, val_cols = TABLE_COLUMNS[name]
        writer.writerow(idx_cols + val_cols)
        for idx, val in tables[name].items():
            writer.writerow(idx + val)
    return buf.getvalue()


def tables_to_json(tables):
    doc = {"schema": SCHEMA_VERSION}
    for name in TABLE_NAMES:
        _, val_cols = TABLE_COLUMNS[name]
        entries = {}
        for idx, val in tables[name].items():
            entries[_index_key(idx)] = val[0] if len(val) == 1 else dict(zip(val_cols, val))
        doc[name] = entries
    return json.dumps(doc, indent=2) + "\n"


def tables_to_markdown(tables):
    lines = []
    for name in TABLE_NAMES:
        idx_cols, val_cols = TABLE_COLUMNS[name]
        header = ["(" + ", ".join(idx_cols) + ")"] + list(val_cols)
        body = [[_index_key(idx)] + [str(v) for v in val] for idx, val in tables[name].items()]
        widths = [max(len(r[c]) for r in [header] + body) for c in range(len(header))]
        lines.append(f"### {name}: {TABLE_TITLES[name]}")
        lines.append("")
        lines.append("| " + " | ".join(h.ljust(w) for h, w in zip(header, widths)) + " |")
        lines.append("|" + "|".join(("-" * (w + 1)) + ":" for w in widths) + "|")
        for row in body:
            lines.append("| " + " | ".join(c.rjust(w) for c, w in zip(row, widths)) + " |")
        lines.append("")
    return "\n".join(lines)


FORMATTERS = {"csv": tables_to_csv, "json": tables_to_json, "md": tables_to_markdown}
