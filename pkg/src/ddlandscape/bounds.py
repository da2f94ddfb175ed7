"""Closed-form extrema of the identity-cost total distance, per tree family.

All arithmetic is exact (ints and Fractions).  Where no closed form is
known the table falls back to exhaustive enumeration, and leaves the cell
empty above the oracle cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

import numpy as np

from ddlandscape.arrangement import brute_force, default_oracle_cap
from ddlandscape.cost import CostFunction
from ddlandscape.errors import DomainError, UnsupportedFamilyError
from ddlandscape.trees import FreeTree, classify, hubiness, make_balanced_bistar, make_family

FAMILIES = ("star", "quasistar", "path", "balanced_bistar")
MIN_SIZE = {"star": 3, "quasistar": 4, "path": 2, "balanced_bistar": 4}


def d_random(n: int) -> Fraction:
    """Expected identity cost of a uniformly random arrangement of any n-vertex tree.

    Each of the ``n - 1`` edges has expected length ``(n + 1) / 3``.
    """
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    return Fraction((n - 1) * (n + 1), 3)


def _require(family: str, n: int):
    if n < MIN_SIZE[family]:
        raise DomainError(f"{family} needs n >= {MIN_SIZE[family]}, got {n}")


def d_min_formula(family: str, n: int) -> int:
    """Minimum identity cost over all arrangements.

    ``balanced_bistar`` goes through the caterpillar formula.
    """
    if family not in FAMILIES:
        raise UnsupportedFamilyError(f"no closed-form minimum for {family!r}")
    _require(family, n)
    if family == "star":
        return n * n // 4
    if family == "path":
        return n - 1
    if family == "quasistar":
        return (n - 1) ** 2 // 4 + 1
    return caterpillar_d_min(make_balanced_bistar(n))


def d_max_formula(family: str, n: int) -> int:
    """Maximum identity cost over all arrangements."""
    if family not in FAMILIES:
        raise UnsupportedFamilyError(f"no closed-form maximum for {family!r}")
    _require(family, n)
    if family == "star":
        return n * (n - 1) // 2
    if family == "quasistar":
        return (n + 3) * (n - 2) // 2
    if family == "path":
        return n * n // 2 - 1
    num = 3 * (n - 1) ** 2 + 1 - n % 2
    assert num % 4 == 0
    return num // 4


def caterpillar_d_min(t: FreeTree) -> int:
    """``(n <k^2> + z) / 4`` where ``z`` counts odd-degree vertices."""
    if "caterpillar" not in classify(t):
        raise UnsupportedFamilyError("tree is not a caterpillar")
    z = sum(1 for k in t.degrees if k % 2)
    val = (t.n * hubiness(t) + z) / 4
    if val.denominator != 1:
        raise AssertionError(f"caterpillar minimum {val} is not an integer")
    return int(val)


def iordanskii_curve(n: float, k_max: float, c: float) -> float:
    """Reference curve ``c * k_max / ln(k_max) * n ln n`` (natural logs).

    The constant is not known, so the curve is for comparison only.
    """
    if n < 3:
        raise DomainError(f"n must be >= 3, got {n}")
    if k_max < 2:
        raise DomainError(f"k_max must be >= 2 for log(k_max) > 0, got {k_max}")
    if not c > 0:
        raise DomainError("c must be positive")
    return c * k_max / math.log(k_max) * n * math.log(n)


@dataclass(frozen=True)
class BoundsRow:
    n: int
    family: str
    d_min: Optional[int]
    d_max: Optional[int]
    d_random: Fraction
    source: str
    oracle_min: Optional[int] = None
    oracle_max: Optional[int] = None

    def csv_row(self) -> list:
        blank = lambda v: "" if v is None else v
        dr = self.d_random
        return [self.n, self.family, blank(self.d_min), blank(self.d_max), f"{dr.numerator}/{dr.denominator}" if dr.denominator != 1 else dr.numerator, self.source]

    def to_json(self) -> dict:
        dr = self.d_random
        return {
            "n": self.n,
            "family": self.family,
            "d_min": self.d_min,
            "d_max": self.d_max,
            "d_random": str(dr),
            "source": self.source,
            "oracle_min": self.oracle_min,
            "oracle_max": self.oracle_max,
        }


CSV_HEADER = ["n", "family", "d_min", "d_max", "d_random", "source"]


def _formula(fn, family, n):
    try:
        return fn(family, n)
    except UnsupportedFamilyError:
        return None


def bounds_table(
    n_range: Iterable[int],
    families: Sequence[str] = FAMILIES,
    oracle_cap: Optional[int] = None,
    use_oracle: bool = True,
) -> List[BoundsRow]:
    """One row per ``(n, family)``; sizes below a family's minimum are skipped."""
    ns = list(n_range)
    if not ns:
        raise DomainError("empty n range")
    cap = default_oracle_cap() if oracle_cap is None else oracle_cap
    g = CostFunction.identity()
    rows = []
    for n in ns:
        for family in families:
            if family not in MIN_SIZE:
                raise UnsupportedFamilyError(f"unknown family {family!r}")
            if n < MIN_SIZE[family]:
                continue
            lo = _formula(d_min_formula, family, n)
            hi = _formula(d_max_formula, family, n)
            o_lo = o_hi = None
            if use_oracle and n <= cap:
                res = brute_force(make_family(family, n), g, cap=cap, keep_optimizers=False)
                o_lo, o_hi = int(res.min_value), int(res.max_value)
            src_lo = "formula" if lo is not None else ("oracle" if o_lo is not None else "none")
            src_hi = "formula" if hi is not None else ("oracle" if o_hi is not None else "none")
            rows.append(
                BoundsRow(
                    n,
                    family,
                    lo if lo is not None else o_lo,
                    hi if hi is not None else o_hi,
                    d_random(n),
                    f"min:{src_lo};max:{src_hi}",
                    o_lo,
                    o_hi,
                )
            )
    return rows


def oracle_mismatches(rows: Iterable[BoundsRow]) -> list:
    """``(n, family, which, table_value, oracle_value)`` for every disagreement."""
    bad = []
    for r in rows:
        if r.oracle_min is not None and r.d_min != r.oracle_min:
            bad.append((r.n, r.family, "d_min", r.d_min, r.oracle_min))
        if r.oracle_max is not None and r.d_max != r.oracle_max:
            bad.append((r.n, r.family, "d_max", r.d_max, r.oracle_max))
    return bad


def growth_exponent(rows: Iterable[BoundsRow], family: str, column: str = "d_min") -> float:
    """Least-squares slope of log(value) against log(n) for one family."""
    pts = [(r.n, getattr(r, column)) for r in rows if r.family == family and getattr(r, column)]
    if len(pts) < 2:
        raise DomainError(f"need at least two {family} rows with {column}")
    x = np.log([p[0] for p in pts])
    y = np.log([float(p[1]) for p in pts])
    return float(np.polyfit(x, y, 1)[0])


def minimization_contrast(rows: Sequence[BoundsRow]) -> dict:
    """Per family: growth exponent of the minimum and the ratio d_min / d_random at the largest n.

    Star-like families keep a quadratic minimum (ratio near 3/4), the path
    minimum is linear (ratio tending to 0).
    """
    out = {}
    for family in dict.fromkeys(r.family for r in rows):
        fam_rows = [r for r in rows if r.family == family and r.d_min is not None]
        if len(fam_rows) < 2:
            continue
        last = max(fam_rows, key=lambda r: r.n)
        expo = growth_exponent(fam_rows, family)
        out[family] = {
            "exponent": expo,
            "growth": "quadratic" if expo > 1.5 else "subquadratic",
            "min_over_random": Fraction(last.d_min) / last.d_random,
        }
    return out


PANELS = {
    "a": "d_min vs n",
    "b": "d_max vs n",
    "c": "star-like band",
    "d": "path band",
}


def plot_series(rows: Sequence[BoundsRow]) -> list:
    """Long-format ``(panel, series, n, value)`` records for the four-panel figure.

    Every panel carries the random baseline as series ``random``.
    """
    out = []
    ns = sorted({r.n for r in rows})
    baseline = [(n, d_random(n)) for n in ns]

    def add(panel, series, pairs):
        for n, v in pairs:
            if v is not None:
                out.append((panel, series, n, v))

    families = list(dict.fromkeys(r.family for r in rows))
    for fam in families:
        add("a", fam, [(r.n, r.d_min) for r in rows if r.family == fam])
    for fam in families:
        add("b", fam, [(r.n, r.d_max) for r in rows if r.family == fam])
    for fam in ("star", "quasistar"):
        add("c", f"{fam}_min", [(r.n, r.d_min) for r in rows if r.family == fam])
        add("c", f"{fam}_max", [(r.n, r.d_max) for r in rows if r.family == fam])
    add("d", "path_min", [(r.n, r.d_min) for r in rows if r.family == "path"])
    add("d", "path_max", [(r.n, r.d_max) for r in rows if r.family == "path"])
    for panel in PANELS:
        add(panel, "random", baseline)
    return out
