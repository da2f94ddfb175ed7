"""Linear arrangements, their total link cost, and the exhaustive oracle.

Positions are 1-based: an arrangement of an n-vertex tree maps every vertex
to a distinct position in ``1..n``.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from ddlandscape.cost import CostFunction
from ddlandscape.errors import DomainError, OracleCapError
from ddlandscape.trees import FreeTree

DEFAULT_ORACLE_CAP = 9
ORACLE_CAP_ENV = "DDLANDSCAPE_ORACLE_CAP"


def default_oracle_cap() -> int:
    raw = os.environ.get(ORACLE_CAP_ENV)
    if raw is None:
        return DEFAULT_ORACLE_CAP
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"{ORACLE_CAP_ENV}={raw!r} is not an integer") from None


@dataclass(frozen=True)
class LinearArrangement:
    """``position_of[v]`` is the 1-based position of vertex ``v``."""

    position_of: tuple

    def __post_init__(self):
        pos = tuple(int(p) for p in self.position_of)
        if sorted(pos) != list(range(1, len(pos) + 1)):
            raise DomainError(f"not a bijection onto 1..{len(pos)}: {pos}")
        object.__setattr__(self, "position_of", pos)

    @classmethod
    def identity(cls, n: int) -> "LinearArrangement":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_order(cls, order: Sequence[int]) -> "LinearArrangement":
        """Build from the vertex sequence read left to right."""
        pos = [0] * len(order)
        for i, v in enumerate(order, 1):
            pos[v] = i
        return cls(tuple(pos))

    @property
    def n(self) -> int:
        return len(self.position_of)

    @property
    def order(self) -> tuple:
        """Vertices sorted by position."""
        out = [0] * self.n
        for v, p in enumerate(self.position_of):
            out[p - 1] = v
        return tuple(out)

    def reversed(self) -> "LinearArrangement":
        return LinearArrangement(tuple(self.n + 1 - p for p in self.position_of))

    def to_json(self) -> list:
        return list(self.position_of)


def _check(t: FreeTree, a: LinearArrangement):
    if a.n != t.n:
        raise DomainError(f"arrangement has {a.n} positions but the tree has {t.n} vertices")


def total_cost(t: FreeTree, a: LinearArrangement, g: CostFunction):
    """Sum of ``g(|pos(u) - pos(v)|)`` over the edges of ``t``."""
    _check(t, a)
    pos = a.position_of
    total = 0
    for u, v in t.edges:
        total += g(abs(pos[u] - pos[v]))
    return total


def _cross(a: int, b: int, c: int, d: int) -> bool:
    if a > b:
        a, b = b, a
    if c > d:
        c, d = d, c
    return a < c < b < d or c < a < d < b


def is_planar(t: FreeTree, a: LinearArrangement) -> bool:
    """True iff no two edges with four distinct endpoints interleave."""
    _check(t, a)
    pos = a.position_of
    for (u, v), (x, y) in itertools.combinations(t.edges, 2):
        if len({u, v, x, y}) < 4:
            continue
        if _cross(pos[u], pos[v], pos[x], pos[y]):
            return False
    return True


def random_arrangement(n: int, seed: int) -> LinearArrangement:
    """Uniformly random arrangement from a seeded PCG64 stream."""
    if n < 1:
        raise DomainError("n must be >= 1")
    rng = np.random.default_rng(seed)
    return LinearArrangement(tuple(int(p) for p in rng.permutation(n) + 1))


def random_costs(t: FreeTree, g: CostFunction, samples: int, seed: int) -> np.ndarray:
    """Total costs of ``samples`` independent uniform arrangements."""
    rng = np.random.default_rng(seed)
    pos = rng.permuted(np.tile(np.arange(1, t.n + 1), (samples, 1)), axis=1)
    return _costs(t, g, pos)


def _cost_table(g: CostFunction, n: int) -> np.ndarray:
    vals = [0] + [g(d) for d in range(1, n)]
    if g.exact and all(isinstance(v, int) for v in vals) and max(vals) * max(n - 1, 1) < 2**62:
        return np.array(vals, dtype=np.int64)
    if g.exact:
        return np.array(vals, dtype=object)
    return np.array(vals, dtype=np.float64)


def _costs(t: FreeTree, g: CostFunction, pos: np.ndarray) -> np.ndarray:
    table = _cost_table(g, t.n)
    total = np.zeros(pos.shape[0], dtype=table.dtype)
    for u, v in t.edges:
        total = total + table[np.abs(pos[:, u] - pos[:, v])]
    return total


@lru_cache(maxsize=4)
def _all_positions(n: int) -> np.ndarray:
    # lexicographic in the position map, i.e. row k is the k-th permutation
    arr = np.array(list(itertools.permutations(range(1, n + 1))), dtype=np.int8).reshape(-1, n)
    arr.setflags(write=False)
    return arr


def _planar_mask(t: FreeTree, pos: np.ndarray) -> np.ndarray:
    ok = np.ones(pos.shape[0], dtype=bool)
    for (u, v), (x, y) in itertools.combinations(t.edges, 2):
        if len({u, v, x, y}) < 4:
            continue
        a = np.minimum(pos[:, u], pos[:, v])
        b = np.maximum(pos[:, u], pos[:, v])
        c = np.minimum(pos[:, x], pos[:, y])
        d = np.maximum(pos[:, x], pos[:, y])
        ok &= ~(((a < c) & (c < b) & (b < d)) | ((c < a) & (a < d) & (d < b)))
    return ok


@dataclass
class OracleResult:
    """Exact extrema of the total cost over every (optionally planar) arrangement."""

    min_value: object
    max_value: object
    argmin: list = field(repr=False)
    argmax: list = field(repr=False)
    count_enumerated: int
    mean_value: object = None

    def to_json(self) -> dict:
        return {
            "min": _jsonable(self.min_value),
            "max": _jsonable(self.max_value),
            "argmin_count": len(self.argmin),
            "argmax_count": len(self.argmax),
            "sample_argmin": self.argmin[0].to_json() if self.argmin else None,
            "count_enumerated": self.count_enumerated,
        }


def _jsonable(x):
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.floating,)):
        return float(x)
    return x


def _select(values: np.ndarray, target, tol) -> np.ndarray:
    if tol:
        return np.abs(values - target) <= tol
    return values == target


def brute_force(
    t: FreeTree,
    g: CostFunction,
    planar_only: bool = False,
    cap: Optional[int] = None,
    keep_optimizers: bool = True,
) -> OracleResult:
    """Enumerate all ``n!`` arrangements of ``t`` and report exact extrema.

    Optimizer lists are in lexicographic order of the position map.  The
    mean over the enumerated arrangements is returned as an exact Fraction
    when costs are exact.
    """
    cap = default_oracle_cap() if cap is None else cap
    if t.n > cap:
        raise OracleCapError(t.n, cap)
    pos = _all_positions(t.n)
    costs = _costs(t, g, pos)
    if planar_only:
        mask = _planar_mask(t, pos)
        pos = pos[mask]
        costs = costs[mask]
    lo = costs.min()
    hi = costs.max()
    tol = g.tolerance
    argmin, argmax = [], []
    if keep_optimizers:
        argmin = [LinearArrangement(tuple(row)) for row in pos[_select(costs, lo, tol)].tolist()]
        argmax = [LinearArrangement(tuple(row)) for row in pos[_select(costs, hi, tol)].tolist()]
    if g.exact:
        total = sum(costs.tolist()) if costs.dtype == object else int(costs.sum())
        mean = Fraction(total, len(costs))
    else:
        mean = float(costs.mean())
    return OracleResult(_jsonable(lo), _jsonable(hi), argmin, argmax, int(len(costs)), mean)
