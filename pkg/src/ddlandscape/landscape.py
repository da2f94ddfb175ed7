"""Cost landscapes of stars and quasistars.

The star landscape is the cost as a function of the hub position ``l``.  The
quasistar landscape is a function of three positions: the hub ``l``, the
degree-2 vertex ``p`` and its pendant leaf ``q``.  It is obtained by taking
the star on ``n`` vertices with hub at ``l``, cutting the hub-leaf link at
``q`` and reattaching that leaf to ``p``.  Index triples that are not
pairwise distinct cannot be realised by any arrangement; they are holes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Tuple

import numpy as np

from ddlandscape.arrangement import LinearArrangement
from ddlandscape.convexity import GridFunction
from ddlandscape.cost import CostFunction
from ddlandscape.errors import DomainError, HoleError

AXES = ("l", "p", "q")


@dataclass(frozen=True)
class StarLandscape:
    """Cost of a star for every hub position ``1..n``.

    ``offset`` is a constant already included in ``values``; it is non-zero
    only for the reduced landscape of a planar quasistar.
    """

    n: int
    g: CostFunction
    values: tuple
    optimal_positions: frozenset
    offset: object = 0

    def __getitem__(self, l: int):
        if not 1 <= l <= self.n:
            raise DomainError(f"hub position {l} outside 1..{self.n}")
        return self.values[l - 1]

    @property
    def min_value(self):
        return min(self.values)

    def to_grid_function(self) -> GridFunction:
        return GridFunction.from_sequence(self.values, exact=self.g.exact)


def _check_star(n: int, l: int):
    if n < 3:
        raise DomainError(f"star landscape needs n >= 3, got {n}")
    if not 1 <= l <= n:
        raise DomainError(f"hub position {l} outside 1..{n}")


def star_cost(n: int, l: int, g: CostFunction):
    """Cost of the links left of the hub plus the links right of it."""
    _check_star(n, l)
    return _add(g.prefix_sum(l - 1), g.prefix_sum(n - l))


def _add(a, b):
    s = a + b
    return int(s) if hasattr(s, "denominator") and s.denominator == 1 else s


def star_identity_polynomial(n: int, l: int) -> int:
    """``l**2 + (n + 1) * (n/2 - l)`` kept in integers."""
    twice = 2 * l * l + (n + 1) * (n - 2 * l)
    assert twice % 2 == 0
    return twice // 2


def _argmin(values, tol) -> frozenset:
    lo = min(values)
    return frozenset(i + 1 for i, v in enumerate(values) if v - lo <= tol)


def star_landscape(n: int, g: CostFunction) -> StarLandscape:
    if n < 3:
        raise DomainError(f"star landscape needs n >= 3, got {n}")
    s = g.prefix_sums(n - 1)
    values = tuple(_add(s[l - 1], s[n - l]) for l in range(1, n + 1))
    return StarLandscape(n, g, values, _argmin(values, g.tolerance))


def quasistar_cost(n: int, l: int, p: int, q: int, g: CostFunction):
    """Star cost with the ``l``-``q`` link replaced by a ``p``-``q`` link.

    Raises :class:`HoleError` unless ``l``, ``p``, ``q`` are pairwise
    distinct (``p == l`` would give back the star).
    """
    if n < 4:
        raise DomainError(f"quasistar needs n >= 4, got {n}")
    for name, v in zip(AXES, (l, p, q)):
        if not 1 <= v <= n:
            raise DomainError(f"{name}={v} outside 1..{n}")
    if len({l, p, q}) < 3:
        raise HoleError(f"(l, p, q) = ({l}, {p}, {q}) are not pairwise distinct")
    return star_cost(n, l, g) - g(abs(l - q)) + g(abs(p - q))


def quasistar_arrangement(n: int, l: int, p: int, q: int) -> LinearArrangement:
    """Arrangement of ``make_quasistar(n)`` realising the cell ``(l, p, q)``.

    The hub (vertex 0) sits at ``l``, vertex 1 at ``p``, vertex ``n - 1`` at
    ``q``; the remaining leaves fill the free positions in label order.
    """
    if len({l, p, q}) < 3:
        raise HoleError(f"(l, p, q) = ({l}, {p}, {q}) are not pairwise distinct")
    free = iter(sorted(set(range(1, n + 1)) - {l, p, q}))
    pos = [l, p] + [next(free) for _ in range(2, n - 1)] + [q]
    return LinearArrangement(tuple(pos))


def star_arrangement(n: int, l: int) -> LinearArrangement:
    """Hub (vertex 0) at ``l``, leaves in label order elsewhere."""
    free = [x for x in range(1, n + 1) if x != l]
    return LinearArrangement(tuple([l] + free))


@dataclass(frozen=True)
class QuasistarGrid:
    """Quasistar costs over ``(l, p, q)``; holes are simply absent cells."""

    n: int
    g: CostFunction
    planar_only: bool
    cells: Dict[Tuple[int, int, int], object] = field(repr=False)

    def __len__(self) -> int:
        return len(self.cells)

    def __contains__(self, idx) -> bool:
        return tuple(idx) in self.cells

    def is_hole(self, l: int, p: int, q: int) -> bool:
        return (l, p, q) not in self.cells

    def value(self, l: int, p: int, q: int):
        try:
            return self.cells[(l, p, q)]
        except KeyError:
            if len({l, p, q}) < 3 or not all(1 <= v <= self.n for v in (l, p, q)):
                raise HoleError(f"({l}, {p}, {q}) is a hole") from None
            raise HoleError(f"({l}, {p}, {q}) is filtered out (|p - q| != 1)") from None

    @property
    def min_value(self):
        return min(self.cells.values())

    @property
    def max_value(self):
        return max(self.cells.values())

    def argmin(self) -> list:
        lo = self.min_value
        tol = self.g.tolerance
        return [c for c, v in self.cells.items() if v - lo <= tol]

    def to_masked_array(self) -> np.ma.MaskedArray:
        """``arr[l-1, p-1, q-1]``; holes are masked."""
        n = self.n
        dtype = np.float64 if not self.g.exact else object
        data = np.zeros((n, n, n), dtype=dtype)
        mask = np.ones((n, n, n), dtype=bool)
        for (l, p, q), v in self.cells.items():
            data[l - 1, p - 1, q - 1] = v
            mask[l - 1, p - 1, q - 1] = False
        return np.ma.MaskedArray(data, mask=mask)

    def to_grid_function(self) -> GridFunction:
        return GridFunction(self.cells, exact=self.g.exact)

    def slice(self, axis: str, value: int) -> np.ma.MaskedArray:
        """2-D view fixing one axis; rows/columns follow the other two in l, p, q order."""
        if axis not in AXES:
            raise DomainError(f"axis must be one of {AXES}, got {axis!r}")
        if not 1 <= value <= self.n:
            raise DomainError(f"{axis}={value} outside 1..{self.n}")
        k = AXES.index(axis)
        return self.to_masked_array().take(value - 1, axis=k)

    def slice_axes(self, axis: str) -> tuple:
        return tuple(a for a in AXES if a != axis)

    def csv_rows(self):
        for (l, p, q), v in self.cells.items():
            yield (l, p, q, v)


@lru_cache(maxsize=64)
def quasistar_grid(n: int, g: CostFunction, planar_only: bool = False) -> QuasistarGrid:
    """Every realisable cell, lexicographically ordered.

    With ``planar_only`` only cells with ``|p - q| = 1`` are kept: the
    pendant leaf must sit next to its parent for the link ``p``-``q`` not to
    cross a hub link.
    """
    if n < 4:
        raise DomainError(f"quasistar needs n >= 4, got {n}")
    s = g.prefix_sums(n - 1)
    star = [None] + [_add(s[l - 1], s[n - l]) for l in range(1, n + 1)]
    gd = [None] + [g(d) for d in range(1, n)]
    cells = {}
    for l, p, q in itertools.permutations(range(1, n + 1), 3):
        if planar_only and abs(p - q) != 1:
            continue
        cells[(l, p, q)] = star[l] - gd[abs(l - q)] + gd[abs(p - q)]
    return QuasistarGrid(n, g, planar_only, cells)


def planar_effective_star(n: int, g: CostFunction) -> StarLandscape:
    """Reduced landscape of a planar quasistar on ``n`` vertices.

    Gluing the pendant leaf to its parent leaves a star whose hub has
    ``n - 2`` neighbours, i.e. a star on ``n - 1`` units, plus the constant
    ``g(1)`` of the glued link.  Hub position ``l`` in this reduced
    landscape corresponds to position ``l`` or ``l + 1`` in the full
    arrangement, depending on which side the glued pair lies.
    """
    if n < 4:
        raise DomainError(f"quasistar needs n >= 4, got {n}")
    base = star_landscape(n - 1, g)
    c = g(1)
    values = tuple(_add(v, c) for v in base.values)
    return StarLandscape(n - 1, g, values, base.optimal_positions, offset=c)


def rewiring_extension(n: int, g: CostFunction) -> GridFunction:
    """The rewiring formula evaluated on the whole cube ``[1, n]**3``.

    Coincident positions use ``g(0) = 0``.  This is not a landscape of
    arrangements; it exists so the behaviour of the formula across the
    ``l = q`` plane (where hub and pendant leaf swap sides) can be audited.
    """
    if n < 4:
        raise DomainError(f"quasistar needs n >= 4, got {n}")
    s = g.prefix_sums(n - 1)
    star = [None] + [_add(s[l - 1], s[n - l]) for l in range(1, n + 1)]
    gd = [0] + [g(d) for d in range(1, n)]
    cells = {
        (l, p, q): star[l] - gd[abs(l - q)] + gd[abs(p - q)]
        for l, p, q in itertools.product(range(1, n + 1), repeat=3)
    }
    return GridFunction(cells, exact=g.exact)
