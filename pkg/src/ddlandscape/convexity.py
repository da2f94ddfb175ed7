"""Discrete-convexity checks for sequences and for grid functions with holes.

Sequence checks (quasiconvexity, convex sequence, forward differences,
secant line) take plain sequences indexed from 1.  Grid checks (discrete
convexity with a max-norm neighbourhood, local submodularity, aggregate
monotonicity) take a :class:`GridFunction`, whose domain may have holes;
any instance that would need a point outside the domain is skipped and
counted, never treated as a failure.

Every failure carries the lexicographically smallest witness.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple

import numpy as np

from ddlandscape.cost import FLOAT_TOLERANCE

HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not-applicable"

SEQUENCE_PROPERTIES = ("quasiconvex", "convex_sequence", "forward_differences", "secant_line")
GRID_PROPERTIES = ("discrete_convexity", "local_submodularity", "aggregate_monotonicity")
ALL_PROPERTIES = SEQUENCE_PROPERTIES + GRID_PROPERTIES

_PAIR_CHUNK = 1 << 20
_EARLY_CHUNK = 1 << 14


def _is_exact(values: Iterable) -> bool:
    return all(isinstance(v, (int, Fraction, np.integer)) and not isinstance(v, bool) for v in values)


def _plain(v):
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, np.floating):
        return float(v)
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


@dataclass
class PropertyResult:
    property: str
    verdict: str
    witness: Optional[dict] = None
    checked: int = 0
    skipped: int = 0
    tolerance: float = 0
    failures: int = 0
    complete: bool = True

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    def to_json(self) -> dict:
        out = asdict(self)
        if self.witness is not None:
            out["witness"] = _json_ready(self.witness)
        return out


def _json_ready(obj):
    if isinstance(obj, dict):
        if any(isinstance(k, tuple) for k in obj):
            return [[_json_ready(k), _json_ready(v)] for k, v in obj.items()]
        return {k: _json_ready(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_ready(v) for v in obj]
    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    return _plain(obj)


@dataclass
class ConvexityReport:
    entries: Dict[str, PropertyResult] = field(default_factory=dict)
    label: str = ""

    def __getitem__(self, name: str) -> PropertyResult:
        return self.entries[name]

    def __iter__(self):
        return iter(self.entries.values())

    def verdict(self, name: str) -> str:
        return self.entries[name].verdict

    def mismatches(self, expected: Dict[str, str]) -> list:
        """Names whose verdict differs from ``expected[name]``."""
        return [k for k, v in expected.items() if k not in self.entries or self.entries[k].verdict != v]

    def to_json(self) -> list:
        return [e.to_json() for e in self.entries.values()]

    def summary(self) -> str:
        lines = [self.label] if self.label else []
        for e in self.entries.values():
            extra = f" witness={_json_ready(e.witness)}" if e.witness else ""
            lines.append(f"  {e.property:<24} {e.verdict:<15} checked={e.checked} skipped={e.skipped}{extra}")
        return "\n".join(lines)


class GridFunction:
    """Real function on a finite set of integer points of dimension 1..3.

    Points absent from ``values`` are holes.  ``exact`` selects the
    comparison tolerance (0 for integer/rational data, 1e-9 otherwise) and
    is inferred from the values when omitted.
    """

    def __init__(self, values: Dict[Tuple[int, ...], object], exact: Optional[bool] = None):
        if not values:
            raise ValueError("grid function has an empty domain")
        items = sorted((tuple(int(c) for c in k), v) for k, v in values.items())
        dims = {len(k) for k, _ in items}
        if len(dims) != 1:
            raise ValueError(f"inconsistent point dimensions {sorted(dims)}")
        self.dims = dims.pop()
        if not 1 <= self.dims <= 3:
            raise ValueError(f"dimension {self.dims} unsupported (1..3)")
        self.values = dict(items)
        self.exact = _is_exact(self.values.values()) if exact is None else bool(exact)
        self.tolerance = 0 if self.exact else FLOAT_TOLERANCE
        self._dense = None

    @classmethod
    def from_sequence(cls, seq: Sequence, exact: Optional[bool] = None) -> "GridFunction":
        return cls({(i,): v for i, v in enumerate(seq, 1)}, exact=exact)

    def __len__(self) -> int:
        return len(self.values)

    def __contains__(self, point) -> bool:
        return tuple(point) in self.values

    def __call__(self, *point):
        return self.values[tuple(point)]

    @property
    def domain(self) -> list:
        return list(self.values)

    # -- dense lookup ---------------------------------------------------------

    def _dense_arrays(self):
        if self._dense is not None:
            return self._dense
        pts = np.array(list(self.values), dtype=np.int64).reshape(-1, self.dims)
        vals = list(self.values.values())
        origin = pts.min(axis=0)
        shape = tuple(pts.max(axis=0) - origin + 1)
        if self.exact and all(isinstance(v, (int, np.integer)) for v in vals):
            big = max(abs(int(v)) for v in vals)
            # products with gap weights up to ~4*max(shape) must stay in int64
            dtype = np.int64 if big * 8 * (max(shape) + 2) < 2**62 else object
        elif self.exact:
            dtype = object
        else:
            dtype = np.float64
        arr = np.zeros(shape, dtype=dtype)
        mask = np.zeros(shape, dtype=bool)
        idx = tuple((pts - origin).T)
        arr[idx] = np.array(vals, dtype=dtype)
        mask[idx] = True
        fvals = np.array(vals, dtype=dtype)
        self._dense = (pts, fvals, origin, np.array(shape), arr, mask)
        return self._dense

    def _lookup(self, idx: np.ndarray):
        """Values and validity for an ``(k, dims)`` array of points."""
        _, _, origin, shape, arr, mask = self._dense_arrays()
        rel = idx - origin
        inside = np.all((rel >= 0) & (rel < shape), axis=1)
        rel = np.where(inside[:, None], rel, 0)
        t = tuple(rel.T)
        valid = inside & mask[t]
        return arr[t], valid


# ---------------------------------------------------------------------------
# sequence checks


def _seq_tol(seq, tol):
    if tol is not None:
        return tol
    return 0 if _is_exact(seq) else FLOAT_TOLERANCE


def _na(name, tol, n):
    return PropertyResult(name, NOT_APPLICABLE, tolerance=tol, skipped=0 if n >= 3 else 1)


def check_quasiconvex(seq: Sequence, tol=None) -> PropertyResult:
    """``a_j <= max(a_i, a_k)`` for every ``i < j < k`` (1-based)."""
    a = list(seq)
    tol = _seq_tol(a, tol)
    n = len(a)
    if n < 3:
        return _na("quasiconvex", tol, n)
    checked = n * (n - 1) * (n - 2) // 6
    # a_j violates iff something smaller lies on both sides of it
    suffix_min = [None] * (n + 1)
    for k in range(n - 1, -1, -1):
        suffix_min[k] = a[k] if suffix_min[k + 1] is None else min(a[k], suffix_min[k + 1])
    failures = 0
    prefix_min = a[0]
    for j in range(1, n - 1):
        if a[j] > prefix_min + tol and a[j] > suffix_min[j + 1] + tol:
            failures += 1
        prefix_min = min(prefix_min, a[j])
    witness = None
    if failures:
        for i in range(n - 2):
            for j in range(i + 1, n - 1):
                if a[j] > a[i] + tol and a[j] > suffix_min[j + 1] + tol:
                    k = next(k for k in range(j + 1, n) if a[j] > a[k] + tol)
                    witness = {"indices": (i + 1, j + 1, k + 1), "values": (a[i], a[j], a[k])}
                    break
            if witness:
                break
    return PropertyResult("quasiconvex", FAILS if failures else HOLDS, witness, checked, 0, tol, failures)


def _second_difference_check(name, seq, tol):
    a = list(seq)
    tol = _seq_tol(a, tol)
    n = len(a)
    if n < 3:
        return _na(name, tol, n)
    failures = 0
    witness = None
    for i in range(1, n - 1):
        # tolerance applies to a_{i-1} - 2 a_i + a_{i+1}
        if a[i - 1] + a[i + 1] - 2 * a[i] < -tol:
            failures += 1
            if witness is None:
                witness = {"indices": (i, i + 1, i + 2), "values": (a[i - 1], a[i], a[i + 1])}
    return PropertyResult(name, FAILS if failures else HOLDS, witness, n - 2, 0, tol, failures)


def check_convex_sequence(seq: Sequence, tol=None) -> PropertyResult:
    """``a_i <= (a_{i-1} + a_{i+1}) / 2`` at every interior index."""
    return _second_difference_check("convex_sequence", seq, tol)


def check_forward_differences(seq: Sequence, tol=None) -> PropertyResult:
    """First forward differences ``a_{i+1} - a_i`` are non-decreasing."""
    a = list(seq)
    tol = _seq_tol(a, tol)
    n = len(a)
    if n < 3:
        return _na("forward_differences", tol, n)
    diffs = [a[i + 1] - a[i] for i in range(n - 1)]
    failures = 0
    witness = None
    for i in range(n - 2):
        if diffs[i + 1] < diffs[i] - tol:
            failures += 1
            if witness is None:
                witness = {"indices": (i + 1, i + 2), "differences": (diffs[i], diffs[i + 1])}
    return PropertyResult("forward_differences", FAILS if failures else HOLDS, witness, n - 2, 0, tol, failures)


def check_secant_line(seq: Sequence, tol=None) -> PropertyResult:
    """Every point lies on or below each chord spanning it."""
    a = list(seq)
    tol = _seq_tol(a, tol)
    n = len(a)
    if n < 3:
        return _na("secant_line", tol, n)
    failures = 0
    checked = 0
    witness = None
    for i in range(n - 2):
        for j in range(i + 1, n - 1):
            for k in range(j + 1, n):
                checked += 1
                # (k-i) a_j <= (k-j) a_i + (j-i) a_k, tolerance scaled alike
                if (k - i) * a[j] > (k - j) * a[i] + (j - i) * a[k] + tol * (k - i):
                    failures += 1
                    if witness is None:
                        witness = {"indices": (i + 1, j + 1, k + 1), "values": (a[i], a[j], a[k])}
    return PropertyResult("secant_line", FAILS if failures else HOLDS, witness, checked, 0, tol, failures)


# ---------------------------------------------------------------------------
# grid checks


def _as_grid(obj) -> GridFunction:
    return obj if isinstance(obj, GridFunction) else GridFunction.from_sequence(list(obj))


def _fractions_upto(m: int):
    """Reduced fractions ``j/g`` in (0, 1) with ``2 <= g <= m``, by (g, j)."""
    for g in range(2, m + 1):
        for j in range(1, g):
            if math.gcd(j, g) == 1:
                yield j, g


def _pair_chunks(m: int, chunk: int = _PAIR_CHUNK):
    i0 = 0
    while i0 < m - 1:
        rows, size = [], 0
        i = i0
        while i < m - 1 and (size == 0 or size + (m - 1 - i) <= chunk):
            rows.append(i)
            size += m - 1 - i
            i += 1
        I = np.concatenate([np.full(m - 1 - r, r, dtype=np.int64) for r in rows])
        J = np.concatenate([np.arange(r + 1, m, dtype=np.int64) for r in rows])
        yield I, J
        i0 = i


def _sentinel(dtype):
    if dtype == np.int64:
        return np.iinfo(np.int64).max
    return math.inf


def _cell_min(flat, flat_valid, strides, origin, corners, base, width):
    """Minimum over the domain points of the boxes ``base + {0..width}``.

    ``width`` is 0 or 1 per coordinate.  Returns ``(minimum, non-empty)``.
    """
    base_flat = (base - origin) @ strides
    nb_min = any_valid = None
    for c in corners:
        lin = base_flat + (width * c) @ strides
        v = flat[lin]
        ok = flat_valid[lin]
        nb_min = v if nb_min is None else np.minimum(nb_min, v)
        any_valid = ok if any_valid is None else (any_valid | ok)
    return nb_min, any_valid


def check_discrete_convexity(gf, stop_at_first: bool = False) -> PropertyResult:
    """``a f(x) + (1-a) f(y) >= min f over N(z)``, ``z = a x + (1-a) y``.

    ``N(z)`` holds the domain points within max-norm distance strictly
    below 1 of ``z``.  Only finitely many ``a`` matter: the neighbourhood
    changes exactly when some coordinate of ``z`` crosses an integer, i.e.
    at ``a = j / gap_i``.  Between two breakpoints ``z`` stays inside one
    open cell and the left side is linear in ``a``, so each open stretch
    needs checking only at its ends.  Where the breakpoint itself has a
    non-empty neighbourhood that check implies the ones beside it; where
    it is empty, the open cells on both sides are tested against the
    breakpoint value instead.  Instances whose neighbourhood misses the
    domain entirely are skipped.

    With ``stop_at_first`` the scan ends after the first block of pairs
    containing a failure.  Verdict and witness are unchanged (pairs are
    visited in lexicographic order); the counts then cover only the part
    scanned and ``complete`` is False.
    """
    gf = _as_grid(gf)
    pts, fvals, origin, shape, arr, mask = gf._dense_arrays()
    m, d = pts.shape
    tol = gf.tolerance
    sentinel = _sentinel(arr.dtype)
    # z lies in the bounding box of x and y, so flat indexing needs no bounds check
    flat = np.where(mask, arr, sentinel).ravel()
    flat_valid = mask.ravel()
    strides = np.array([int(np.prod(shape[k + 1:])) for k in range(d)], dtype=np.int64)
    corners = [np.array(c, dtype=np.int64) for c in itertools.product((0, 1), repeat=d)]
    checked = skipped = failures = 0
    best = None  # (i, j, alpha) of the lexicographically first failure
    complete = True
    for I, J in _pair_chunks(m, _EARLY_CHUNK if stop_at_first else _PAIR_CHUNK):
        if best is not None and stop_at_first:
            complete = False
            break
        X, Y = pts[I], pts[J]
        gaps = np.abs(X - Y)
        far = gaps.max(axis=1) >= 2
        I, J, X, Y, gaps = I[far], J[far], X[far], Y[far], gaps[far]
        if not len(I):
            continue
        maxgap = int(gaps.max())
        fx, fy = fvals[I], fvals[J]
        chunk_fail_pair = None
        for jn, den in _fractions_upto(maxgap):
            rel = np.any((gaps % den == 0) & (gaps > 0), axis=1)
            sel = np.nonzero(rel)[0]
            if not len(sel):
                continue
            Xs, Ys = X[sel], Y[sel]
            num = jn * Xs + (den - jn) * Ys
            lo = num // den
            on_grid = num % den == 0
            lhs = jn * fx[sel] + (den - jn) * fy[sel]
            # closed neighbourhood at the breakpoint itself
            nb_min, valid = _cell_min(flat, flat_valid, strides, origin, corners, lo, (~on_grid).astype(np.int64))
            bad = valid & np.asarray(den * np.where(valid, nb_min, 0) > lhs + den * tol, dtype=bool)
            n_inst = int(np.count_nonzero(valid))
            n_skip = len(sel) - n_inst
            hits = [(bad, 0)]
            # an empty neighbourhood at the breakpoint says nothing about the
            # open stretches on either side, where z sits in a full cell
            empty = np.nonzero(~valid)[0]
            if len(empty):
                step = np.sign(Xs[empty] - Ys[empty])
                for side in (-1, 1):
                    st = side * step
                    base = lo[empty] + np.where(on_grid[empty], np.minimum(st, 0), 0)
                    width = np.where(on_grid[empty], np.abs(st), 1)
                    m_side, v_side = _cell_min(flat, flat_valid, strides, origin, corners, base, width)
                    b_side = v_side & np.asarray(
                        den * np.where(v_side, m_side, 0) > lhs[empty] + den * tol, dtype=bool
                    )
                    n_inst += int(np.count_nonzero(v_side))
                    n_skip += len(empty) - int(np.count_nonzero(v_side))
                    full = np.zeros(len(sel), dtype=bool)
                    full[empty] = b_side
                    hits.append((full, side))
            n_skip -= len(empty)  # an empty breakpoint is replaced by its two sides
            checked += n_inst
            skipped += n_skip
            for mask_bad, side in hits:
                nbad = int(np.count_nonzero(mask_bad))
                if nbad:
                    failures += nbad
                    first = int(sel[np.argmax(mask_bad)])
                    if chunk_fail_pair is None or first < chunk_fail_pair:
                        chunk_fail_pair = first
        if best is None and chunk_fail_pair is not None:
            k = chunk_fail_pair
            # smallest violating alpha for the first failing pair
            best = (int(I[k]), int(J[k]), _smallest_alpha(gf, pts[I[k]], pts[J[k]], tol))
    witness = None
    if best is not None:
        i, j, alpha = best
        x, y = tuple(int(c) for c in pts[i]), tuple(int(c) for c in pts[j])
        z = tuple(alpha * a + (1 - alpha) * b for a, b in zip(x, y))
        nbrs = _neighbourhood(gf, z)
        witness = {
            "x": x,
            "y": y,
            "alpha": alpha,
            "f_x": gf.values[x],
            "f_y": gf.values[y],
            "z": z,
            "neighbourhood": {k: gf.values[k] for k in nbrs},
        }
    verdict = FAILS if failures else HOLDS
    return PropertyResult("discrete_convexity", verdict, witness, checked, skipped, tol, failures, complete)


def _neighbourhood(gf: GridFunction, z) -> list:
    cands = [sorted({math.floor(c), math.ceil(c)}) for c in z]
    return [u for u in itertools.product(*cands) if u in gf.values]


def discrete_convexity_instance(gf: GridFunction, x, y, alpha: Fraction):
    """Scalar re-evaluation: ``(lhs, min over N(z))`` or ``None`` if N(z) is empty."""
    z = tuple(alpha * a + (1 - alpha) * b for a, b in zip(x, y))
    nb = _neighbourhood(gf, z)
    if not nb:
        return None
    lhs = alpha * gf.values[tuple(x)] + (1 - alpha) * gf.values[tuple(y)]
    return lhs, min(gf.values[u] for u in nb)


def _smallest_alpha(gf, x, y, tol):
    x = tuple(int(c) for c in x)
    y = tuple(int(c) for c in y)
    gaps = [abs(a - b) for a, b in zip(x, y)]
    G = max(gaps)
    alphas = sorted({Fraction(j, g) for g in gaps if g >= 2 for j in range(1, g)})
    # distinct fractions with denominators <= G are at least 1/G**2 apart
    delta0 = Fraction(1, 2 * G * G)
    for alpha in alphas:
        for side in (-1, 0, 1):
            delta = delta0
            for _ in range(200 if side else 1):
                a = alpha + side * delta
                res = discrete_convexity_instance(gf, x, y, a)
                if res is not None and res[1] > res[0] + tol:
                    return a
                if res is None:
                    break
                delta /= 2
    raise AssertionError("vectorised and scalar discrete-convexity checks disagree")


def _directions(d: int):
    return [u for u in itertools.product((-1, 0, 1), repeat=d) if any(u)]


def check_local_submodularity(gf) -> PropertyResult:
    """``f(x+u) + f(x) >= f(x v u) + f(x ^ u)`` for ``u`` in {-1,0,1}^d minus 0.

    ``x v u`` and ``x ^ u`` are the componentwise max and min of ``x`` and
    ``x + u``.
    """
    gf = _as_grid(gf)
    pts, fvals, *_ = gf._dense_arrays()
    tol = gf.tolerance
    checked = skipped = failures = 0
    first = None
    for ui, u in enumerate(_directions(gf.dims)):
        u = np.array(u, dtype=np.int64)
        fa, va = gf._lookup(pts + u)
        fv, vv = gf._lookup(pts + np.maximum(u, 0))
        fw, vw = gf._lookup(pts + np.minimum(u, 0))
        ok = va & vv & vw
        checked += int(ok.sum())
        skipped += int((~ok).sum())
        sel = np.nonzero(ok)[0]
        bad = np.asarray(fa[sel] + fvals[sel] < fv[sel] + fw[sel] - tol, dtype=bool)
        nbad = int(np.count_nonzero(bad))
        if nbad:
            failures += nbad
            cand = (int(sel[np.argmax(bad)]), ui)
            if first is None or cand < first:
                first = cand
    witness = None
    if first is not None:
        xi, ui = first
        witness = local_submodularity_instance(gf, tuple(int(c) for c in pts[xi]), _directions(gf.dims)[ui])
    verdict = FAILS if failures else HOLDS
    return PropertyResult("local_submodularity", verdict, witness, checked, skipped, tol, failures)


def local_submodularity_instance(gf: GridFunction, x, u) -> Optional[dict]:
    """The four points and values of one instance, or None if any is a hole."""
    x = tuple(x)
    a = tuple(xi + ui for xi, ui in zip(x, u))
    join = tuple(max(xi, xi + ui) for xi, ui in zip(x, u))
    meet = tuple(min(xi, xi + ui) for xi, ui in zip(x, u))
    if not all(p in gf.values for p in (x, a, join, meet)):
        return None
    return {
        "x": x,
        "u": tuple(u),
        "x_plus_u": a,
        "join": join,
        "meet": meet,
        "lhs": gf.values[a] + gf.values[x],
        "rhs": gf.values[join] + gf.values[meet],
    }


def check_aggregate_monotonicity(gf) -> PropertyResult:
    """``sum_j D_ij f(x) >= 0`` for every coordinate ``i``.

    ``D_ij f(x) = f(x + e_i + e_j) - f(x + e_j) - f(x + e_i) + f(x)``.
    An instance ``(x, i)`` is checked only when every point it needs exists.
    """
    gf = _as_grid(gf)
    pts, fvals, *_ = gf._dense_arrays()
    d = gf.dims
    tol = gf.tolerance
    eye = np.eye(d, dtype=np.int64)
    checked = skipped = failures = 0
    first = None
    for i in range(d):
        ok = np.ones(len(pts), dtype=bool)
        total = np.zeros(len(pts), dtype=fvals.dtype)
        for j in range(d):
            f_ij, v1 = gf._lookup(pts + eye[i] + eye[j])
            f_j, v2 = gf._lookup(pts + eye[j])
            f_i, v3 = gf._lookup(pts + eye[i])
            ok &= v1 & v2 & v3
            total = total + np.where(v1 & v2 & v3, f_ij - f_j - f_i + fvals, 0)
        checked += int(ok.sum())
        skipped += int((~ok).sum())
        bad = ok & np.asarray(total < -tol, dtype=bool)
        nbad = int(np.count_nonzero(bad))
        if nbad:
            failures += nbad
            cand = (int(np.argmax(bad)), i)
            if first is None or cand < first:
                first = cand
    witness = None
    if first is not None:
        xi, i = first
        witness = aggregate_instance(gf, tuple(int(c) for c in pts[xi]), i)
    verdict = FAILS if failures else HOLDS
    return PropertyResult("aggregate_monotonicity", verdict, witness, checked, skipped, tol, failures)


def aggregate_instance(gf: GridFunction, x, i: int) -> Optional[dict]:
    x = tuple(x)
    d = len(x)

    def shift(*axes):
        p = list(x)
        for a in axes:
            p[a] += 1
        return tuple(p)

    terms = []
    for j in range(d):
        need = (shift(i, j), shift(j), shift(i))
        if not all(p in gf.values for p in need):
            return None
        terms.append(gf.values[need[0]] - gf.values[need[1]] - gf.values[need[2]] + gf.values[x])
    return {"x": x, "axis": i, "second_differences": tuple(terms), "sum": sum(terms)}


# ---------------------------------------------------------------------------

CHECKERS = {
    "quasiconvex": check_quasiconvex,
    "convex_sequence": check_convex_sequence,
    "forward_differences": check_forward_differences,
    "secant_line": check_secant_line,
    "discrete_convexity": check_discrete_convexity,
    "local_submodularity": check_local_submodularity,
    "aggregate_monotonicity": check_aggregate_monotonicity,
}


def audit(
    obj,
    properties: Optional[Iterable[str]] = None,
    label: str = "",
    stop_at_first: bool = False,
) -> ConvexityReport:
    """Run the requested checks (all by default) on a sequence or grid.

    Sequence properties are not applicable to grids of dimension > 1.
    ``stop_at_first`` is passed on to the discrete-convexity scan.
    """
    props = list(ALL_PROPERTIES if properties is None else properties)
    unknown = [p for p in props if p not in CHECKERS]
    if unknown:
        raise ValueError(f"unknown properties {unknown}")
    gf = _as_grid(obj)
    seq = None
    if gf.dims == 1:
        keys = sorted(gf.values)
        if [k[0] for k in keys] == list(range(keys[0][0], keys[0][0] + len(keys))):
            seq = [gf.values[k] for k in keys]
    report = ConvexityReport(label=label)
    for name in props:
        if name in SEQUENCE_PROPERTIES:
            if seq is None:
                report.entries[name] = PropertyResult(name, NOT_APPLICABLE, tolerance=gf.tolerance)
            else:
                report.entries[name] = CHECKERS[name](seq, gf.tolerance)
        elif name == "discrete_convexity":
            report.entries[name] = check_discrete_convexity(gf, stop_at_first=stop_at_first)
        else:
            report.entries[name] = CHECKERS[name](gf)
    return report


def fixture_quadratic(n: int) -> list:
    """The identity-cost star landscape ``l**2 + (n+1)(n/2 - l)`` as integers."""
    return [(2 * l * l + (n + 1) * (n - 2 * l)) // 2 for l in range(1, n + 1)]


def fixture_sqrt(n: int) -> list:
    """``2n |l* - l|**0.5`` with ``l* = ceil(n/2)``: quasiconvex, not convex."""
    c = math.ceil(n / 2)
    return [2 * n * math.sqrt(abs(c - l)) for l in range(1, n + 1)]


def fixture_alternating(n: int) -> list:
    """``n (2 + (-1)**l)``: not quasiconvex."""
    return [n * (2 + (-1) ** l) for l in range(1, n + 1)]


def crosses(witness: dict, a: int = 0, b: int = 2) -> bool:
    """True when a local-submodularity witness moves coordinates ``a`` and ``b``
    in opposite directions (for the quasistar grid: hub ``l`` and leaf ``q``)."""
    u = witness["u"]
    return u[a] != 0 and u[a] == -u[b]
