"""Link-cost functions g(d) for edges of length d >= 1.

Four kinds are supported: ``identity`` (g(d) = d), ``power`` (d**e, e > 0),
``exponential`` (b**d, b > 1) and ``table`` (explicit values for d = 1..m).
Integer-valued kinds return Python ints so that landscapes and bounds can be
compared exactly; irrational kinds fall back to floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Optional, Sequence, Union

from ddlandscape.errors import DomainError

Number = Union[int, Fraction, float]

#: Absolute tolerance applied to inequalities when costs are not exact.
FLOAT_TOLERANCE = 1e-9

KINDS = ("identity", "power", "exponential", "table")


def _as_exact(x) -> Union[Fraction, float]:
    if isinstance(x, bool):
        raise TypeError("boolean is not a cost parameter")
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    return float(x)


def _normalise(v: Number) -> Number:
    """Collapse integral Fractions to int so downstream arrays stay int64."""
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


@dataclass(frozen=True)
class CostFunction:
    """A strictly increasing cost of dependency length.

    Use the ``identity``/``power``/``exponential``/``table`` constructors
    rather than the raw dataclass fields.
    """

    kind: str
    param: Optional[Union[Fraction, float]] = None
    values: tuple = ()
    max_distance: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown cost kind {self.kind!r}")
        if self.max_distance is not None and self.max_distance < 1:
            raise DomainError("max_distance must be >= 1")
        if self.kind == "power" and not self.param > 0:
            raise DomainError(f"power exponent must be positive, got {self.param}")
        if self.kind == "exponential" and not self.param > 1:
            raise DomainError(f"exponential base must exceed 1, got {self.param}")
        if self.kind == "table":
            if not self.values:
                raise DomainError("cost table is empty")
            for d in range(1, len(self.values)):
                if not self.values[d] > self.values[d - 1]:
                    raise DomainError(
                        f"cost table not strictly increasing: g({d + 1}) = {self.values[d]} "
                        f"<= g({d}) = {self.values[d - 1]}"
                    )
            if self.max_distance is not None and self.max_distance > len(self.values):
                raise DomainError("max_distance exceeds the table length")

    # -- constructors -------------------------------------------------------

    @classmethod
    def identity(cls, max_distance: Optional[int] = None) -> "CostFunction":
        return cls("identity", max_distance=max_distance)

    @classmethod
    def power(cls, exponent, max_distance: Optional[int] = None) -> "CostFunction":
        return cls("power", _as_exact(exponent), max_distance=max_distance)

    @classmethod
    def exponential(cls, base, max_distance: Optional[int] = None) -> "CostFunction":
        return cls("exponential", _as_exact(base), max_distance=max_distance)

    @classmethod
    def table(cls, values: Sequence[Number], max_distance: Optional[int] = None) -> "CostFunction":
        vals = tuple(_normalise(_as_exact(v)) if not isinstance(v, float) else v for v in values)
        return cls("table", values=vals, max_distance=max_distance)

    # -- properties ---------------------------------------------------------

    @property
    def limit(self) -> Optional[int]:
        """Largest admissible distance, or None when unbounded."""
        if self.kind == "table":
            return self.max_distance or len(self.values)
        return self.max_distance

    @property
    def exact(self) -> bool:
        """True when every g(d) is an int or Fraction."""
        if self.kind == "identity":
            return True
        if self.kind == "power":
            return isinstance(self.param, Fraction) and self.param.denominator == 1
        if self.kind == "exponential":
            return isinstance(self.param, Fraction)
        return all(not isinstance(v, float) for v in self.values)

    @property
    def tolerance(self) -> float:
        return 0 if self.exact else FLOAT_TOLERANCE

    @property
    def spec(self) -> str:
        """Round-trippable text form, e.g. ``power:2``."""
        if self.kind == "identity":
            return "identity"
        if self.kind == "power":
            return f"power:{_fmt(self.param)}"
        if self.kind == "exponential":
            return f"exp:{_fmt(self.param)}"
        return "table:" + ",".join(_fmt(v) for v in self.values)

    def with_max_distance(self, max_distance: int) -> "CostFunction":
        return CostFunction(self.kind, self.param, self.values, max_distance)

    # -- evaluation ---------------------------------------------------------

    def __call__(self, d: int) -> Number:
        return self.evaluate(d)

    def evaluate(self, d: int) -> Number:
        if d < 1 or (self.limit is not None and d > self.limit):
            raise DomainError(f"distance {d} outside 1..{self.limit or 'inf'}")
        if self.kind == "identity":
            return d
        if self.kind == "power":
            e = self.param
            if isinstance(e, Fraction) and e.denominator == 1:
                return d ** int(e)
            return float(d) ** float(e)
        if self.kind == "exponential":
            return _normalise(self.param ** d)
        return self.values[d - 1]

    def prefix_sums(self, m: int) -> list:
        """``[S(0), S(1), ..., S(m)]`` with ``S(k) = g(1) + ... + g(k)``."""
        if m < 0:
            raise DomainError("prefix length must be >= 0")
        if self.limit is not None and m > self.limit:
            raise DomainError(f"prefix length {m} exceeds max distance {self.limit}")
        out = [0]
        for d in range(1, m + 1):
            out.append(_normalise(out[-1] + self.evaluate(d)))
        return out

    def prefix_sum(self, m: int) -> Number:
        return self.prefix_sums(m)[-1]


def _fmt(v) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return repr(v)


def _parse_number(text: str):
    text = text.strip()
    try:
        return Fraction(text) if not any(c in text for c in "eE") else float(text)
    except ValueError:
        return float(text)


def parse_cost(text: str, max_distance: Optional[int] = None) -> CostFunction:
    """Parse ``identity``, ``power:E``, ``exp:B`` or ``table:v1,v2,...``."""
    kind, _, arg = text.strip().partition(":")
    kind = kind.lower()
    try:
        if kind == "identity" and not arg:
            return CostFunction.identity(max_distance)
        if kind == "power" and arg:
            return CostFunction.power(_parse_number(arg), max_distance)
        if kind in ("exp", "exponential") and arg:
            return CostFunction.exponential(_parse_number(arg), max_distance)
        if kind == "table" and arg:
            return CostFunction.table([_parse_number(v) for v in arg.split(",")], max_distance)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"cannot parse cost spec {text!r}: {exc}") from exc
    raise DomainError(f"cannot parse cost spec {text!r}")


def standard_costs() -> dict:
    """The four reference kinds used throughout the test-suite."""
    return {
        "identity": CostFunction.identity(),
        "power:2": CostFunction.power(2),
        "power:3": CostFunction.power(3),
        "exp:2": CostFunction.exponential(2),
    }

