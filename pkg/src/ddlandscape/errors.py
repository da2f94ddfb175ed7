"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class HoleError(ValueError):
    """A landscape index combination that no arrangement can realise.

    Kept apart from :class:`DomainError` so grid builders can skip holes
    without masking genuine argument errors.
    """


class UnsupportedFamilyError(ValueError):
    """No closed form is available for the requested tree family."""


class OracleCapError(RuntimeError):
    """Exhaustive enumeration refused because n exceeds the configured cap."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"refusing to enumerate {n}! arrangements: n={n} exceeds oracle cap {cap}")
