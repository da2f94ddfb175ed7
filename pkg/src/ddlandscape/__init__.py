"""Dependency-distance landscapes of star-like trees.

Total link cost of linear arrangements, star and quasistar landscapes under
strictly increasing cost functions, a ladder of discrete-convexity checks,
and closed-form bounds validated against exhaustive enumeration.
"""

from ddlandscape.errors import (
    DomainError,
    HoleError,
    OracleCapError,
    UnsupportedFamilyError,
)
from ddlandscape.cost import CostFunction, parse_cost
from ddlandscape.trees import (
    FreeTree,
    TreeFamily,
    classify,
    hubiness,
    make_balanced_bistar,
    make_caterpillar,
    make_path,
    make_quasistar,
    make_star,
)
from ddlandscape.arrangement import (
    LinearArrangement,
    OracleResult,
    brute_force,
    is_planar,
    random_arrangement,
    total_cost,
)
from ddlandscape.landscape import (
    QuasistarGrid,
    StarLandscape,
    planar_effective_star,
    quasistar_cost,
    quasistar_grid,
    star_cost,
    star_landscape,
)
from ddlandscape.convexity import ConvexityReport, GridFunction, PropertyResult, audit
from ddlandscape.bounds import (
    BoundsRow,
    bounds_table,
    caterpillar_d_min,
    d_max_formula,
    d_min_formula,
    d_random,
    iordanskii_curve,
)

__version__ = "0.1.0"
