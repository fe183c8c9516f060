"""Exact rearrangement computations on the circle.

Sets are finite unions of arcs with rational endpoints; every functional,
defect, flow trace, and certificate is computed in exact rational
arithmetic.  Submodules:

- circle_sets: arcs, canonical interval sets, boolean operations, sumsets
- piecewise: step and piecewise-linear functions, exact convolution
- functionals: the triple pairing, defects, admissibility, sharpened bounds
- rearrange: polarization, iterated symmetrization, relaxed comparisons
- flow: interval-growth flow with exact collision scheduling and traces
- bohr: rank-one Bohr sets, triple recovery, stability certificates
- reductions: complementation, overlap translates, measure equalization
- oracle_zn: brute-force cross-checks on finite cyclic groups
- service / cli: HTTP interface and its command-line client
"""

from .circle_sets import (
    Arc,
    IntervalSet,
    from_segments,
    interval,
    set_from_json,
    set_to_json,
    sumset0,
    symdiff_measure,
)
from .errors import (
    ArcflowError,
    AxisMismatch,
    EmptyInput,
    EtaTooLarge,
    HypothesisViolated,
    Infeasible,
    MaxStepsExceeded,
    MixedModulus,
    NotAdmissible,
    RangeError,
    ScaleOutOfRange,
    ScheduleStall,
    ShapeError,
)
from .functionals import (
    admissibility,
    defect_D,
    defect_Dprime,
    kneser_defect,
    rs_star_value,
    sharpened_bound,
    tau_C,
    triple_functional,
)
from .rational import Q, mod1, parse_rat, rat_str

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "ArcflowError",
    "AxisMismatch",
    "EmptyInput",
    "EtaTooLarge",
    "HypothesisViolated",
    "Infeasible",
    "IntervalSet",
    "MaxStepsExceeded",
    "MixedModulus",
    "NotAdmissible",
    "Q",
    "RangeError",
    "ScaleOutOfRange",
    "ScheduleStall",
    "ShapeError",
    "admissibility",
    "defect_D",
    "defect_Dprime",
    "from_segments",
    "interval",
    "kneser_defect",
    "mod1",
    "parse_rat",
    "rat_str",
    "rs_star_value",
    "set_from_json",
    "set_to_json",
    "sharpened_bound",
    "sumset0",
    "symdiff_measure",
    "tau_C",
    "triple_functional",
    "__version__",
]
