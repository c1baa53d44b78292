"""Machine-checked bijection toolkit for two equinumerous Schroeder path families.

Class A holds grand Schroeder paths whose flatsteps all lie on the line y=2;
class B holds Schroeder paths with at most one peak per component.  This
package provides the path algebra, exhaustive enumerators, exact big-integer
counters, the explicit size- and component-preserving bijection between the
families (with stage tracing and inverses), a brute-force pattern-avoidance
cross-check, and OEIS b-file comparison.
"""

from .bijection import (
    Direction,
    FlatNotAtHeightOne,
    Interchanged,
    InverseDomainError,
    Landmarks,
    MarkNotContractible,
    NotInClass,
    PreconditionViolated,
    Stage,
    StageTrace,
    UnknownApex,
    contract_marks,
    expand_flats,
    flatten_peaks,
    flip_marked,
    interchange,
    landmarks,
    map_indecomposable_above,
    map_indecomposable_below,
    phi,
    phi_inverse,
    recover_marks,
    reverse_interchange,
    trace_stages,
    unflatten_flats,
    unmap_indecomposable,
)
from .families import (
    Census,
    count_class_a,
    count_class_a_series,
    count_class_b,
    count_class_b_series,
    enumerate_class_a,
    enumerate_class_b,
    indec_census,
)
from .oeis import (
    ComparisonReport,
    MalformedLine,
    Mismatch,
    NonContiguousIndex,
    RangeNotCovered,
    SequenceTable,
    compare_sequence,
    format_bfile,
    parse_bfile,
)
from .paths import (
    DOWN,
    FLAT,
    UP,
    Classification,
    Component,
    ComponentView,
    InvalidCharacter,
    MarkedPath,
    NotGroundTerminated,
    Path,
    PathbijError,
    Step,
    classify,
    components,
    concat,
    format_path,
    in_class_a,
    in_class_b,
    is_indecomposable,
    parse_path,
    peak_apexes,
    reflect,
    render_ascii,
)
from .permutations import (
    DEFAULT_PATTERNS,
    Permutation,
    SizeTooLarge,
    contains_pattern,
    count_avoiders,
    parse_patterns,
    parse_permutation,
    rank_signature,
)

__version__ = "0.1.0"

__all__ = [
    "Census",
    "Classification",
    "ComparisonReport",
    "Component",
    "ComponentView",
    "DEFAULT_PATTERNS",
    "DOWN",
    "Direction",
    "FLAT",
    "FlatNotAtHeightOne",
    "Interchanged",
    "InvalidCharacter",
    "InverseDomainError",
    "Landmarks",
    "MalformedLine",
    "MarkNotContractible",
    "MarkedPath",
    "Mismatch",
    "NonContiguousIndex",
    "NotGroundTerminated",
    "NotInClass",
    "Path",
    "PathbijError",
    "Permutation",
    "PreconditionViolated",
    "RangeNotCovered",
    "SequenceTable",
    "SizeTooLarge",
    "Stage",
    "StageTrace",
    "Step",
    "UP",
    "UnknownApex",
    "classify",
    "compare_sequence",
    "components",
    "concat",
    "contains_pattern",
    "contract_marks",
    "count_avoiders",
    "count_class_a",
    "count_class_a_series",
    "count_class_b",
    "count_class_b_series",
    "enumerate_class_a",
    "enumerate_class_b",
    "expand_flats",
    "flatten_peaks",
    "flip_marked",
    "format_bfile",
    "format_path",
    "in_class_a",
    "in_class_b",
    "indec_census",
    "interchange",
    "is_indecomposable",
    "landmarks",
    "map_indecomposable_above",
    "map_indecomposable_below",
    "parse_bfile",
    "parse_path",
    "parse_patterns",
    "parse_permutation",
    "peak_apexes",
    "phi",
    "phi_inverse",
    "rank_signature",
    "recover_marks",
    "reflect",
    "render_ascii",
    "reverse_interchange",
    "trace_stages",
    "unflatten_flats",
    "unmap_indecomposable",
]
