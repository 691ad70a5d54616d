"""perminv: in-place permutation inversion under the [1..n] value range.

The array may never hold anything outside [1..n]; an audited array enforces
that and counts every cell read and write, which is what makes the
complexity claims of the three strategies (quadratic, randomized hash
leader, deterministic square-root segmentation) empirically checkable.
"""

from .audited import (
    AuditedArray,
    IndexViolationError,
    RangeViolationError,
)
from .bench import (
    ALGORITHMS,
    CSV_HEADER,
    BenchRecord,
    append_csv,
    fit_exponent,
    read_csv,
    run_cell,
    run_grid,
    summarize,
    write_csv,
)
from .cycles import cycle_leader, invert_quadratic, reverse_cycle
from .invert import (
    STRATEGY_KINDS,
    Strategy,
    invert,
    invert_randomized,
    invert_sqrt,
)
from .perms import (
    InvalidPermutationError,
    PermProfile,
    generate,
    is_permutation,
    load_permutation,
    oracle_invert,
    save_permutation,
    validate_permutation,
)
from .rho import CycleInfo, limited_tortoise_and_hare, tortoise_and_hare
from .segments import (
    CorruptRepresentationError,
    SegCode,
    SegmentationReport,
    SegParams,
    ceil_sqrt,
    check_segment_representation,
    decode,
    encode,
    make_segments,
    restore_long_cycle,
    set_free_cycle_length,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "AuditedArray",
    "BenchRecord",
    "CSV_HEADER",
    "CorruptRepresentationError",
    "CycleInfo",
    "IndexViolationError",
    "InvalidPermutationError",
    "PermProfile",
    "RangeViolationError",
    "STRATEGY_KINDS",
    "SegCode",
    "SegParams",
    "SegmentationReport",
    "Strategy",
    "append_csv",
    "ceil_sqrt",
    "check_segment_representation",
    "cycle_leader",
    "decode",
    "encode",
    "fit_exponent",
    "generate",
    "invert",
    "invert_quadratic",
    "invert_randomized",
    "invert_sqrt",
    "is_permutation",
    "limited_tortoise_and_hare",
    "load_permutation",
    "make_segments",
    "oracle_invert",
    "read_csv",
    "restore_long_cycle",
    "reverse_cycle",
    "run_cell",
    "run_grid",
    "save_permutation",
    "set_free_cycle_length",
    "summarize",
    "tortoise_and_hare",
    "validate_permutation",
    "write_csv",
]
