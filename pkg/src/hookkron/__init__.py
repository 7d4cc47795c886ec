"""Tensor-product multiplicities for symmetric-group representations with a
hook factor, computed by enumerating pictures between skew diagrams and
cross-checked against an exact character-table oracle."""

from .errors import (
    DuplicateValueError,
    HookkronError,
    InvalidCocornerError,
    NotAddableError,
    NotCoHookShapeError,
    NotContainedError,
    NotHookShapeError,
    NotInnerCornerError,
    NotRemmelWhitneyError,
    NotRemovableError,
    RangeError,
    SizeMismatchError,
    TooLargeError,
)
from .shapes import (
    Cell,
    Partition,
    SkewShape,
    conjugate,
    contains,
    hook_partition,
    icc_bar,
    inner_cocorners,
    inner_corners,
    leq_nw,
    leq_sw,
    parse_partition,
    partition,
    partitions,
    skew,
    transpose_shape,
)
from .tableaux import (
    BumpRoute,
    PartialTableau,
    bump_destination,
    delete,
    insert,
    row_reading,
)
from .pictures import (
    Picture,
    enumerate_pictures,
    picture_bump_destination,
    picture_delete,
    picture_insert,
    picture_to_rw,
    rw_to_picture,
)
from .hook_rule import (
    DecompositionTable,
    TypedPicture,
    balanced_cocorner,
    balanced_corner,
    decompose_tensor_exterior,
    decompose_tensor_hook,
    hook_hook_multiplicity,
    multiplicity_exterior,
    multiplicity_hook,
    pw_m_set,
    pw_set,
    step_E,
    step_F,
)
from .lr import exterior_multiplicity_via_lr, lr_coefficient
from .oracle import character_table, dimension, exterior_multiplicity, kronecker
from .verify import VerifyReport, verify_range

__version__ = "0.1.0"
