"""Dominance and cocharacter accessibility of nilpotent orbits in gl, sl, sp and o.

All computations are exact over the field Q(i, sqrt2).
"""

from .algebras import (
    GL,
    O,
    SL,
    SP,
    AlgebraKind,
    InvalidPartitionError,
    KindError,
    UnsupportedPartitionError,
    enumerate_partitions,
    f_vector,
    in_group,
    in_lie_algebra,
    is_distinguished,
    is_valid_partition,
    omega,
    standard_form,
)
from .cocharacters import (
    Cocharacter,
    Parabolic,
    cochar_in_group,
    fixes,
    limit,
    normalize_to_sl,
    parabolic_membership,
)
from .field import I, ONE, R2, ZERO, FieldScalar, scalar_add, scalar_inv, scalar_mul
from .linalg import (
    DimensionError,
    ExactMatrix,
    NotNilpotentError,
    SingularMatrixError,
    conjugate,
    determinant,
    direct_sum,
    elementary,
    identity,
    inverse,
    jordan_block,
    jordan_type,
    mat_mul,
    mat_power,
    rank,
    shrink,
    zeros,
)
from .orders import (
    ACCESSIBILITY,
    DOMINANCE,
    AccessReport,
    MoveKind,
    Obstruction,
    OneAccess,
    accessible,
    compare,
    find_chain,
    hasse_diagram,
    is_direct_type5,
    move_successors,
    one_accessible_status,
    reachable_set,
)
from .partitions import Partition, PartitionError, dominance_le, partitions_of
from .witnesses import (
    MoveWitness,
    VerificationReport,
    WitnessConstructionError,
    WitnessParameterError,
    distinguished_obstruction_check,
    gl_example_31,
    gl_move_I_witness,
    gl_move_II_witness,
    gl_rst_witness,
    gl_two_part_witness,
    nontransitivity_check,
    o_move1_example,
    o_move1_witness,
    sp_move_witness,
    verify_witness,
)

__version__ = "0.1.0"

__all__ = [
    "ACCESSIBILITY",
    "AccessReport",
    "AlgebraKind",
    "Cocharacter",
    "DOMINANCE",
    "DimensionError",
    "ExactMatrix",
    "FieldScalar",
    "GL",
    "I",
    "InvalidPartitionError",
    "KindError",
    "MoveKind",
    "MoveWitness",
    "NotNilpotentError",
    "O",
    "ONE",
    "Obstruction",
    "OneAccess",
    "Parabolic",
    "Partition",
    "PartitionError",
    "R2",
    "SL",
    "SP",
    "SingularMatrixError",
    "UnsupportedPartitionError",
    "VerificationReport",
    "WitnessConstructionError",
    "WitnessParameterError",
    "ZERO",
    "accessible",
    "cochar_in_group",
    "compare",
    "conjugate",
    "determinant",
    "direct_sum",
    "distinguished_obstruction_check",
    "dominance_le",
    "elementary",
    "enumerate_partitions",
    "f_vector",
    "find_chain",
    "fixes",
    "gl_example_31",
    "gl_move_II_witness",
    "gl_move_I_witness",
    "gl_rst_witness",
    "gl_two_part_witness",
    "hasse_diagram",
    "identity",
    "in_group",
    "in_lie_algebra",
    "inverse",
    "is_direct_type5",
    "is_distinguished",
    "is_valid_partition",
    "jordan_block",
    "jordan_type",
    "limit",
    "mat_mul",
    "mat_power",
    "move_successors",
    "nontransitivity_check",
    "normalize_to_sl",
    "o_move1_example",
    "o_move1_witness",
    "omega",
    "one_accessible_status",
    "parabolic_membership",
    "partitions_of",
    "rank",
    "reachable_set",
    "scalar_add",
    "scalar_inv",
    "scalar_mul",
    "shrink",
    "sp_move_witness",
    "standard_form",
    "verify_witness",
    "zeros",
]
