"""Supernatural numbers, periodic partitions of finite dynamical systems,
odometers, and factor maps between them."""

from .dynsys import (
    ChainReport,
    FinSystem,
    PartitionChain,
    PartitionReport,
    PeriodicPartition,
    all_partitions,
    are_compatible,
    are_equivalent,
    blocks_json,
    build_chain,
    canonical_partition,
    chains_compatible,
    coarsen,
    compatible_classes,
    constant_label_offset,
    cycle_subsystem,
    cyclic_shift,
    enumerate_compatible,
    ess_periods,
    extend_chain,
    format_cycles,
    invariant_components,
    is_indecomposable,
    lcm_partition,
    make_compatible,
    parse_cycles,
    partition_from_return,
    period_gcd,
    saturation,
    trivial_partition,
    validate_chain,
    validate_partition,
)
from .errors import DomainError, ParseError
from .factors import (
    Comparison,
    FactorMap,
    SigmaDownSet,
    almost_periodic_points,
    build_factor_map,
    compare_projections,
    enumerate_factor_maps,
    factor_report,
    fiber,
    fiber_partition,
    is_maximal_projection,
    max_odometer_factor,
    normalize_coherent,
    projection_exists,
    sigma_of_system,
    singleton_fiber_set,
)
from .odometer import (
    AdicInt,
    BaseSequence,
    Cylinder,
    Distance,
    add,
    cylinder,
    ess_of_odometer,
    format_adic,
    format_base,
    from_integer,
    level_partition,
    metric,
    neg,
    parse_adic,
    parse_base,
    translate,
    truncate,
)
from .supernatural import (
    E,
    INF,
    TOP,
    RegularSeq,
    Supernatural,
    extract_regular_sequence,
    format_supernatural,
    gcd,
    lcm,
    leq,
    mul,
    parse_supernatural,
    phi0,
    phi_of_set,
    regular_contains,
    seq_dominates,
)

__version__ = "0.1.0"

__all__ = [
    "AdicInt",
    "BaseSequence",
    "ChainReport",
    "Comparison",
    "Cylinder",
    "Distance",
    "DomainError",
    "E",
    "FactorMap",
    "FinSystem",
    "INF",
    "ParseError",
    "PartitionChain",
    "PartitionReport",
    "PeriodicPartition",
    "RegularSeq",
    "SigmaDownSet",
    "Supernatural",
    "TOP",
    "add",
    "all_partitions",
    "almost_periodic_points",
    "are_compatible",
    "are_equivalent",
    "blocks_json",
    "build_chain",
    "build_factor_map",
    "canonical_partition",
    "chains_compatible",
    "coarsen",
    "compare_projections",
    "compatible_classes",
    "constant_label_offset",
    "cycle_subsystem",
    "cyclic_shift",
    "cylinder",
    "enumerate_compatible",
    "enumerate_factor_maps",
    "ess_of_odometer",
    "ess_periods",
    "extend_chain",
    "extract_regular_sequence",
    "factor_report",
    "fiber",
    "fiber_partition",
    "format_adic",
    "format_base",
    "format_cycles",
    "format_supernatural",
    "from_integer",
    "gcd",
    "invariant_components",
    "is_indecomposable",
    "is_maximal_projection",
    "lcm",
    "lcm_partition",
    "leq",
    "level_partition",
    "make_compatible",
    "max_odometer_factor",
    "metric",
    "mul",
    "neg",
    "normalize_coherent",
    "parse_adic",
    "parse_base",
    "parse_cycles",
    "parse_supernatural",
    "partition_from_return",
    "period_gcd",
    "phi0",
    "phi_of_set",
    "projection_exists",
    "regular_contains",
    "saturation",
    "seq_dominates",
    "sigma_of_system",
    "singleton_fiber_set",
    "translate",
    "trivial_partition",
    "truncate",
    "validate_chain",
    "validate_partition",
]
