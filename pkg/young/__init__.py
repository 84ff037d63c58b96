#!/usr/bin/env python3
# www.jrodal.com

from young.diagrams import (
    EMPTY_MARKER,
    contains,
    irrep_dim,
    irreps_with_dim,
    is_trivial_for,
    partitions_in_box,
    partitions_of_weight,
    random_partitions,
    reduce_mod,
    render_ascii,
    transpose,
    weight,
)
from young.partition import (
    Partition,
    PartitionLike,
    as_partition,
    make_partition,
)

__all__ = [
    "EMPTY_MARKER",
    "Partition",
    "PartitionLike",
    "as_partition",
    "contains",
    "irrep_dim",
    "irreps_with_dim",
    "is_trivial_for",
    "make_partition",
    "partitions_in_box",
    "partitions_of_weight",
    "random_partitions",
    "reduce_mod",
    "render_ascii",
    "transpose",
    "weight",
]
