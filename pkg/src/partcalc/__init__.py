"""Partial set partitions: quotient, insertion, a coproduct, a Lie bracket and graph lifts."""

from __future__ import annotations

from .coalgebra import (
    check_coassociativity,
    coproduct,
    coproduct_tuple,
    enumerate_admissible_families,
    nilpotency_index,
    reduced_coproduct,
)
from .errors import PartcalcError, ParseError, ValidationError
from .graphs import (
    AdmissibleGraph,
    FeynmanDiagram,
    OrdinaryGraph,
    StructureMap,
    bracket_graphs,
    insert_admissible,
    insert_graph,
    quotient_disconnected,
    quotient_graph,
    subgraph,
    validate,
)
from .lie import (
    bracket,
    compose,
    compose_signed,
    i_part,
    jacobi_defect,
    jacobi_defect_signed,
    prelie_decomposition_check,
)
from .linear import LinComb
from .partition import (
    EMPTY,
    UNIT,
    InsertionMap,
    OrderedPartition,
    Partition,
    PartitionTuple,
    adjust,
    canonical_reinsert,
    factor_quotient,
    insert,
    is_admissible,
    iterated_quotient,
    merge_witness,
    quotient,
    restrict,
    reversion,
    touched_range,
    trivial_insert,
    tuple_quotient,
)
