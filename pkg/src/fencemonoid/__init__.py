"""The inverse monoid of order-, parity- and fence-preserving partial injections
on the chain 1..n: elements, Green's relations, ideals and maximal subsemigroups
of ideals, with brute-force oracles to check them."""

from .core import (
    PartialInjection,
    Signature,
    compose,
    count_by_classes,
    enumerate_elements,
    identity,
    inverse,
    is_member,
    semantic_is_member,
    signature,
    sim,
    sim_class,
    sim_classes,
)
from .green import GreenRelationKind, classes, green_oracle, related
from .ideals import (
    IdealFamily,
    close_family,
    elements_of_ideal,
    enumerate_ideals,
    is_ideal_family,
    minimal_ideals,
    parse_ideal_spec,
)
from .kernels import BACKEND
from .maxsub import (
    MaxSubDescriptor,
    classify_maximal,
    compute_B,
    compute_BC,
    compute_C,
    compute_Iu,
    materialize,
    removed_set_T,
)
from .oracle import Budget, BudgetExceeded, ElementTable, brute_ideals, brute_maximal, monoid_table

__version__ = "0.1.0"
