"""Exact computation in descent algebras of finite Coxeter groups.

Build a finite Coxeter group, compute its parabolic table of marks, the
descent algebra with its radical in characteristic 0 and p, and derive
decomposition and Cartan matrices -- all in exact arithmetic.
"""

from .coxeter import (
    BudgetExceededError,
    CoxeterGroup,
    CoxeterType,
    GroupElement,
    UnsupportedTypeError,
    build_group,
    coxeter_element,
    element_order,
    inverse,
    length,
    multiply,
    p_regular_part,
)
from .descent import (
    DescentElement,
    RadicalBasis,
    StructureConstants,
    group_algebra_descent_product,
    multiply as descent_multiply,
    radical_basis_char0,
    radical_basis_mod_p,
    structure_constants,
    theta,
    x_basis,
)
from .marks import MarksTable, beta, beta_by_double_cosets, build_marks_table, chi_value
from .modular import (
    ArrowData,
    CartanMatrix,
    DecompositionMatrix,
    cartan_matrix,
    decomposition_matrix,
    lift_idempotents,
    modular_index,
    p_arrow_classes,
    p_special,
    primes_dividing,
    verify_CDC,
    verify_decomp_equals_arrow,
)
from .parabolic import (
    ClassIndexE,
    SubsetClass,
    class_index,
    d_type_normalizer_oracle,
    double_coset_reps,
    iso_label,
    min_coset_reps,
    normalizer_index,
    parabolic_closure_class,
    parabolic_subgroup,
    subsets_conjugate,
)
from .partitions import (
    no_part_divisible_count,
    partitions_count,
    restricted_count,
)
from .sqrt5 import Sqrt5

__version__ = "0.1.0"
