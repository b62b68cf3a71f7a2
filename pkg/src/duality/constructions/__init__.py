"""Concrete languages, machines and formula families."""
from .addition import addition_dpda, addition_language
from .immerman import (
    ComplementDecomposition, NpdaRunner, complement_decomposition_member, immerman_member, in_A,
    modified_immerman_member, npda_for_A, regular_components, unequal_blocks_npda,
)
from .transforms import (
    build_tuple_transformation, chi_transducer, psi_transducer, tuple_transformation_alphabet,
)
from .windows import FORBIDDEN_WINDOWS, ClaimHypothesisError, int_of, successor_window_check
from .wotschke import wotschke_member
