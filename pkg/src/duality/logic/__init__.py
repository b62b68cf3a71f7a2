"""First-order logic over words with generalized quantifiers."""
from .formula import (
    FALSE, TRUE, And, Const, Equal, Exists, Forall, Formula, Iff, Implies, Less,
    LetterAt, Lindstrom, Majority, ModExists, Not, NumAtom, Or, bound_vars, conj,
    disj, free_vars, has_letters, letters, to_text,
)
from .parser import FormulaSyntaxError, parse_formula
from .predicates import (
    DEFAULT_REGISTRY, ArityError, NumericalPredicateRegistry, UnknownPredicateError,
)
from .rewrite import build_chi, rewrite_letter_to_equalities, tuple_vars
from .semantics import (
    Language, LetterAtomError, LindstromArityError, UnassignedVariableError,
    WordStructure, apply_transformation, compile_formula, eval_lindstrom, evaluate,
    language_of, relation_of, window_disagreements, words,
)

pretty = to_text
