"""Finite automata, pushdown automata and transducers."""
from .nfa import (
    Dfa, Nfa, NotDeterministicError, complement, determinize, enumerate_words,
    from_word_set, nfa_accepts, product, relabel, star_of_symbols,
)
from .pda import (
    Dpda, Npda, NondeterminismError, Rule, StackBoundError, as_npda, dpda_run, npda_accepts,
)
from .textio import MachineFormatError, format_machine, parse_machine
from .transducer import AmbiguousRunError, Transducer, compose, transduce
