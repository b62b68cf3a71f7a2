"""Tuple transformation from positions to Gamma_n words, and the psi/chi
transducers between sorted structures and words a_1^* ... a_m^*."""
from __future__ import annotations

from ..automata.transducer import Transducer
from ..logic.formula import Equal, Formula, Not, conj
from ..structures import PAD, gamma_alphabet


def build_tuple_transformation(n: int, y: str = "y") -> list[Formula]:
    """phi_1 .. phi_{2^n - 1}; phi_i says "y holds exactly the variables in V_i".

    V_i is the subset with bitmask i (x_j in V_i iff bit j-1 of i is set).
    The letter produced by phi_i is ``tuple_transformation_alphabet(n)[i-1]``
    and the default letter is the padding symbol.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []
    for mask in range(1, 1 << n):
        parts = []
        for j in range(1, n + 1):
            eq = Equal(y, f"x{j}")
            parts.append(eq if mask >> (j - 1) & 1 else Not(eq))
        out.append(conj(parts))
    return out


def tuple_transformation_alphabet(n: int) -> tuple[str, ...]:
    sigma = gamma_alphabet(n)
    return sigma[1:] + sigma[:1]


def psi_letters(m: int) -> tuple[str, ...]:
    return tuple(f"a{j}" for j in range(1, m + 1)) + ("e",)


def psi_transducer(m: int) -> Transducer:
    """Sorted structures over x_1..x_m to words a_1^* ... a_m^* e^*.

    Position i becomes a_j when x_j is the first variable at or after i, and
    e when no variable lies at or after i.  The state ``gk`` guesses that x_k
    is the next variable to appear, ``ge`` that none is left; a wrong guess
    dies, so each word has at most one accepting run.  Variables may be
    missing but must appear in increasing order.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    states = [f"g{k}" for k in range(1, m + 1)] + ["ge"]
    inputs = (PAD,) + tuple(f"x{k}" for k in range(1, m + 1))
    trans: dict = {("ge", PAD): [("ge", ("e",))]}
    for k in range(1, m + 1):
        trans[(f"g{k}", PAD)] = [(f"g{k}", (f"a{k}",))]
        trans[(f"g{k}", f"x{k}")] = [(s, (f"a{k}",)) for s in states[k:]]
    return Transducer(states, inputs, psi_letters(m), trans, states, {"ge"})


def chi_transducer(m: int) -> Transducer:
    """Words over a_1..a_m to structures: the last a_j of each run becomes x_j.

    ``same{j}`` promises the next letter is a_j again, ``diff{j}`` promises
    it is different (or that the word ends), so the run is unique.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    letters = [f"a{j}" for j in range(1, m + 1)]
    states = ["start"] + [f"same{j}" for j in range(1, m + 1)] + [f"diff{j}" for j in range(1, m + 1)]
    trans: dict = {}
    for j in range(1, m + 1):
        moves = [(f"same{j}", (PAD,)), (f"diff{j}", (f"x{j}",))]
        trans[("start", f"a{j}")] = moves
        trans[(f"same{j}", f"a{j}")] = moves
        for k in range(1, m + 1):
            if k != j:
                trans[(f"diff{k}", f"a{j}")] = moves
    outputs = (PAD,) + tuple(f"x{j}" for j in range(1, m + 1))
    return Transducer(states, letters, outputs, trans, {"start"},
                      {"start"} | {f"diff{j}" for j in range(1, m + 1)})
