"""Line-oriented text format for machines.

Example::

    type dpda
    states z0 acc
    input . x1
    stack ⊥ 0
    bottom ⊥
    initial z0
    initial-stack ⊥
    accepting acc
    transitions
    z0 x1 ⊥ -> acc 0 ⊥

Header lines come first, then ``transitions`` followed by one move per line.
``~`` stands for epsilon.  Pushdown moves read ``state symbol top -> target
push...`` with the new top written first; NFA moves read ``state symbol ->
target``; transducer moves read ``state symbol -> target / output...``.
Lines starting with ``#`` and blank lines are ignored.  Names may not contain
whitespace, and ``~``, ``->`` and ``/`` are reserved.
"""
from __future__ import annotations

from .nfa import Nfa
from .pda import Dpda, Npda
from .transducer import Transducer

EPS_TOKEN = "~"


class MachineFormatError(ValueError):
    pass


def _sym(a) -> str:
    return EPS_TOKEN if a is None else str(a)


def _unsym(tok: str):
    return None if tok == EPS_TOKEN else tok


def _names(items, what: str) -> list[str]:
    out = []
    for x in items:
        if not isinstance(x, str) or not x or any(c.isspace() for c in x) or x in ("~", "->", "/"):
            raise MachineFormatError(f"{what} name {x!r} cannot be written in the text format")
        out.append(x)
    return out


def format_machine(machine) -> str:
    lines: list[str] = []
    if isinstance(machine, (Dpda, Npda)):
        kind = "dpda" if isinstance(machine, Dpda) else "npda"
        lines += [
            f"type {kind}",
            "states " + " ".join(sorted(_names(machine.states, "state"))),
            "input " + " ".join(_names(machine.alphabet, "symbol")),
            "stack " + " ".join(_names(machine.stack_alphabet, "stack symbol")),
            f"bottom {machine.bottom}",
            f"initial {machine.initial}",
            "initial-stack " + " ".join(machine.initial_stack),
            "accepting " + " ".join(sorted(machine.accepting)),
            "transitions",
        ]
        for r in machine.rules:
            push = " ".join(r.push)
            lines.append(f"{r.state} {_sym(r.symbol)} {r.top} -> {r.target}" + (f" {push}" if push else ""))
    elif isinstance(machine, Nfa):
        lines += [
            "type nfa",
            "states " + " ".join(sorted(_names(machine.states, "state"))),
            "input " + " ".join(_names(machine.alphabet, "symbol")),
            "initial " + " ".join(sorted(machine.initial)),
            "accepting " + " ".join(sorted(machine.accepting)),
            "transitions",
        ]
        order = {a: i for i, a in enumerate(machine.alphabet)}
        for (q, a), ds in sorted(machine.transitions.items(), key=lambda kv: (kv[0][0], order.get(kv[0][1], -1))):
            for p in sorted(ds):
                lines.append(f"{q} {_sym(a)} -> {p}")
    elif isinstance(machine, Transducer):
        lines += [
            "type transducer",
            "states " + " ".join(sorted(_names(machine.states, "state"))),
            "input " + " ".join(_names(machine.alphabet, "symbol")),
            "output " + " ".join(_names(machine.output_alphabet, "symbol")),
            "initial " + " ".join(sorted(machine.initial)),
            "accepting " + " ".join(sorted(machine.accepting)),
            "transitions",
        ]
        for (q, a), moves in machine.transitions.items():
            for p, out in moves:
                lines.append(f"{q} {a} -> {p} /" + "".join(f" {o}" for o in out))
    else:
        raise TypeError(f"cannot format {type(machine).__name__}")
    return "\n".join(lines) + "\n"


_HEADERS = {
    "dpda": ("states", "input", "stack", "bottom", "initial", "initial-stack", "accepting"),
    "npda": ("states", "input", "stack", "bottom", "initial", "initial-stack", "accepting"),
    "nfa": ("states", "input", "initial", "accepting"),
    "transducer": ("states", "input", "output", "initial", "accepting"),
}


def parse_machine(text: str):
    header: dict[str, list[str]] = {}
    moves: list[tuple[int, list[str]]] = []
    in_moves = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if in_moves:
            moves.append((lineno, parts))
        elif parts[0] == "transitions":
            in_moves = True
        else:
            if parts[0] in header:
                raise MachineFormatError(f"line {lineno}: duplicate header {parts[0]!r}")
            header[parts[0]] = parts[1:]
    kind = (header.get("type") or [None])[0]
    if kind not in _HEADERS:
        raise MachineFormatError(f"unknown machine type {kind!r}")
    for key in _HEADERS[kind]:
        if key not in header:
            raise MachineFormatError(f"missing header {key!r}")

    def arrow(lineno, parts):
        if "->" not in parts:
            raise MachineFormatError(f"line {lineno}: missing '->'")
        i = parts.index("->")
        return parts[:i], parts[i + 1:]

    if kind in ("dpda", "npda"):
        rules = []
        for lineno, parts in moves:
            left, right = arrow(lineno, parts)
            if len(left) != 3 or not right:
                raise MachineFormatError(f"line {lineno}: expected 'state symbol top -> target push...'")
            rules.append((left[0], _unsym(left[1]), left[2], right[0], tuple(right[1:])))
        cls = Dpda if kind == "dpda" else Npda
        (bottom,) = header["bottom"]
        (initial,) = header["initial"]
        return cls(header["states"], header["input"], header["stack"], bottom, rules,
                   initial, header["accepting"], header["initial-stack"])
    if kind == "nfa":
        trans: dict = {}
        for lineno, parts in moves:
            left, right = arrow(lineno, parts)
            if len(left) != 2 or len(right) != 1:
                raise MachineFormatError(f"line {lineno}: expected 'state symbol -> target'")
            trans.setdefault((left[0], _unsym(left[1])), set()).add(right[0])
        return Nfa(header["states"], header["input"], trans, header["initial"], header["accepting"])
    trans = {}
    for lineno, parts in moves:
        left, right = arrow(lineno, parts)
        if len(left) != 2 or len(right) < 2 or right[1] != "/":
            raise MachineFormatError(f"line {lineno}: expected 'state symbol -> target / output...'")
        trans.setdefault((left[0], left[1]), []).append((right[0], tuple(right[2:])))
    return Transducer(header["states"], header["input"], header["output"], trans,
                      header["initial"], header["accepting"])
