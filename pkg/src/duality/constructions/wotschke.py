"""The Wotschke language {(a^n b)^n : n >= 0}."""
from __future__ import annotations


def wotschke_member(w: str) -> bool:
    if w == "":
        return True
    n = w.index("b") if "b" in w else -1
    if n < 1 or len(w) != n * (n + 1):
        return False
    return w == ("a" * n + "b") * n
