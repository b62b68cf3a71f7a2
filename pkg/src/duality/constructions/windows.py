"""Binary words and the forbidden-window test for successors modulo 2^n."""
from __future__ import annotations

FORBIDDEN_WINDOWS: tuple[str, ...] = (
    "0010", "0011", "0100", "0111", "1001", "1000", "1110", "1101",
)
_FORBIDDEN = frozenset(FORBIDDEN_WINDOWS)


class ClaimHypothesisError(ValueError):
    """The two words end in the same bit, so the window test does not apply."""


def _check_binary(u: str) -> None:
    if not u:
        raise ValueError("empty binary word")
    if set(u) - {"0", "1"}:
        raise ValueError(f"not a binary word: {u!r}")


def int_of(u: str) -> int:
    """Value of ``u`` with the leftmost bit most significant."""
    _check_binary(u)
    value = 0
    for bit in u:
        value = 2 * value + (bit == "1")
    return value


def windows(u: str, v: str) -> list[str]:
    """The words u_i u_{i-1} v_i v_{i-1} for i = 1..n-1 (bit 0 is rightmost)."""
    n = len(u)
    # u_i sits at string index n-1-i
    return [u[n - 1 - i] + u[n - i] + v[n - 1 - i] + v[n - i] for i in range(1, n)]


def successor_window_check(u: str, v: str) -> bool:
    """True iff no window of (u, v) is forbidden.

    Requires |u| = |v| and different last bits; then the answer coincides
    with <u> + 1 = <v> (mod 2^n).
    """
    _check_binary(u)
    _check_binary(v)
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    if u[-1] == v[-1]:
        raise ClaimHypothesisError(f"u and v both end in {u[-1]}")
    return not any(w in _FORBIDDEN for w in windows(u, v))
