"""Finite binary strings: word order, bounded successor, self-delimiting code.

Strings are plain Python ``str`` over '0'/'1'; the empty string is the empty
word. The order is word order: a proper prefix precedes its extensions,
otherwise the first differing bit decides. For the 0/1 alphabet this
coincides with Python's string comparison, which the implementation
exploits; ``lex_compare`` stays the named entry point and is property-tested
against an explicit brute-force sort.
"""

from __future__ import annotations

from .dyadic import Dyadic


class DecodeError(ValueError):
    """Malformed self-delimiting stream; ``offset`` is the failing bit index."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (bit offset {offset})")
        self.offset = offset


def check_bits(x: str) -> str:
    if any(c not in "01" for c in x):
        raise ValueError(f"not a bitstring: {x!r}")
    return x


def lex_compare(a: str, b: str) -> int:
    """-1, 0 or +1; a proper prefix precedes its extensions."""
    if a == b:
        return 0
    return -1 if a < b else 1


def successor_bounded(x: str):
    """Smallest y > x with len(y) <= len(x); None when x is all 1-bits.

    The undefined case is a regular result, not an exception: every string
    of the form 111...1 (including the empty string) has no bounded
    successor.
    """
    # Scan right to left for a 0 we can raise; everything after it drops off.
    for k in range(len(x) - 1, -1, -1):
        if x[k] == "0":
            return x[:k] + "1"
    return None


def self_delim_encode(x: str) -> str:
    """Prefix-free code: each length bit doubled, then '01', then x."""
    n = bin(len(x))[2:]  # binary of the length; "0" encodes the empty word
    return "".join(c + c for c in n) + "01" + x


def self_delim_decode(stream: str) -> tuple[str, int]:
    """Inverse of self_delim_encode on its image; returns (x, bits consumed).

    Junk after the encoded block is ignored. Raises DecodeError with the
    offending bit offset on truncated or malformed headers.
    """
    digits = []
    pos = 0
    while True:
        pair = stream[pos : pos + 2]
        if len(pair) < 2:
            raise DecodeError("header never terminated", len(stream))
        if pair == "01":
            pos += 2
            break
        if pair[0] != pair[1]:
            raise DecodeError("broken doubled digit in header", pos)
        digits.append(pair[0])
        pos += 2
    if not digits:
        raise DecodeError("empty length field", pos - 2)
    n = int("".join(digits), 2)
    payload = stream[pos : pos + n]
    if len(payload) < n:
        raise DecodeError("payload truncated", len(stream))
    return payload, pos + n


def dyadic_value(x: str) -> Dyadic:
    """0.x as an exact dyadic; trailing zeros do not change the value."""
    if x == "":
        raise ValueError("the empty word has no dyadic expansion value")
    return Dyadic.make(int(x, 2), len(x))


def output_value(x: str) -> Dyadic:
    """0.x extended to the empty word (value 0); used for output comparisons."""
    if x == "":
        return Dyadic.zero()
    return dyadic_value(x)


def all_strings_upto(n: int):
    """Every bitstring of length <= n in (length, word-order) enumeration."""
    yield ""
    for length in range(1, n + 1):
        for v in range(1 << length):
            yield format(v, f"0{length}b")
