"""graph6 text encoding (header-less, short form, n <= 62)."""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from typing import TextIO

from .errors import CapacityError, InputError
from .graph import MAX_ORDER, Graph


def encode(g: Graph) -> str:
    if g.n > MAX_ORDER:
        raise CapacityError("graph6 short form holds at most 62 vertices")
    bits = []
    rows = g.rows
    for j in range(1, g.n):
        for i in range(j):
            bits.append(rows[i] >> j & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = v << 1 | b
        out.append(chr(63 + v))
    return "".join(out)


def decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise InputError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise InputError(f"invalid graph6 character in {s!r}")
    n = ord(s[0]) - 63
    if n > MAX_ORDER:
        raise CapacityError("only the short graph6 form (n <= 62) is supported")
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (nbits + 5) // 6:
        raise InputError(f"graph6 length mismatch for n={n}: {s!r}")
    rows = [0] * n
    k = 0
    vals = [ord(c) - 63 for c in body]
    for j in range(1, n):
        for i in range(j):
            if vals[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    # padding bits must be zero
    if nbits % 6 and vals[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise InputError(f"nonzero graph6 padding in {s!r}")
    return Graph._trusted(n, tuple(rows))


def read_stream(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line and not line.startswith("#"):
            yield decode(line)


def write_stream(graphs: Iterable[Graph], out: TextIO) -> None:
    for g in graphs:
        out.write(encode(g) + "\n")
