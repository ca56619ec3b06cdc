"""graph6 codec (header-less), limited to orders 1..64."""
from __future__ import annotations

from typing import Union

from .errors import Graph6Error
from .graph import MAX_ORDER, Graph

HEADER = b">>graph6<<"


def _as_bytes(text: Union[str, bytes]) -> bytes:
    if isinstance(text, str):
        try:
            return text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII character", offset=exc.start) from None
    return bytes(text)


def parse_graph6(text: Union[str, bytes]) -> Graph:
    """Decode one graph6 line. A trailing LF or CRLF is accepted."""
    data = _as_bytes(text)
    if data.endswith(b"\r\n"):
        data = data[:-2]
    elif data.endswith(b"\n"):
        data = data[:-1]
    if data.startswith(HEADER):
        raise Graph6Error("the >>graph6<< header is not supported", offset=0)
    if not data:
        raise Graph6Error("empty graph6 string", offset=0)

    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte!r} outside printable range 63..126", offset=pos)

    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("order exceeds 258047", offset=1)
        if len(data) < 4:
            raise Graph6Error("truncated long-form order", offset=len(data))
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        start = 4
    else:
        n = data[0] - 63
        start = 1
    if not 1 <= n <= MAX_ORDER:
        raise Graph6Error(f"order {n} outside supported range 1..{MAX_ORDER}", offset=0)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[start:]
    if len(body) < nbytes:
        raise Graph6Error(f"expected {nbytes} adjacency bytes, got {len(body)}",
                          offset=len(data))
    if len(body) > nbytes:
        raise Graph6Error("trailing bytes after adjacency data", offset=start + nbytes)

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6:
        pad = (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6Error("non-zero padding bits", offset=start + nbytes - 1)
    return Graph(n, tuple(rows))


def encode_graph6(g: Graph) -> bytes:
    """Encode ``g`` as graph6 without header or line terminator."""
    n = g.n
    if n <= 62:
        out = bytearray([n + 63])
    else:
        out = bytearray([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    acc = 0
    nacc = 0
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            nacc += 1
            if nacc == 6:
                out.append(acc + 63)
                acc = nacc = 0
    if nacc:
        out.append((acc << (6 - nacc)) + 63)
    return bytes(out)
