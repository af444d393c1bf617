"""On-disk store for computed language levels.

One file per level at <root>/<b>_<m>/<n>.bin.  A file holds the sorted
factors back to back, each encoded as a little-endian u32 word length
followed by its letters, every letter in the smallest whole number of
bytes that can hold m - 1 (little-endian within the letter).  Damaged or
foreign files are treated as misses, never as errors: the caller just
recomputes and overwrites.
"""

from __future__ import annotations

import os
import struct
from pathlib import Path
from typing import Iterable

from .wordgen import Params, Word


def letter_width(m: int) -> int:
    """Bytes per letter: minimal width that holds every residue mod m."""
    return max(1, ((m - 1).bit_length() + 7) // 8)


def level_path(root: Path | str, params: Params, n: int) -> Path:
    return Path(root) / f"{params.b}_{params.m}" / f"{n}.bin"


def encode_level(params: Params, words: Iterable[Word]) -> bytes:
    width = letter_width(params.m)
    chunks = []
    for word in sorted(words):
        chunks.append(struct.pack("<I", len(word)))
        for k in word:
            chunks.append(k.to_bytes(width, "little"))
    return b"".join(chunks)


def decode_level(params: Params, n: int, data: bytes) -> frozenset[Word] | None:
    """Parse a level file; None when the bytes are not a valid level."""
    width = letter_width(params.m)
    words = set()
    pos = 0
    while pos < len(data):
        if pos + 4 > len(data):
            return None
        (count,) = struct.unpack_from("<I", data, pos)
        pos += 4
        end = pos + count * width
        if count != n or end > len(data):
            return None
        word = tuple(
            int.from_bytes(data[pos + i * width : pos + (i + 1) * width], "little")
            for i in range(count)
        )
        if any(k >= params.m for k in word):
            return None
        words.add(word)
        pos = end
    return frozenset(words)


def store_level(root: Path | str, params: Params, n: int, words: Iterable[Word]) -> None:
    path = level_path(root, params, n)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(f"{path.name}.{os.getpid()}.tmp")
    tmp.write_bytes(encode_level(params, words))
    os.replace(tmp, path)


def load_level(root: Path | str, params: Params, n: int) -> frozenset[Word] | None:
    path = level_path(root, params, n)
    try:
        data = path.read_bytes()
    except OSError:
        return None
    return decode_level(params, n, data)
