"""Plain-text positions and a persistent store of solved values.

Edge lists are whitespace-separated vertex pairs, one edge instance per
line, with ``#`` comments.  The value cache is a little-endian binary
file: magic ``SNC1`` then records of (u32 key length, canonical key
bytes, i16 differential).  Appending records is always safe; a truncated
or corrupt tail is dropped on load with a count of skipped records, so a
crash mid-write never poisons earlier results.
"""

from __future__ import annotations

import os
import struct
from dataclasses import dataclass

from .canonical import unpack_key
from .graph import LoopyMultigraph

MAGIC = b"SNC1"


class EdgeListFormatError(ValueError):
    """Unparseable edge-list text."""


class CacheFormatError(ValueError):
    """Cache file whose header is not recognizably this format."""


def parse_edge_list(text: str) -> LoopyMultigraph:
    """Read one edge instance per line: two vertex ids, ``#`` comments."""
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListFormatError(f"line {lineno}: expected two vertex ids, got {raw!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListFormatError(f"line {lineno}: vertex ids must be integers, got {raw!r}")
        if a < 0 or b < 0:
            raise EdgeListFormatError(f"line {lineno}: vertex ids must be non-negative")
        edges.append((a, b))
    return LoopyMultigraph.from_edges(edges)


def read_edge_list(path: str) -> LoopyMultigraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: LoopyMultigraph, path: str) -> None:
    """Write one line per edge instance, sorted, parallel edges repeated."""
    with open(path, "w", encoding="utf-8") as fh:
        for ref, m in g.edge_pairs():
            for _ in range(m):
                fh.write(f"{ref.u} {ref.v}\n")


@dataclass
class CacheLoad:
    """Entries read from a cache file plus a count of records dropped."""

    entries: dict[bytes, int]
    skipped: int


def _plausible_record(key: bytes, value: int) -> bool:
    """Sanity screen for one record: well-formed key, value within range
    and of the right parity (a differential and its vertex count always
    share parity)."""
    try:
        n, triples = unpack_key(key)
    except ValueError:
        return False
    if abs(value) > n or (value - n) % 2 != 0:
        return False
    return all(a <= b < n for a, b, _ in triples) if n else not triples


def load_cache(path: str) -> CacheLoad:
    """Read a value cache; tolerate and count a corrupt or truncated tail."""
    with open(path, "rb") as fh:
        blob = fh.read()
    if len(blob) < len(MAGIC) or blob[: len(MAGIC)] != MAGIC:
        raise CacheFormatError(f"{path}: not a value-cache file")
    entries: dict[bytes, int] = {}
    skipped = 0
    off = len(MAGIC)
    end = len(blob)
    while off < end:
        if off + 4 > end:
            skipped += 1
            break
        (klen,) = struct.unpack_from("<I", blob, off)
        off += 4
        if klen == 0 or off + klen + 2 > end:
            skipped += 1
            break
        key = blob[off : off + klen]
        off += klen
        (value,) = struct.unpack_from("<h", blob, off)
        off += 2
        if _plausible_record(key, value):
            entries[key] = value
        else:
            skipped += 1
    return CacheLoad(entries, skipped)


def save_cache(path: str, entries: dict[bytes, int] | list[tuple[bytes, int]], append: bool = False) -> int:
    """Write records; with ``append`` add to an existing file.  Returns
    the number of records written."""
    items = entries.items() if isinstance(entries, dict) else entries
    fresh = not (append and os.path.exists(path))
    mode = "ab" if not fresh else "wb"
    count = 0
    with open(path, mode) as fh:
        if fresh:
            fh.write(MAGIC)
        for key, value in items:
            fh.write(struct.pack("<I", len(key)))
            fh.write(key)
            fh.write(struct.pack("<h", value))
            count += 1
    return count


def compact_cache(path: str) -> tuple[int, int]:
    """Rewrite a cache dropping duplicate keys and corrupt records.

    Returns (records before, records after).  The rewrite goes through a
    temp file and an atomic rename.
    """
    loaded = load_cache(path)
    with open(path, "rb") as fh:
        blob = fh.read()
    before = 0
    off = len(MAGIC)
    while off + 4 <= len(blob):
        (klen,) = struct.unpack_from("<I", blob, off)
        step = 4 + klen + 2
        if klen == 0 or off + step > len(blob):
            before += 1
            break
        before += 1
        off += step
    tmp = path + ".tmp"
    save_cache(tmp, dict(sorted(loaded.entries.items())))
    os.replace(tmp, path)
    return before, len(loaded.entries)
