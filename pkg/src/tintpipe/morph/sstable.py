"""Immutable sorted string table: sorted key blocks plus a sparse index.

Byte layout (little-endian), documented in docs/store_format.md:

    header   magic "MLEX", u16 version, u16 flags, u64 entry count,
             32-byte source checksum, u32 block size, u32 block count,
             u64 index offset, u32 index length, u32 index crc32,
             u32 header crc32; zero padded to one block
    blocks   u32 record count, then records of
             u16 key length, key bytes, u32 value length, value bytes;
             each block zero padded to a multiple of the block size
    index    per block: u64 offset, u32 length, u32 crc32,
             u16 first-key length, first-key bytes
"""

from __future__ import annotations

import mmap
import os
import struct
import zlib
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator

from ..errors import StoreCorrupt

MAGIC = b"MLEX"
VERSION = 1
BLOCK_SIZE = 4096

_HEAD = struct.Struct("<4sHHQ32sIIQII")
_HEAD_CRC = struct.Struct("<I")
_U16 = struct.Struct("<H")
_U32 = struct.Struct("<I")
_INDEX_ENTRY = struct.Struct("<QIIH")


@dataclass(frozen=True)
class StoreHeader:
    entry_count: int
    checksum: bytes
    version: int = VERSION
    block_size: int = BLOCK_SIZE
    block_count: int = 0
    malformed_lines: tuple[int, ...] = field(default=(), compare=False)


def write_table(path: str | Path, items: Iterable[tuple[bytes, bytes]], checksum: bytes,
                block_size: int = BLOCK_SIZE) -> StoreHeader:
    """Write (key, value) pairs, which must arrive in strictly increasing key order."""
    if len(checksum) != 32:
        raise ValueError("checksum must be 32 bytes")
    blocks: list[bytearray] = []
    firsts: list[bytes] = []
    counts: list[int] = []
    current = bytearray()
    count = 0
    prev = None
    entries = 0
    for key, value in items:
        if prev is not None and key <= prev:
            raise ValueError(f"keys not strictly increasing at {key!r}")
        prev = key
        if len(key) > 0xFFFF:
            raise ValueError(f"key of {len(key)} bytes exceeds the 65535-byte limit")
        record = _U16.pack(len(key)) + key + _U32.pack(len(value)) + value
        if count and 4 + len(current) + len(record) > block_size:
            blocks.append(current)
            counts.append(count)
            current, count = bytearray(), 0
        if not count:
            firsts.append(key)
        current += record
        count += 1
        entries += 1
    if count:
        blocks.append(current)
        counts.append(count)

    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    index = bytearray()
    with open(tmp, "wb") as fh:
        fh.write(b"\0" * block_size)
        offset = block_size
        for body, n, first in zip(blocks, counts, firsts):
            data = _U32.pack(n) + bytes(body)
            padded = -(-len(data) // block_size) * block_size
            fh.write(data + b"\0" * (padded - len(data)))
            index += _INDEX_ENTRY.pack(offset, len(data), zlib.crc32(data), len(first)) + first
            offset += padded
        fh.write(index)
        head = _HEAD.pack(MAGIC, VERSION, 0, entries, checksum, block_size, len(blocks),
                          offset, len(index), zlib.crc32(index))
        fh.seek(0)
        fh.write(head + _HEAD_CRC.pack(zlib.crc32(head)))
    os.replace(tmp, path)
    return StoreHeader(entries, checksum, VERSION, block_size, len(blocks))


class SSTable:
    """Read-only view over a table file; safe to share between threads."""

    def __init__(self, path: str | Path, block_cache: int = 512):
        self.path = Path(path)
        with open(self.path, "rb") as fh:
            size = os.fstat(fh.fileno()).st_size
            if size < _HEAD.size + 4:
                raise StoreCorrupt(f"{path}: file too short for a header")
            self._mm = mmap.mmap(fh.fileno(), 0, access=mmap.ACCESS_READ)
        mm = self._mm
        raw = mm[:_HEAD.size]
        (magic, version, _flags, entries, checksum, block_size, nblocks,
         index_off, index_len, index_crc) = _HEAD.unpack(raw)
        if magic != MAGIC:
            raise StoreCorrupt(f"{path}: bad magic {magic!r}")
        if _HEAD_CRC.unpack_from(mm, _HEAD.size)[0] != zlib.crc32(raw):
            raise StoreCorrupt(f"{path}: header checksum mismatch")
        if version != VERSION:
            raise StoreCorrupt(f"{path}: unsupported version {version}")
        if index_off + index_len > size:
            raise StoreCorrupt(f"{path}: truncated index")
        index = mm[index_off:index_off + index_len]
        if zlib.crc32(index) != index_crc:
            raise StoreCorrupt(f"{path}: index checksum mismatch")
        self.header = StoreHeader(entries, checksum, version, block_size, nblocks)
        self._offsets: list[int] = []
        self._lengths: list[int] = []
        self._crcs: list[int] = []
        self.first_keys: list[bytes] = []
        pos = 0
        for _ in range(nblocks):
            off, length, crc, klen = _INDEX_ENTRY.unpack_from(index, pos)
            pos += _INDEX_ENTRY.size
            self.first_keys.append(index[pos:pos + klen])
            pos += klen
            if off + length > index_off:
                raise StoreCorrupt(f"{path}: block {len(self._offsets)} out of range")
            self._offsets.append(off)
            self._lengths.append(length)
            self._crcs.append(crc)
        self.block_reads = 0
        self._block = lru_cache(maxsize=block_cache)(self._read_block)

    def __len__(self) -> int:
        return self.header.entry_count

    def close(self) -> None:
        self._mm.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    def clear_cache(self) -> None:
        self._block.cache_clear()

    def find_block(self, key: bytes) -> tuple[int, int]:
        """Binary search of the sparse index: (block number or -1, probes used)."""
        lo, hi = 0, len(self.first_keys)
        probes = 0
        keys = self.first_keys
        while lo < hi:
            mid = (lo + hi) // 2
            probes += 1
            if keys[mid] <= key:
                lo = mid + 1
            else:
                hi = mid
        return lo - 1, probes

    def _read_block(self, n: int) -> dict[bytes, bytes]:
        self.block_reads += 1
        off = self._offsets[n]
        data = self._mm[off:off + self._lengths[n]]
        if zlib.crc32(data) != self._crcs[n]:
            raise StoreCorrupt(f"{self.path}: block {n} checksum mismatch")
        return dict(_decode_block(data))

    def get(self, key: bytes) -> bytes | None:
        n, _ = self.find_block(key)
        if n < 0:
            return None
        return self._block(n).get(key)

    def items(self, start: bytes = b"") -> Iterator[tuple[bytes, bytes]]:
        """All pairs with key >= start, in key order."""
        n, _ = self.find_block(start)
        for b in range(max(n, 0), len(self._offsets)):
            off = self._offsets[b]
            data = self._mm[off:off + self._lengths[b]]
            if zlib.crc32(data) != self._crcs[b]:
                raise StoreCorrupt(f"{self.path}: block {b} checksum mismatch")
            for key, value in _decode_block(data):
                if key >= start:
                    yield key, value

    def keys(self) -> Iterator[bytes]:
        for key, _ in self.items():
            yield key

    def prefix_items(self, prefix: bytes) -> Iterator[tuple[bytes, bytes]]:
        for key, value in self.items(prefix):
            if not key.startswith(prefix):
                return
            yield key, value


def _decode_block(data: bytes) -> Iterator[tuple[bytes, bytes]]:
    (count,) = _U32.unpack_from(data, 0)
    pos = 4
    try:
        for _ in range(count):
            (klen,) = _U16.unpack_from(data, pos)
            pos += 2
            key = data[pos:pos + klen]
            pos += klen
            (vlen,) = _U32.unpack_from(data, pos)
            pos += 4
            yield key, data[pos:pos + vlen]
            pos += vlen
    except struct.error as exc:
        raise StoreCorrupt(f"undecodable block: {exc}") from exc
