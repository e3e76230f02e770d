"""Run-length codec for grayscale images and the SRLE container format.

Encoding flattens the image row-major and replaces each maximal run of
equal pixels with a (value, length) pair, kept as two parallel vectors.
Encoder output is canonical: adjacent runs never share a value, so a given
image has exactly one encoding. The decoder does not rely on that and also
accepts streams with adjacent equal runs.

Container layout, all integers little-endian, no padding:

    offset  size  field
    ------  ----  -----------------------------
    0       4     magic "SRLE"
    4       1     format version, currently 1
    5       4     image width   (u32)
    9       4     image height  (u32)
    13      4     run count k   (u32)
    17      5*k   run records: value (u8), run length (u32)

A container is therefore 17 + 5*k bytes and carries no trailing data; a
constant 256x256 image costs 22 bytes. Run lengths are 32-bit because a
single run can cover a whole image (65536 pixels at 256x256 already
overflows 16 bits).
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field

import numpy as np

from .errors import BadMagic, LengthMismatch, TrailingGarbage, Truncated, UnsupportedVersion
from .image import as_gray

MAGIC = b"SRLE"
VERSION = 1
HEADER = struct.Struct("<4sBIII")
RUN_DTYPE = np.dtype([("value", "<u1"), ("length", "<u4")])


@dataclass
class RunLengthStream:
    """Run-length form of an image: dimensions plus parallel value/length vectors."""

    width: int
    height: int
    values: np.ndarray = field(repr=False)
    lengths: np.ndarray = field(repr=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RunLengthStream):
            return NotImplemented
        return (
            self.width == other.width
            and self.height == other.height
            and np.array_equal(self.values, other.values)
            and np.array_equal(self.lengths, other.lengths)
        )

    def runs(self) -> list[tuple[int, int]]:
        """The stream as (value, length) pairs."""
        return [(int(v), int(n)) for v, n in zip(self.values, self.lengths)]


def rle_encode(img: np.ndarray) -> RunLengthStream:
    """Encode an image into maximal row-major runs (canonical form)."""
    img = as_gray(img)
    height, width = img.shape
    flat = img.ravel()
    starts = np.concatenate(([0], np.flatnonzero(flat[1:] != flat[:-1]) + 1))
    lengths = np.diff(np.concatenate((starts, [flat.size])))
    return RunLengthStream(
        width=width,
        height=height,
        values=flat[starts].copy(),
        lengths=lengths.astype(np.int64),
    )


def rle_decode(stream: RunLengthStream) -> np.ndarray:
    """Expand a run-length stream back into the original image."""
    total = int(np.sum(stream.lengths, dtype=np.int64))
    expected = stream.width * stream.height
    if total != expected:
        raise LengthMismatch(
            f"run lengths sum to {total}, image needs {expected} pixels"
        )
    flat = np.repeat(
        np.asarray(stream.values, dtype=np.uint8),
        np.asarray(stream.lengths, dtype=np.int64),
    )
    return flat.reshape(stream.height, stream.width)


def serialize(stream: RunLengthStream) -> bytes:
    """Pack a run-length stream into SRLE container bytes."""
    count = len(stream.values)
    records = np.empty(count, dtype=RUN_DTYPE)
    records["value"] = stream.values
    records["length"] = stream.lengths
    header = HEADER.pack(MAGIC, VERSION, stream.width, stream.height, count)
    return header + records.tobytes()


def deserialize(data: bytes) -> RunLengthStream:
    """Parse and validate SRLE container bytes."""
    data = bytes(data)
    if len(data) < HEADER.size:
        if data[:4] != MAGIC and len(data) >= 4:
            raise BadMagic(f"expected {MAGIC!r}, found {data[:4]!r}")
        raise Truncated(f"container header needs {HEADER.size} bytes, got {len(data)}")
    magic, version, width, height, count = HEADER.unpack_from(data)
    if magic != MAGIC:
        raise BadMagic(f"expected {MAGIC!r}, found {magic!r}")
    if version != VERSION:
        raise UnsupportedVersion(f"version {version} not supported")
    expected_size = HEADER.size + RUN_DTYPE.itemsize * count
    if len(data) < expected_size:
        raise Truncated(f"container needs {expected_size} bytes, got {len(data)}")
    if len(data) > expected_size:
        raise TrailingGarbage(f"{len(data) - expected_size} byte(s) after last run")
    if width < 1 or height < 1:
        raise LengthMismatch(f"invalid dimensions {width}x{height}")
    records = np.frombuffer(data, dtype=RUN_DTYPE, count=count, offset=HEADER.size)
    lengths = records["length"].astype(np.int64)
    if count and int(lengths.min()) < 1:
        raise LengthMismatch("zero-length run")
    total = int(lengths.sum())
    if total != width * height:
        raise LengthMismatch(
            f"run lengths sum to {total}, image needs {width * height} pixels"
        )
    return RunLengthStream(
        width=width,
        height=height,
        values=records["value"].copy(),
        lengths=lengths,
    )
