"""8-bit grayscale images, ROI rectangles, and PGM file I/O.

An image is a numpy ``uint8`` array of shape ``(height, width)``, row-major,
so ``img[y, x]`` addresses column ``x`` of row ``y``. RGB input is a
``(height, width, 3)`` array.

The PGM writer always emits the same canonical byte stream for a given
image: the exact header ``P5\\n<width> <height>\\n255\\n`` followed by the
raw raster, no comments. That makes encodings byte-reproducible and lets
round-trip tests compare files directly. The reader is more liberal and
accepts binary P5 and ASCII P2 with ``#`` comments in the header.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import MalformedHeader, RectOutOfBounds, TruncatedData, UnsupportedMaxval

# ITU-R BT.601 luma weights for R, G, B
GRAY_WEIGHTS = (0.299, 0.587, 0.114)

_WHITESPACE = b" \t\n\r\x0b\x0c"


@dataclass(frozen=True)
class Rect:
    """Inclusive rectangle from top-left (x0, y0) to bottom-right (x1, y1), 0-indexed."""

    x0: int
    y0: int
    x1: int
    y1: int


def as_gray(pixels) -> np.ndarray:
    """Coerce nested sequences or an array to a validated grayscale image."""
    img = np.asarray(pixels)
    if img.ndim != 2:
        raise ValueError(f"grayscale image must be 2-D, got shape {img.shape}")
    if img.shape[0] < 1 or img.shape[1] < 1:
        raise ValueError(f"image dimensions must be at least 1x1, got {img.shape}")
    if img.dtype != np.uint8:
        if not np.issubdtype(img.dtype, np.integer):
            raise ValueError(f"pixel values must be integers, got dtype {img.dtype}")
        if img.min() < 0 or img.max() > 255:
            raise ValueError("pixel values must lie in 0..255")
        img = img.astype(np.uint8)
    return img


def to_grayscale(rgb) -> np.ndarray:
    """Convert an (h, w, 3) RGB image to grayscale, rounding half up."""
    rgb = np.asarray(rgb)
    if rgb.ndim != 3 or rgb.shape[2] != 3:
        raise ValueError(f"RGB image must have shape (h, w, 3), got {rgb.shape}")
    luma = rgb.astype(np.float64) @ np.asarray(GRAY_WEIGHTS)
    return np.clip(np.floor(luma + 0.5), 0, 255).astype(np.uint8)


def check_rect(img: np.ndarray, roi: Rect) -> None:
    """Raise RectOutOfBounds unless roi lies fully inside img."""
    height, width = img.shape
    if not 0 <= roi.x0 <= roi.x1:
        raise RectOutOfBounds(f"need 0 <= x0 <= x1, got x0={roi.x0}, x1={roi.x1}")
    if not 0 <= roi.y0 <= roi.y1:
        raise RectOutOfBounds(f"need 0 <= y0 <= y1, got y0={roi.y0}, y1={roi.y1}")
    if roi.x1 >= width:
        raise RectOutOfBounds(f"x1={roi.x1} outside image of width {width}")
    if roi.y1 >= height:
        raise RectOutOfBounds(f"y1={roi.y1} outside image of height {height}")


def _scan_token(data: bytes, pos: int) -> tuple[bytes, int]:
    """Return the next whitespace-delimited header token, skipping # comments."""
    n = len(data)
    while True:
        while pos < n and data[pos] in _WHITESPACE:
            pos += 1
        if pos < n and data[pos] == ord("#"):
            while pos < n and data[pos] != ord("\n"):
                pos += 1
            continue
        break
    start = pos
    while pos < n and data[pos] not in _WHITESPACE and data[pos] != ord("#"):
        pos += 1
    if start == pos:
        raise MalformedHeader("PGM header ended early")
    return data[start:pos], pos


def _header_int(token: bytes, name: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise MalformedHeader(f"PGM {name} is not a number: {token!r}") from None
    return value


def read_pgm(data: bytes) -> np.ndarray:
    """Parse P5 (binary) or P2 (ASCII) PGM bytes into a grayscale image."""
    data = bytes(data)
    magic, pos = _scan_token(data, 0)
    if magic not in (b"P5", b"P2"):
        raise MalformedHeader(f"not a PGM file (magic {magic!r})")
    fields = []
    for name in ("width", "height", "maxval"):
        token, pos = _scan_token(data, pos)
        fields.append(_header_int(token, name))
    width, height, maxval = fields
    if width < 1 or height < 1:
        raise MalformedHeader(f"invalid dimensions {width}x{height}")
    if maxval > 255:
        raise UnsupportedMaxval(f"maxval {maxval} exceeds 255")
    if maxval < 1:
        raise MalformedHeader(f"invalid maxval {maxval}")

    count = width * height
    if magic == b"P5":
        # a single whitespace byte separates the header from the raster
        if pos >= len(data) or data[pos] not in _WHITESPACE:
            raise MalformedHeader("missing delimiter before binary raster")
        raster = data[pos + 1 : pos + 1 + count]
        if len(raster) < count:
            raise TruncatedData(f"expected {count} pixel bytes, found {len(raster)}")
        pixels = np.frombuffer(raster, dtype=np.uint8, count=count).copy()
    else:
        values = []
        while len(values) < count:
            try:
                token, pos = _scan_token(data, pos)
            except MalformedHeader:
                raise TruncatedData(
                    f"expected {count} pixel values, found {len(values)}"
                ) from None
            values.append(_header_int(token, "pixel"))
        if any(v < 0 or v > 255 for v in values):
            raise MalformedHeader("pixel value outside 0..255")
        pixels = np.asarray(values, dtype=np.uint8)
    return pixels.reshape(height, width)


def write_pgm(img: np.ndarray) -> bytes:
    """Serialize a grayscale image as canonical binary PGM (P5)."""
    img = as_gray(img)
    height, width = img.shape
    header = f"P5\n{width} {height}\n255\n".encode("ascii")
    return header + img.tobytes()


def load_pgm(path) -> np.ndarray:
    """Read a PGM file from disk."""
    with open(path, "rb") as fh:
        return read_pgm(fh.read())


def save_pgm(path, img: np.ndarray) -> None:
    """Write a grayscale image to disk as canonical P5."""
    with open(path, "wb") as fh:
        fh.write(write_pgm(img))
