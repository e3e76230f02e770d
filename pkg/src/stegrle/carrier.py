"""Synthetic test carriers: zero background with one solid bright blob.

Real scans from the scheme's target setting are not redistributable, so
tests and demos run on generated stand-ins that share the property the
embedder needs: large zero regions, and no nonzero pixel sitting alone in
a zero neighbourhood.
"""

from __future__ import annotations

import numpy as np

from .errors import AmbiguousCarrier
from .stego import validate_carrier


def synthetic_carrier(
    width: int = 256,
    height: int = 256,
    *,
    blob_cx: int | None = None,
    blob_cy: int | None = None,
    blob_radius: int | None = None,
    blob_value: int = 200,
) -> np.ndarray:
    """Zero image with a filled disk of blob_value; safe to embed into.

    The disk defaults to the image centre with radius min(width, height)//5.
    A solid disk of radius >= 1 never produces isolated nonzero pixels, so
    the result always passes validate_carrier; a final check guards the
    degenerate geometries anyway.
    """
    if width < 1 or height < 1:
        raise ValueError(f"dimensions must be at least 1x1, got {width}x{height}")
    if not 1 <= blob_value <= 255:
        raise ValueError(f"blob_value must be in 1..255, got {blob_value}")
    cx = width // 2 if blob_cx is None else blob_cx
    cy = height // 2 if blob_cy is None else blob_cy
    radius = max(1, min(width, height) // 5) if blob_radius is None else blob_radius
    if radius < 1:
        raise ValueError(f"blob_radius must be at least 1, got {blob_radius}")

    img = np.zeros((height, width), dtype=np.uint8)
    yy, xx = np.ogrid[:height, :width]
    disk = (xx - cx) ** 2 + (yy - cy) ** 2 <= radius * radius
    img[disk] = blob_value

    ambiguous = validate_carrier(img)
    if ambiguous:
        raise AmbiguousCarrier(
            f"blob geometry leaves {len(ambiguous)} isolated pixel(s); "
            "enlarge the radius or the image"
        )
    return img
