"""Hide message bytes at isolated zero pixels and exactly invert the hiding.

A pixel can carry a byte only if it is zero and its four orthogonal
neighbours (up, down, left, right) are zero as well; border pixels never
qualify because part of their neighbourhood is off the image. Embedding
walks such sites in row-major order inside the caller's ROI and replaces
each with one message byte. Because a written byte is nonzero, it
disqualifies its own neighbours for later bytes, so eligibility is always
judged against the working image, not the untouched carrier.

The receiver needs no key and no ROI: any non-border pixel that is nonzero
while its whole 4-neighbourhood is zero is read back as a message byte and
reset to zero. For that inversion to be exact the carrier must not already
contain pixels matching this pattern; ``validate_carrier`` finds them and
``embed`` refuses such carriers instead of producing a stego image that
cannot be decoded faithfully.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AmbiguousCarrier, CapacityExceeded, NonLatinCharacter, NulCharacter
from .image import Rect, as_gray, check_rect

Site = tuple[int, int]


@dataclass(frozen=True)
class EmbedReport:
    """What an embed run did: sites written, byte count, and room available."""

    sites: list[Site]
    bytes_hidden: int
    capacity: int


def text_to_bytes(text: str) -> bytes:
    """Map each character to its code point; only 1..255 are embeddable."""
    for ch in text:
        if ord(ch) == 0:
            raise NulCharacter("NUL cannot be hidden; zero marks an empty pixel")
        if ord(ch) > 255:
            raise NonLatinCharacter(f"character {ch!r} has no single-byte code")
    return text.encode("latin-1")


def bytes_to_text(message: bytes) -> str:
    """Inverse of text_to_bytes."""
    return bytes(message).decode("latin-1")


def _interior_all_zero_neighbours(img: np.ndarray) -> np.ndarray:
    """Boolean mask of non-border pixels whose four neighbours are all zero."""
    zero = img == 0
    mask = np.zeros(img.shape, dtype=bool)
    mask[1:-1, 1:-1] = (
        zero[:-2, 1:-1] & zero[2:, 1:-1] & zero[1:-1, :-2] & zero[1:-1, 2:]
    )
    return mask


def _mask_sites(mask: np.ndarray) -> list[Site]:
    """Row-major (x, y) coordinates of the true cells of a mask."""
    return [(int(x), int(y)) for y, x in np.argwhere(mask)]


def scan_candidates(img: np.ndarray, roi: Rect) -> list[Site]:
    """All embeddable sites of the unmodified image inside roi, row-major.

    A site's neighbours may lie outside the ROI; they only have to be inside
    the image and zero.
    """
    img = as_gray(img)
    check_rect(img, roi)
    mask = _interior_all_zero_neighbours(img) & (img == 0)
    box = np.zeros(img.shape, dtype=bool)
    box[roi.y0 : roi.y1 + 1, roi.x0 : roi.x1 + 1] = True
    return _mask_sites(mask & box)


def validate_carrier(img: np.ndarray) -> list[Site]:
    """Sites the extractor would misread as hidden bytes, row-major.

    Flags every nonzero pixel whose in-bounds 4-neighbours are all zero,
    border pixels included (their missing neighbours count as zero). An
    empty list means the carrier is safe to embed into.
    """
    img = as_gray(img)
    zero = img == 0
    neighbours_zero = np.ones(img.shape, dtype=bool)
    neighbours_zero[1:, :] &= zero[:-1, :]
    neighbours_zero[:-1, :] &= zero[1:, :]
    neighbours_zero[:, 1:] &= zero[:, :-1]
    neighbours_zero[:, :-1] &= zero[:, 1:]
    return _mask_sites(~zero & neighbours_zero)


def embedding_sites(img: np.ndarray, roi: Rect) -> list[Site]:
    """Sites usable in one embedding pass, in the order bytes would fill them.

    Walks the static candidates row-major and keeps a site only if none of
    its neighbours was already claimed, mirroring how writes to the working
    image disqualify adjacent sites. The list length is the true capacity.
    """
    claimed: set[Site] = set()
    sites = []
    for x, y in scan_candidates(img, roi):
        if (
            (x - 1, y) in claimed
            or (x + 1, y) in claimed
            or (x, y - 1) in claimed
            or (x, y + 1) in claimed
        ):
            continue
        claimed.add((x, y))
        sites.append((x, y))
    return sites


def embed(img: np.ndarray, roi: Rect, message: bytes) -> tuple[np.ndarray, EmbedReport]:
    """Hide message bytes in a copy of img; returns (stego image, report).

    The carrier must validate clean and the message must contain no zero
    bytes and fit the ROI's capacity.
    """
    img = as_gray(img)
    check_rect(img, roi)
    message = bytes(message)
    if 0 in message:
        raise NulCharacter("message bytes must be in 1..255")
    ambiguous = validate_carrier(img)
    if ambiguous:
        raise AmbiguousCarrier(
            f"carrier has {len(ambiguous)} isolated nonzero pixel(s), "
            f"first at {ambiguous[0]}; extraction would misread them"
        )
    sites = embedding_sites(img, roi)
    if len(message) > len(sites):
        raise CapacityExceeded(
            f"message needs {len(message)} sites but ROI offers {len(sites)}",
            capacity=len(sites),
            needed=len(message),
        )
    stego = img.copy()
    used = sites[: len(message)]
    for (x, y), byte in zip(used, message):
        stego[y, x] = byte
    return stego, EmbedReport(sites=used, bytes_hidden=len(message), capacity=len(sites))


def extract(stego: np.ndarray) -> tuple[bytes, np.ndarray]:
    """Recover (message, restored image) from a stego image.

    Scans the whole image row-major for non-border nonzero pixels whose
    4-neighbourhood is zero; each match contributes its value as the next
    message byte and is zeroed in the restored copy. On an image without
    matches this returns an empty message and an unchanged copy.
    """
    stego = as_gray(stego)
    mask = _interior_all_zero_neighbours(stego) & (stego != 0)
    coords = np.argwhere(mask)
    message = bytes(int(stego[y, x]) for y, x in coords)
    restored = stego.copy()
    restored[mask] = 0
    return message, restored
