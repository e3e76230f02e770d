import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_ambiguous, brute_candidates, brute_extract
from stegrle.errors import (
    AmbiguousCarrier,
    CapacityExceeded,
    NonLatinCharacter,
    NulCharacter,
    RectOutOfBounds,
)
from stegrle.image import Rect
from stegrle.metrics import mse
from stegrle.stego import (
    bytes_to_text,
    embed,
    embedding_sites,
    extract,
    scan_candidates,
    text_to_bytes,
    validate_carrier,
)

PATIENT_TAG = "GRI pid:007"
PATIENT_BYTES = bytes([71, 82, 73, 32, 112, 105, 100, 58, 48, 48, 55])


def zeros(h, w):
    return np.zeros((h, w), dtype=np.uint8)


@st.composite
def sparse_carriers(draw):
    """Zero images with a few solid dominoes; always a valid carrier."""
    width = draw(st.integers(3, 20))
    height = draw(st.integers(3, 20))
    img = np.zeros((height, width), dtype=np.uint8)
    for _ in range(draw(st.integers(0, 5))):
        x = draw(st.integers(0, width - 2))
        y = draw(st.integers(0, height - 1))
        img[y, x] = draw(st.integers(1, 255))
        img[y, x + 1] = draw(st.integers(1, 255))
    return img


@st.composite
def carrier_roi_message(draw):
    img = draw(sparse_carriers())
    height, width = img.shape
    x0 = draw(st.integers(0, width - 1))
    x1 = draw(st.integers(x0, width - 1))
    y0 = draw(st.integers(0, height - 1))
    y1 = draw(st.integers(y0, height - 1))
    roi = Rect(x0, y0, x1, y1)
    payload = draw(st.lists(st.integers(1, 255), max_size=64))
    message = bytes(payload[: len(embedding_sites(img, roi))])
    return img, roi, message


# --- text / byte conversion ---

def test_text_to_bytes_patient_tag():
    assert text_to_bytes(PATIENT_TAG) == PATIENT_BYTES


def test_bytes_to_text_patient_tag():
    assert bytes_to_text(PATIENT_BYTES) == PATIENT_TAG


def test_text_round_trip_empty():
    assert text_to_bytes("") == b""
    assert bytes_to_text(b"") == ""


def test_text_single_letter():
    assert text_to_bytes("A") == bytes([65])


def test_repeated_characters_preserved():
    assert bytes_to_text(bytes([48, 48])) == "00"


def test_text_rejects_nul():
    with pytest.raises(NulCharacter):
        text_to_bytes("a\x00b")


def test_text_rejects_wide_characters():
    with pytest.raises(NonLatinCharacter):
        text_to_bytes("price: 10€")


@given(st.text(alphabet=st.characters(min_codepoint=1, max_codepoint=255)))
def test_text_round_trip(text):
    assert bytes_to_text(text_to_bytes(text)) == text


# --- candidate scanning ---

def test_scan_all_zero_5x5():
    sites = scan_candidates(zeros(5, 5), Rect(0, 0, 4, 4))
    assert sites == [
        (1, 1), (2, 1), (3, 1),
        (1, 2), (2, 2), (3, 2),
        (1, 3), (2, 3), (3, 3),
    ]


def test_scan_blocked_by_nonzero_neighbour():
    img = zeros(3, 3)
    img[1, 0] = 7  # left neighbour of the centre
    assert scan_candidates(img, Rect(0, 0, 2, 2)) == []


def test_scan_without_zero_pixels():
    img = np.full((4, 4), 9, dtype=np.uint8)
    assert scan_candidates(img, Rect(0, 0, 3, 3)) == []


def test_scan_neighbours_may_leave_roi():
    # site on the roi edge is fine as long as neighbours are zero in the image
    sites = scan_candidates(zeros(5, 5), Rect(1, 1, 1, 1))
    assert sites == [(1, 1)]


def test_scan_matches_brute_force_on_seeded_images():
    rng = np.random.default_rng(7)
    for _ in range(100):
        h, w = rng.integers(1, 12, size=2)
        img = (rng.integers(0, 4, size=(h, w)) == 0).astype(np.uint8) * rng.integers(
            1, 255
        )
        x0, x1 = sorted(rng.integers(0, w, size=2))
        y0, y1 = sorted(rng.integers(0, h, size=2))
        assert scan_candidates(img, Rect(x0, y0, x1, y1)) == brute_candidates(
            img, x0, y0, x1, y1
        )


# --- carrier validation ---

def test_validate_all_zero():
    assert validate_carrier(zeros(4, 4)) == []


def test_validate_flags_isolated_pixel():
    img = zeros(5, 5)
    img[2, 2] = 109
    assert validate_carrier(img) == [(2, 2)]


def test_validate_solid_block_is_clean():
    img = zeros(6, 6)
    img[2:4, 2:5] = 80
    assert validate_carrier(img) == []


def test_validate_flags_lone_border_pixel():
    img = zeros(4, 4)
    img[0, 0] = 3
    assert validate_carrier(img) == [(0, 0)]


@given(sparse_carriers())
def test_validate_matches_brute_force(img):
    assert validate_carrier(img) == brute_ambiguous(img)


def test_validate_matches_brute_force_on_noise():
    rng = np.random.default_rng(11)
    for _ in range(100):
        h, w = rng.integers(1, 10, size=2)
        img = rng.integers(0, 3, size=(h, w)).astype(np.uint8)
        assert validate_carrier(img) == brute_ambiguous(img)


# --- embedding ---

def test_embed_single_byte():
    stego, report = embed(zeros(5, 5), Rect(0, 0, 4, 4), bytes([65]))
    assert stego[1, 1] == 65
    assert int((stego != 0).sum()) == 1
    assert report.sites == [(1, 1)]
    assert report.bytes_hidden == 1


def test_embed_empty_message_is_identity():
    img = zeros(4, 6)
    img[1, 1:3] = 50
    stego, report = embed(img, Rect(0, 0, 5, 3), b"")
    assert np.array_equal(stego, img)
    assert report.bytes_hidden == 0
    assert report.sites == []


def test_embed_capacity_exceeded_on_3x3():
    with pytest.raises(CapacityExceeded) as err:
        embed(zeros(3, 3), Rect(0, 0, 2, 2), bytes([65, 66]))
    assert err.value.capacity == 1
    assert err.value.needed == 2


def test_embed_reevaluates_against_working_image():
    # writes shut down orthogonal neighbours but not diagonal ones
    stego, report = embed(zeros(5, 5), Rect(0, 0, 4, 4), bytes([1, 2, 3, 4, 5]))
    assert report.sites == [(1, 1), (3, 1), (2, 2), (1, 3), (3, 3)]
    with pytest.raises(CapacityExceeded):
        embed(zeros(5, 5), Rect(0, 0, 4, 4), bytes(range(1, 7)))


def test_embedding_sites_match_sequential_simulation():
    from oracles import brute_greedy_sites

    rng = np.random.default_rng(17)
    for _ in range(200):
        h, w = rng.integers(3, 14, size=2)
        img = (rng.integers(0, 5, size=(h, w)) == 0).astype(np.uint8) * 9
        x0, x1 = sorted(rng.integers(0, w, size=2))
        y0, y1 = sorted(rng.integers(0, h, size=2))
        assert embedding_sites(img, Rect(x0, y0, x1, y1)) == brute_greedy_sites(
            img, x0, y0, x1, y1
        )


def test_embedding_sites_full_zero_block_is_checkerboard():
    sites = embedding_sites(zeros(5, 5), Rect(0, 0, 4, 4))
    assert sites == [(1, 1), (3, 1), (2, 2), (1, 3), (3, 3)]


def test_embed_written_sites_stay_extractable():
    stego, report = embed(zeros(7, 7), Rect(0, 0, 6, 6), bytes([9] * 8))
    for x, y in report.sites:
        assert stego[y, x] == 9
        assert stego[y - 1, x] == stego[y + 1, x] == 0
        assert stego[y, x - 1] == stego[y, x + 1] == 0


def test_embed_rejects_zero_byte():
    with pytest.raises(NulCharacter):
        embed(zeros(5, 5), Rect(0, 0, 4, 4), bytes([65, 0]))


def test_embed_rejects_ambiguous_carrier():
    img = zeros(5, 5)
    img[2, 2] = 10
    with pytest.raises(AmbiguousCarrier):
        embed(img, Rect(0, 0, 4, 4), bytes([65]))


def test_embed_rejects_bad_roi():
    with pytest.raises(RectOutOfBounds):
        embed(zeros(5, 5), Rect(0, 0, 5, 4), bytes([65]))


def test_embed_does_not_modify_input():
    img = zeros(5, 5)
    embed(img, Rect(0, 0, 4, 4), bytes([65]))
    assert int(img.sum()) == 0


# --- extraction ---

def test_extract_inverts_single_byte_embed():
    stego, _ = embed(zeros(5, 5), Rect(0, 0, 4, 4), bytes([65]))
    message, restored = extract(stego)
    assert message == bytes([65])
    assert int(restored.sum()) == 0


def test_extract_of_plain_image_is_empty():
    img = zeros(4, 4)
    message, restored = extract(img)
    assert message == b""
    assert np.array_equal(restored, img)


def test_extract_is_total_on_arbitrary_images():
    rng = np.random.default_rng(3)
    img = rng.integers(0, 256, size=(9, 9)).astype(np.uint8)
    message, restored = extract(img)
    expected_message, expected_grid = brute_extract(img)
    assert message == expected_message
    assert restored.tolist() == expected_grid


def test_extract_matches_brute_force_on_seeded_images():
    rng = np.random.default_rng(23)
    for _ in range(100):
        h, w = rng.integers(1, 12, size=2)
        img = (rng.integers(0, 3, size=(h, w)) * rng.integers(0, 128, size=(h, w))).astype(
            np.uint8
        )
        message, restored = extract(img)
        expected_message, expected_grid = brute_extract(img)
        assert message == expected_message
        assert restored.tolist() == expected_grid


# --- round-trip properties ---

@settings(max_examples=150, deadline=None)
@given(carrier_roi_message())
def test_round_trip_recovers_message_and_carrier(case):
    img, roi, message = case
    stego, report = embed(img, roi, message)
    recovered, restored = extract(stego)
    assert recovered == message
    assert np.array_equal(restored, img)
    assert report.bytes_hidden == len(message)


@settings(max_examples=150, deadline=None)
@given(carrier_roi_message())
def test_stego_damage_is_exactly_the_message(case):
    img, roi, message = case
    stego, _ = embed(img, roi, message)
    changed = np.argwhere(stego != img)
    assert len(changed) == len(message)
    # every change writes a byte over a zero, never the reverse
    for y, x in changed:
        assert img[y, x] == 0
        assert stego[y, x] != 0
    expected = sum(b * b for b in message) / img.size
    assert mse(img, stego) == expected


@settings(max_examples=150, deadline=None)
@given(carrier_roi_message())
def test_extraction_order_matches_embedding_order(case):
    from oracles import brute_isolated_nonzero

    img, roi, message = case
    stego, report = embed(img, roi, message)
    # carrier is clean, so every extraction match is a written site
    assert brute_isolated_nonzero(stego) == report.sites
