"""Run-length encoding and the SRLE container, from vectors to bytes.

Run with:  python demos/02_run_length_compression.py
"""

import numpy as np

from stegrle import deserialize, rle_decode, rle_encode, serialize, synthetic_carrier

# A small vector first: ten pixels collapse into three (value, length) runs.
vector = np.asarray([[109, 109, 99, 99, 99, 99, 99, 97, 97, 97]], dtype=np.uint8)
stream = rle_encode(vector)
print("pixels:   ", vector.ravel().tolist())
print("elements: ", stream.values.tolist())
print("lengths:  ", stream.lengths.tolist())
print("decoded:  ", rle_decode(stream).ravel().tolist())

# The container adds a 17-byte header (magic, version, dimensions, run
# count) and then 5 bytes per run.
container = serialize(stream)
print(f"\ncontainer ({len(container)} bytes): {container.hex(' ')}")
print("round-trips:", deserialize(container) == stream)

# On image-sized input the win depends entirely on how uniform the image
# is. A mostly-black carrier collapses to almost nothing; a checkerboard
# is the worst case and actually grows.
carrier = synthetic_carrier(256, 256)
compact = serialize(rle_encode(carrier))
print(f"\ncarrier raster:   {carrier.size} bytes")
print(f"carrier container: {len(compact)} bytes "
      f"(ratio {carrier.size / len(compact):.1f}:1)")

checker = (np.indices((64, 63)).sum(axis=0) % 2).astype(np.uint8)
worst = serialize(rle_encode(checker))
print(f"checkerboard:      {checker.size} bytes -> {len(worst)} bytes "
      f"(ratio {checker.size / len(worst):.2f}:1, expansion)")
