"""How much does hiding data hurt the image? MSE and PSNR tell the story.

Run with:  python demos/03_quality_metrics.py
"""

from stegrle import Rect, compare, embed, extract, synthetic_carrier, text_to_bytes

carrier = synthetic_carrier(256, 256)
stego, report = embed(carrier, Rect(1, 1, 60, 60), text_to_bytes("GRI pid:007"))
_, restored = extract(stego)


def show(label, quality):
    psnr = "Infinity" if quality.psnr == float("inf") else f"{quality.psnr:.4f} dB"
    print(f"{label:<22} mse={quality.mse:.4f}  psnr={psnr}")


# Eleven bytes written over zeros: the damage is the sum of their squares
# spread over 65536 pixels, tiny but nonzero.
show("carrier vs stego", compare(carrier, stego))

# After extraction the damage is gone entirely. MSE of exactly zero means
# infinite PSNR, which is the whole point of a lossless scheme.
show("carrier vs restored", compare(carrier, restored))

# For scale: the worst possible 8-bit disagreement.
black = carrier * 0
white = black + 255
show("black vs white", compare(black, white))
