"""Command-line front end.

Subcommands cover the full workflow: ``gen-carrier`` makes a synthetic test
image, ``embed`` hides a message, ``compress``/``decompress`` move between
PGM and the SRLE container, ``extract`` recovers message and image,
``metrics`` compares two images, and ``pipeline`` runs everything
in-process with timing and quality reports.

Failures print one machine-readable line to stderr, ``error: <Name>: ...``,
and exit with a status specific to the error family (see errors.py); 3 is
reserved for I/O problems and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys

from .carrier import synthetic_carrier
from .errors import EmptyMessage, NonLatinCharacter, StegRleError
from .image import Rect, load_pgm, save_pgm, write_pgm
from .metrics import compare
from .pipeline import PHASES, run_pipeline
from .rle import deserialize, rle_decode, rle_encode, serialize
from .stego import bytes_to_text, embed, extract, text_to_bytes

IO_ERROR_EXIT = 3


def _roi_arg(text: str) -> Rect:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("roi must be x0,y0,x1,y1")
    try:
        x0, y0, x1, y1 = (int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"roi coordinates must be integers: {text!r}")
    return Rect(x0, y0, x1, y1)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _message_from_args(args: argparse.Namespace) -> bytes:
    if args.message_file is not None:
        with open(args.message_file, "rb") as fh:
            raw = fh.read()
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError:
            raise NonLatinCharacter(f"{args.message_file} is not UTF-8 text") from None
    else:
        text = args.message
    message = text_to_bytes(text)
    if not message and not args.allow_empty:
        raise EmptyMessage("message is empty; pass --allow-empty to permit this")
    return message


def _fmt_metric(value: float) -> str:
    """Render a metric the way the quality table does: 0, Infinity, or 4 decimals."""
    if math.isinf(value):
        return "Infinity"
    if value == 0:
        return "0"
    return f"{value:.4f}"


def cmd_gen_carrier(args: argparse.Namespace) -> int:
    img = synthetic_carrier(
        args.width,
        args.height,
        blob_cx=args.blob_cx,
        blob_cy=args.blob_cy,
        blob_radius=args.blob_radius,
        blob_value=args.blob_value,
    )
    save_pgm(args.out, img)
    print(f"wrote {args.out} ({args.width}x{args.height})")
    return 0


def cmd_embed(args: argparse.Namespace) -> int:
    message = _message_from_args(args)
    carrier = load_pgm(args.infile)
    stego, report = embed(carrier, args.roi, message)
    save_pgm(args.out, stego)
    print(f"capacity: {report.capacity}")
    print(f"bytes hidden: {report.bytes_hidden}")
    print("sites:", " ".join(f"{x},{y}" for x, y in report.sites))
    return 0


def cmd_compress(args: argparse.Namespace) -> int:
    img = load_pgm(args.infile)
    raw = write_pgm(img)
    container = serialize(rle_encode(img))
    with open(args.out, "wb") as fh:
        fh.write(container)
    ratio = len(raw) / len(container)
    print(f"raw bytes: {len(raw)}")
    print(f"container bytes: {len(container)}")
    print(f"ratio: {ratio:.2f}:1")
    return 0


def cmd_decompress(args: argparse.Namespace) -> int:
    with open(args.infile, "rb") as fh:
        container = fh.read()
    save_pgm(args.out, rle_decode(deserialize(container)))
    print(f"wrote {args.out}")
    return 0


def cmd_extract(args: argparse.Namespace) -> int:
    stego = load_pgm(args.infile)
    message, restored = extract(stego)
    save_pgm(args.out, restored)
    print(f"message: {bytes_to_text(message)}")
    if args.verify is not None:
        original = load_pgm(args.verify)
        quality = compare(original, restored)
        print(f"verify mse: {_fmt_metric(quality.mse)}")
        print(f"verify psnr: {_fmt_metric(quality.psnr)}")
    return 0


def cmd_metrics(args: argparse.Namespace) -> int:
    quality = compare(load_pgm(args.image_a), load_pgm(args.image_b))
    print(f"mse: {_fmt_metric(quality.mse)}")
    print(f"psnr: {_fmt_metric(quality.psnr)}")
    return 0


def _print_pipeline_report(result) -> None:
    print(f"{'phase':<16}{'seconds':>10}")
    for phase in PHASES:
        print(f"{phase:<16}{result.timing.phases[phase]:>10.4f}")
    print(f"{'total':<16}{result.timing.total:>10.4f}")
    print()
    print(f"{'comparison':<22}{'mse':>10}{'psnr':>10}")
    for label, quality in (
        ("carrier vs stego", result.stego_quality),
        ("carrier vs restored", result.restored_quality),
    ):
        print(f"{label:<22}{_fmt_metric(quality.mse):>10}{_fmt_metric(quality.psnr):>10}")


def _write_pipeline_csv(path: str, result) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["section", "label", "seconds", "mse", "psnr"])
        for phase in PHASES:
            writer.writerow(["timing", phase, f"{result.timing.phases[phase]:.6f}", "", ""])
        writer.writerow(["timing", "total", f"{result.timing.total:.6f}", "", ""])
        for label, quality in (
            ("carrier vs stego", result.stego_quality),
            ("carrier vs restored", result.restored_quality),
        ):
            psnr = "Infinity" if math.isinf(quality.psnr) else f"{quality.psnr:.6f}"
            writer.writerow(["quality", label, "", f"{quality.mse:.6f}", psnr])


def cmd_pipeline(args: argparse.Namespace) -> int:
    message = _message_from_args(args)
    carrier = load_pgm(args.infile)
    result = run_pipeline(carrier, args.roi, message, repeat=args.repeat)
    if args.stego_out:
        save_pgm(args.stego_out, result.stego)
    if args.container_out:
        with open(args.container_out, "wb") as fh:
            fh.write(result.container)
    if args.restored_out:
        save_pgm(args.restored_out, result.restored)
    print(f"bytes hidden: {result.embed_report.bytes_hidden}")
    print("round-trip: verified lossless")
    print()
    _print_pipeline_report(result)
    if args.csv:
        _write_pipeline_csv(args.csv, result)
        print(f"\ncsv written: {args.csv}")
    return 0


def _add_message_options(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--message", help="message text (code points 1..255)")
    group.add_argument("--message-file", help="UTF-8 text file with the message")
    sub.add_argument(
        "--allow-empty",
        action="store_true",
        help="permit an empty message (stego equals carrier)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stegrle",
        description="Hide text at isolated zero pixels of a grayscale image "
        "and compress the result losslessly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-carrier", help="write a synthetic test carrier")
    p.add_argument("--out", required=True, help="output PGM path")
    p.add_argument("--width", type=_positive_int, default=256)
    p.add_argument("--height", type=_positive_int, default=256)
    p.add_argument("--blob-cx", type=int, default=None, help="blob centre column")
    p.add_argument("--blob-cy", type=int, default=None, help="blob centre row")
    p.add_argument("--blob-radius", type=int, default=None)
    p.add_argument("--blob-value", type=int, default=200)
    p.set_defaults(func=cmd_gen_carrier)

    p = sub.add_parser("embed", help="hide a message in a carrier image")
    p.add_argument("--in", dest="infile", required=True, help="carrier PGM")
    p.add_argument("--out", required=True, help="stego PGM to write")
    p.add_argument("--roi", type=_roi_arg, required=True, help="x0,y0,x1,y1 inclusive")
    _add_message_options(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("compress", help="run-length-compress a PGM into a container")
    p.add_argument("--in", dest="infile", required=True, help="PGM to compress")
    p.add_argument("--out", required=True, help="SRLE container to write")
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser("decompress", help="restore a PGM from a container")
    p.add_argument("--in", dest="infile", required=True, help="SRLE container")
    p.add_argument("--out", required=True, help="PGM to write")
    p.set_defaults(func=cmd_decompress)

    p = sub.add_parser("extract", help="recover message and image from a stego PGM")
    p.add_argument("--in", dest="infile", required=True, help="stego PGM")
    p.add_argument("--out", required=True, help="restored PGM to write")
    p.add_argument("--verify", help="original PGM to compare the restored image to")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("metrics", help="MSE / PSNR between two images")
    p.add_argument("image_a", help="first PGM")
    p.add_argument("image_b", help="second PGM")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("pipeline", help="embed, compress, decompress, extract, verify")
    p.add_argument("--in", dest="infile", required=True, help="carrier PGM")
    p.add_argument("--roi", type=_roi_arg, required=True, help="x0,y0,x1,y1 inclusive")
    _add_message_options(p)
    p.add_argument("--repeat", type=_positive_int, default=1, help="best-of-N timing")
    p.add_argument("--csv", help="also write the report as CSV")
    p.add_argument("--stego-out", help="save the stego image")
    p.add_argument("--container-out", help="save the SRLE container")
    p.add_argument("--restored-out", help="save the restored image")
    p.set_defaults(func=cmd_pipeline)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except StegRleError as exc:
        print(f"error: {exc.token}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: IOError: {exc}", file=sys.stderr)
        return IO_ERROR_EXIT
    except ValueError as exc:
        print(f"error: ValueError: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
