"""CLI: embed --in RAW.jsonl --out EMB.jsonl --encoder {base|large|nli}."""

from __future__ import annotations

import argparse
import logging
import sys

from .encoders import ENCODER_IDS, load_encoder
from .pipeline import OutputValidationError, embed_corpus


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="embed",
        description="Export claim-evidence sentence embeddings to seed-embeddings JSONL.",
    )
    parser.add_argument("--in", dest="raw", required=True, help="raw claim-evidence JSONL")
    parser.add_argument("--out", required=True, help="output seed-embeddings JSONL")
    parser.add_argument(
        "--encoder",
        required=True,
        choices=sorted(ENCODER_IDS),
        help="pretrained encoder alias",
    )
    parser.add_argument("--batch-size", type=int, default=32, help="inference batch size")
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")
    args = build_parser().parse_args(argv)
    try:
        encoder = load_encoder(args.encoder)
        written = embed_corpus(args.raw, encoder, args.out, batch_size=args.batch_size)
    except (OSError, ValueError, OutputValidationError) as exc:
        print(f"embed: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {written} records (dim {encoder.dim}) to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
