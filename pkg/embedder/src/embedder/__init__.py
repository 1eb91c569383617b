"""Sentence-embedding export for the semantic-difference classifier."""

from .encoders import ENCODER_IDS, load_encoder
from .pipeline import RawPairRecord, embed_corpus, read_raw_records, validate_output

__all__ = [
    "ENCODER_IDS",
    "RawPairRecord",
    "embed_corpus",
    "load_encoder",
    "read_raw_records",
    "validate_output",
]
