"""Read raw claim-evidence JSONL, embed, and write seed-embeddings JSONL.

Raw records are objects {"id", "label", "claim", "evidence"} with text
fields. The output format is the one the classifier engine consumes: a
header line {"format": "seed-embeddings", "version": 1, "dim": D,
"labels": [...]} followed by one record per line with embedded vectors.
Malformed raw records are skipped with a warning and counted.
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass

import numpy as np

log = logging.getLogger(__name__)

FORMAT_NAME = "seed-embeddings"
FORMAT_VERSION = 1


@dataclass(frozen=True)
class RawPairRecord:
    id: str
    label: str
    claim: str
    evidence: str


class OutputValidationError(Exception):
    """The written file does not satisfy the seed-embeddings format."""


def read_raw_records(path) -> tuple[list[RawPairRecord], int]:
    """Parse raw JSONL; returns (records, skipped_count)."""
    records = []
    skipped = 0
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            if not raw.strip():
                continue
            try:
                obj = json.loads(raw)
                rec = RawPairRecord(
                    id=str(obj["id"]),
                    label=str(obj["label"]),
                    claim=obj["claim"],
                    evidence=obj["evidence"],
                )
                if not isinstance(rec.claim, str) or not rec.claim.strip():
                    raise ValueError("empty claim")
                if not isinstance(rec.evidence, str) or not rec.evidence.strip():
                    raise ValueError("empty evidence")
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                log.warning("skipping malformed record at line %d: %s", line_no, exc)
                skipped += 1
                continue
            records.append(rec)
    return records, skipped


def embed_corpus(raw_path, encoder, out_path, batch_size: int = 32) -> int:
    """Embed every valid raw record and write the output file.

    Claims and evidences are embedded independently with the same encoder.
    SCIFACT-style multi-sentence evidence is expected pre-joined with single
    spaces by the caller that produced the raw file. Returns the number of
    records written; the written file is re-validated before returning.
    """
    records, skipped = read_raw_records(raw_path)
    if not records:
        raise ValueError(f"{raw_path}: no valid records")
    if skipped:
        log.warning("%d malformed records skipped", skipped)

    claims = encoder.encode([r.claim for r in records], batch_size=batch_size)
    evidences = encoder.encode([r.evidence for r in records], batch_size=batch_size)
    labels = sorted({r.label for r in records})

    with open(out_path, "w", encoding="utf-8") as fh:
        header = {
            "format": FORMAT_NAME,
            "version": FORMAT_VERSION,
            "dim": int(encoder.dim),
            "labels": labels,
        }
        fh.write(json.dumps(header) + "\n")
        for rec, claim_vec, evidence_vec in zip(records, claims, evidences):
            fh.write(
                json.dumps(
                    {
                        "id": rec.id,
                        "label": rec.label,
                        "claim": claim_vec.tolist(),
                        "evidence": evidence_vec.tolist(),
                    }
                )
                + "\n"
            )
    validate_output(out_path)
    return len(records)


def validate_output(path) -> None:
    """Re-load the written file and check every format invariant."""
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise OutputValidationError("empty output file")
    header = json.loads(lines[0])
    if header.get("format") != FORMAT_NAME or header.get("version") != FORMAT_VERSION:
        raise OutputValidationError(f"bad header: {header}")
    dim = header.get("dim")
    labels = set(header.get("labels", []))
    if not isinstance(dim, int) or dim < 1 or not labels:
        raise OutputValidationError(f"bad dim/labels in header: {header}")
    seen = set()
    for line_no, raw in enumerate(lines[1:], start=2):
        rec = json.loads(raw)
        if rec["id"] in seen:
            raise OutputValidationError(f"line {line_no}: duplicate id {rec['id']!r}")
        seen.add(rec["id"])
        if rec["label"] not in labels:
            raise OutputValidationError(f"line {line_no}: label {rec['label']!r} not in header")
        for field in ("claim", "evidence"):
            vec = rec[field]
            if len(vec) != dim:
                raise OutputValidationError(
                    f"line {line_no}: {field} length {len(vec)} != dim {dim}"
                )
            if not all(isinstance(v, (int, float)) and math.isfinite(v) for v in vec):
                raise OutputValidationError(f"line {line_no}: non-finite value in {field}")
    if not seen:
        raise OutputValidationError("no records after header")
