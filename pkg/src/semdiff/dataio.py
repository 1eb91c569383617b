"""File formats: seed-embeddings JSONL datasets and classifier model JSON.

Dataset files are UTF-8 JSON Lines. The first line is a header
{"format": "seed-embeddings", "version": 1, "dim": D, "labels": [...]} and
each subsequent line one record {"id", "label", "claim", "evidence"}.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .classifier import ClassifierModel, ClassRepresentative
from .dataset import EmbeddedDataset, EmbeddedPair
from .errors import (
    DimensionMismatch,
    DuplicateId,
    InsufficientClassSize,
    InvariantViolation,
    MissingClass,
    NonFiniteInput,
    ParseError,
)
from .rng import PCG32, partial_shuffle

FORMAT_NAME = "seed-embeddings"
FORMAT_VERSION = 1
BINARY_CAP = 3333
SUPPORT = "Support"
CONTRADICT = "Contradict"
NEUTRAL = "Neutral"
NOT_SUPPORT = "Not_Support"


def _check_floats(values, line_no: int, field: str) -> list[float]:
    if not isinstance(values, list) or not values:
        raise ParseError(f"line {line_no}: {field} must be a non-empty array")
    out = []
    for v in values:
        if not isinstance(v, (int, float)) or isinstance(v, bool) or not math.isfinite(v):
            raise NonFiniteInput(f"line {line_no}: non-finite value in {field}")
        out.append(float(v))
    return out


def load_embedded_dataset(path) -> EmbeddedDataset:
    """Parse and validate a seed-embeddings file; record order is preserved."""
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ParseError(f"{path}: empty file, expected header line")
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        raise ParseError(f"line 1: invalid JSON header: {exc}") from exc
    if not isinstance(header, dict) or header.get("format") != FORMAT_NAME:
        raise ParseError(f'line 1: header must declare "format": "{FORMAT_NAME}"')
    if header.get("version") != FORMAT_VERSION:
        raise ParseError(f"line 1: unsupported version {header.get('version')!r}")
    dim = header.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise ParseError(f"line 1: dim must be a positive integer, got {dim!r}")
    labels = header.get("labels")
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise ParseError("line 1: labels must be an array of strings")
    labels = tuple(sorted(set(labels)))

    pairs = []
    seen: set[str] = set()
    for line_no, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        try:
            rec = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(f"line {line_no}: invalid JSON: {exc}") from exc
        if not isinstance(rec, dict):
            raise ParseError(f"line {line_no}: record must be a JSON object")
        for key in ("id", "label", "claim", "evidence"):
            if key not in rec:
                raise ParseError(f"line {line_no}: missing field {key!r}")
        rec_id, label = rec["id"], rec["label"]
        if not isinstance(rec_id, str) or not isinstance(label, str):
            raise ParseError(f"line {line_no}: id and label must be strings")
        if rec_id in seen:
            raise DuplicateId(f"line {line_no}: duplicate id {rec_id!r}")
        seen.add(rec_id)
        claim = _check_floats(rec["claim"], line_no, "claim")
        evidence = _check_floats(rec["evidence"], line_no, "evidence")
        if len(claim) != len(evidence):
            raise DimensionMismatch(
                f"line {line_no}: claim length {len(claim)} != evidence length {len(evidence)}"
            )
        if len(claim) != dim:
            raise DimensionMismatch(
                f"line {line_no}: embedding length {len(claim)} != declared dim {dim}"
            )
        if label not in labels:
            raise ParseError(f"line {line_no}: label {label!r} not in header labels {labels}")
        pairs.append(
            EmbeddedPair(id=rec_id, label=label, claim=np.array(claim), evidence=np.array(evidence))
        )
    if not pairs:
        raise ParseError(f"{path}: no records after header")
    return EmbeddedDataset(pairs=tuple(pairs), labels=labels, dim=dim)


def save_embedded_dataset(dataset: EmbeddedDataset, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        header = {
            "format": FORMAT_NAME,
            "version": FORMAT_VERSION,
            "dim": dataset.dim,
            "labels": list(dataset.labels),
        }
        fh.write(json.dumps(header) + "\n")
        for p in dataset.pairs:
            rec = {
                "id": p.id,
                "label": p.label,
                "claim": p.claim.tolist(),
                "evidence": p.evidence.tolist(),
            }
            fh.write(json.dumps(rec) + "\n")


def make_binary_fever(
    dataset: EmbeddedDataset, seed: int, cap: int = BINARY_CAP
) -> EmbeddedDataset:
    """Collapse Contradict/Neutral into a sampled Not_Support class.

    Keeps Support pairs up to the cap (dataset order), then draws half the
    Not_Support quota from Contradict and half from Neutral with the pinned
    PRNG. Output keeps the source record order, relabelled where sampled.
    """
    for needed in (SUPPORT, CONTRADICT, NEUTRAL):
        if needed not in dataset.labels:
            raise MissingClass(f"dataset lacks class {needed!r}")
    groups = dataset.by_label()
    support = groups[SUPPORT][:cap]
    n_target = len(support)
    n_contradict = (n_target + 1) // 2
    n_neutral = n_target // 2
    rng = PCG32(seed)
    chosen: dict[str, str] = {p.id: SUPPORT for p in support}
    for label, quota in ((CONTRADICT, n_contradict), (NEUTRAL, n_neutral)):
        members = groups[label]
        if len(members) < quota:
            raise InsufficientClassSize(
                f"class {label!r} has {len(members)} pairs, need {quota}"
            )
        for i in partial_shuffle(len(members), quota, rng):
            chosen[members[i].id] = NOT_SUPPORT
    pairs = []
    for p in dataset.pairs:
        if p.id not in chosen:
            continue
        new_label = chosen[p.id]
        if new_label == p.label:
            pairs.append(p)
        else:
            pairs.append(EmbeddedPair(id=p.id, label=new_label, claim=p.claim, evidence=p.evidence))
    return EmbeddedDataset(
        pairs=tuple(pairs), labels=tuple(sorted((NOT_SUPPORT, SUPPORT))), dim=dataset.dim
    )


def save_model(model: ClassifierModel, path) -> None:
    doc = {
        "dim": model.dim,
        "classes": [
            {"label": r.label, "count": r.count, "mean": r.mean.tolist()}
            for r in model.representatives
        ],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh)
        fh.write("\n")


def load_model(path) -> ClassifierModel:
    """Load a model JSON; class order and all invariants are re-validated."""
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "dim" not in doc or "classes" not in doc:
        raise ParseError(f"{path}: expected object with dim and classes")
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise ParseError(f"{path}: dim must be a positive integer")
    classes = doc["classes"]
    if not isinstance(classes, list) or not classes:
        raise ParseError(f"{path}: classes must be a non-empty array")
    reps = []
    for entry in classes:
        if not isinstance(entry, dict) or not {"label", "count", "mean"} <= set(entry):
            raise ParseError(f"{path}: each class needs label, count and mean")
        count = entry["count"]
        if not isinstance(count, int) or count < 1:
            raise InvariantViolation(f"{path}: count must be a positive integer")
        mean = _check_floats(entry["mean"], 0, f"mean[{entry['label']}]")
        reps.append(
            ClassRepresentative(label=entry["label"], mean=np.array(mean), count=count)
        )
    return ClassifierModel(dim=dim, representatives=tuple(reps))
