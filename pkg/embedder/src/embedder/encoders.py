"""Pretrained sentence encoders with mean-over-token pooling.

Three aliases are supported: base (bert-base-uncased), large
(bert-large-uncased) and nli (bert-base-nli-mean-tokens). Mean pooling is
applied uniformly; the NLI checkpoint was trained with mean pooling and the
vanilla checkpoints get the same rule for comparability. Inputs longer than
MAX_TOKENS are truncated.
"""

from __future__ import annotations

import logging

import numpy as np

log = logging.getLogger(__name__)

ENCODER_IDS = {
    "base": "bert-base-uncased",
    "large": "bert-large-uncased",
    "nli": "sentence-transformers/bert-base-nli-mean-tokens",
}
MAX_TOKENS = 256


class TransformerEncoder:
    """Wraps a huggingface masked-LM backbone as a sentence encoder."""

    def __init__(self, model_id: str):
        import torch
        from transformers import AutoModel, AutoTokenizer

        self._torch = torch
        self.model_id = model_id
        self.tokenizer = AutoTokenizer.from_pretrained(model_id)
        self.model = AutoModel.from_pretrained(model_id)
        self.model.eval()
        self.dim = int(self.model.config.hidden_size)

    def encode(self, texts: list[str], batch_size: int = 32) -> np.ndarray:
        """Embed texts as mask-weighted token means; shape (len(texts), dim)."""
        torch = self._torch
        chunks = []
        with torch.no_grad():
            for start in range(0, len(texts), batch_size):
                batch = texts[start : start + batch_size]
                enc = self.tokenizer(
                    batch,
                    padding=True,
                    truncation=True,
                    max_length=MAX_TOKENS,
                    return_tensors="pt",
                )
                hidden = self.model(**enc).last_hidden_state
                mask = enc["attention_mask"].unsqueeze(-1).to(hidden.dtype)
                pooled = (hidden * mask).sum(dim=1) / mask.sum(dim=1).clamp(min=1)
                chunks.append(pooled.to(torch.float64).cpu().numpy())
        return np.concatenate(chunks, axis=0)


def load_encoder(name: str) -> TransformerEncoder:
    if name not in ENCODER_IDS:
        raise ValueError(f"unknown encoder {name!r}; pick one of {sorted(ENCODER_IDS)}")
    model_id = ENCODER_IDS[name]
    log.info("loading encoder %s (%s)", name, model_id)
    return TransformerEncoder(model_id)
