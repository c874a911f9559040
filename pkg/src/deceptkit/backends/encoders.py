"""Transformer fine-tuner and sentence-encoder head over pretrained encoders."""

from __future__ import annotations

import torch
from torch import nn

from ..errors import ConfigError
from .hub import load_encoder


def encode_texts(tokenizer, texts, max_length: int):
    """Tokenize a batch with truncation; also counts how many inputs overflowed.

    Returns (input_ids, attention_mask, n_truncated). Inputs longer than the
    token limit are truncated, never rejected.
    """
    ids_list = []
    n_truncated = 0
    for text in texts:
        ids = tokenizer.encode(text, add_special_tokens=True, truncation=False)
        if len(ids) > max_length:
            n_truncated += 1
            # keep the leading tokens and restore the final separator
            ids = ids[: max_length - 1] + [ids[-1]]
        ids_list.append(ids)
    width = max(len(ids) for ids in ids_list)
    pad_id = tokenizer.pad_token_id or 0
    input_ids = torch.full((len(ids_list), width), pad_id, dtype=torch.long)
    mask = torch.zeros((len(ids_list), width), dtype=torch.long)
    for i, ids in enumerate(ids_list):
        input_ids[i, : len(ids)] = torch.tensor(ids, dtype=torch.long)
        mask[i, : len(ids)] = 1
    return input_ids, mask, n_truncated


class TransformerClassifier(nn.Module):
    """Pretrained encoder with one dense classification layer.

    The sequence representation is the final hidden vector of the leading
    classification token; exactly one linear layer maps it to the two-class
    logits.
    """

    def __init__(self, encoder, head_dropout: float = 0.1, num_classes: int = 2):
        super().__init__()
        self.encoder = encoder
        self.dropout = nn.Dropout(head_dropout)
        self.classifier = nn.Linear(encoder.config.hidden_size, num_classes)

    def forward(self, input_ids, attention_mask):
        hidden = self.encoder(input_ids=input_ids, attention_mask=attention_mask).last_hidden_state
        cls_vec = hidden[:, 0]
        return self.classifier(self.dropout(cls_vec))

    @torch.no_grad()
    def cls_vectors(self, input_ids, attention_mask) -> torch.Tensor:
        """Classification-token vectors (hidden-size wide), evaluation mode."""
        was_training = self.training
        self.eval()
        try:
            hidden = self.encoder(input_ids=input_ids, attention_mask=attention_mask).last_hidden_state
            return hidden[:, 0].detach()
        finally:
            self.train(was_training)

    @torch.no_grad()
    def attention_from_cls(self, input_ids, attention_mask) -> torch.Tensor:
        """Final-layer attention rows from the classification token, per head.

        Shape [heads, tokens]; every row is a softmax distribution over the
        input tokens.
        """
        was_training = self.training
        self.eval()
        try:
            out = self.encoder(
                input_ids=input_ids, attention_mask=attention_mask, output_attentions=True
            )
            if not out.attentions:
                raise ConfigError("encoder returned no attention maps; load it with attentions enabled")
            return out.attentions[-1][0, :, 0, :].detach()
        finally:
            self.train(was_training)


_POOLERS = {
    "mean": lambda hidden, mask: (hidden * mask).sum(1) / mask.sum(1).clamp_min(1.0),
    "max": lambda hidden, mask: hidden.masked_fill(mask == 0, float("-inf")).max(1).values,
    "min": lambda hidden, mask: hidden.masked_fill(mask == 0, float("inf")).min(1).values,
}


class SentenceEncoderClassifier(nn.Module):
    """Pooled sentence embedding, two dense hidden layers, then the classifier."""

    def __init__(self, encoder, pooling: str = "mean", hidden_units: int = 256,
                 freeze_encoder: bool = False, num_classes: int = 2):
        super().__init__()
        if pooling not in _POOLERS:
            raise ConfigError(f"unknown pooling {pooling!r}; expected one of {sorted(_POOLERS)}")
        self.encoder = encoder
        self.pooling = pooling
        self.freeze_encoder = freeze_encoder
        width = encoder.config.hidden_size
        self.hidden1 = nn.Linear(width, hidden_units)
        self.hidden2 = nn.Linear(hidden_units, hidden_units)
        self.classifier = nn.Linear(hidden_units, num_classes)
        self.relu = nn.ReLU()
        if freeze_encoder:
            for p in self.encoder.parameters():
                p.requires_grad_(False)

    def train(self, mode: bool = True):
        super().train(mode)
        if self.freeze_encoder:
            self.encoder.eval()  # frozen encoder stays deterministic
        return self

    def forward(self, input_ids, attention_mask):
        hidden = self.encoder(input_ids=input_ids, attention_mask=attention_mask).last_hidden_state
        mask = attention_mask.unsqueeze(-1).to(hidden.dtype)
        pooled = _POOLERS[self.pooling](hidden, mask)
        x = self.relu(self.hidden1(pooled))
        x = self.relu(self.hidden2(x))
        return self.classifier(x)


def build_transformer(config) -> tuple[TransformerClassifier, dict]:
    tokenizer, encoder = load_encoder(config.get("encoder_id"), with_attentions=True)
    model = TransformerClassifier(encoder, head_dropout=float(config.get("head_dropout", 0.1)))
    assets = {"tokenizer": tokenizer, "max_tokens": config.max_token_limit,
              "encoder_id": config.get("encoder_id")}
    return model, assets


def build_sentence_head(config) -> tuple[SentenceEncoderClassifier, dict]:
    tokenizer, encoder = load_encoder(config.get("encoder_id"))
    model = SentenceEncoderClassifier(
        encoder,
        pooling=config.get("pooling", "mean"),
        hidden_units=int(config.get("hidden_units", 256)),
        freeze_encoder=bool(config.get("freeze_encoder", False)),
    )
    assets = {"tokenizer": tokenizer, "max_tokens": config.max_token_limit,
              "encoder_id": config.get("encoder_id")}
    return model, assets
