"""Pretrained-encoder resolution and offline fixture checkpoints.

Encoder identifiers are configuration values: either a hub name (fetched
through the local cache, honoring DECEPTKIT_PRETRAINED_CACHE) or a directory
path. build_fixture_encoder creates a tiny randomly initialized encoder plus
a character-level wordpiece vocabulary so the full pipeline can run with no
network access.
"""

from __future__ import annotations

import os
import string
from pathlib import Path

CACHE_ENV_VAR = "DECEPTKIT_PRETRAINED_CACHE"


def _cache_dir() -> str | None:
    return os.environ.get(CACHE_ENV_VAR) or None


def load_encoder(encoder_id: str, with_attentions: bool = False):
    """(tokenizer, encoder module) for a hub name or checkpoint directory."""
    from transformers import AutoModel, AutoTokenizer

    kwargs = {}
    if not Path(encoder_id).exists():
        kwargs["cache_dir"] = _cache_dir()
    tokenizer = AutoTokenizer.from_pretrained(encoder_id, **kwargs)
    model_kwargs = dict(kwargs)
    if with_attentions:
        model_kwargs["attn_implementation"] = "eager"
    encoder = AutoModel.from_pretrained(encoder_id, **model_kwargs)
    return tokenizer, encoder


def load_tokenizer(encoder_id: str):
    from transformers import AutoTokenizer

    kwargs = {}
    if not Path(encoder_id).exists():
        kwargs["cache_dir"] = _cache_dir()
    return AutoTokenizer.from_pretrained(encoder_id, **kwargs)


def build_fixture_encoder(path: str | Path, hidden_size: int = 32, num_layers: int = 2,
                          num_heads: int = 2, max_positions: int = 192, seed: int = 0) -> Path:
    """Write a tiny random-weight encoder checkpoint usable fully offline.

    The vocabulary is character-level wordpiece (letters, digits, common
    punctuation), so any English-ish text tokenizes without network access.
    Deterministic for a fixed seed.
    """
    import torch
    from transformers import BertConfig, BertModel, BertTokenizer

    path = Path(path)
    path.mkdir(parents=True, exist_ok=True)

    chars = list(string.ascii_lowercase + string.digits) + list("!?.,:;'\"$%&()-/")
    vocab = ["[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"] + chars + ["##" + c for c in chars]
    vocab_file = path / "vocab.txt"
    vocab_file.write_text("\n".join(vocab) + "\n", encoding="utf-8")

    torch.manual_seed(seed)
    config = BertConfig(
        vocab_size=len(vocab),
        hidden_size=hidden_size,
        num_hidden_layers=num_layers,
        num_attention_heads=num_heads,
        intermediate_size=hidden_size * 4,
        max_position_embeddings=max_positions,
    )
    model = BertModel(config)
    model.save_pretrained(path)
    tokenizer = BertTokenizer(str(vocab_file), do_lower_case=True)
    tokenizer.save_pretrained(path)
    return path
