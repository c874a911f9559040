"""Character-level CNN classifier and its fixed-size character encoding."""

from __future__ import annotations

import string

import numpy as np
import torch
from torch import nn

from ..errors import ShapeError

# 69 explicit characters (lowercase letters, digits, ASCII punctuation,
# newline) plus the all-zero blank used for padding and anything else;
# together they form the classic 70-symbol character inventory.
DEFAULT_ALPHABET = string.ascii_lowercase + string.digits + string.punctuation + "\n"

BLANK_INDEX = 0


def encode_chars(text: str, alphabet: str = DEFAULT_ALPHABET, max_length: int = 1014,
                 lowercase: bool = True) -> np.ndarray:
    """Index-encode a text to exactly max_length positions.

    Index 0 is the blank (padding and out-of-alphabet characters, which the
    one-hot expansion turns into the zero vector); character i of the
    alphabet gets index i+1. Longer texts keep their first max_length
    characters. Total over all inputs.
    """
    if max_length <= 0:
        raise ValueError("max_length must be positive")
    if lowercase:
        text = text.lower()
    lookup = {ch: i + 1 for i, ch in enumerate(alphabet)}
    out = np.zeros(max_length, dtype=np.int64)
    for pos, ch in enumerate(text[:max_length]):
        out[pos] = lookup.get(ch, BLANK_INDEX)
    return out


def encode_char_batch(texts, alphabet: str = DEFAULT_ALPHABET, max_length: int = 1014) -> np.ndarray:
    return np.stack([encode_chars(t, alphabet, max_length) for t in texts])


class CharCnnClassifier(nn.Module):
    """Stacked temporal convolutions over one-hot characters, then dense layers.

    The default geometry is six convolutional layers (max-pooling after the
    first, second, and last) followed by two dense hidden layers and the
    two-way output layer. The constructor checks that the configured kernels
    and pools leave at least one position at every stage and names the first
    offending layer otherwise.
    """

    def __init__(self, alphabet_size: int, max_length: int, num_filters: int = 256,
                 kernel_sizes=(7, 7, 3, 3, 3, 3), pool_after=(0, 1, 5), pool_size: int = 3,
                 fc_units: int = 1024, dropout: float = 0.5, num_classes: int = 2):
        super().__init__()
        self.alphabet_size = alphabet_size
        self.max_length = max_length
        pool_after = set(pool_after)

        convs = []
        length = max_length
        in_channels = alphabet_size
        for i, k in enumerate(kernel_sizes):
            if length < k:
                raise ShapeError(
                    f"conv{i + 1}: input length {length} shorter than kernel {k}; "
                    f"increase max_length or shrink the stack"
                )
            convs.append(nn.Conv1d(in_channels, num_filters, kernel_size=k))
            length = length - k + 1
            if i in pool_after:
                if length < pool_size:
                    raise ShapeError(f"pool after conv{i + 1}: length {length} < pool {pool_size}")
                length = length // pool_size
            in_channels = num_filters
        self.convs = nn.ModuleList(convs)
        self.pool_after = pool_after
        self.pool = nn.MaxPool1d(pool_size, stride=pool_size)
        self.flat_dim = num_filters * length

        self.fc1 = nn.Linear(self.flat_dim, fc_units)
        self.fc2 = nn.Linear(fc_units, fc_units)
        self.out = nn.Linear(fc_units, num_classes)
        self.dropout = nn.Dropout(dropout)
        self.relu = nn.ReLU()

    def forward(self, indices: torch.Tensor) -> torch.Tensor:
        """Logits [batch, 2] from index-encoded characters [batch, max_length]."""
        if indices.dim() != 2 or indices.shape[1] != self.max_length:
            raise ShapeError(
                f"input: expected [batch, {self.max_length}] index tensor, got {tuple(indices.shape)}"
            )
        # one_hot over alphabet_size + 1 then dropping the blank column turns
        # padding and out-of-alphabet positions into all-zero vectors
        x = torch.nn.functional.one_hot(indices, self.alphabet_size + 1)[..., 1:]
        x = x.to(self.fc1.weight.dtype).transpose(1, 2)
        for i, conv in enumerate(self.convs):
            x = self.relu(conv(x))
            if i in self.pool_after:
                x = self.pool(x)
        x = x.flatten(1)
        x = self.dropout(self.relu(self.fc1(x)))
        x = self.dropout(self.relu(self.fc2(x)))
        return self.out(x)


def build_char_cnn(config) -> tuple[CharCnnClassifier, dict]:
    """Instantiate the model plus its inference assets from a BackendConfig."""
    alphabet = config.get("alphabet", DEFAULT_ALPHABET)
    max_length = int(config.get("max_length", 1014))
    model = CharCnnClassifier(
        alphabet_size=len(alphabet),
        max_length=max_length,
        num_filters=int(config.get("num_filters", 256)),
        kernel_sizes=tuple(config.get("kernel_sizes", (7, 7, 3, 3, 3, 3))),
        pool_after=tuple(config.get("pool_after", (0, 1, 5))),
        pool_size=int(config.get("pool_size", 3)),
        fc_units=int(config.get("fc_units", 1024)),
        dropout=float(config.get("dropout", 0.5)),
    )
    assets = {"alphabet": alphabet, "max_length": max_length}
    return model, assets
