"""Shared backend types and the common training/prediction contract."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Any

from ..corpus.schema import DECEPTIVE, NON_DECEPTIVE
from ..errors import ConfigError

CHAR_CNN = "char_cnn"
TRANSFORMER = "transformer_finetune"
SENTENCE_HEAD = "sentence_encoder_head"
BACKEND_KINDS = (CHAR_CNN, TRANSFORMER, SENTENCE_HEAD)

# Class index order everywhere: probs[0] = non_deceptive, probs[1] = deceptive.
LABEL_TO_INDEX = {NON_DECEPTIVE: 0, DECEPTIVE: 1}
INDEX_TO_LABEL = (NON_DECEPTIVE, DECEPTIVE)

PROB_SUM_TOL = 1e-6


@dataclass(frozen=True)
class ProbabilityPrediction:
    """Per-sample class probabilities from one backend."""

    sample_id: str
    probs: tuple[float, float]
    backend_kind: str

    def __post_init__(self):
        if len(self.probs) != 2:
            raise ValueError(f"{self.sample_id}: probs must have two entries")
        if not all(0.0 <= p <= 1.0 for p in self.probs):
            raise ValueError(f"{self.sample_id}: probabilities outside [0, 1]: {self.probs}")
        if abs(sum(self.probs) - 1.0) > PROB_SUM_TOL:
            raise ValueError(f"{self.sample_id}: probabilities sum to {sum(self.probs)!r}")


# Searchable-by-default grids; a plan may override or disable the search.
DEFAULT_GRIDS: dict[str, dict[str, list]] = {
    TRANSFORMER: {
        "max_epochs": [2, 3, 4],
        "lr": [2e-5, 3e-5, 5e-5],
    },
    SENTENCE_HEAD: {
        "hidden_units": [128, 256],
        "batch_size": [16, 32],
        "max_epochs": [5, 10, 20],
    },
    CHAR_CNN: {
        "dropout": [0.3, 0.5],
        "fc_units": [512, 1024],
        "batch_size": [64, 128],
    },
}

DEFAULT_HYPERPARAMS: dict[str, dict[str, Any]] = {
    CHAR_CNN: {
        "max_length": 1014,
        "num_filters": 256,
        "kernel_sizes": (7, 7, 3, 3, 3, 3),
        "pool_after": (0, 1, 5),
        "pool_size": 3,
        "fc_units": 1024,
        "dropout": 0.5,
        "lr": 1e-3,
        "batch_size": 128,
        "max_epochs": 20,
        "early_stopping": True,
        "patience": 2,
    },
    TRANSFORMER: {
        "encoder_id": "bert-base-uncased",
        "batch_size": 16,
        "lr": 2e-5,
        "lr_schedule": "linear",
        "max_epochs": 3,
        "head_dropout": 0.1,
        "early_stopping": True,
        "patience": 2,
    },
    SENTENCE_HEAD: {
        "encoder_id": "bert-base-uncased",
        "pooling": "mean",  # mean | max | min
        "hidden_units": 256,
        "freeze_encoder": False,
        "batch_size": 16,
        "lr": 2e-5,
        "lr_schedule": "constant",
        "max_epochs": 10,
        "early_stopping": True,
        "patience": 2,
    },
}


@dataclass(frozen=True)
class BackendConfig:
    """Resolved hyperparameters for one backend, plus an optional search grid."""

    kind: str
    hyperparams: dict[str, Any] = field(default_factory=dict)
    grid: dict[str, list] | None = None
    max_token_limit: int = 512
    seed: int = 0

    def __post_init__(self):
        if self.kind not in BACKEND_KINDS:
            raise ConfigError(f"unknown backend kind {self.kind!r}")
        if self.grid is not None:
            for name, candidates in self.grid.items():
                if not isinstance(candidates, (list, tuple)) or not candidates:
                    raise ConfigError(
                        f"{self.kind}: searchable hyperparameter {name!r} needs a finite candidate list"
                    )

    @classmethod
    def defaults(cls, kind: str, overrides: dict[str, Any] | None = None,
                 grid: dict[str, list] | None = None, seed: int = 0,
                 max_token_limit: int = 512) -> "BackendConfig":
        hp = dict(DEFAULT_HYPERPARAMS[kind])
        hp.update(overrides or {})
        return cls(kind=kind, hyperparams=hp, grid=grid, seed=seed,
                   max_token_limit=max_token_limit)

    def with_hyperparams(self, **updates: Any) -> "BackendConfig":
        hp = dict(self.hyperparams)
        hp.update(updates)
        return replace(self, hyperparams=hp)

    def with_seed(self, seed: int) -> "BackendConfig":
        return replace(self, seed=seed)

    def get(self, name: str, default: Any = None) -> Any:
        return self.hyperparams.get(name, default)

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "hyperparams": {k: list(v) if isinstance(v, tuple) else v
                            for k, v in self.hyperparams.items()},
            "grid": self.grid,
            "max_token_limit": self.max_token_limit,
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, raw: dict[str, Any]) -> "BackendConfig":
        return cls(
            kind=raw["kind"],
            hyperparams=dict(raw.get("hyperparams", {})),
            grid=raw.get("grid"),
            max_token_limit=raw.get("max_token_limit", 512),
            seed=raw.get("seed", 0),
        )


@dataclass(frozen=True)
class EpochRecord:
    epoch: int
    train_loss: float
    train_acc: float
    val_f1: float
    val_acc: float
    lr: float
    is_best: bool


@dataclass
class TrainedModel:
    """A trained backend: opaque weights plus everything needed to predict.

    Treated as immutable once training completes; prediction runs in
    evaluation mode and never touches the weights.
    """

    kind: str
    module: Any  # torch.nn.Module
    assets: dict[str, Any]  # tokenizer / alphabet handles for inference
    config: BackendConfig
    history: tuple[EpochRecord, ...]
    corpus_fingerprint: str
    best_epoch: int

    @property
    def n_parameters(self) -> int:
        return sum(p.numel() for p in self.module.parameters())
