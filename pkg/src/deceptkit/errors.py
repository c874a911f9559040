"""Exception hierarchy shared across the package."""


class DeceptkitError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(DeceptkitError):
    """Malformed or unsupported configuration."""


class IngestError(DeceptkitError):
    """Raw data could not be parsed; message names the offending file/row."""


class LabelMapError(DeceptkitError):
    """An original label matched no mapping rule; message names the label."""


class CorpusFormatError(DeceptkitError):
    """Persisted corpus is unreadable, truncated, or of a wrong version."""


class SplitError(DeceptkitError):
    """Split policy preconditions violated (e.g. provided splits missing)."""


class ShapeError(DeceptkitError):
    """Tensor geometry mismatch; message names the layer."""


class TrainingDivergedError(DeceptkitError):
    """Training loss became non-finite; carries recent-loss diagnostics."""


class UnsupportedBackendError(DeceptkitError):
    """Operation requested on a backend kind that cannot serve it."""


class ModelIOError(DeceptkitError):
    """Model artifact export/load failure or kind mismatch."""


class ProvenanceError(DeceptkitError):
    """In-domain data leaked into a training pool that must exclude it."""


class RegistryError(DeceptkitError):
    """Run registry violation (duplicate id, immutable run, bad status)."""


class AggregationError(DeceptkitError):
    """Prediction sets cannot be pooled (overlapping ids, empty input)."""
