"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: configuration problems exit 2, data
problems exit 3, numeric divergence exits 4.
"""


class VlqaError(Exception):
    """Base class for all package errors."""


class DimensionError(VlqaError):
    """Shapes or extents disagree; the message names the offending shapes."""


class NumericError(VlqaError):
    """A value that must be finite is NaN or infinite."""


class DivergenceError(NumericError):
    """Training produced a non-finite loss; carries the failing step."""

    def __init__(self, step, message=None):
        self.step = step
        super().__init__(message or f"non-finite loss at training step {step}")


class VocabularyError(VlqaError):
    """A token or answer index falls outside the closed vocabulary."""


class TreeStructureError(VlqaError):
    """A syntax tree is cyclic, multi-rooted, or otherwise malformed."""


class SchemaError(VlqaError):
    """A dataset record violates the documented JSONL schema."""


class DegenerateInputError(VlqaError):
    """An input is degenerate (all-zero features, zero-norm embedding, ...)."""


class CategoryError(VlqaError):
    """An unknown question category was supplied."""


class EvaluationError(VlqaError):
    """Prediction/gold bookkeeping is inconsistent during metric computation."""


class TemplateError(VlqaError):
    """A question does not match any known template."""


class ConfigurationError(VlqaError):
    """A run configuration is invalid or incompatible with its inputs."""
