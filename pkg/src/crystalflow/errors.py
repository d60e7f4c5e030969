"""Exception types shared across the package."""


class CrystalFlowError(Exception):
    """Base class for all package-specific errors."""


class InvalidValueError(CrystalFlowError, ValueError):
    """Non-finite or otherwise malformed numeric input."""


class InvalidRotationError(CrystalFlowError, ValueError):
    """Matrix fails the orthonormality / determinant test for SO(3)."""


class InvalidLatticeError(CrystalFlowError, ValueError):
    """Lattice matrix is singular, left-handed, or non-finite."""


class InvalidParameterError(CrystalFlowError, ValueError):
    """Lattice parameter set does not define a positive-volume cell."""


class UnknownElementError(CrystalFlowError, KeyError):
    """Element symbol missing from the built-in tables."""


class DecompositionError(CrystalFlowError, ValueError):
    """Structure cannot be split into rigid building blocks."""


class CanonicalizationError(DecompositionError):
    """Blocks of one molecule type cannot be mapped onto a shared frame."""


class PriorSamplingError(CrystalFlowError, RuntimeError):
    """Repeated draws from the lattice prior failed to build a valid cell."""


class IntegrationError(CrystalFlowError, RuntimeError):
    """ODE integration produced a non-finite or invalid state."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class TrainingError(CrystalFlowError, RuntimeError):
    """Training aborted (e.g. non-finite loss); carries diagnostics."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class CheckpointFormatError(CrystalFlowError, ValueError):
    """Checkpoint or record file has an unsupported format version."""


class ConfigError(CrystalFlowError, ValueError):
    """Run configuration is malformed (unknown key, bad type, missing path)."""


class EvaluationError(CrystalFlowError, ValueError):
    """Prediction/reference sets are misaligned or malformed."""
