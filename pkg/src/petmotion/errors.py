"""Exception types shared across the package.

CLI exit-code mapping: ConfigError -> 2, DataError -> 3, NumericalError -> 4.
"""


class PetmotionError(Exception):
    """Base class for all package errors."""


class ConfigError(PetmotionError):
    """Invalid configuration or unknown preset."""


class DataError(PetmotionError):
    """Malformed, missing, or mismatched input data."""


class NumericalError(PetmotionError):
    """Numerical failure (divergence, degenerate geometry)."""


# geometry
class GimbalLock(NumericalError):
    """Rotation matrix is within tolerance of the ry = +/-90 deg singularity."""


class NotRigid(DataError):
    """Matrix rotation block is not orthonormal with determinant +1."""


class MissingTimepoint(DataError):
    """Trajectory has no entry for the requested time."""


# phantom
class UnknownPreset(ConfigError):
    pass


class EmptyRoi(DataError):
    """Label absent from the label grid."""


class ZeroMass(NumericalError):
    """Masked intensity sums to zero; centroid undefined."""


# listmode simulation
class TrajectoryTooShort(DataError):
    """Requested scan duration exceeds trajectory coverage."""


# cloud images
class GeometryMismatch(DataError):
    """Two grids that must share dims/spacing/origin do not."""


class InvalidTarget(ConfigError):
    """Downsampling target dims exceed the source dims."""


# autodiff
class NonScalarLoss(PetmotionError):
    """backward() requires a scalar root."""


class ShapeMismatch(PetmotionError):
    """Operand shapes incompatible for the requested op."""


# training
class InsufficientTimepoints(DataError):
    """Subject has fewer timepoints than the configured subsample."""


class Divergence(NumericalError):
    """Training loss became NaN/Inf."""


class EmptySeries(DataError):
    """Inference requires at least two cloud images."""


# reconstruction
class TrajectoryGap(DataError):
    """Event timestamp not covered by the motion trajectory."""


# metrics
class TimebaseMismatch(DataError):
    """Trajectories being compared are not sampled at the same times."""


class ZeroGoldMean(NumericalError):
    """Gold-standard ROI mean is zero; difference ratio undefined."""
