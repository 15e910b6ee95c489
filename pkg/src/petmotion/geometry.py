"""Rigid-body transform algebra used by every other module.

Conventions (fixed repo-wide):

* A pose is six parameters ``(tx, ty, tz, rx, ry, rz)``: translations in
  millimeters, rotations in degrees.
* Matrix form is ``M = T(tx,ty,tz) @ Rz(rz) @ Ry(ry) @ Rx(rx)`` — extrinsic
  rotations about the fixed world axes, applied x-then-y-then-z.
* A trajectory pose maps head-frame coordinates at that time into
  scanner-frame coordinates.
* ``relative_motion(traj, t_ref, t_mov)`` returns ``M_ref^-1 @ M_mov``: it
  maps coordinates expressed in the head frame as seen at the moving time
  into the head frame as seen at the reference time.  Training labels,
  registration outputs, and event-endpoint correction all use this single
  convention.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from .errors import GimbalLock, MissingTimepoint, NotRigid

__all__ = [
    "RigidTransform",
    "MotionTrajectory",
    "to_matrix",
    "from_matrix",
    "compose",
    "inverse",
    "relative_motion",
    "map_point",
    "map_points",
]

TRAJECTORY_CSV_HEADER = "time_s,tx_mm,ty_mm,tz_mm,rx_deg,ry_deg,rz_deg"


@dataclass(frozen=True)
class RigidTransform:
    """Six-parameter rigid pose: translations in mm, rotations in degrees."""

    tx: float = 0.0
    ty: float = 0.0
    tz: float = 0.0
    rx: float = 0.0
    ry: float = 0.0
    rz: float = 0.0

    @classmethod
    def identity(cls) -> "RigidTransform":
        return cls()

    @classmethod
    def from_params(cls, params) -> "RigidTransform":
        tx, ty, tz, rx, ry, rz = (float(p) for p in params)
        return cls(tx, ty, tz, rx, ry, rz)

    def params(self) -> np.ndarray:
        """Parameters as a length-6 float64 vector (tx,ty,tz,rx,ry,rz)."""
        return np.array([self.tx, self.ty, self.tz, self.rx, self.ry, self.rz])

    def matrix(self) -> np.ndarray:
        return to_matrix(self)


def to_matrix(t: RigidTransform) -> np.ndarray:
    """4x4 homogeneous matrix ``T(tx,ty,tz) @ Rz @ Ry @ Rx`` (angles in degrees)."""
    ax, ay, az = (math.radians(v) for v in (t.rx, t.ry, t.rz))
    ca, sa = math.cos(ax), math.sin(ax)
    cb, sb = math.cos(ay), math.sin(ay)
    cc, sc = math.cos(az), math.sin(az)
    m = np.eye(4)
    # Rz @ Ry @ Rx written out
    m[0, 0] = cc * cb
    m[0, 1] = cc * sb * sa - sc * ca
    m[0, 2] = cc * sb * ca + sc * sa
    m[1, 0] = sc * cb
    m[1, 1] = sc * sb * sa + cc * ca
    m[1, 2] = sc * sb * ca - cc * sa
    m[2, 0] = -sb
    m[2, 1] = cb * sa
    m[2, 2] = cb * ca
    m[:3, 3] = (t.tx, t.ty, t.tz)
    return m


def _check_rigid(m: np.ndarray, tol: float = 1e-6) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.shape != (4, 4):
        raise NotRigid(f"expected 4x4 matrix, got shape {m.shape}")
    r = m[:3, :3]
    if np.linalg.norm(r.T @ r - np.eye(3)) > tol:
        raise NotRigid("rotation block is not orthonormal")
    if np.linalg.det(r) < 0:
        raise NotRigid("rotation block has negative determinant (reflection)")
    return m


def from_matrix(m: np.ndarray) -> RigidTransform:
    """Invert :func:`to_matrix`; ``ry`` is taken on the asin branch [-90, 90] deg.

    Raises :class:`NotRigid` if the rotation block fails the orthonormality
    check beyond 1e-6 and :class:`GimbalLock` when ``|cos(ry)| < 1e-6``.
    """
    m = _check_rigid(m)
    sb = -m[2, 0]
    sb = min(1.0, max(-1.0, float(sb)))
    ay = math.asin(sb)
    if abs(math.cos(ay)) < 1e-6:
        raise GimbalLock("ry within 1e-6 of +/-90 degrees; Euler angles degenerate")
    ax = math.atan2(m[2, 1], m[2, 2])
    az = math.atan2(m[1, 0], m[0, 0])
    return RigidTransform(
        float(m[0, 3]),
        float(m[1, 3]),
        float(m[2, 3]),
        math.degrees(ax),
        math.degrees(ay),
        math.degrees(az),
    )


def compose(a: RigidTransform, b: RigidTransform) -> RigidTransform:
    """Parameters of ``matrix(a) @ matrix(b)``."""
    return from_matrix(to_matrix(a) @ to_matrix(b))


def inverse(t: RigidTransform) -> RigidTransform:
    m = to_matrix(t)
    minv = np.eye(4)
    r = m[:3, :3]
    minv[:3, :3] = r.T
    minv[:3, 3] = -r.T @ m[:3, 3]
    return from_matrix(minv)


def map_point(t: RigidTransform, p) -> np.ndarray:
    """Apply the transform to a single 3-point (mm)."""
    m = to_matrix(t)
    p = np.asarray(p, dtype=float)
    return m[:3, :3] @ p + m[:3, 3]


def map_points(matrix: np.ndarray, pts: np.ndarray) -> np.ndarray:
    """Apply a 4x4 matrix to an (n, 3) array of points."""
    pts = np.asarray(pts, dtype=float)
    return pts @ matrix[:3, :3].T + matrix[:3, 3]


class MotionTrajectory:
    """Time-indexed gold-standard poses, one per integer second.

    ``entries`` is an ordered list of ``(time_s, RigidTransform)`` with
    strictly increasing times.  ``pose_at`` resolves the pose governing an
    arbitrary event timestamp as the entry at ``floor(t)``.
    """

    def __init__(self, entries):
        entries = [(float(t), pose) for t, pose in entries]
        times = [t for t, _ in entries]
        if any(b <= a for a, b in zip(times, times[1:])):
            raise ValueError("trajectory times must be strictly increasing")
        self.entries = entries
        self._index = {t: pose for t, pose in entries}

    def __len__(self) -> int:
        return len(self.entries)

    def times(self) -> np.ndarray:
        return np.array([t for t, _ in self.entries])

    def pose(self, time_s: float) -> RigidTransform:
        """Pose recorded exactly at ``time_s``."""
        try:
            return self._index[float(time_s)]
        except KeyError:
            raise MissingTimepoint(f"no trajectory entry at t={time_s}") from None

    def pose_at(self, t: float) -> RigidTransform:
        """Pose governing an event at continuous time ``t`` (piecewise constant)."""
        return self.pose(math.floor(t))

    def covers(self, duration_s: float) -> bool:
        """True when an entry exists for every integer second in [0, duration)."""
        need = range(int(math.ceil(duration_s)))
        return all(float(s) in self._index for s in need)

    def max_time(self) -> float:
        return self.entries[-1][0]

    def params_array(self) -> np.ndarray:
        """(n, 6) array of pose parameters in entry order."""
        return np.stack([pose.params() for _, pose in self.entries])

    # --- persistence -----------------------------------------------------
    def to_csv(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            self.write_csv(fh)

    def write_csv(self, fh) -> None:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(TRAJECTORY_CSV_HEADER.split(","))
        for t, pose in self.entries:
            writer.writerow(
                [repr(float(v)) for v in (t, pose.tx, pose.ty, pose.tz, pose.rx, pose.ry, pose.rz)]
            )

    @classmethod
    def from_csv(cls, path) -> "MotionTrajectory":
        with open(path, "r", encoding="utf-8", newline="") as fh:
            return cls.read_csv(fh)

    @classmethod
    def read_csv(cls, fh) -> "MotionTrajectory":
        reader = csv.reader(fh)
        header = next(reader)
        if [h.strip() for h in header] != TRAJECTORY_CSV_HEADER.split(","):
            raise ValueError(f"unexpected trajectory CSV header: {header}")
        entries = []
        for row in reader:
            if not row:
                continue
            t, *params = (float(v) for v in row)
            entries.append((t, RigidTransform.from_params(params)))
        return cls(entries)

    def to_csv_bytes(self) -> bytes:
        buf = io.StringIO()
        self.write_csv(buf)
        return buf.getvalue().encode("utf-8")


def relative_motion(traj: MotionTrajectory, t_ref: float, t_mov: float) -> RigidTransform:
    """Parameters of ``M_ref^-1 @ M_mov`` between two trajectory entries.

    This is the transform taking moving-time head coordinates into
    reference-time head coordinates; it is the training label, the
    registration target, and (inverted) the event-endpoint correction.
    """
    m_ref = to_matrix(traj.pose(t_ref))
    m_mov = to_matrix(traj.pose(t_mov))
    return from_matrix(np.linalg.inv(m_ref) @ m_mov)
