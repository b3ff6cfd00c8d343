"""18-point body keypoints (OpenPose ordering) and Gaussian pose heatmaps."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

NUM_KEYPOINTS = 18

KEYPOINT_NAMES = (
    "nose", "neck",
    "r_shoulder", "r_elbow", "r_wrist",
    "l_shoulder", "l_elbow", "l_wrist",
    "r_hip", "r_knee", "r_ankle",
    "l_hip", "l_knee", "l_ankle",
    "r_eye", "l_eye", "r_ear", "l_ear",
)

# Position stored for keypoints that are not visible.
SENTINEL = (-1.0, -1.0)


@dataclass(frozen=True)
class Keypoints:
    """18 (x, y, visible) entries in pixel coordinates."""

    points: np.ndarray  # float32 (18, 3): x, y, visible flag

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=np.float32)
        if pts.shape != (NUM_KEYPOINTS, 3):
            raise ValueError(f"expected ({NUM_KEYPOINTS}, 3) keypoints, got {pts.shape}")
        object.__setattr__(self, "points", pts)

    @classmethod
    def empty(cls) -> "Keypoints":
        """All-invisible keypoints (the shop-image case)."""
        pts = np.zeros((NUM_KEYPOINTS, 3), dtype=np.float32)
        pts[:, 0], pts[:, 1] = SENTINEL
        return cls(pts)

    @classmethod
    def from_xy(cls, xy, visible=None) -> "Keypoints":
        xy = np.asarray(xy, dtype=np.float32)
        pts = np.zeros((NUM_KEYPOINTS, 3), dtype=np.float32)
        pts[:, :2] = xy
        pts[:, 2] = 1.0 if visible is None else np.asarray(visible, dtype=np.float32)
        pts[pts[:, 2] <= 0, 0], pts[pts[:, 2] <= 0, 1] = SENTINEL
        return cls(pts)

    @property
    def visible(self) -> np.ndarray:
        return self.points[:, 2] > 0

    def validate_bounds(self, height: int, width: int) -> None:
        vis = self.points[self.visible]
        if vis.size and (
            (vis[:, 0] < 0).any() or (vis[:, 0] > width - 1).any()
            or (vis[:, 1] < 0).any() or (vis[:, 1] > height - 1).any()
        ):
            raise ValueError("visible keypoints must lie within image bounds")

    def scaled(self, sy: float, sx: float) -> "Keypoints":
        pts = self.points.copy()
        vis = self.visible
        pts[vis, 0] *= sx
        pts[vis, 1] *= sy
        return Keypoints(pts)


def render_pose_heatmaps(k: Keypoints, height: int, width: int, sigma: float) -> np.ndarray:
    """Render one Gaussian bump per visible keypoint.

    Channel c at pixel (y, x) is exp(-((x-kx)^2 + (y-ky)^2) / (2 sigma^2));
    invisible channels stay all-zero. Returns float32 (18, H, W) in [0, 1].
    """
    if height <= 0 or width <= 0:
        raise ValueError("heatmap dims must be positive")
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    maps = np.zeros((NUM_KEYPOINTS, height, width), dtype=np.float32)
    ys = np.arange(height, dtype=np.float32)[:, None]
    xs = np.arange(width, dtype=np.float32)[None, :]
    inv = 1.0 / (2.0 * sigma * sigma)
    for c in range(NUM_KEYPOINTS):
        x, y, vis = k.points[c]
        if vis <= 0:
            continue
        maps[c] = np.exp(-((xs - x) ** 2 + (ys - y) ** 2) * inv)
    return maps


def empty_heatmaps(height: int, width: int) -> np.ndarray:
    """Heatmaps for a shop image: no keypoints at all."""
    return np.zeros((NUM_KEYPOINTS, height, width), dtype=np.float32)
