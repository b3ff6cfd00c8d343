"""Sample records: image + keypoints + segmentation labels, and the
role-wise segment splitting the encoders consume."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import labels as L
from .keypoints import Keypoints


@dataclass(frozen=True)
class SampleRecord:
    image: np.ndarray        # float32 (3, H, W) in [-1, 1]
    keypoints: Keypoints
    labels: np.ndarray       # uint8 (H, W) over the fixed label set
    identity: str
    pose_id: str

    def __post_init__(self):
        img = np.asarray(self.image, dtype=np.float32)
        lab = np.asarray(self.labels, dtype=np.uint8)
        if img.ndim != 3 or img.shape[0] != 3:
            raise ValueError(f"image must be (3, H, W), got {img.shape}")
        if lab.shape != img.shape[1:]:
            raise ValueError("labels must match image spatial dims")
        if img.min() < -1.0 - 1e-6 or img.max() > 1.0 + 1e-6:
            raise ValueError("image values must lie in [-1, 1]")
        if lab.max() >= L.NUM_LABELS:
            raise ValueError("labels outside the declared label set")
        object.__setattr__(self, "image", img)
        object.__setattr__(self, "labels", lab)

    @property
    def height(self) -> int:
        return self.image.shape[1]

    @property
    def width(self) -> int:
        return self.image.shape[2]


def role_mask(record: SampleRecord, role: str) -> np.ndarray:
    """Binary (H, W) float32 mask of a role's pixels."""
    ids = L.ROLE_LABELS[role]
    mask = np.isin(record.labels, ids)
    return mask.astype(np.float32)


def role_masks(record: SampleRecord) -> dict[str, np.ndarray]:
    return {role: role_mask(record, role) for role in L.ALL_ROLES}


def split_segments(record: SampleRecord) -> dict[str, np.ndarray]:
    """Masked image per role: background, skin, then the garment catalog.

    Missing roles yield an all-zero entry (a person may lack a jacket).
    Garment roles appear in catalog order; the dressing order is chosen by
    the caller at generation time.
    """
    out = {}
    for role in L.ALL_ROLES:
        m = role_mask(record, role)
        out[role] = (record.image * m[None]).astype(np.float32)
    return out


def present_garments(record: SampleRecord, min_pixels: int = 1) -> list[str]:
    """Garment roles with at least min_pixels labeled pixels, catalog order."""
    return [g for g in L.GARMENT_ROLES
            if int(np.isin(record.labels, L.ROLE_LABELS[g]).sum()) >= min_pixels]


def one_hot_labels(labels: np.ndarray) -> np.ndarray:
    """uint8 (H, W) label map -> float32 (NUM_LABELS, H, W) one-hot."""
    out = np.zeros((L.NUM_LABELS,) + labels.shape, dtype=np.float32)
    for i in range(L.NUM_LABELS):
        out[i] = labels == i
    return out


def image_to_uint8(image: np.ndarray) -> np.ndarray:
    """float32 (3, H, W) in [-1, 1] -> uint8 (H, W, 3)."""
    arr = np.clip((np.asarray(image) + 1.0) * 127.5, 0, 255)
    return np.round(arr).astype(np.uint8).transpose(1, 2, 0)


def image_from_uint8(arr: np.ndarray) -> np.ndarray:
    """uint8 (H, W, 3) -> float32 (3, H, W) in [-1, 1]."""
    return arr.astype(np.float32).transpose(2, 0, 1) / 127.5 - 1.0
